//! Suite orchestration, JSON run reports and the on-disk W cache.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::appendix_suite::{appendix_suite, AppendixReading};
use crate::error::{Error, Result};
use crate::foundation::Instance;
use crate::mutation::Mutation;
use crate::ope_suite::{ope_suite, OpeCtx};
use crate::report::CheckReport;
use crate::suites::{d0_suite, gen_suite};
use crate::vertex::props::engine_suite;
use crate::vertex::serial::{from_json, to_json, TermJson};
use crate::vertex::Vertex;
use crate::w_construct::{Ambient, D0Reading, WSet, D0};
use crate::yangian::{ev_suite, phi_suite, phi_supported};

pub const ENGINE_VERSION: &str = concat!("rectw-", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Gen,
    D0,
    Ope,
    Phi,
    Ev,
    Appendix,
    Engine,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 8] = ["gen", "d0", "ope", "phi", "ev", "appendix", "engine", "all"];
    const PARTS: [Suite; 7] = [Suite::Engine, Suite::Gen, Suite::D0, Suite::Ope, Suite::Appendix, Suite::Phi, Suite::Ev];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Gen => "gen",
            Suite::D0 => "d0",
            Suite::Ope => "ope",
            Suite::Phi => "phi",
            Suite::Ev => "ev",
            Suite::Appendix => "appendix",
            Suite::Engine => "engine",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Suite, String> {
        Suite::PARTS
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}; known: {}", Suite::NAMES.join(", ")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub m: usize,
    pub n: usize,
    pub l: usize,
    pub cutoff: u32,
    pub c_zero: bool,
    pub jobs: Option<usize>,
    pub mutate: Option<String>,
}

impl SuiteConfig {
    pub fn instance(&self) -> Instance {
        Instance { m: self.m, n: self.n, l: self.l }
    }

    fn mutation(&self) -> Result<Option<Mutation>> {
        self.mutate.as_deref().map(|s| s.parse().map_err(Error::Config)).transpose()
    }

    /// Rejects configurations that violate a suite's hypotheses.
    pub fn validate(&self) -> Result<()> {
        let inst = self.instance();
        if self.m + self.n == 0 || self.l == 0 {
            return Err(Error::Config(format!("empty instance {inst}")));
        }
        if self.m == 0 {
            return Err(Error::Config("m >= 1 required".into()));
        }
        if self.cutoff == 0 && matches!(self.suite, Suite::Phi | Suite::Ev | Suite::Engine) {
            return Err(Error::Config("cutoff D >= 1 required".into()));
        }
        if let Some(mu) = self.mutation()? {
            if self.suite != Suite::All && mu.suite() != self.suite.name() {
                return Err(Error::Config(format!("mutation {mu} targets suite {}, not {}", mu.suite(), self.suite)));
            }
        }
        match self.suite {
            Suite::Phi => phi_supported(&inst),
            Suite::Ev if self.m == self.n => Err(Error::Config("ev requires m != n".into())),
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: Vec<String>,
    pub millis: u64,
    pub engine_version: String,
    pub status: crate::report::Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub config: SuiteConfig,
    pub checks: Vec<CheckReport>,
    pub summary: Summary,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }
}

/// JSON cache of the W-generators of one instance.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WCache {
    pub m: usize,
    pub n: usize,
    pub l: usize,
    #[serde(rename = "engine-version")]
    pub engine_version: String,
    pub generators: BTreeMap<String, Vec<TermJson>>,
}

impl WCache {
    pub fn from_wset(amb: &Ambient, w: &WSet) -> WCache {
        let generators = w.gens.iter().map(|(&(r, i, j), s)| (format!("({r},{i},{j})"), to_json(&amb.vx.alg, s))).collect();
        WCache { m: w.inst.m, n: w.inst.n, l: w.inst.l, engine_version: ENGINE_VERSION.into(), generators }
    }

    pub fn to_wset(&self, amb: &Ambient) -> Result<WSet> {
        let mut gens = BTreeMap::new();
        for (k, terms) in &self.generators {
            let idx: Vec<usize> = k
                .trim_matches(|c| c == '(' || c == ')')
                .split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|e| Error::Invalid(format!("bad key {k:?}: {e}"))))
                .collect::<Result<_>>()?;
            let [r, i, j] = idx[..] else {
                return Err(Error::Invalid(format!("bad key {k:?}")));
            };
            gens.insert((r, i, j), from_json(&amb.vx.alg, terms)?);
        }
        Ok(WSet { inst: amb.inst, gens })
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, serde_json::to_string_pretty(self)?)?;
        Ok(())
    }

    pub fn read(path: &Path) -> Result<WCache> {
        Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
    }
}

/// Loads W from `cache` when the header matches and a d₀ spot check passes;
/// otherwise builds it and rewrites the cache. Returns W and a warning, if any.
pub fn load_or_build_w(amb: &Ambient, cache: Option<&Path>) -> Result<(WSet, Option<String>)> {
    let inst = amb.inst;
    let mut warning = None;
    if let Some(path) = cache.filter(|p| p.exists()) {
        match WCache::read(path).and_then(|c| {
            if (c.m, c.n, c.l) != (inst.m, inst.n, inst.l) || c.engine_version != ENGINE_VERSION {
                return Err(Error::Invalid(format!("header ({},{},{}) {} does not match", c.m, c.n, c.l, c.engine_version)));
            }
            let w = c.to_wset(amb)?;
            let top = w.gens.keys().max().copied().ok_or_else(|| Error::Invalid("empty cache".into()))?;
            if !D0::new(amb, D0Reading::ADOPTED).apply(&w.gens[&top])?.is_zero() {
                return Err(Error::Invalid(format!("d0 spot check failed on {top:?}")));
            }
            Ok(w)
        }) {
            Ok(w) => return Ok((w, None)),
            Err(e) => warning = Some(format!("rebuilding W cache {}: {e}", path.display())),
        }
    }
    let w = amb.build_w();
    if let Some(path) = cache {
        WCache::from_wset(amb, &w).write(path)?;
    }
    Ok((w, warning))
}

fn ambient(inst: Instance, c_zero: bool) -> Ambient {
    if c_zero {
        Ambient::new_c0(inst)
    } else {
        Ambient::new(inst)
    }
}

fn run_part(cfg: &SuiteConfig, part: Suite, mutation: Option<Mutation>, cache: Option<&Path>) -> Result<Vec<CheckReport>> {
    let inst = cfg.instance();
    let mu = mutation.filter(|m| m.suite() == part.name());
    Ok(match part {
        Suite::Engine => {
            let vx: Vertex = ambient(inst, cfg.c_zero).vx;
            engine_suite(&vx, cfg.cutoff)
        }
        Suite::Gen | Suite::D0 => {
            let amb = ambient(inst, cfg.c_zero);
            let (mut w, _) = if cfg.c_zero { (amb.build_w(), None) } else { load_or_build_w(&amb, cache)? };
            if cfg.c_zero {
                w = w.specialize_c0();
            }
            if part == Suite::Gen {
                gen_suite(&amb, &w, mu)
            } else {
                d0_suite(&amb, &w, mu)
            }
        }
        Suite::Ope => {
            let amb = Ambient::new(inst);
            let (w, _) = load_or_build_w(&amb, cache)?;
            ope_suite(&OpeCtx { amb: &amb, w: &w }, mu)
        }
        Suite::Appendix => appendix_suite(inst, AppendixReading::ADOPTED, mu),
        Suite::Phi => {
            let amb = Ambient::new_c0(inst);
            let w = amb.build_w().specialize_c0();
            phi_suite(&amb, &w, cfg.cutoff, mu)?
        }
        Suite::Ev => ev_suite(cfg.m, cfg.n, cfg.cutoff, mu)?,
        Suite::All => unreachable!("expanded by run_suite"),
    })
}

/// Runs the configured suite. Configuration errors are returned as `Err`;
/// failing checks are reported in the result.
pub fn run_suite(cfg: &SuiteConfig, cache: Option<&Path>) -> Result<RunReport> {
    cfg.validate()?;
    let mutation = cfg.mutation()?;
    let t = Instant::now();
    let work = || -> Result<(Vec<CheckReport>, Vec<String>)> {
        let mut checks = Vec::new();
        let mut skipped = Vec::new();
        let parts: Vec<Suite> = if cfg.suite == Suite::All { Suite::PARTS.to_vec() } else { vec![cfg.suite] };
        for part in parts {
            if cfg.suite == Suite::All {
                let sub = SuiteConfig { suite: part, mutate: None, ..cfg.clone() };
                if let Err(e) = sub.validate() {
                    skipped.push(format!("{part}: {e}"));
                    continue;
                }
            }
            checks.extend(run_part(cfg, part, mutation, cache)?);
        }
        Ok((checks, skipped))
    };
    let (checks, skipped) = match cfg.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::Config(e.to_string()))?
            .install(work)?,
        None => work()?,
    };
    let passed = checks.iter().filter(|c| c.passed()).count();
    let failed = checks.len() - passed;
    let summary = Summary {
        total: checks.len(),
        passed,
        failed,
        skipped,
        millis: t.elapsed().as_millis() as u64,
        engine_version: ENGINE_VERSION.into(),
        status: if failed == 0 { crate::report::Status::Pass } else { crate::report::Status::Fail },
    };
    Ok(RunReport { config: cfg.clone(), checks, summary })
}

/// Builds W for an instance and writes the cache file.
pub fn gen_cache(inst: Instance, out: &Path) -> Result<WCache> {
    if inst.m == 0 || inst.l == 0 {
        return Err(Error::Config(format!("empty instance {inst}")));
    }
    let amb = Ambient::new(inst);
    let cache = WCache::from_wset(&amb, &amb.build_w());
    cache.write(out)?;
    Ok(cache)
}
