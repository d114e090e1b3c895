//! The Φ and ev relation suites as lists of check reports.

use super::images::{ev_ctilde, ev_images, phi_images, EvReading, PhiReading};
use super::relations::{mini_relations, prop_relations, PsiReading, RelReading, RelationSpec, YParams};
use super::verify::Evaluator;
use crate::error::{Error, Result};
use crate::foundation::{Instance, Scalar};
use crate::mutation::Mutation;
use crate::report::CheckReport;
use crate::superalgebra::{str_pair, Algebra, Kind};
use crate::vertex::Vertex;
use crate::w_construct::{Ambient, WSet};

fn prefixed(prefix: &str, reps: Vec<CheckReport>) -> Vec<CheckReport> {
    reps.into_iter()
        .map(|mut r| {
            r.id = format!("{prefix}.{}", r.id);
            r
        })
        .collect()
}

fn run(ev: &Evaluator, rels: &[RelationSpec], d: u32, prefix: &str) -> Vec<CheckReport> {
    prefixed(prefix, ev.verify_all(rels, d))
}

/// Φ on the vacuum module of the c = 0 ambient algebra, up to weight `d`.
/// `amb` must be built with c = 0 and `w` specialized to c = 0.
/// Runs the H/X relations, their minimal-presentation counterparts pushed
/// through Ψ, and a check that both lists agree on pass/fail.
pub fn phi_suite(amb: &Ambient, w: &WSet, d: u32, mutation: Option<Mutation>) -> Result<Vec<CheckReport>> {
    let inst = w.inst;
    let images = phi_images(w, PhiReading::ADOPTED, mutation)?;
    let p = YParams::phi(&inst);
    let ev = Evaluator::new(&amb.vx, &images);
    let mut out = run(&ev, &prop_relations(&inst, &p, RelReading::ADOPTED), d, "phi");
    let mini = run(&ev, &mini_relations(&inst, &p, PsiReading::ADOPTED), d, "phi.psi");
    let direct = out.iter().all(|r| r.passed());
    let translated = mini.iter().all(|r| r.passed());
    out.extend(mini);
    out.push(CheckReport::run(
        "phi.presentation",
        "the minimal presentation through Ψ passes iff the H/X presentation passes",
        || (direct != translated).then(|| format!("H/X all pass: {direct}, through Ψ all pass: {translated}")),
    ));
    Ok(out)
}

/// Builds the c = 0 ambient algebra and its W-generators, then runs [`phi_suite`].
pub fn phi_suite_fresh(inst: Instance, d: u32, mutation: Option<Mutation>) -> Result<Vec<CheckReport>> {
    super::images::phi_supported(&inst)?;
    let amb = Ambient::new_c0(inst);
    let w = amb.build_w().specialize_c0();
    phi_suite(&amb, &w, d, mutation)
}

/// The two basis-unit cocycle clauses agree on 𝔰𝔩 diagonals: for
/// h = E_{i,i} − (−1)^{p(i)+p(i+1)}E_{i+1,i+1} and any E_{j,j}, the form equals str(h E_{j,j})c̃.
fn cocycle_check(alg: &Algebra, inst: &Instance, ct: &Scalar) -> Option<String> {
    let nn = inst.big_n();
    for i in 1..nn {
        let k = inst.sign(i) * inst.sign(i + 1);
        for j in 1..=nn {
            let id = |a: usize| alg.id(Kind::Current, a, a).expect("diagonal unit");
            let form = alg.form(id(i), id(j)).sub(&alg.form(id(i + 1), id(j)).scale_int(k));
            let st = str_pair(inst, i, i, j, j) - k * str_pair(inst, i + 1, i + 1, j, j);
            let want = ct.scale_int(st);
            if form != want {
                return Some(format!("h_{i} vs E_{{{j},{j}}}: {form} != {want}"));
            }
        }
    }
    None
}

fn ev_run(inst: &Instance, p: &YParams, d: u32, mutation: Option<Mutation>, prefix: &str) -> Result<Vec<CheckReport>> {
    let ct = ev_ctilde(inst, p)?;
    let vx = Vertex::new(Algebra::gl_str(inst.m, inst.n, ct.clone()));
    let images = ev_images(&vx, inst, p, EvReading::ADOPTED, mutation)?;
    let ev = Evaluator::new(&vx, &images);
    let mut out = run(&ev, &prop_relations(inst, p, RelReading::ADOPTED), d, prefix);
    out.push(CheckReport::run(
        format!("{prefix}.cocycle"),
        "basis-unit and sl-first readings of the str cocycle agree on sl diagonals",
        || cocycle_check(&vx.alg, inst, &ct),
    ));
    Ok(out)
}

/// ev on the vacuum module of 𝔤𝔩̂(m|n)^str up to weight `d`: once with
/// ε₁ = α/(m−n), ε₂ = −1 − ε₁ (so ħ = −1, c̃ = α), and once at (ε₁, ε₂) = (1, 1).
pub fn ev_suite(m: usize, n: usize, d: u32, mutation: Option<Mutation>) -> Result<Vec<CheckReport>> {
    if m == n || m + n < 2 {
        return Err(Error::Config(format!("ev requires m != n and m + n >= 2, got ({m},{n})")));
    }
    let inst = Instance { m, n, l: 1 };
    let mut out = ev_run(&inst, &YParams::phi(&inst), d, mutation, "ev.sym")?;
    let num = YParams { eps1: Scalar::int(1), eps2: Scalar::int(1) };
    out.extend(ev_run(&inst, &num, d, mutation, "ev.num")?);
    Ok(out)
}
