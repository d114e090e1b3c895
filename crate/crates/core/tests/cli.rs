//! The binary: exit codes, report schema, cache round trip and determinism.

use std::path::PathBuf;
use std::process::Command;

use rectw::cli::{load_or_build_w, WCache, ENGINE_VERSION};
use rectw::w_construct::Ambient;
use rectw::Instance;
use serde_json::Value;

fn dir(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("rectw-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_rectw")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8_lossy(&out.stderr).into_owned())
}

fn check(suite: &str, mnl: [&str; 3], extra: &[&str], report: &PathBuf) -> i32 {
    let mut args = vec!["check", "--suite", suite, "--m", mnl[0], "--n", mnl[1], "--l", mnl[2], "--cutoff", "1", "--report"];
    let r = report.to_str().unwrap();
    args.push(r);
    args.extend_from_slice(extra);
    run(&args).0
}

#[test]
fn exit_codes_and_report_schema() {
    let d = dir("codes");
    let rep = d.join("d0.json");
    assert_eq!(check("d0", ["2", "1", "2"], &[], &rep), 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&rep).unwrap()).unwrap();
    for k in ["config", "checks", "summary"] {
        assert!(v.get(k).is_some(), "missing {k}");
    }
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 2 * 9);
    for c in checks {
        for k in ["id", "paper_ref", "status", "millis"] {
            assert!(c.get(k).is_some(), "check missing {k}");
        }
        assert_eq!(c["status"], "pass");
    }
    assert_eq!(v["summary"]["failed"], 0);

    let mutated = d.join("mut.json");
    assert_eq!(check("d0", ["2", "1", "2"], &["--mutate", "d0.last_sign"], &mutated), 1);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&mutated).unwrap()).unwrap();
    let failing: Vec<&Value> = v["checks"].as_array().unwrap().iter().filter(|c| c["status"] == "fail").collect();
    assert!(!failing.is_empty() && failing.iter().all(|c| c["residual"].is_string()));

    assert_eq!(check("phi", ["2", "2", "2"], &[], &d.join("phi.json")), 2);
    assert_eq!(check("ev", ["2", "2", "1"], &[], &d.join("ev.json")), 2);
    assert_eq!(check("d0", ["2", "1", "2"], &["--mutate", "nope"], &d.join("x.json")), 2);
    assert_eq!(run(&["check", "--suite", "bogus"]).0, 2);
    std::fs::remove_dir_all(d).ok();
}

#[test]
fn gen_writes_a_loadable_cache() {
    let d = dir("gen");
    let out = d.join("w.json");
    let (code, _) = run(&["gen", "--m", "2", "--n", "1", "--l", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let cache = WCache::read(&out).unwrap();
    assert_eq!((cache.m, cache.n, cache.l, cache.engine_version.as_str()), (2, 1, 2, ENGINE_VERSION));
    assert_eq!(cache.generators.len(), 27);
    assert!(cache.generators.contains_key("(2,3,1)"));

    let amb = Ambient::new(Instance::new(2, 1, 2).unwrap());
    let built = amb.build_w();
    assert_eq!(cache.to_wset(&amb).unwrap().gens, built.gens);
    let (w, warn) = load_or_build_w(&amb, Some(&out)).unwrap();
    assert!(warn.is_none());
    assert_eq!(w.gens, built.gens);

    let rep = d.join("ope.json");
    assert_eq!(check("gen", ["2", "1", "2"], &["--cache", out.to_str().unwrap()], &rep), 0);
    std::fs::remove_dir_all(d).ok();
}

#[test]
fn stale_cache_is_rebuilt() {
    let d = dir("stale");
    let out = d.join("w.json");
    let amb = Ambient::new(Instance::new(2, 1, 2).unwrap());
    let mut cache = WCache::from_wset(&amb, &amb.build_w());
    cache.engine_version = "rectw-0.0.0".into();
    cache.write(&out).unwrap();
    let (w, warn) = load_or_build_w(&amb, Some(&out)).unwrap();
    assert!(warn.unwrap().contains("does not match"));
    assert_eq!(w.gens, amb.build_w().gens);
    assert_eq!(WCache::read(&out).unwrap().engine_version, ENGINE_VERSION);

    let mut cache = WCache::from_wset(&amb, &amb.build_w());
    let top = cache.generators.keys().last().unwrap().clone();
    let other = rectw::vertex::serial::to_json(&amb.vx.alg, &amb.cur(4, 1, 1).unwrap());
    cache.generators.insert(top, other);
    cache.write(&out).unwrap();
    let (_, warn) = load_or_build_w(&amb, Some(&out)).unwrap();
    assert!(warn.unwrap().contains("spot check"));
    std::fs::remove_dir_all(d).ok();
}

#[test]
fn reports_match_modulo_timing() {
    let d = dir("det");
    let (a, b) = (d.join("a.json"), d.join("b.json"));
    let extra = ["--jobs", "2"];
    assert_eq!(check("engine", ["2", "1", "2"], &extra, &a), 0);
    assert_eq!(check("engine", ["2", "1", "2"], &extra, &b), 0);
    let strip = |p: &PathBuf| {
        let mut v: Value = serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap();
        v["summary"]["millis"] = Value::Null;
        for c in v["checks"].as_array_mut().unwrap() {
            c["millis"] = Value::Null;
        }
        v
    };
    assert_eq!(strip(&a), strip(&b));
    std::fs::remove_dir_all(d).ok();
}
