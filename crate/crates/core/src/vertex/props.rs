//! Vertex algebra axioms checked on explicit states.

use rayon::prelude::*;

use super::basis::words_up_to;
use super::engine::Vertex;
use super::state::{word_weight, Acc, State, Word};
use crate::foundation::{binom, sgn, Scalar, Q};
use crate::report::{clip, CheckReport};

/// u_(n)v + (−1)^{p(u)p(v)} Σ_j (−1)^{n+j} ∂^j(v_(n+j)u)/j!.
pub fn quasi_symmetry(vx: &Vertex, u: &State, n: i64, v: &State) -> State {
    let (pu, pv) = (parity(vx, u), parity(vx, v));
    let mut acc = Acc::default();
    acc.add(&vx.nth_product(u, n, v), &Scalar::one());
    let top = u.weight() + v.weight();
    let mut fact = Q::one();
    for j in 0..(top - n).max(0) {
        if j > 0 {
            fact = fact.mul(&Q::int(j));
        }
        let p = vx.nth_product(v, n + j, u);
        if p.is_zero() {
            continue;
        }
        let d = vx.translate_pow(&p, j as u32);
        let c = Q::int(sgn(pu & pv) * sgn(((n + j) & 1) as u8)).div(&fact);
        acc.add(&d, &Scalar::constant(c));
    }
    acc.finish()
}

/// (∂u)_(n)v + n·u_(n−1)v.
pub fn translation_axiom(vx: &Vertex, u: &State, n: i64, v: &State) -> State {
    let mut acc = Acc::default();
    acc.add(&vx.nth_product(&vx.translate(u), n, v), &Scalar::one());
    acc.add_int(&vx.nth_product(u, n - 1, v), n);
    acc.finish()
}

/// ∂(u_(n)v) − (∂u)_(n)v − u_(n)∂v.
pub fn derivation(vx: &Vertex, u: &State, n: i64, v: &State) -> State {
    let mut acc = Acc::default();
    acc.add(&vx.translate(&vx.nth_product(u, n, v)), &Scalar::one());
    acc.add_int(&vx.nth_product(&vx.translate(u), n, v), -1);
    acc.add_int(&vx.nth_product(u, n, &vx.translate(v)), -1);
    acc.finish()
}

/// [u_(a), v_(b)]w − Σ_j C(a, j)(u_(j)v)_(a+b−j)w.
pub fn borcherds(vx: &Vertex, u: &State, a: i64, v: &State, b: i64, w: &State) -> State {
    let (pu, pv) = (parity(vx, u), parity(vx, v));
    let mut acc = Acc::default();
    acc.add(&vx.nth_product(u, a, &vx.nth_product(v, b, w)), &Scalar::one());
    acc.add_int(&vx.nth_product(v, b, &vx.nth_product(u, a, w)), -sgn(pu & pv));
    for j in 0..(u.weight() + v.weight()).max(0) {
        let c = binom(a, j as u32);
        if c.is_zero() {
            continue;
        }
        let uv = vx.nth_product(u, j, v);
        if uv.is_zero() {
            continue;
        }
        acc.add(&vx.nth_product(&uv, a + b - j, w), &Scalar::constant(c.neg()));
    }
    acc.finish()
}

fn parity(vx: &Vertex, s: &State) -> u8 {
    s.parity(&vx.alg).unwrap_or(0)
}

fn word_state(w: &Word) -> State {
    State::word(w.clone(), Scalar::one())
}

/// Pairs of basis words with wt(u) + wt(v) ≤ `max_weight`, u, v non-vacuum.
pub fn pairs(vx: &Vertex, max_weight: u32) -> Vec<(Word, Word)> {
    let basis: Vec<Word> = words_up_to(&vx.alg, max_weight).into_iter().filter(|w| !w.is_empty()).collect();
    let mut out = Vec::new();
    for u in &basis {
        for v in &basis {
            if word_weight(u) + word_weight(v) <= max_weight as i64 {
                out.push((u.clone(), v.clone()));
            }
        }
    }
    out
}

fn first_failure<T: Sync>(cases: &[T], f: impl Fn(&T) -> Option<String> + Sync) -> Option<String> {
    let fails: Vec<String> = cases.par_iter().filter_map(&f).collect();
    let count = fails.len();
    let first = fails.into_iter().min()?;
    Some(clip(format!("{count} failing cases; first: {first}")))
}

/// The engine property suite on all basis pairs of total weight ≤ `max_weight`;
/// the Borcherds identity uses weight-one u, v, |a|, |b| ≤ 2 and w of weight ≤ `max_weight − 1`.
pub fn engine_suite(vx: &Vertex, max_weight: u32) -> Vec<CheckReport> {
    let ps = pairs(vx, max_weight);
    let label = |u: &Word, n: i64, v: &Word| format!("u={} n={n} v={}", vx.display(&word_state(u)), vx.display(&word_state(v)));
    let ns = |u: &Word, v: &Word| -2..(word_weight(u) + word_weight(v));
    let mut out = Vec::new();
    out.push(CheckReport::run("engine.quasi_symmetry", "u_(n)v = −(−1)^{p(u)p(v)} Σ_j (−1)^{n+j} ∂^j(v_(n+j)u)/j!", || {
        first_failure(&ps, |(u, v)| {
            ns(u, v).find_map(|n| {
                let r = quasi_symmetry(vx, &word_state(u), n, &word_state(v));
                (!r.is_zero()).then(|| format!("{} residual {}", label(u, n, v), vx.display(&r)))
            })
        })
    }));
    out.push(CheckReport::run("engine.translation", "(∂u)_(n) = −n u_(n−1)", || {
        first_failure(&ps, |(u, v)| {
            ns(u, v).find_map(|n| {
                let r = translation_axiom(vx, &word_state(u), n, &word_state(v));
                (!r.is_zero()).then(|| format!("{} residual {}", label(u, n, v), vx.display(&r)))
            })
        })
    }));
    out.push(CheckReport::run("engine.derivation", "∂(u_(n)v) = (∂u)_(n)v + u_(n)∂v", || {
        first_failure(&ps, |(u, v)| {
            ns(u, v).find_map(|n| {
                let r = derivation(vx, &word_state(u), n, &word_state(v));
                (!r.is_zero()).then(|| format!("{} residual {}", label(u, n, v), vx.display(&r)))
            })
        })
    }));
    out.push(CheckReport::run("engine.weight", "wt(u_(n)v) = wt(u) + wt(v) − n − 1", || {
        first_failure(&ps, |(u, v)| {
            ns(u, v).find_map(|n| {
                let r = vx.nth_product(&word_state(u), n, &word_state(v));
                let want = word_weight(u) + word_weight(v) - n - 1;
                (r.terms().iter().any(|(w, _)| word_weight(w) != want)).then(|| format!("{} gives {}", label(u, n, v), vx.display(&r)))
            })
        })
    }));
    out.push(CheckReport::run("engine.parity", "p(u_(n)v) = p(u) + p(v)", || {
        first_failure(&ps, |(u, v)| {
            ns(u, v).find_map(|n| {
                let r = vx.nth_product(&word_state(u), n, &word_state(v));
                let want = parity(vx, &word_state(u)) ^ parity(vx, &word_state(v));
                (!r.is_zero() && r.parity(&vx.alg) != Some(want)).then(|| format!("{} gives {}", label(u, n, v), vx.display(&r)))
            })
        })
    }));
    let gens: Vec<Word> = words_up_to(&vx.alg, 1).into_iter().filter(|w| !w.is_empty()).collect();
    let targets = words_up_to(&vx.alg, max_weight.saturating_sub(1));
    let mut triples = Vec::new();
    for u in &gens {
        for v in &gens {
            triples.push((u.clone(), v.clone()));
        }
    }
    out.push(CheckReport::run("engine.borcherds", "[u_(a), v_(b)] = Σ_j C(a, j)(u_(j)v)_(a+b−j)", || {
        first_failure(&triples, |(u, v)| {
            let (us, vs) = (word_state(u), word_state(v));
            for w in &targets {
                let ws = word_state(w);
                for a in -2..=2 {
                    for b in -2..=2 {
                        let r = borcherds(vx, &us, a, &vs, b, &ws);
                        if !r.is_zero() {
                            return Some(format!(
                                "u={} a={a} v={} b={b} w={} residual {}",
                                vx.display(&us),
                                vx.display(&vs),
                                vx.display(&ws),
                                vx.display(&r)
                            ));
                        }
                    }
                }
            }
            None
        })
    }));
    out
}
