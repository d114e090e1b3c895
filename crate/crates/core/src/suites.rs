//! The generator and d₀-kernel suites.

use rayon::prelude::*;

use crate::mutation::{active, Mutation};
use crate::report::{clip, CheckReport};
use crate::vertex::State;
use crate::w_construct::{Ambient, D0Reading, WSet, D0};

/// W⁽ʳ⁾ᵢⱼ read off the column determinant against the closed forms for r = 1, 2,
/// and W⁽⁰⁾ᵢⱼ = δᵢⱼ(−1)^{p(j)}|0⟩.
pub fn gen_suite(amb: &Ambient, w: &WSet, mutation: Option<Mutation>) -> Vec<CheckReport> {
    let nn = amb.inst.big_n();
    let idx: Vec<(usize, usize, usize)> =
        (0..=2).flat_map(|r| (1..=nn).flat_map(move |i| (1..=nn).map(move |j| (r, i, j)))).collect();
    idx.par_iter()
        .map(|&(r, i, j)| {
            let statement = match r {
                0 => "W0_{i,j} = δ_{i,j}(−1)^{p(j)}|0>",
                1 => "W1_{i,j} = Σ_s e_{(s−1)N+j,(s−1)N+i}[−1]",
                _ => "W2_{i,j} = Σ_s e_{sN+j,(s−1)N+i}[−1] + Σ_s α(s−1)e_{(s−1)N+j,(s−1)N+i}[−2] + Σ_{r1<r2} Σ_t (−1)^{p(t)+p(e_{i,t})p(e_{j,t})} e^{(r1)}_{t,i}[−1]e^{(r2)}_{j,t}[−1]",
            };
            CheckReport::run(format!("gen.w{r}[{i},{j}]"), statement, || {
                let want = match r {
                    0 if i == j => State::vacuum().scale(&crate::Scalar::int(amb.inst.sign(j))),
                    0 => State::zero(),
                    1 => amb.w1_closed(i, j),
                    _ => amb.w2_closed_with(i, j, mutation),
                };
                let d = w.w(r, i, j).sub(&want);
                (!d.is_zero()).then(|| clip(amb.vx.display(&d)))
            })
        })
        .collect()
}

/// d₀(W⁽ʳ⁾ᵢⱼ) = 0 for 1 ≤ r ≤ l and all i, j.
pub fn d0_suite(amb: &Ambient, w: &WSet, mutation: Option<Mutation>) -> Vec<CheckReport> {
    let mut reading = D0Reading::ADOPTED;
    if active(mutation, Mutation::D0LastSign) {
        reading.last_term_signed = false;
    }
    let d0 = D0::new(amb, reading);
    let nn = amb.inst.big_n();
    let l = amb.inst.l;
    let idx: Vec<(usize, usize, usize)> =
        (1..=l).flat_map(|r| (1..=nn).flat_map(move |i| (1..=nn).map(move |j| (r, i, j)))).collect();
    idx.par_iter()
        .map(|&(r, i, j)| {
            CheckReport::run(format!("d0.w{r}[{i},{j}]"), "d0(W^(r)_{i,j}) = 0", || match d0.apply(w.w(r, i, j)) {
                Ok(x) if x.is_zero() => None,
                Ok(x) => Some(clip(amb.vx.display(&x))),
                Err(e) => Some(e.to_string()),
            })
        })
        .collect()
}
