//! Leading-term identities behind the generation argument: exact 0-th products
//! of the grade −1 and grade 0 sums, and the leading components of nested
//! products of W⁽¹⁾ and W⁽²⁾.
//!
//! Sums over block positions are restricted: a term whose row or column block
//! falls outside 1..=l is dropped.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::foundation::{sgn, Scalar};
use crate::mutation::{active, Mutation};
use crate::report::{clip, CheckReport};
use crate::superalgebra::Algebra;
use crate::vertex::{Acc, State, Word};
use crate::w_construct::{Ambient, WSet};

/// Total grade of a word: the sum of the grades of its letters.
pub fn word_grade(alg: &Algebra, w: &Word) -> i64 {
    w.iter().map(|x| alg.gen(x.gen()).grade).sum()
}

/// Decomposition of a state by total grade.
pub fn grade_parts(alg: &Algebra, u: &State) -> BTreeMap<i64, State> {
    let mut parts: BTreeMap<i64, Vec<(Word, Scalar)>> = BTreeMap::new();
    for (w, c) in u.terms() {
        parts.entry(word_grade(alg, w)).or_default().push((w.clone(), c.clone()));
    }
    parts.into_iter().map(|(g, ts)| (g, State::from_terms(ts))).collect()
}

/// The minimal-grade homogeneous part (zero for the zero state).
pub fn leading_component(alg: &Algebra, u: &State) -> State {
    grade_parts(alg, u).into_values().next().unwrap_or_else(State::zero)
}

/// Readings of the α-coefficient in the triple-product identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AppendixReading {
    /// (−1)^{p(e_{i,i+1})}(r+1)α in place of the printed (−1)^{p(e_{i,i+1})}α.
    pub t3_alpha_r_plus_1: bool,
}

impl AppendixReading {
    pub const PRINTED: AppendixReading = AppendixReading { t3_alpha_r_plus_1: false };
    pub const ADOPTED: AppendixReading = AppendixReading { t3_alpha_r_plus_1: true };
}

enum Case {
    FSum { w: usize, i: usize, j: usize, u: usize, v: usize },
    W1Band { r: usize, i: usize, j: usize, x: usize, y: usize },
    LeadW1 { r: usize, i: usize, j: usize },
    LeadPair { r: usize, i: usize },
    Triple { r: usize, i: usize },
}

pub struct AppendixCtx<'a> {
    pub amb: &'a Ambient,
    pub w: &'a WSet,
    pub reading: AppendixReading,
    pub mutation: Option<Mutation>,
}

impl AppendixCtx<'_> {
    fn nn(&self) -> i64 {
        self.amb.inst.big_n() as i64
    }

    fn alg(&self) -> &Algebra {
        &self.amb.vx.alg
    }

    /// Σ_t e_{row(t), col(t)}[−1] over `ts`, where row and col are given as
    /// (0-based block, small index); terms outside the blocks are dropped.
    fn e_sum(&self, ts: impl IntoIterator<Item = i64>, f: impl Fn(i64) -> ((i64, usize), (i64, usize))) -> State {
        let l = self.amb.inst.l as i64;
        let mut acc = Acc::default();
        for t in ts {
            let ((rb, ri), (cb, ci)) = f(t);
            if !(0..l).contains(&rb) || !(0..l).contains(&cb) {
                continue;
            }
            let a = (rb * self.nn()) as usize + ri;
            let b = (cb * self.nn()) as usize + ci;
            let s = self.amb.cur(a, b, 1).unwrap_or_else(|| panic!("e_{{{a},{b}}} is not in b"));
            acc.add(&s, &Scalar::one());
        }
        acc.finish()
    }

    fn prod(&self, u: &State, n: i64, v: &State) -> State {
        self.amb.vx.nth_product(u, n, v)
    }

    fn pe(&self, i: usize, j: usize) -> u8 {
        self.amb.inst.p_e(i, j)
    }

    fn sign(&self, i: usize) -> i64 {
        self.amb.inst.sign(i)
    }

    fn residual(&self, lhs: &State, rhs: &State) -> Option<String> {
        let r = lhs.sub(rhs);
        (!r.is_zero()).then(|| clip(self.amb.vx.display(&r)))
    }

    /// ((W⁽²⁾ᵢᵢ)₍₀₎)^r applied to u.
    fn w2_pow(&self, i: usize, r: usize, u: &State) -> State {
        let mut out = u.clone();
        for _ in 0..r {
            out = self.prod(self.w.w2(i, i), 0, &out);
        }
        out
    }

    /// Σ_{s=1}^{l−r} e_{(r+s−1)N+a,(s−1)N+b}[−1].
    fn band(&self, r: usize, a: usize, b: usize) -> State {
        let r = r as i64;
        self.e_sum(1..=self.amb.inst.l as i64 - r, |s| ((r + s - 1, a), (s - 1, b)))
    }

    fn check(&self, c: &Case) -> CheckReport {
        let l = self.amb.inst.l as i64;
        let one = Scalar::one();
        match *c {
            Case::FSum { w, i, j, u, v } => CheckReport::run(
                format!("appendix.exact.f[w={w},i={i},j={j},u={u},v={v}]"),
                "(Σ_s e_{sN+j,(s−1)N+i}[−1])_(0) Σ_t e_{(w+t−1)N+u,(t−1)N+v}[−1] = δ_{i,u} Σ_t e_{(w+t)N+j,(t−1)N+v}[−1] − δ_{j,v}(−1)^{p(e_{i,j})p(e_{u,v})} Σ_t e_{(w+t)N+u,(t−1)N+i}[−1]",
                || {
                    let w = w as i64;
                    let z = self.e_sum(1..l, |s| ((s, j), (s - 1, i)));
                    let x = self.e_sum(1..=l - w, |t| ((w + t - 1, u), (t - 1, v)));
                    let lhs = self.prod(&z, 0, &x);
                    let mut acc = Acc::default();
                    if i == u {
                        acc.add(&self.e_sum(1..l - w, |t| ((w + t, j), (t - 1, v))), &one);
                    }
                    if j == v {
                        let k = -sgn(self.pe(i, j) & self.pe(u, v));
                        acc.add_int(&self.e_sum(1..l - w, |t| ((w + t, u), (t - 1, i))), k);
                    }
                    self.residual(&lhs, &acc.finish())
                },
            ),
            Case::W1Band { r, i, j, x, y } => CheckReport::run(
                format!("appendix.exact.w1[r={r},i={i},j={j},x={x},y={y}]"),
                "(W1_{i,j})_(0) Σ_s e_{(r+s−1)N+x,(s−1)N+y}[−1] = δ_{i,x} Σ_s e_{(r+s−1)N+j,(s−1)N+y}[−1] − δ_{j,y}(−1)^{p(e_{i,j})p(e_{x,y})} Σ_s e_{(r+s−1)N+x,(s−1)N+i}[−1]",
                || {
                    let lhs = self.prod(self.w.w1(i, j), 0, &self.band(r, x, y));
                    let mut acc = Acc::default();
                    if i == x {
                        acc.add(&self.band(r, j, y), &one);
                    }
                    if j == y {
                        acc.add_int(&self.band(r, x, i), -sgn(self.pe(i, j) & self.pe(x, y)));
                    }
                    self.residual(&lhs, &acc.finish())
                },
            ),
            Case::LeadW1 { r, i, j } => CheckReport::run(
                format!("appendix.lead.w1[r={r},i={i},j={j}]"),
                "leading part of ((W2_{i,i})_(0))^r W1_{j,i} = Σ_{s=1}^{l−r} e_{(r+s−1)N+i,(s−1)N+j}[−1]",
                || {
                    let lhs = self.w2_pow(i, r, self.w.w1(j, i));
                    self.residual(&leading_component(self.alg(), &lhs), &self.band(r, i, j))
                },
            ),
            Case::LeadPair { r, i } => CheckReport::run(
                format!("appendix.lead.pair[r={r},i={i}]"),
                "leading part of (W1_{i,i+1})_(0)((W2_{i,i})_(0))^r W1_{i+1,i} = Σ_s e_{(r+s−1)N+i+1,(s−1)N+i+1}[−1] − (−1)^{p(e_{i,i+1})} Σ_s e_{(r+s−1)N+i,(s−1)N+i}[−1]",
                || {
                    let inner = self.w2_pow(i, r, self.w.w1(i + 1, i));
                    let lhs = self.prod(self.w.w1(i, i + 1), 0, &inner);
                    let mut acc = Acc::default();
                    acc.add(&self.band(r, i + 1, i + 1), &one);
                    acc.add_int(&self.band(r, i, i), -sgn(self.pe(i, i + 1)));
                    self.residual(&leading_component(self.alg(), &lhs), &acc.finish())
                },
            ),
            Case::Triple { r, i } => CheckReport::run(
                format!("appendix.triple[r={r},i={i}]"),
                if self.reading.t3_alpha_r_plus_1 {
                    "leading part of (W2_{i,i})_(1)(W1_{i,i+1})_(0)((W2_{i,i})_(0))^r W1_{i+1,i} = ((−1)^{p(e_{i,i+1})}(r+1)α + (−1)^{p(i+1)}r) S_i − (−1)^{p(i)} r S_{i+1}, S_k = Σ_t e_{(t−1)N+k,(t−r−1)N+k}[−1]"
                } else {
                    "leading part of (W2_{i,i})_(1)(W1_{i,i+1})_(0)((W2_{i,i})_(0))^r W1_{i+1,i} = ((−1)^{p(e_{i,i+1})}α + (−1)^{p(i+1)}r) S_i − (−1)^{p(i)} r S_{i+1}, S_k = Σ_t e_{(t−1)N+k,(t−r−1)N+k}[−1]"
                },
                || {
                    let inner = self.w2_pow(i, r, self.w.w1(i + 1, i));
                    let mid = self.prod(self.w.w1(i, i + 1), 0, &inner);
                    let lhs = self.prod(self.w.w2(i, i), 1, &mid);
                    let rr = if active(self.mutation, Mutation::AppendixT3R) { r as i64 + 1 } else { r as i64 };
                    let sk = |k: usize| self.e_sum(1..=l, |t| ((t - 1, k), (t - r as i64 - 1, k)));
                    let ka = if self.reading.t3_alpha_r_plus_1 { r as i64 + 1 } else { 1 };
                    let ci = Scalar::alpha().scale_int(sgn(self.pe(i, i + 1)) * ka).add(&Scalar::int(self.sign(i + 1) * rr));
                    let mut acc = Acc::default();
                    acc.add(&sk(i), &ci);
                    acc.add_int(&sk(i + 1), -self.sign(i) * rr);
                    self.residual(&leading_component(self.alg(), &lhs), &acc.finish())
                },
            ),
        }
    }

    fn cases(&self) -> Vec<Case> {
        let nn = self.amb.inst.big_n();
        let l = self.amb.inst.l;
        let mut out = Vec::new();
        for i in 1..=nn {
            for j in 1..=nn {
                for u in 1..=nn {
                    for v in 1..=nn {
                        for w in 0..l {
                            out.push(Case::FSum { w, i, j, u, v });
                            out.push(Case::W1Band { r: w, i, j, x: u, y: v });
                        }
                    }
                }
            }
        }
        for r in 0..l {
            for i in 1..=nn {
                for j in (1..=nn).filter(|&j| j != i) {
                    out.push(Case::LeadW1 { r, i, j });
                }
                if i < nn {
                    out.push(Case::LeadPair { r, i });
                }
            }
        }
        for r in 1..l {
            for i in 1..nn {
                out.push(Case::Triple { r, i });
            }
        }
        out
    }

    /// Every exact and leading-term identity at the instance, in a fixed order.
    pub fn run(&self) -> Vec<CheckReport> {
        self.cases().par_iter().map(|c| self.check(c)).collect()
    }
}

/// Builds the ambient algebra (c symbolic) and W, then runs every check.
pub fn appendix_suite(inst: crate::Instance, reading: AppendixReading, mutation: Option<Mutation>) -> Vec<CheckReport> {
    let amb = Ambient::new(inst);
    let w = amb.build_w();
    AppendixCtx { amb: &amb, w: &w, reading, mutation }.run()
}
