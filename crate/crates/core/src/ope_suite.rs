//! Operator product identities among W⁽¹⁾ and W⁽²⁾, checked exactly with c symbolic.

use rayon::prelude::*;

use crate::foundation::{sgn, Scalar};
use crate::mutation::{active, Mutation};
use crate::report::{clip, CheckReport};
use crate::superalgebra::{kappa_b, str_pair, str_unit, Algebra};
use crate::vertex::{Acc, State};
use crate::w_construct::{Ambient, WSet};

/// Reading of the scalar in the (2)-product of W⁽¹⁾ with W⁽²⁾.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KappaReading {
    /// κ of the block algebra on e_{w,v}, e_{j,i} in the first diagonal block.
    Block,
    /// α-part only: (−1)^{p(w)} δ_{w,i} δ_{v,j} α.
    SupertraceOnly,
    /// κ of the diagonal embedding divided by l:
    /// str(e_{w,v}e_{j,i})α − (lc − 1)str(e_{w,v})str(e_{j,i}).
    Diagonal,
}

pub struct OpeCtx<'a> {
    pub amb: &'a Ambient,
    pub w: &'a WSet,
}

fn sc(k: i64) -> Scalar {
    Scalar::int(k)
}

fn d(a: usize, b: usize) -> bool {
    a == b
}

impl OpeCtx<'_> {
    fn l(&self) -> i64 {
        self.amb.inst.l as i64
    }

    fn sign(&self, i: usize) -> i64 {
        self.amb.inst.sign(i)
    }

    fn pe(&self, i: usize, j: usize) -> u8 {
        self.amb.inst.p_e(i, j)
    }

    fn prod(&self, u: &State, n: i64, v: &State) -> State {
        self.amb.vx.nth_product(u, n, v)
    }

    fn dd(&self, u: &State, k: u32) -> State {
        self.amb.vx.translate_pow(u, k)
    }

    fn residual(&self, lhs: &State, rhs: &State) -> Option<String> {
        let r = lhs.sub(rhs);
        (!r.is_zero()).then(|| clip(self.amb.vx.display(&r)))
    }

    fn lc1(&self) -> Scalar {
        // l·c − 1
        Scalar::c().scale_int(self.l()).sub(&sc(1))
    }

    /// (W⁽¹⁾ᵤᵥ)₍₀₎W⁽²⁾ᵢⱼ closed form.
    pub fn w1_0_w2_rhs(&self, u: usize, v: usize, i: usize, j: usize) -> State {
        let mut acc = Acc::default();
        if d(j, u) {
            acc.add(self.w.w2(i, v), &sc(1));
        }
        if d(i, v) {
            acc.add(self.w.w2(u, j), &sc(-sgn(self.pe(u, v) & self.pe(i, j))));
        }
        acc.finish()
    }

    /// (W⁽¹⁾ᵥ𝓌)₍₁₎W⁽²⁾ᵢⱼ closed form.
    pub fn w1_1_w2_rhs(&self, v: usize, w: usize, i: usize, j: usize) -> State {
        let l = self.l();
        let mut acc = Acc::default();
        if d(j, v) {
            acc.add(self.w.w1(i, w), &Scalar::alpha().scale_int(l - 1));
        }
        if d(v, w) {
            acc.add(self.w.w1(i, j), &self.lc1().scale_int(-self.sign(w) * (l - 1)));
        }
        acc.finish()
    }

    /// The scalar of (W⁽¹⁾ᵥ𝓌)₍₂₎W⁽²⁾ᵢⱼ.
    pub fn w1_2_w2_scalar(&self, v: usize, w: usize, i: usize, j: usize, reading: KappaReading) -> Scalar {
        let l = self.l();
        let k = match reading {
            KappaReading::Block => kappa_b(&self.amb.inst, w, v, j, i),
            KappaReading::Diagonal => {
                let inst = &self.amb.inst;
                let st = str_pair(inst, w, v, j, i);
                let tt = str_unit(inst, w, v) * str_unit(inst, j, i);
                Scalar::alpha().scale_int(st).sub(&self.lc1().scale_int(tt))
            }
            KappaReading::SupertraceOnly => {
                if d(w, i) && d(v, j) {
                    Scalar::alpha().scale_int(self.sign(w))
                } else {
                    Scalar::zero()
                }
            }
        };
        Scalar::alpha().scale_int(l * (l - 1)).mul(&k)
    }

    /// [W⁽¹⁾ᵥ𝓌 tˢ, W⁽²⁾ᵢⱼ tᵘ] as (state, t-power) pairs.
    pub fn cor_rhs(&self, v: usize, w: usize, i: usize, j: usize, s: i64, u: i64, reading: KappaReading) -> Vec<(State, i64)> {
        let mut out = Vec::new();
        out.push((self.w1_0_w2_rhs(v, w, i, j), s + u));
        out.push((self.w1_1_w2_rhs(v, w, i, j).scale(&sc(s)), s + u - 1));
        let k = self.w1_2_w2_scalar(v, w, i, j, reading);
        let half = Scalar::frac(s * (s - 1), 2);
        out.push((State::vacuum().scale(&k.mul(&half)), s + u - 2));
        out
    }

    /// (W⁽²⁾ᵢᵢ)₍₀₎W⁽²⁾ⱼⱼ closed form.
    pub fn w2_0_w2_rhs(&self, i: usize, j: usize, mutation: Option<Mutation>) -> State {
        let (l, a) = (self.l(), Scalar::alpha());
        let (si, sj) = (self.sign(i), self.sign(j));
        let dij = d(i, j);
        let nop = |x: &State, y: &State| self.prod(x, -1, y);
        let mut acc = Acc::default();
        acc.add(&nop(self.w.w1(i, j), self.w.w2(j, i)), &sc(si));
        acc.add(&nop(self.w.w1(j, i), self.w.w2(i, j)), &sc(-sj));
        let mut dw2 = if dij { a.clone() } else { Scalar::zero() }.add(&sc(si)).neg();
        if active(mutation, Mutation::OpeW2W2) {
            dw2 = dw2.scale_int(2);
        }
        acc.add(&self.dd(self.w.w2(j, j), 1), &dw2);
        acc.add(&nop(self.w.w1(j, i), &self.dd(self.w.w1(i, j), 1)), &a.scale_int(sj * (l - 1)));
        let lev = Scalar::c().scale_int((l - 1) * (l - 1)).sub(&sc(l - 1));
        acc.add(&nop(self.w.w1(j, j), &self.dd(self.w.w1(i, i), 1)), &lev.neg());
        let d2ii = self.dd(self.w.w1(i, i), 2);
        let d2jj = self.dd(self.w.w1(j, j), 2);
        let ll = Scalar::frac(l * (l - 1), 2);
        if dij {
            acc.add(&d2ii, &a.mul(&a).mul(&ll));
        }
        acc.add(&d2ii, &a.mul(&ll).scale_int(sj));
        acc.add(&d2ii, &Scalar::c().mul(&a).mul(&Scalar::frac(l * (l - 1) * (l - 1), 2)).scale_int(-sj));
        acc.add(&d2jj, &a.mul(&Scalar::frac(si * (l - 1), 2)));
        acc.add(&d2ii, &a.mul(&Scalar::frac(-sj * (l - 1), 2)));
        acc.finish()
    }

    /// (W⁽²⁾ᵢᵢ)₍₁₎W⁽²⁾ⱼⱼ closed form.
    pub fn w2_1_w2_rhs(&self, i: usize, j: usize) -> State {
        let (l, a) = (self.l(), Scalar::alpha());
        let (si, sj) = (self.sign(i), self.sign(j));
        let dij = d(i, j);
        let nop = |x: &State, y: &State| self.prod(x, -1, y);
        let mut acc = Acc::default();
        let lev = Scalar::c().scale_int((l - 1) * (l - 1)).sub(&sc(l - 1));
        acc.add(&nop(self.w.w1(j, j), self.w.w1(i, i)), &lev.neg());
        if dij {
            acc.add(self.w.w2(i, i), &a.scale_int(-2));
        }
        acc.add(self.w.w2(j, j), &sc(-si));
        acc.add(self.w.w2(i, i), &sc(-sj));
        acc.add(&nop(self.w.w1(j, i), self.w.w1(i, j)), &a.scale_int(sj * (l - 1)));
        let dii = self.dd(self.w.w1(i, i), 1);
        let djj = self.dd(self.w.w1(j, j), 1);
        if dij {
            acc.add(&dii, &a.mul(&a).scale_int(l * (l - 1)));
        }
        acc.add(&dii, &a.scale_int(sj * l * (l - 1)));
        acc.add(&dii, &Scalar::c().mul(&a).scale_int(-sj * l * (l - 1) * (l - 1)));
        acc.add(&djj, &a.scale_int(si * (l - 1)));
        acc.add(&dii, &a.scale_int(-sj * (l - 1)));
        acc.finish()
    }
}

fn quads(nn: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 1..=nn {
        for b in 1..=nn {
            for c in 1..=nn {
                for e in 1..=nn {
                    out.push((a, b, c, e));
                }
            }
        }
    }
    out
}

/// ξ: (W⁽¹⁾ⱼᵢ)₍₀₎W⁽¹⁾ₗₖ is the image of [E_{i,j}, E_{k,l}] and (W⁽¹⁾ⱼᵢ)₍₁₎W⁽¹⁾ₗₖ is the
/// level of 𝔤𝔩̂(m|n)^κ at c̃ = lα, x = 1.
pub fn xi_checks(ctx: &OpeCtx) -> Vec<CheckReport> {
    let inst = ctx.amb.inst;
    let gl = Algebra::gl_kappa(inst);
    let nn = inst.big_n();
    quads(nn)
        .par_iter()
        .map(|&(i, j, k, l)| {
            CheckReport::run(
                format!("ope.xi[{i},{j},{k},{l}]"),
                "ξ(E_{i,j}t^s) = W⁽¹⁾_{j,i}t^s, ξ(c̃) = lα, ξ(x) = 1",
                || {
                    let (x, y) = (ctx.w.w1(j, i), ctx.w.w1(l, k));
                    let gx = gl.id(crate::superalgebra::Kind::Current, i, j).unwrap();
                    let gy = gl.id(crate::superalgebra::Kind::Current, k, l).unwrap();
                    let mut want0 = Acc::default();
                    for &(g, c) in gl.bracket(gx, gy) {
                        let e = gl.gen(g);
                        want0.add(ctx.w.w1(e.col, e.row), &sc(c));
                    }
                    let want1 = State::vacuum().scale(gl.form(gx, gy));
                    let mut errs = Vec::new();
                    if let Some(r) = ctx.residual(&ctx.prod(x, 0, y), &want0.finish()) {
                        errs.push(format!("(0): {r}"));
                    }
                    if let Some(r) = ctx.residual(&ctx.prod(x, 1, y), &want1) {
                        errs.push(format!("(1): {r}"));
                    }
                    for n in 2..4 {
                        if let Some(r) = ctx.residual(&ctx.prod(x, n, y), &State::zero()) {
                            errs.push(format!("({n}): {r}"));
                        }
                    }
                    (!errs.is_empty()).then(|| errs.join("; "))
                },
            )
        })
        .collect()
}

pub fn w1_w2_checks(ctx: &OpeCtx, reading: KappaReading) -> Vec<CheckReport> {
    let nn = ctx.amb.inst.big_n();
    let qs = quads(nn);
    let mut out: Vec<CheckReport> = qs
        .par_iter()
        .map(|&(u, v, i, j)| {
            CheckReport::run(
                format!("ope.w1_0_w2[{u},{v},{i},{j}]"),
                "(W⁽¹⁾_{u,v})_(0)W⁽²⁾_{i,j} = δ_{j,u}W⁽²⁾_{i,v} − δ_{i,v}(−1)^{p(e_{u,v})p(e_{i,j})}W⁽²⁾_{u,j}",
                || ctx.residual(&ctx.prod(ctx.w.w1(u, v), 0, ctx.w.w2(i, j)), &ctx.w1_0_w2_rhs(u, v, i, j)),
            )
        })
        .collect();
    out.par_extend(qs.par_iter().map(|&(v, w, i, j)| {
        CheckReport::run(
            format!("ope.w1_n_w2[{v},{w},{i},{j}]"),
            "(W⁽¹⁾_{v,w})_(1)W⁽²⁾_{i,j}, (2)-product l(l−1)ακ(e_{w,v},e_{j,i}), (s≥3)-products vanish",
            || {
                let x = ctx.w.w1(v, w);
                let y = ctx.w.w2(i, j);
                let mut errs = Vec::new();
                if let Some(r) = ctx.residual(&ctx.prod(x, 1, y), &ctx.w1_1_w2_rhs(v, w, i, j)) {
                    errs.push(format!("(1): {r}"));
                }
                let want2 = State::vacuum().scale(&ctx.w1_2_w2_scalar(v, w, i, j, reading));
                if let Some(r) = ctx.residual(&ctx.prod(x, 2, y), &want2) {
                    errs.push(format!("(2): {r}"));
                }
                for n in 3..=5 {
                    if let Some(r) = ctx.residual(&ctx.prod(x, n, y), &State::zero()) {
                        errs.push(format!("({n}): {r}"));
                    }
                }
                (!errs.is_empty()).then(|| errs.join("; "))
            },
        )
    }));
    out.par_extend(qs.par_iter().map(|&(v, w, i, j)| {
        CheckReport::run(
            format!("ope.cor[{v},{w},{i},{j}]"),
            "[W⁽¹⁾_{v,w}t^s, W⁽²⁾_{i,j}t^u] for −2 ≤ s, u ≤ 2",
            || {
                let x = ctx.w.w1(v, w);
                let y = ctx.w.w2(i, j);
                for s in -2..=2 {
                    for u in -2..=2 {
                        let lhs = ctx.amb.vx.mode_commutator(x, s, y, u);
                        let rhs = ctx.cor_rhs(v, w, i, j, s, u, reading);
                        if let Some(r) = compare_mode_lists(ctx, &lhs, &rhs) {
                            return Some(format!("s={s} u={u}: {r}"));
                        }
                    }
                }
                None
            },
        )
    }));
    out
}

/// Compare two lists of (state, t-power) pairs power by power.
pub fn compare_mode_lists(ctx: &OpeCtx, lhs: &[(State, i64)], rhs: &[(State, i64)]) -> Option<String> {
    let mut powers: Vec<i64> = lhs.iter().chain(rhs).map(|(_, p)| *p).collect();
    powers.sort();
    powers.dedup();
    for p in powers {
        let sum = |xs: &[(State, i64)]| {
            let mut acc = Acc::default();
            for (s, q) in xs {
                if *q == p {
                    acc.add(s, &sc(1));
                }
            }
            acc.finish()
        };
        if let Some(r) = ctx.residual(&sum(lhs), &sum(rhs)) {
            return Some(format!("t^{p}: {r}"));
        }
    }
    None
}

pub fn w2_w2_checks(ctx: &OpeCtx, mutation: Option<Mutation>) -> Vec<CheckReport> {
    let nn = ctx.amb.inst.big_n();
    let pairs: Vec<(usize, usize)> = (1..=nn).flat_map(|i| (1..=nn).map(move |j| (i, j))).collect();
    let mut out: Vec<CheckReport> = pairs
        .par_iter()
        .map(|&(i, j)| {
            CheckReport::run(format!("ope.w2_0_w2[{i},{j}]"), "(W⁽²⁾_{i,i})_(0)W⁽²⁾_{j,j}", || {
                ctx.residual(&ctx.prod(ctx.w.w2(i, i), 0, ctx.w.w2(j, j)), &ctx.w2_0_w2_rhs(i, j, mutation))
            })
        })
        .collect();
    out.par_extend(pairs.par_iter().map(|&(i, j)| {
        CheckReport::run(format!("ope.w2_1_w2[{i},{j}]"), "(W⁽²⁾_{i,i})_(1)W⁽²⁾_{j,j}", || {
            ctx.residual(&ctx.prod(ctx.w.w2(i, i), 1, ctx.w.w2(j, j)), &ctx.w2_1_w2_rhs(i, j))
        })
    }));
    out
}

/// The full operator product suite.
pub fn ope_suite(ctx: &OpeCtx, mutation: Option<Mutation>) -> Vec<CheckReport> {
    let mut out = xi_checks(ctx);
    out.extend(w1_w2_checks(ctx, KappaReading::Diagonal));
    out.extend(w2_w2_checks(ctx, mutation));
    out
}
