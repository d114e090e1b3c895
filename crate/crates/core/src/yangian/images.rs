//! Images of the generators under Φ (into the mode algebra of the
//! rectangular W-superalgebra) and under ev (into the completed enveloping
//! algebra of 𝔤𝔩̂(m|n)^str).

use std::collections::BTreeMap;

use super::expr::ModeExpr;
use super::relations::{Family, YGen, YParams};
use crate::error::{Error, Result};
use crate::foundation::{Instance, Scalar};
use crate::mutation::{active, Mutation};
use crate::superalgebra::Kind;
use crate::vertex::{State, Vertex};
use crate::w_construct::WSet;

/// A generator → expression table.
#[derive(Clone, Debug)]
pub struct Images {
    pub inst: Instance,
    pub map: BTreeMap<YGen, ModeExpr>,
}

impl Images {
    pub fn get(&self, g: &YGen) -> &ModeExpr {
        &self.map[g]
    }
}

/// Readings of the two printed Φ(X^±_{0,1}) formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PhiReading {
    /// Φ(X⁺_{0,1}) carries −lαΦ(X⁺_{0,0}) instead of +lαΦ(X⁺_{0,0}).
    pub x0_plus_minus_lalpha: bool,
    /// Φ(X⁻_{0,1}) sums W⁽¹⁾_{u,1}t^{−s−1}W⁽¹⁾_{m+n,u}t^s instead of W⁽¹⁾_{1,u}t^{−s−1}W⁽¹⁾_{m+n,u}t^s.
    pub x0_minus_transposed: bool,
}

impl PhiReading {
    pub const PRINTED: PhiReading = PhiReading { x0_plus_minus_lalpha: false, x0_minus_transposed: false };
    pub const ADOPTED: PhiReading = PhiReading { x0_plus_minus_lalpha: true, x0_minus_transposed: true };
}

/// Readings of the printed ev formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvReading {
    /// The ((i−2δ(i≥m+1)(i−m))/2)ħ terms of ev(H_{i,1}), ev(X^±_{i,1}) carry a minus sign.
    pub shift_negated: bool,
}

impl EvReading {
    pub const PRINTED: EvReading = EvReading { shift_negated: false };
    pub const ADOPTED: EvReading = EvReading { shift_negated: true };
}

/// (i − 2δ(i>m)(i−m))/2.
fn shift_coeff(inst: &Instance, i: usize) -> Scalar {
    let i = i as i64;
    let d = i - if i > inst.m as i64 { 2 * (i - inst.m as i64) } else { 0 };
    Scalar::frac(d, 2)
}

fn sc(k: i64) -> Scalar {
    Scalar::int(k)
}

/// Σ_{s≥0} c · u t^{a − s} v t^{b + s}.
fn pair_sum(c: Scalar, u: &State, a: i64, v: &State, b: i64) -> ModeExpr {
    ModeExpr::sum_over_s(c, &[(u, a, -1), (v, b, 1)]).expect("rightmost slope is +1")
}

/// Checks the hypotheses of the Φ construction.
pub fn phi_supported(inst: &Instance) -> Result<()> {
    inst.yangian_ok().map_err(Error::Config)?;
    if inst.l < 2 {
        return Err(Error::Config(format!("l >= 2 required, got l = {}", inst.l)));
    }
    Ok(())
}

/// Φ of every generator, with c = 0 in the W-generators.
pub fn phi_images(w: &WSet, reading: PhiReading, mutation: Option<Mutation>) -> Result<Images> {
    let inst = w.inst;
    phi_supported(&inst)?;
    let nn = inst.big_n();
    let s = |i: usize| sc(inst.sign(i));
    let la = Scalar::alpha().scale_int(inst.l as i64);
    let l1a = Scalar::alpha().scale_int(inst.l as i64 - 1);
    let w1 = |i, j, a| ModeExpr::mode(w.w1(i, j), a);
    let w2 = |i, j, a| ModeExpr::mode(w.w2(i, j), a);
    let mut map = BTreeMap::new();

    let h00 = w1(nn, nn, 0).scale(&s(nn)).plus(w1(1, 1, 0), &sc(-1)).add(ModeExpr::scalar(la.clone()));
    let x00p = w1(1, nn, 1);
    let x00m = w1(nn, 1, -1).scale(&s(nn));
    let h0 = |i: usize| w1(i, i, 0).scale(&s(i)).plus(w1(i + 1, i + 1, 0), &s(i + 1).neg());

    // H_{0,1}
    let mut e = w2(nn, nn, 1).scale(&s(nn)).plus(w2(1, 1, 1), &sc(-1));
    e = e.plus(w1(nn, nn, 0), &s(nn).mul(&l1a));
    e = e.plus(h00.clone(), &la.neg());
    let tail = w1(1, 1, 0).add(ModeExpr::scalar(la.neg()));
    e = e.plus(w1(nn, nn, 0).then(&tail)?, &s(nn));
    for u in 1..=nn {
        e = e.add(pair_sum(s(nn).mul(&s(u)).neg(), w.w1(u, nn), 0, w.w1(nn, u), 0));
        e = e.add(pair_sum(s(u), w.w1(u, 1), -1, w.w1(1, u), 1));
    }
    map.insert(YGen::h(0, 1), e);

    // X^±_{0,1}
    let xa = if active(mutation, Mutation::PhiX01Alpha) { la.clone() } else { l1a.clone() };
    let lsign = if reading.x0_plus_minus_lalpha { la.neg() } else { la.clone() };
    let mut e = w2(1, nn, 2).plus(w1(1, nn, 1), &xa).plus(x00p.clone(), &lsign);
    for u in 1..=nn {
        e = e.add(pair_sum(s(u).neg(), w.w1(u, nn), 0, w.w1(1, u), 1));
    }
    map.insert(YGen::x(1, 0, 1), e);
    let mut e = w2(nn, 1, 0).scale(&s(nn)).plus(x00m.clone(), &la.neg());
    for u in 1..=nn {
        let left = if reading.x0_minus_transposed { w.w1(u, 1) } else { w.w1(1, u) };
        e = e.add(pair_sum(s(nn).mul(&s(u)).neg(), left, -1, w.w1(nn, u), 0));
    }
    map.insert(YGen::x(-1, 0, 1), e);

    map.insert(YGen::h(0, 0), h00);
    map.insert(YGen::x(1, 0, 0), x00p);
    map.insert(YGen::x(-1, 0, 0), x00m);

    for i in 1..nn {
        let d = shift_coeff(&inst, i);
        let hi0 = h0(i);
        let xp = w1(i + 1, i, 0);
        let xm = w1(i, i + 1, 0).scale(&s(i));

        let mut e = w2(i, i, 1).scale(&s(i)).plus(w2(i + 1, i + 1, 1), &s(i + 1).neg());
        e = e.plus(hi0.clone(), &d);
        e = e.plus(w1(i, i, 0).then(&w1(i + 1, i + 1, 0))?, &sc(inst.sign(i) * inst.sign(i + 1)));
        for u in 1..=nn {
            let (a, b) = if u <= i { (0, 0) } else { (-1, 1) };
            e = e.add(pair_sum(s(i).mul(&s(u)).neg(), w.w1(u, i), a, w.w1(i, u), b));
            e = e.add(pair_sum(s(i + 1).mul(&s(u)), w.w1(u, i + 1), a, w.w1(i + 1, u), b));
        }
        map.insert(YGen::h(i, 1), e);

        let mut e = w2(i + 1, i, 1).plus(xp.clone(), &d);
        for u in 1..=nn {
            let (a, b) = if u <= i { (0, 0) } else { (-1, 1) };
            e = e.add(pair_sum(s(u).neg(), w.w1(u, i), a, w.w1(i + 1, u), b));
        }
        map.insert(YGen::x(1, i, 1), e);

        let mut e = w2(i, i + 1, 1).scale(&s(i)).plus(xm.clone(), &d);
        for u in 1..=nn {
            let (a, b) = if u <= i { (0, 0) } else { (-1, 1) };
            e = e.add(pair_sum(s(i).mul(&s(u)).neg(), w.w1(u, i + 1), a, w.w1(i, u), b));
        }
        map.insert(YGen::x(-1, i, 1), e);

        map.insert(YGen::h(i, 0), hi0);
        map.insert(YGen::x(1, i, 0), xp);
        map.insert(YGen::x(-1, i, 0), xm);
    }
    Ok(Images { inst, map })
}

/// c̃ = (−m+n)ε₁/ħ for the given parameters, when it is a polynomial.
pub fn ev_ctilde(inst: &Instance, p: &YParams) -> Result<Scalar> {
    let hb = p.hbar().as_constant().ok_or_else(|| Error::Config("ħ must be a constant".into()))?;
    if hb.is_zero() {
        return Err(Error::Config("ħ = 0".into()));
    }
    let k = crate::foundation::Q::int(inst.n as i64 - inst.m as i64).div(&hb);
    Ok(p.eps1.scale(&k))
}

/// ev of every generator, on the vertex algebra of 𝔤𝔩(m|n) with the str form
/// at c̃. The vertex algebra must have been built with the same c̃.
pub fn ev_images(vx: &Vertex, inst: &Instance, p: &YParams, reading: EvReading, mutation: Option<Mutation>) -> Result<Images> {
    if inst.m == inst.n {
        return Err(Error::Config("ev requires m != n".into()));
    }
    let nn = inst.big_n();
    let ct = ev_ctilde(inst, p)?;
    let hb = p.hbar();
    let s = |i: usize| sc(inst.sign(i));
    let st = |i: usize, j: usize| -> Result<State> { Ok(vx.gen_state(vx.alg.try_id(Kind::Current, i, j)?)) };
    let e = |i: usize, j: usize, k: i64| -> Result<ModeExpr> { Ok(ModeExpr::mode(&st(i, j)?, k)) };
    let mut map = BTreeMap::new();

    let h0 = e(nn, nn, 0)?.scale(&s(nn)).plus(e(1, 1, 0)?, &sc(-1)).add(ModeExpr::scalar(ct.clone()));
    let x0p = e(nn, 1, 1)?;
    let x0m = e(1, nn, -1)?.scale(&s(nn));

    let mut x = h0.clone().scale(&hb.mul(&ct));
    let tail = e(1, 1, 0)?.add(ModeExpr::scalar(ct.neg()));
    x = x.plus(e(nn, nn, 0)?.then(&tail)?, &s(nn).mul(&hb).neg());
    for k in 1..=nn {
        x = x.add(pair_sum(s(nn).mul(&s(k)).mul(&hb), &st(nn, k)?, 0, &st(k, nn)?, 0));
        x = x.add(pair_sum(s(k).mul(&hb).neg(), &st(1, k)?, -1, &st(k, 1)?, 1));
    }
    map.insert(YGen::h(0, 1), x);

    let mut x = x0p.clone().scale(&hb.mul(&ct));
    for k in 1..=nn {
        x = x.add(pair_sum(s(k).mul(&hb), &st(nn, k)?, 0, &st(k, 1)?, 1));
    }
    map.insert(YGen::x(1, 0, 1), x);

    let mut x = x0m.clone().scale(&hb.mul(&ct));
    for k in 1..=nn {
        x = x.add(pair_sum(s(nn).mul(&s(k)).mul(&hb), &st(1, k)?, -1, &st(k, nn)?, 0));
    }
    map.insert(YGen::x(-1, 0, 1), x);

    map.insert(YGen::h(0, 0), h0);
    map.insert(YGen::x(1, 0, 0), x0p);
    map.insert(YGen::x(-1, 0, 0), x0m);

    let hh = if active(mutation, Mutation::EvH1Hbar) { hb.scale_int(2) } else { hb.clone() };
    for i in 1..nn {
        let d = shift_coeff(inst, i).mul(&hb).scale_int(if reading.shift_negated { -1 } else { 1 });
        let hi = e(i, i, 0)?.scale(&s(i)).plus(e(i + 1, i + 1, 0)?, &s(i + 1).neg());
        let xp = e(i, i + 1, 0)?;
        let xm = e(i + 1, i, 0)?.scale(&s(i));

        let mut x = hi.clone().scale(&d);
        x = x.plus(e(i, i, 0)?.then(&e(i + 1, i + 1, 0)?)?, &hh.scale_int(-inst.sign(i) * inst.sign(i + 1)));
        for k in 1..=nn {
            let (a, b) = if k <= i { (0, 0) } else { (-1, 1) };
            x = x.add(pair_sum(hb.mul(&s(i)).mul(&s(k)), &st(i, k)?, a, &st(k, i)?, b));
            x = x.add(pair_sum(hb.mul(&s(i + 1)).mul(&s(k)).neg(), &st(i + 1, k)?, a, &st(k, i + 1)?, b));
        }
        map.insert(YGen::h(i, 1), x);

        let mut x = xp.clone().scale(&d);
        for k in 1..=nn {
            let (a, b) = if k <= i { (0, 0) } else { (-1, 1) };
            x = x.add(pair_sum(hb.mul(&s(k)), &st(i, k)?, a, &st(k, i + 1)?, b));
        }
        map.insert(YGen::x(1, i, 1), x);

        let mut x = xm.clone().scale(&d);
        for k in 1..=nn {
            let (a, b) = if k <= i { (0, 0) } else { (-1, 1) };
            x = x.add(pair_sum(hb.mul(&s(i)).mul(&s(k)), &st(i + 1, k)?, a, &st(k, i)?, b));
        }
        map.insert(YGen::x(-1, i, 1), x);

        map.insert(YGen::h(i, 0), hi);
        map.insert(YGen::x(1, i, 0), xp);
        map.insert(YGen::x(-1, i, 0), xm);
    }
    debug_assert!(map.keys().all(|g| g.family != Family::H || g.level <= 1));
    Ok(Images { inst: *inst, map })
}
