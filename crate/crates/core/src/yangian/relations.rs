//! Generators, super-bracket expression trees and the relation lists of the
//! H/X presentation and of the minimal h/x presentation.

use std::fmt;

use super::cartan::CartanData;
use crate::foundation::{sgn, Instance, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    H,
    XPlus,
    XMinus,
}

/// H_{i,r} or X^±_{i,r} with r ∈ {0, 1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YGen {
    pub family: Family,
    pub node: usize,
    pub level: u8,
}

impl YGen {
    pub fn h(node: usize, level: u8) -> YGen {
        YGen { family: Family::H, node, level }
    }

    pub fn x(sign: i64, node: usize, level: u8) -> YGen {
        let family = if sign > 0 { Family::XPlus } else { Family::XMinus };
        YGen { family, node, level }
    }

    pub fn parity(&self, inst: &Instance) -> u8 {
        let odd_node = inst.n > 0 && (self.node == 0 || self.node == inst.m);
        u8::from(self.family != Family::H && odd_node)
    }

    /// All generators of an instance.
    pub fn all(inst: &Instance) -> Vec<YGen> {
        let mut out = Vec::new();
        for family in [Family::H, Family::XPlus, Family::XMinus] {
            for node in 0..inst.big_n() {
                for level in 0..2 {
                    out.push(YGen { family, node, level });
                }
            }
        }
        out
    }
}

impl fmt::Display for YGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.family {
            Family::H => "H",
            Family::XPlus => "X+",
            Family::XMinus => "X-",
        };
        write!(f, "{name}[{},{}]", self.node, self.level)
    }
}

/// Expression tree over generators.
#[derive(Clone, Debug)]
pub enum RelExpr {
    Gen(YGen),
    Scalar(Scalar),
    Lin(Vec<(Scalar, RelExpr)>),
    Mul(Box<RelExpr>, Box<RelExpr>),
    /// Super-commutator A∘B − (−1)^{p(A)p(B)} B∘A.
    Br(Box<RelExpr>, Box<RelExpr>),
    /// A∘B + B∘A.
    Anti(Box<RelExpr>, Box<RelExpr>),
}

impl RelExpr {
    pub fn g(g: YGen) -> RelExpr {
        RelExpr::Gen(g)
    }

    pub fn br(a: RelExpr, b: RelExpr) -> RelExpr {
        RelExpr::Br(Box::new(a), Box::new(b))
    }

    pub fn anti(a: RelExpr, b: RelExpr) -> RelExpr {
        RelExpr::Anti(Box::new(a), Box::new(b))
    }

    pub fn mul(a: RelExpr, b: RelExpr) -> RelExpr {
        RelExpr::Mul(Box::new(a), Box::new(b))
    }

    pub fn lin(terms: Vec<(Scalar, RelExpr)>) -> RelExpr {
        RelExpr::Lin(terms)
    }

    /// a − b.
    pub fn minus(a: RelExpr, b: RelExpr) -> RelExpr {
        RelExpr::Lin(vec![(Scalar::one(), a), (Scalar::int(-1), b)])
    }

    /// Parity, taken from the first summand of a linear combination.
    pub fn parity(&self, inst: &Instance) -> u8 {
        match self {
            RelExpr::Gen(g) => g.parity(inst),
            RelExpr::Scalar(_) => 0,
            RelExpr::Lin(ts) => ts.first().map_or(0, |(_, e)| e.parity(inst)),
            RelExpr::Mul(a, b) | RelExpr::Br(a, b) | RelExpr::Anti(a, b) => a.parity(inst) ^ b.parity(inst),
        }
    }
}

/// A relation "expr = 0".
#[derive(Clone, Debug)]
pub struct RelationSpec {
    pub id: String,
    pub statement: String,
    pub expr: RelExpr,
}

/// Scalar parameters of the relations.
#[derive(Clone, Debug)]
pub struct YParams {
    pub eps1: Scalar,
    pub eps2: Scalar,
}

impl YParams {
    pub fn hbar(&self) -> Scalar {
        self.eps1.add(&self.eps2)
    }

    /// ε = −(m−n)ε₂.
    pub fn eps(&self, inst: &Instance) -> Scalar {
        self.eps2.scale_int(-(inst.m as i64 - inst.n as i64))
    }

    /// ε + ((m−n)/2)ħ.
    pub fn shift(&self, inst: &Instance) -> Scalar {
        let mn = inst.m as i64 - inst.n as i64;
        self.eps(inst).add(&self.hbar().mul(&Scalar::frac(mn, 2)))
    }

    /// Φ-suite parameters: ε₁ = α/(m−n), ε₂ = −1 − α/(m−n).
    pub fn phi(inst: &Instance) -> YParams {
        let mn = inst.m as i64 - inst.n as i64;
        let e1 = Scalar::alpha().mul(&Scalar::frac(1, mn));
        YParams { eps2: Scalar::int(-1).sub(&e1), eps1: e1 }
    }
}

fn half(x: &Scalar) -> Scalar {
    x.mul(&Scalar::frac(1, 2))
}

fn pm_str(sign: i64) -> &'static str {
    if sign > 0 {
        "+"
    } else {
        "-"
    }
}

/// Readings of the printed boundary relation for [X_{0,1}, X_{N−1,0}] − [X_{0,0}, X_{N−1,1}].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RelReading {
    /// The anticommutator carries ±a_{0,N−1}(ħ/2), as in the non-boundary
    /// relation, instead of the printed ±(−1)^{p(N)}(ħ/2) (or ±(ħ/2) for n = 0).
    pub boundary_anti_cartan: bool,
}

impl RelReading {
    pub const PRINTED: RelReading = RelReading { boundary_anti_cartan: false };
    pub const ADOPTED: RelReading = RelReading { boundary_anti_cartan: true };
}

/// H̃_{i,1} = H_{i,1} − (ħ/2)H_{i,0}².
pub fn h_tilde(i: usize, p: &YParams) -> RelExpr {
    let h0 = RelExpr::g(YGen::h(i, 0));
    RelExpr::lin(vec![
        (Scalar::one(), RelExpr::g(YGen::h(i, 1))),
        (half(&p.hbar()).neg(), RelExpr::mul(h0.clone(), h0)),
    ])
}

/// The relations of the H/X presentation: the super list for n > 0, the
/// non-super list (no odd-node relations) for n = 0.
pub fn prop_relations(inst: &Instance, p: &YParams, reading: RelReading) -> Vec<RelationSpec> {
    let nn = inst.big_n();
    let cd = CartanData::new(inst);
    let g = |x: YGen| RelExpr::g(x);
    let sc = Scalar::int;
    let bsign = if inst.n == 0 { 1 } else { inst.sign(nn) };
    let shift = p.shift(inst);
    let hb2 = half(&p.hbar());
    let mut out = Vec::new();
    let mut push = |id: String, statement: String, expr: RelExpr| out.push(RelationSpec { id, statement, expr });

    for i in 0..nn {
        for j in 0..nn {
            for r in 0..2 {
                for s in 0..2 {
                    push(
                        format!("hh[{i},{r};{j},{s}]"),
                        format!("[H_{{{i},{r}}}, H_{{{j},{s}}}] = 0"),
                        RelExpr::br(g(YGen::h(i, r)), g(YGen::h(j, s))),
                    );
                }
            }
        }
    }
    for i in 0..nn {
        for j in 0..nn {
            let d = if i == j { 1 } else { 0 };
            push(
                format!("xx0[{i},{j}]"),
                format!("[X+_{{{i},0}}, X-_{{{j},0}}] = δ H_{{{i},0}}"),
                RelExpr::lin(vec![
                    (sc(1), RelExpr::br(g(YGen::x(1, i, 0)), g(YGen::x(-1, j, 0)))),
                    (sc(-d), g(YGen::h(i, 0))),
                ]),
            );
            push(
                format!("xx1a[{i},{j}]"),
                format!("[X+_{{{i},1}}, X-_{{{j},0}}] = δ H_{{{i},1}}"),
                RelExpr::lin(vec![
                    (sc(1), RelExpr::br(g(YGen::x(1, i, 1)), g(YGen::x(-1, j, 0)))),
                    (sc(-d), g(YGen::h(i, 1))),
                ]),
            );
            push(
                format!("xx1b[{i},{j}]"),
                format!("[X+_{{{i},0}}, X-_{{{j},1}}] = δ H_{{{i},1}}"),
                RelExpr::lin(vec![
                    (sc(1), RelExpr::br(g(YGen::x(1, i, 0)), g(YGen::x(-1, j, 1)))),
                    (sc(-d), g(YGen::h(i, 1))),
                ]),
            );
        }
    }
    for i in 0..nn {
        for j in 0..nn {
            let a = cd.a[i][j];
            for pm in [1i64, -1] {
                for r in 0..2 {
                    push(
                        format!("hx0{}[{i},{j},{r}]", pm_str(pm)),
                        format!("[H_{{{i},0}}, X{}_{{{j},{r}}}] = {} a X{}_{{{j},{r}}}", pm_str(pm), pm_str(pm), pm_str(pm)),
                        RelExpr::lin(vec![
                            (sc(1), RelExpr::br(g(YGen::h(i, 0)), g(YGen::x(pm, j, r)))),
                            (sc(-pm * a), g(YGen::x(pm, j, r))),
                        ]),
                    );
                }
            }
        }
    }
    let is_boundary = |i: usize, j: usize| (i == 0 && j == nn - 1) || (i == nn - 1 && j == 0);
    for i in 0..nn {
        for j in 0..nn {
            let a = cd.a[i][j];
            for pm in [1i64, -1] {
                let ps = pm_str(pm);
                let bracket = RelExpr::br(h_tilde(i, p), g(YGen::x(pm, j, 0)));
                if !is_boundary(i, j) {
                    push(
                        format!("hx1{ps}[{i},{j}]"),
                        format!("[H~_{{{i},1}}, X{ps}_{{{j},0}}] = {ps} a X{ps}_{{{j},1}}"),
                        RelExpr::lin(vec![(sc(1), bracket), (sc(-pm * a), g(YGen::x(pm, j, 1)))]),
                    );
                } else if i == 0 {
                    // ∓ s (X_{N−1,1} − shift X_{N−1,0})
                    let k = sc(-pm * bsign);
                    push(
                        format!("hx1_node0{ps}"),
                        format!("[H~_{{0,1}}, X{ps}_{{{j},0}}] = ∓s (X{ps}_{{{j},1}} − (ε+(m−n)ħ/2) X{ps}_{{{j},0}})"),
                        RelExpr::lin(vec![
                            (sc(1), bracket),
                            (k.neg(), g(YGen::x(pm, j, 1))),
                            (k.mul(&shift), g(YGen::x(pm, j, 0))),
                        ]),
                    );
                } else {
                    let k = sc(-pm * bsign);
                    push(
                        format!("hx1_x0{ps}"),
                        format!("[H~_{{{i},1}}, X{ps}_{{0,0}}] = ∓s (X{ps}_{{0,1}} + (ε+(m−n)ħ/2) X{ps}_{{0,0}})"),
                        RelExpr::lin(vec![
                            (sc(1), bracket),
                            (k.neg(), g(YGen::x(pm, 0, 1))),
                            (k.mul(&shift).neg(), g(YGen::x(pm, 0, 0))),
                        ]),
                    );
                }
            }
        }
    }
    for i in 0..nn {
        for j in 0..nn {
            let a = cd.a[i][j];
            for pm in [1i64, -1] {
                let ps = pm_str(pm);
                let lhs = RelExpr::minus(
                    RelExpr::br(g(YGen::x(pm, i, 1)), g(YGen::x(pm, j, 0))),
                    RelExpr::br(g(YGen::x(pm, i, 0)), g(YGen::x(pm, j, 1))),
                );
                let anti = RelExpr::anti(g(YGen::x(pm, i, 0)), g(YGen::x(pm, j, 0)));
                if !is_boundary(i, j) {
                    push(
                        format!("xx_shift{ps}[{i},{j}]"),
                        format!("[X{ps}_{{{i},1}}, X{ps}_{{{j},0}}] − [X{ps}_{{{i},0}}, X{ps}_{{{j},1}}] = {ps} a (ħ/2) {{X{ps}_{{{i},0}}, X{ps}_{{{j},0}}}}"),
                        RelExpr::lin(vec![(sc(1), lhs), (hb2.scale_int(-pm * a), anti)]),
                    );
                } else if i == 0 {
                    let k = if reading.boundary_anti_cartan { a } else { bsign };
                    let br0 = RelExpr::br(g(YGen::x(pm, i, 0)), g(YGen::x(pm, j, 0)));
                    push(
                        format!("xx_shift0{ps}"),
                        format!("[X{ps}_{{0,1}}, X{ps}_{{{j},0}}] − [X{ps}_{{0,0}}, X{ps}_{{{j},1}}] = {ps}s (ħ/2) {{X{ps}_{{0,0}}, X{ps}_{{{j},0}}}} − (ε+(m−n)ħ/2) [X{ps}_{{0,0}}, X{ps}_{{{j},0}}]"),
                        RelExpr::lin(vec![(sc(1), lhs), (hb2.scale_int(-pm * k), anti), (shift.clone(), br0)]),
                    );
                }
            }
        }
    }
    for i in 0..nn {
        for j in 0..nn {
            if i == j {
                continue;
            }
            let k = 1 + cd.a[i][j].unsigned_abs() as usize;
            for pm in [1i64, -1] {
                let ps = pm_str(pm);
                let mut e = g(YGen::x(pm, j, 0));
                for _ in 0..k {
                    e = RelExpr::br(g(YGen::x(pm, i, 0)), e);
                }
                push(
                    format!("serre{ps}[{i},{j}]"),
                    format!("(ad X{ps}_{{{i},0}})^{k} X{ps}_{{{j},0}} = 0"),
                    e,
                );
            }
        }
    }
    if inst.n > 0 {
        for i in [0, inst.m] {
            for pm in [1i64, -1] {
                let ps = pm_str(pm);
                push(
                    format!("odd_square{ps}[{i}]"),
                    format!("[X{ps}_{{{i},0}}, X{ps}_{{{i},0}}] = 0"),
                    RelExpr::br(g(YGen::x(pm, i, 0)), g(YGen::x(pm, i, 0))),
                );
                let (im, ip) = ((i + nn - 1) % nn, (i + 1) % nn);
                push(
                    format!("quartic{ps}[{i}]"),
                    format!("[[X{ps}_{{{im},0}}, X{ps}_{{{i},0}}], [X{ps}_{{{i},0}}, X{ps}_{{{ip},0}}]] = 0"),
                    RelExpr::br(
                        RelExpr::br(g(YGen::x(pm, im, 0)), g(YGen::x(pm, i, 0))),
                        RelExpr::br(g(YGen::x(pm, i, 0)), g(YGen::x(pm, ip, 0))),
                    ),
                );
            }
        }
    }
    out
}

/// Readings of Ψ and of the m-matrix it is paired with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PsiReading {
    /// Ψ(h_{i,1}) = H_{i,1} + (…)(ε₁−ε₂)H_{i,0} instead of the printed minus sign.
    pub shift_flipped: bool,
    /// Away from the (0, N−1) corner, the case conditions of m read as in a:
    /// −(−1)^{p(i+1)} if j = i+1 and (−1)^{p(i)} if j = i−1.
    pub m_conditions_swapped: bool,
    /// m_{0,N−1} and m_{N−1,0} negated.
    pub m_corner_flipped: bool,
}

impl PsiReading {
    pub const PRINTED: PsiReading = PsiReading { shift_flipped: false, m_conditions_swapped: false, m_corner_flipped: false };
    pub const ADOPTED: PsiReading = PsiReading { shift_flipped: false, m_conditions_swapped: true, m_corner_flipped: false };

    fn mmat(&self, inst: &Instance, cd: &CartanData, i: usize, j: usize) -> i64 {
        let nn = cd.size;
        let corner = (i == 0 && j == nn - 1) || (i == nn - 1 && j == 0);
        if corner {
            if self.m_corner_flipped {
                -cd.mmat[i][j]
            } else {
                cd.mmat[i][j]
            }
        } else if self.m_conditions_swapped {
            let s = |k: usize| if inst.n == 0 { 1 } else { sgn(inst.p_cyc(k)) };
            if j == i + 1 {
                -s(i + 1)
            } else if j + 1 == i {
                s(i)
            } else {
                0
            }
        } else {
            cd.mmat[i][j]
        }
    }
}

/// Ψ of a generator of the minimal presentation, as an H/X expression.
/// h_{i,0}, x^±_{i,0}, h_{0,1} map to their capitals, h_{i,1} is shifted by a
/// multiple of H_{i,0}, and x^±_{i,1} is read off from the relation for
/// [h̃_{k,1}, x^±_{i,0}] with k = i when a_{ii} ≠ 0 and k = i+1 otherwise.
pub fn psi_translate(inst: &Instance, p: &YParams, reading: PsiReading, x: YGen) -> RelExpr {
    let cd = CartanData::new(inst);
    let nn = inst.big_n();
    let e12 = p.eps1.sub(&p.eps2);
    if x.level == 0 || (x.family == Family::H && x.node == 0) {
        return RelExpr::g(x);
    }
    if x.family == Family::H {
        let i = x.node as i64;
        let d = i - if x.node > inst.m { 2 * (i - inst.m as i64) } else { 0 };
        return RelExpr::lin(vec![(Scalar::one(), RelExpr::g(x)), (half(&e12).scale_int(if reading.shift_flipped { d } else { -d }), RelExpr::g(YGen::h(x.node, 0)))]);
    }
    let i = x.node;
    let pm = if x.family == Family::XPlus { 1 } else { -1 };
    let k = if cd.a[i][i] != 0 { i } else { (i + 1) % nn };
    let br = RelExpr::br(psi_h_tilde(inst, p, reading, k), RelExpr::g(YGen::x(pm, i, 0)));
    RelExpr::lin(vec![
        (Scalar::frac(pm, cd.a[k][i]), br),
        (half(&e12).scale_int(reading.mmat(inst, &cd, k, i)), RelExpr::g(YGen::x(pm, i, 0))),
    ])
}

/// Ψ(h̃_{i,1}) = Ψ(h_{i,1}) − ((ε₁+ε₂)/2) H_{i,0}².
pub fn psi_h_tilde(inst: &Instance, p: &YParams, reading: PsiReading, i: usize) -> RelExpr {
    let h0 = RelExpr::g(YGen::h(i, 0));
    RelExpr::lin(vec![
        (Scalar::one(), psi_translate(inst, p, reading, YGen::h(i, 1))),
        (half(&p.hbar()).neg(), RelExpr::mul(h0.clone(), h0)),
    ])
}

/// The relations of the minimal presentation, pushed through Ψ.
pub fn mini_relations(inst: &Instance, p: &YParams, reading: PsiReading) -> Vec<RelationSpec> {
    let nn = inst.big_n();
    let cd = CartanData::new(inst);
    let t = |x: YGen| psi_translate(inst, p, reading, x);
    let sc = Scalar::int;
    let e12h = half(&p.eps1.sub(&p.eps2));
    let hb2 = half(&p.hbar());
    let mut out = Vec::new();
    let mut push = |id: String, statement: String, expr: RelExpr| out.push(RelationSpec { id, statement, expr });

    for i in 0..nn {
        for j in 0..nn {
            for r in 0..2 {
                for s in 0..2 {
                    push(
                        format!("hh[{i},{r};{j},{s}]"),
                        format!("[h_{{{i},{r}}}, h_{{{j},{s}}}] = 0"),
                        RelExpr::br(t(YGen::h(i, r)), t(YGen::h(j, s))),
                    );
                }
            }
            let d = if i == j { 1 } else { 0 };
            push(
                format!("xx0[{i},{j}]"),
                format!("[x+_{{{i},0}}, x-_{{{j},0}}] = δ h_{{{i},0}}"),
                RelExpr::lin(vec![(sc(1), RelExpr::br(t(YGen::x(1, i, 0)), t(YGen::x(-1, j, 0)))), (sc(-d), t(YGen::h(i, 0)))]),
            );
            push(
                format!("xx1a[{i},{j}]"),
                format!("[x+_{{{i},1}}, x-_{{{j},0}}] = δ h_{{{i},1}}"),
                RelExpr::lin(vec![(sc(1), RelExpr::br(t(YGen::x(1, i, 1)), t(YGen::x(-1, j, 0)))), (sc(-d), t(YGen::h(i, 1)))]),
            );
            push(
                format!("xx1b[{i},{j}]"),
                format!("[x+_{{{i},0}}, x-_{{{j},1}}] = δ h_{{{i},1}}"),
                RelExpr::lin(vec![(sc(1), RelExpr::br(t(YGen::x(1, i, 0)), t(YGen::x(-1, j, 1)))), (sc(-d), t(YGen::h(i, 1)))]),
            );
            let (a, mij) = (cd.a[i][j], reading.mmat(inst, &cd, i, j));
            for pm in [1i64, -1] {
                let ps = pm_str(pm);
                for r in 0..2 {
                    push(
                        format!("hx0{ps}[{i},{j},{r}]"),
                        format!("[h_{{{i},0}}, x{ps}_{{{j},{r}}}] = {ps} a x{ps}_{{{j},{r}}}"),
                        RelExpr::lin(vec![(sc(1), RelExpr::br(t(YGen::h(i, 0)), t(YGen::x(pm, j, r)))), (sc(-pm * a), t(YGen::x(pm, j, r)))]),
                    );
                }
                push(
                    format!("hx1{ps}[{i},{j}]"),
                    format!("[h~_{{{i},1}}, x{ps}_{{{j},0}}] = {ps} a (x{ps}_{{{j},1}} − m (ε₁−ε₂)/2 x{ps}_{{{j},0}})"),
                    RelExpr::lin(vec![
                        (sc(1), RelExpr::br(psi_h_tilde(inst, p, reading, i), t(YGen::x(pm, j, 0)))),
                        (sc(-pm * a), t(YGen::x(pm, j, 1))),
                        (e12h.scale_int(pm * a * mij), t(YGen::x(pm, j, 0))),
                    ]),
                );
                let lhs = RelExpr::minus(
                    RelExpr::br(t(YGen::x(pm, i, 1)), t(YGen::x(pm, j, 0))),
                    RelExpr::br(t(YGen::x(pm, i, 0)), t(YGen::x(pm, j, 1))),
                );
                push(
                    format!("xx_shift{ps}[{i},{j}]"),
                    format!("[x{ps}_{{{i},1}}, x{ps}_{{{j},0}}] − [x{ps}_{{{i},0}}, x{ps}_{{{j},1}}] = {ps} a (ε₁+ε₂)/2 {{x, x}} − m (ε₁−ε₂)/2 [x, x]"),
                    RelExpr::lin(vec![
                        (sc(1), lhs),
                        (hb2.scale_int(-pm * a), RelExpr::anti(t(YGen::x(pm, i, 0)), t(YGen::x(pm, j, 0)))),
                        (e12h.scale_int(mij), RelExpr::br(t(YGen::x(pm, i, 0)), t(YGen::x(pm, j, 0)))),
                    ]),
                );
                if i != j {
                    let k = 1 + a.unsigned_abs() as usize;
                    let mut e = t(YGen::x(pm, j, 0));
                    for _ in 0..k {
                        e = RelExpr::br(t(YGen::x(pm, i, 0)), e);
                    }
                    push(format!("serre{ps}[{i},{j}]"), format!("(ad x{ps}_{{{i},0}})^{k} x{ps}_{{{j},0}} = 0"), e);
                }
            }
        }
    }
    if inst.n > 0 {
        for i in [0, inst.m] {
            for pm in [1i64, -1] {
                let ps = pm_str(pm);
                push(
                    format!("odd_square{ps}[{i}]"),
                    format!("[x{ps}_{{{i},0}}, x{ps}_{{{i},0}}] = 0"),
                    RelExpr::br(t(YGen::x(pm, i, 0)), t(YGen::x(pm, i, 0))),
                );
                let (im, ip) = ((i + nn - 1) % nn, (i + 1) % nn);
                push(
                    format!("quartic{ps}[{i}]"),
                    format!("[[x{ps}_{{{im},0}}, x{ps}_{{{i},0}}], [x{ps}_{{{i},0}}, x{ps}_{{{ip},0}}]] = 0"),
                    RelExpr::br(
                        RelExpr::br(t(YGen::x(pm, im, 0)), t(YGen::x(pm, i, 0))),
                        RelExpr::br(t(YGen::x(pm, i, 0)), t(YGen::x(pm, ip, 0))),
                    ),
                );
            }
        }
    }
    out
}
