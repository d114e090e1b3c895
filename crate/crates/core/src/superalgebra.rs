//! Finite-dimensional Lie superalgebras with an even invariant form, tabulated
//! on a basis of matrix units: the algebra 𝔞ₘ,ₙ (currents on 𝔟 plus ghosts)
//! and the two affinization forms on 𝔤𝔩(m|n).

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::foundation::{sgn, Instance, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    Current,
    Ghost,
}

/// A basis element: J^{e_{A,B}} or ψ_{e_{A,B}} (flat indices, 1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub kind: Kind,
    pub row: usize,
    pub col: usize,
    pub parity: u8,
    pub grade: i64,
}

/// Which bilinear form the table carries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormTag {
    /// κₘ,ₙ on 𝔞ₘ,ₙ: κ on currents, zero whenever a ghost is involved.
    KappaMN,
    /// str(xy)·c̃ − l(lc−1)·str(x)str(y), with c̃ = lα and x = 1.
    GlHatKappa,
    /// str(xy)·c̃ + str(x)str(y), with z = 1.
    GlHatStr(Scalar),
}

pub type GenId = u16;

/// Structure constants and form of a Lie superalgebra on a tabulated basis.
/// Generator ids follow the canonical order: currents before ghosts, then
/// (row, col) lexicographic.
#[derive(Clone, Debug)]
pub struct Algebra {
    pub inst: Instance,
    pub tag: FormTag,
    gens: Vec<Generator>,
    index: HashMap<(Kind, usize, usize), GenId>,
    bracket: Vec<SmallVec<[(GenId, i64); 2]>>,
    form: Vec<Scalar>,
}

/// The form κ on 𝔟 evaluated on matrix units e_{a1,b1}, e_{a2,b2} (flat indices).
pub fn kappa_b(inst: &Instance, a1: usize, b1: usize, a2: usize, b2: usize) -> Scalar {
    let nn = inst.big_n();
    let split = |a: usize| ((a - 1) / nn, (a - 1) % nn + 1);
    let ((s1, i1), (t1, j1)) = (split(a1), split(b1));
    let ((s2, i2), (t2, j2)) = (split(a2), split(b2));
    let mut out = Scalar::zero();
    if s1 == t2 && t1 == s2 && i1 == j2 && j1 == i2 {
        out = out.add(&Scalar::alpha().scale_int(inst.sign(i1)));
    }
    if s1 == t1 && s2 == t2 && i1 == j1 && i2 == j2 {
        let delta = if s1 == s2 { 1 } else { 0 };
        let term = Scalar::c().sub(&Scalar::int(delta));
        out = out.sub(&term.scale_int(inst.sign(i1) * inst.sign(i2)));
    }
    out
}

/// Supertrace pairing str(E_{a,b} E_{c,d}) on small indices.
pub fn str_pair(inst: &Instance, a: usize, b: usize, c: usize, d: usize) -> i64 {
    if b == c && a == d {
        inst.sign(a)
    } else {
        0
    }
}

/// str(E_{a,b}).
pub fn str_unit(inst: &Instance, a: usize, b: usize) -> i64 {
    if a == b {
        inst.sign(a)
    } else {
        0
    }
}

impl Algebra {
    /// 𝔞ₘ,ₙ with the form κₘ,ₙ.
    pub fn a_mn(inst: Instance) -> Algebra {
        let d = inst.dim();
        let mut gens = Vec::new();
        for kind in [Kind::Current, Kind::Ghost] {
            for a in 1..=d {
                for b in 1..=d {
                    let g = inst.grade(a, b).expect("in range");
                    let ok = match kind {
                        Kind::Current => g <= 0,
                        Kind::Ghost => g < 0,
                    };
                    if ok {
                        let p = inst.p_flat(a) ^ inst.p_flat(b) ^ u8::from(kind == Kind::Ghost);
                        gens.push(Generator { kind, row: a, col: b, parity: p, grade: g });
                    }
                }
            }
        }
        let mut alg = Algebra::with_gens(inst, FormTag::KappaMN, gens);
        alg.fill_tables();
        alg
    }

    /// 𝔤𝔩(m|n) with the 𝔤𝔩̂^str form at the given c̃ (and z = 1).
    pub fn gl_str(m: usize, n: usize, ctilde: Scalar) -> Algebra {
        Algebra::gl_with(Instance { m, n, l: 1 }, FormTag::GlHatStr(ctilde))
    }

    /// 𝔤𝔩(m|n) with the 𝔤𝔩̂^κ form for the given l (c̃ = lα, x = 1).
    pub fn gl_kappa(inst: Instance) -> Algebra {
        Algebra::gl_with(inst, FormTag::GlHatKappa)
    }

    fn gl_with(inst: Instance, tag: FormTag) -> Algebra {
        let nn = inst.big_n();
        let mut gens = Vec::new();
        for a in 1..=nn {
            for b in 1..=nn {
                gens.push(Generator { kind: Kind::Current, row: a, col: b, parity: inst.p_e(a, b), grade: 0 });
            }
        }
        let mut alg = Algebra::with_gens(inst, tag, gens);
        alg.fill_tables();
        alg
    }

    fn with_gens(inst: Instance, tag: FormTag, gens: Vec<Generator>) -> Algebra {
        let index = gens.iter().enumerate().map(|(k, g)| ((g.kind, g.row, g.col), k as GenId)).collect();
        Algebra { inst, tag, gens, index, bracket: Vec::new(), form: Vec::new() }
    }

    /// Matrix-unit parity of e_{a,b} for this algebra's index convention.
    fn unit_parity(&self, a: usize, b: usize) -> u8 {
        match self.tag {
            FormTag::KappaMN => self.inst.p_flat(a) ^ self.inst.p_flat(b),
            _ => self.inst.p_e(a, b),
        }
    }

    fn fill_tables(&mut self) {
        let n = self.gens.len();
        let mut bracket = vec![SmallVec::new(); n * n];
        let mut form = vec![Scalar::zero(); n * n];
        for x in 0..n {
            for y in 0..n {
                bracket[x * n + y] = self.compute_bracket(x as GenId, y as GenId);
                form[x * n + y] = self.compute_form(x as GenId, y as GenId);
            }
        }
        self.bracket = bracket;
        self.form = form;
    }

    fn push(&self, out: &mut SmallVec<[(GenId, i64); 2]>, kind: Kind, a: usize, b: usize, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let Some(&id) = self.index.get(&(kind, a, b)) else {
            // Outside the tabulated range: truncated.
            return;
        };
        if let Some(slot) = out.iter_mut().find(|(g, _)| *g == id) {
            slot.1 += coeff;
        } else {
            out.push((id, coeff));
        }
        out.retain(|(_, c)| *c != 0);
    }

    fn compute_bracket(&self, x: GenId, y: GenId) -> SmallVec<[(GenId, i64); 2]> {
        let (u, v) = (self.gens[x as usize], self.gens[y as usize]);
        let mut out = SmallVec::new();
        match (u.kind, v.kind) {
            (Kind::Current, Kind::Current) => {
                let pp = self.unit_parity(u.row, u.col) * self.unit_parity(v.row, v.col);
                if u.col == v.row {
                    self.push(&mut out, Kind::Current, u.row, v.col, 1);
                }
                if v.col == u.row {
                    self.push(&mut out, Kind::Current, v.row, u.col, -sgn(pp));
                }
            }
            (Kind::Current, Kind::Ghost) => self.current_ghost(&mut out, u, v, 1),
            (Kind::Ghost, Kind::Current) => {
                // [ψ, J] = −(−1)^{p(ψ)p(J)} [J, ψ]
                self.current_ghost(&mut out, v, u, -sgn(u.parity * v.parity));
            }
            (Kind::Ghost, Kind::Ghost) => {}
        }
        out
    }

    /// [J^{e_{i,j}}, ψ_{e_{s,t}}] = δ_{j,s} ψ_{e_{i,t}} − δ_{i,t} (−1)^{p(e_ij)(p(e_st)+1)} ψ_{e_{s,j}}
    fn current_ghost(&self, out: &mut SmallVec<[(GenId, i64); 2]>, j: Generator, g: Generator, factor: i64) {
        let pij = self.unit_parity(j.row, j.col);
        let pst = self.unit_parity(g.row, g.col);
        if j.col == g.row {
            self.push(out, Kind::Ghost, j.row, g.col, factor);
        }
        if j.row == g.col {
            self.push(out, Kind::Ghost, g.row, j.col, -factor * sgn(pij * (pst ^ 1)));
        }
    }

    fn compute_form(&self, x: GenId, y: GenId) -> Scalar {
        let (u, v) = (self.gens[x as usize], self.gens[y as usize]);
        if u.kind == Kind::Ghost || v.kind == Kind::Ghost {
            return Scalar::zero();
        }
        let inst = &self.inst;
        match &self.tag {
            FormTag::KappaMN => kappa_b(inst, u.row, u.col, v.row, v.col),
            FormTag::GlHatStr(ct) => {
                let s = str_pair(inst, u.row, u.col, v.row, v.col);
                let z = str_unit(inst, u.row, u.col) * str_unit(inst, v.row, v.col);
                ct.scale_int(s).add(&Scalar::int(z))
            }
            FormTag::GlHatKappa => {
                let l = inst.l as i64;
                let s = str_pair(inst, u.row, u.col, v.row, v.col);
                let z = str_unit(inst, u.row, u.col) * str_unit(inst, v.row, v.col);
                let ct = Scalar::alpha().scale_int(l);
                let lev = Scalar::c().scale_int(l * l).sub(&Scalar::int(l));
                ct.scale_int(s).sub(&lev.scale_int(z))
            }
        }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn gen(&self, id: GenId) -> &Generator {
        &self.gens[id as usize]
    }

    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }

    pub fn parity(&self, id: GenId) -> u8 {
        self.gens[id as usize].parity
    }

    pub fn id(&self, kind: Kind, row: usize, col: usize) -> Option<GenId> {
        self.index.get(&(kind, row, col)).copied()
    }

    /// Id of a generator, or an index error naming it.
    pub fn try_id(&self, kind: Kind, row: usize, col: usize) -> Result<GenId> {
        self.id(kind, row, col)
            .ok_or_else(|| Error::Index(format!("{kind:?} e_{{{row},{col}}} is not a generator of this algebra")))
    }

    /// Super-bracket [x, y] as integer combination of generators.
    pub fn bracket(&self, x: GenId, y: GenId) -> &[(GenId, i64)] {
        &self.bracket[x as usize * self.gens.len() + y as usize]
    }

    /// The invariant form on generators.
    pub fn form(&self, x: GenId, y: GenId) -> &Scalar {
        &self.form[x as usize * self.gens.len() + y as usize]
    }

    /// Form evaluation by tag, rejecting ghosts for the 𝔤𝔩 forms.
    pub fn kappa_eval(&self, x: GenId, y: GenId) -> Result<Scalar> {
        let bad = self.gen(x).kind == Kind::Ghost || self.gen(y).kind == Kind::Ghost;
        if bad && self.tag != FormTag::KappaMN {
            return Err(Error::Invalid("ghost generator passed to a gl form".into()));
        }
        Ok(self.form(x, y).clone())
    }

    /// Map the form's scalars through `f` (used for c = 0 specialization).
    pub fn map_form(&self, f: impl Fn(&Scalar) -> Scalar) -> Algebra {
        let mut out = self.clone();
        out.form = self.form.iter().map(f).collect();
        out
    }

    pub fn label(&self, id: GenId) -> String {
        let g = self.gen(id);
        match g.kind {
            Kind::Current => format!("e{{{},{}}}", g.row, g.col),
            Kind::Ghost => format!("psi{{{},{}}}", g.row, g.col),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg() -> Algebra {
        Algebra::a_mn(Instance::new(2, 1, 2).unwrap())
    }

    #[test]
    fn kappa_examples() {
        let a = alg();
        let i = a.inst;
        let x = a.id(Kind::Current, i.big_n() + 1, 1).unwrap();
        let y = a.id(Kind::Current, 1, i.big_n() + 1);
        // e_{1,N+1} has positive grade, so it is not a current of 𝔟.
        assert!(y.is_none());
        assert_eq!(kappa_b(&i, 4, 1, 1, 4), Scalar::alpha());
        let e11 = a.id(Kind::Current, 1, 1).unwrap();
        assert_eq!(*a.form(e11, e11), "alpha - c + 1".parse().unwrap());
        let g = a.id(Kind::Ghost, 4, 1).unwrap();
        assert!(a.form(x, g).is_zero());
    }

    #[test]
    fn bracket_examples() {
        let a = alg();
        let e12 = a.id(Kind::Current, 1, 2).unwrap();
        let psi41 = a.id(Kind::Ghost, 4, 1).unwrap();
        let psi42 = a.id(Kind::Ghost, 4, 2).unwrap();
        assert_eq!(a.bracket(e12, psi41), &[(psi42, -1)]);
        let g2 = a.id(Kind::Ghost, 5, 1).unwrap();
        assert!(a.bracket(psi41, g2).is_empty());
    }
}
