//! W-generators from the column determinant of the Miura matrix, their closed
//! forms, and the odd differential d₀ whose kernel they span.

use std::collections::BTreeMap;
use std::sync::Arc;

use dashmap::DashMap;
use rayon::prelude::*;
use rustc_hash::FxBuildHasher;

use crate::error::{Error, Result};
use crate::foundation::{binom, sgn, Instance, Scalar};
use crate::superalgebra::{Algebra, Kind};
use crate::vertex::{Acc, State, Vertex, Word};
use crate::mutation::{active, Mutation};

/// The vertex algebra V^{κₘ,ₙ}(𝔞ₘ,ₙ) of an instance.
pub struct Ambient {
    pub inst: Instance,
    pub vx: Vertex,
}

impl Ambient {
    pub fn new(inst: Instance) -> Ambient {
        Ambient { inst, vx: Vertex::new(Algebra::a_mn(inst)) }
    }

    /// Same instance with the form specialized at c = 0.
    pub fn new_c0(inst: Instance) -> Ambient {
        Ambient { inst, vx: Vertex::new(Algebra::a_mn(inst).map_form(Scalar::specialize_c0)) }
    }

    /// Flat index of copy `s` (1-based) and small index `i`.
    pub fn flat(&self, s: usize, i: usize) -> usize {
        (s - 1) * self.inst.big_n() + i
    }

    /// e_{A,B}[−depth]|0⟩, or `None` if e_{A,B} is not in 𝔟.
    pub fn cur(&self, a: usize, b: usize, depth: u32) -> Option<State> {
        self.vx.alg.id(Kind::Current, a, b).map(|g| State::letter(g, depth))
    }

    /// ψ_{A,B}[−depth]|0⟩, or `None` if it is not a ghost of 𝔞ₘ,ₙ.
    pub fn ghost(&self, a: usize, b: usize, depth: u32) -> Option<State> {
        self.vx.alg.id(Kind::Ghost, a, b).map(|g| State::letter(g, depth))
    }

    /// W⁽¹⁾ᵢⱼ = Σ_s e_{(s−1)N+j,(s−1)N+i}[−1].
    pub fn w1_closed(&self, i: usize, j: usize) -> State {
        let mut acc = Acc::default();
        for s in 1..=self.inst.l {
            acc.add(&self.cur(self.flat(s, j), self.flat(s, i), 1).unwrap(), &Scalar::one());
        }
        acc.finish()
    }

    /// The closed form of W⁽²⁾ᵢⱼ.
    pub fn w2_closed(&self, i: usize, j: usize) -> State {
        self.w2_closed_with(i, j, None)
    }

    /// The closed form of W⁽²⁾ᵢⱼ, optionally perturbed by [`Mutation::GenW2Alpha`].
    pub fn w2_closed_with(&self, i: usize, j: usize, mutation: Option<Mutation>) -> State {
        let (l, nn) = (self.inst.l, self.inst.big_n());
        let shift = if active(mutation, Mutation::GenW2Alpha) { 0 } else { 1 };
        let mut acc = Acc::default();
        for s in 1..l {
            acc.add(&self.cur(self.flat(s + 1, j), self.flat(s, i), 1).unwrap(), &Scalar::one());
        }
        for s in 1..=l {
            let c = Scalar::alpha().scale_int(s as i64 - shift);
            acc.add(&self.cur(self.flat(s, j), self.flat(s, i), 2).unwrap(), &c);
        }
        for r1 in 1..=l {
            for r2 in r1 + 1..=l {
                for t in 1..=nn {
                    let sign = sgn(self.inst.p(t) ^ (self.inst.p_e(i, t) & self.inst.p_e(j, t)));
                    let x = self.cur(self.flat(r1, t), self.flat(r1, i), 1).unwrap();
                    let y = self.cur(self.flat(r2, j), self.flat(r2, t), 1).unwrap();
                    acc.add(&self.vx.nop(&x, &y), &Scalar::int(sign));
                }
            }
        }
        acc.finish()
    }
}

/// Polynomial in τ with state coefficients, τ kept on the right.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct TauPoly(pub Vec<State>);

impl TauPoly {
    pub fn zero() -> TauPoly {
        TauPoly(Vec::new())
    }

    pub fn monomial(s: State, k: usize) -> TauPoly {
        let mut v = vec![State::zero(); k + 1];
        v[k] = s;
        TauPoly(v).trim()
    }

    fn trim(mut self) -> TauPoly {
        while self.0.last().is_some_and(State::is_zero) {
            self.0.pop();
        }
        self
    }

    pub fn coeff(&self, k: usize) -> State {
        self.0.get(k).cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &TauPoly, scale: &Scalar) -> TauPoly {
        let len = self.0.len().max(o.0.len());
        let mut v = Vec::with_capacity(len);
        for k in 0..len {
            let mut acc = Acc::default();
            acc.add(&self.coeff(k), &Scalar::one());
            acc.add(&o.coeff(k), scale);
            v.push(acc.finish());
        }
        TauPoly(v).trim()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(State::is_zero)
    }
}

/// (x τ^k)(y τ^m) = Σ_j C(k, j) x_{(−1)} ∂^j y · τ^{k−j+m}.
pub fn tau_product(vx: &Vertex, x: &TauPoly, y: &TauPoly) -> TauPoly {
    let mut out: Vec<Acc> = Vec::new();
    let mut derivs: Vec<Vec<State>> = y.0.iter().map(|s| vec![s.clone()]).collect();
    for (k, xs) in x.0.iter().enumerate() {
        if xs.is_zero() {
            continue;
        }
        for (m, _) in y.0.iter().enumerate() {
            for j in 0..=k {
                while derivs[m].len() <= j {
                    let next = vx.translate(derivs[m].last().unwrap());
                    derivs[m].push(next);
                }
                let dy = &derivs[m][j];
                if dy.is_zero() {
                    continue;
                }
                let p = vx.nop(xs, dy);
                let power = k - j + m;
                while out.len() <= power {
                    out.push(Acc::default());
                }
                out[power].add(&p, &Scalar::constant(binom(k as i64, j as u32)));
            }
        }
    }
    TauPoly(out.into_iter().map(Acc::finish).collect()).trim()
}

/// Entries of the Miura matrix B.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MiuraEntry {
    /// ατ + e_{s,s}[−1]
    Diag(usize),
    /// −1 on the superdiagonal
    MinusOne,
    /// e_{s,u}[−1] for s > u
    Lower(usize, usize),
    Zero,
}

pub fn miura_entry(s: usize, u: usize) -> MiuraEntry {
    if s == u {
        MiuraEntry::Diag(s)
    } else if s + 1 == u {
        MiuraEntry::MinusOne
    } else if s > u {
        MiuraEntry::Lower(s, u)
    } else {
        MiuraEntry::Zero
    }
}

/// Nonzero terms of cdet B: (sign of σ, column-ordered entries b_{σ(k),k}).
pub fn cdet_terms(l: usize) -> Vec<(i64, Vec<MiuraEntry>)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (1..=l).collect();
    permutations(&mut perm, 0, &mut |p| {
        let entries: Vec<MiuraEntry> = (0..l).map(|k| miura_entry(p[k], k + 1)).collect();
        if entries.iter().all(|e| *e != MiuraEntry::Zero) {
            out.push((perm_sign(p), entries));
        }
    });
    out.sort_by(|a, b| format!("{:?}", a.1).cmp(&format!("{:?}", b.1)));
    out
}

fn permutations(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, f);
        v.swap(k, i);
    }
}

fn perm_sign(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Which product rule for the T-map is used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TRule {
    /// T_{a,b}(xy) = Σ_r (−1)^{p(e_{a,r})p(e_{b,r})} T_{r,b}(x) T_{a,r}(y), the
    /// rule forced by T(x) = Σ e_{j,i} ⊗ T_{i,j}(x).
    FromDefinition,
    /// T_{i,j}(xy) = Σ_r (−1)^{p(e_{i,r})p(e_{j,r})} T_{r,i}(x) T_{j,r}(y) as printed.
    AsPrinted,
}

/// N×N matrix of τ-polynomials, row-major over small indices 1..N.
pub type TMatrix = Vec<TauPoly>;

impl Ambient {
    fn t_entry(&self, e: MiuraEntry) -> TMatrix {
        let nn = self.inst.big_n();
        let mut out = vec![TauPoly::zero(); nn * nn];
        for a in 1..=nn {
            for b in 1..=nn {
                let sa = self.inst.sign(a);
                let cell = match e {
                    MiuraEntry::Diag(s) => {
                        let mut v = vec![State::zero(); 2];
                        v[0] = self.cur(self.flat(s, a), self.flat(s, b), 1).unwrap().scale(&Scalar::int(sa));
                        if a == b {
                            v[1] = State::vacuum().scale(&Scalar::alpha());
                        }
                        TauPoly(v).trim()
                    }
                    MiuraEntry::MinusOne if a == b => TauPoly::monomial(State::vacuum().scale(&Scalar::int(-1)), 0),
                    MiuraEntry::MinusOne => TauPoly::zero(),
                    MiuraEntry::Lower(s, u) => {
                        let st = self.cur(self.flat(s, a), self.flat(u, b), 1).unwrap();
                        TauPoly::monomial(st.scale(&Scalar::int(sa)), 0)
                    }
                    MiuraEntry::Zero => TauPoly::zero(),
                };
                out[(a - 1) * nn + (b - 1)] = cell;
            }
        }
        out
    }

    fn t_product(&self, x: &TMatrix, y: &TMatrix, rule: TRule) -> TMatrix {
        let nn = self.inst.big_n();
        let at = |m: &TMatrix, a: usize, b: usize| m[(a - 1) * nn + (b - 1)].clone();
        let cells: Vec<(usize, usize)> = (1..=nn).flat_map(|a| (1..=nn).map(move |b| (a, b))).collect();
        cells
            .par_iter()
            .map(|&(a, b)| {
                let mut acc = TauPoly::zero();
                for r in 1..=nn {
                    let sign = sgn(self.inst.p_e(a, r) & self.inst.p_e(b, r));
                    let (fx, fy) = match rule {
                        TRule::FromDefinition => (at(x, r, b), at(y, a, r)),
                        TRule::AsPrinted => (at(x, r, a), at(y, b, r)),
                    };
                    if fx.is_zero() || fy.is_zero() {
                        continue;
                    }
                    let p = tau_product(&self.vx, &fx, &fy);
                    acc = acc.add(&p, &Scalar::int(sign));
                }
                acc
            })
            .collect()
    }

    /// T applied to cdet B, with products right-nested: b₁(b₂(⋯(b_{l−1} b_l))).
    pub fn t_cdet(&self, rule: TRule) -> TMatrix {
        let nn = self.inst.big_n();
        let mut total = vec![TauPoly::zero(); nn * nn];
        for (sign, entries) in cdet_terms(self.inst.l) {
            let mut acc = self.t_entry(*entries.last().unwrap());
            for e in entries.iter().rev().skip(1) {
                acc = self.t_product(&self.t_entry(*e), &acc, rule);
            }
            for (t, a) in total.iter_mut().zip(acc.iter()) {
                *t = t.add(a, &Scalar::int(sign));
            }
        }
        total
    }

    /// All W⁽ʳ⁾ᵢⱼ, r = 0..l, read off from T_{j,i}(cdet B).
    pub fn extract_w(&self, rule: TRule) -> Result<WSet> {
        let (l, nn) = (self.inst.l, self.inst.big_n());
        let t = self.t_cdet(rule);
        let mut gens = BTreeMap::new();
        for i in 1..=nn {
            for j in 1..=nn {
                let cell = &t[(j - 1) * nn + (i - 1)];
                for r in 0..=l {
                    let k = (l - r) as u8;
                    let coeff = cell.coeff(l - r);
                    let mut terms = Vec::new();
                    for (w, c) in coeff.terms() {
                        let d = c.div_alpha_pow(k).ok_or_else(|| {
                            Error::Invalid(format!("τ^{k} coefficient of T_{{{j},{i}}} is not divisible by α^{k}"))
                        })?;
                        terms.push((w.clone(), d.scale_int(self.inst.sign(j))));
                    }
                    gens.insert((r, i, j), State::from_terms(terms));
                }
            }
        }
        Ok(WSet { inst: self.inst, gens })
    }

    /// Default extraction (definition-consistent T rule).
    pub fn build_w(&self) -> WSet {
        self.extract_w(TRule::FromDefinition).expect("cdet coefficients divisible by powers of α")
    }
}

/// The family W⁽ʳ⁾ᵢⱼ of an instance.
#[derive(Clone, Debug, PartialEq)]
pub struct WSet {
    pub inst: Instance,
    pub gens: BTreeMap<(usize, usize, usize), State>,
}

impl WSet {
    pub fn w(&self, r: usize, i: usize, j: usize) -> &State {
        &self.gens[&(r, i, j)]
    }

    pub fn w1(&self, i: usize, j: usize) -> &State {
        self.w(1, i, j)
    }

    pub fn w2(&self, i: usize, j: usize) -> &State {
        self.w(2, i, j)
    }

    pub fn specialize_c0(&self) -> WSet {
        WSet { inst: self.inst, gens: self.gens.iter().map(|(k, v)| (*k, v.specialize_c0())).collect() }
    }
}

/// Readings of the printed d₀ formula on generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct D0Reading {
    /// Carry (−1)^{p(j)} on the last ghost term ψ_{(s−1)N+j,(t−2)N+i}.
    pub last_term_signed: bool,
    /// Fire the α ψ[−2] term when the row copy exceeds the column copy
    /// (instead of the printed δ(s<t), which never holds on 𝔟).
    pub alpha_when_row_below: bool,
    /// Sum the e·ψ term over t ≤ a < s and the ψ·e term over t < a ≤ s, so that
    /// every ghost index in range is a ghost of 𝔞ₘ,ₙ.
    pub ghost_ranges: bool,
}

impl D0Reading {
    pub const PRINTED: D0Reading = D0Reading { last_term_signed: false, alpha_when_row_below: false, ghost_ranges: false };
    pub const ADOPTED: D0Reading = D0Reading { last_term_signed: true, alpha_when_row_below: true, ghost_ranges: true };
}

/// The odd differential d₀ on V^κ(𝔟), valued in V^{κₘ,ₙ}(𝔞ₘ,ₙ).
pub struct D0<'a> {
    amb: &'a Ambient,
    gen_images: Vec<State>,
    cache: DashMap<Word, Arc<State>, FxBuildHasher>,
}

impl<'a> D0<'a> {
    pub fn new(amb: &'a Ambient, reading: D0Reading) -> D0<'a> {
        let alg = &amb.vx.alg;
        let gen_images = alg
            .gens()
            .iter()
            .map(|g| match g.kind {
                Kind::Current => d0_generator(amb, g.row, g.col, reading),
                Kind::Ghost => State::zero(),
            })
            .collect();
        D0 { amb, gen_images, cache: DashMap::with_hasher(FxBuildHasher) }
    }

    /// d₀ of the single-generator state e_{A,B}[−1].
    pub fn generator_image(&self, a: usize, b: usize) -> Result<&State> {
        let id = self.amb.vx.alg.try_id(Kind::Current, a, b)?;
        Ok(&self.gen_images[id as usize])
    }

    pub fn apply(&self, u: &State) -> Result<State> {
        let mut acc = Acc::default();
        for (w, c) in u.terms() {
            if w.iter().any(|l| self.amb.vx.alg.gen(l.gen()).kind == Kind::Ghost) {
                return Err(Error::Invalid("d0 is defined on ghost-free states only".into()));
            }
            acc.add(&self.apply_word(w), c);
        }
        Ok(acc.finish())
    }

    fn apply_word(&self, w: &Word) -> Arc<State> {
        if w.is_empty() {
            return Arc::new(State::zero());
        }
        if let Some(hit) = self.cache.get(w) {
            return hit.clone();
        }
        let vx = &self.amb.vx;
        let a = w[0];
        let rest: Word = w[1..].into();
        let mut acc = Acc::default();
        let img = &self.gen_images[a.gen() as usize];
        let rest_state = State::word(rest.clone(), Scalar::one());
        acc.add(&vx.nth_product(img, -(a.depth() as i64), &rest_state), &Scalar::one());
        let dr = self.apply_word(&rest);
        if !dr.is_zero() {
            let sign = sgn(vx.alg.parity(a.gen()));
            acc.add(&vx.create_state(a, &dr), &Scalar::int(sign));
        }
        let out = Arc::new(acc.finish());
        self.cache.insert(w.clone(), out.clone());
        out
    }
}

/// d₀(e_{(s−1)N+j,(t−1)N+i}[−1]) under the given reading.
pub fn d0_generator(amb: &Ambient, row: usize, col: usize, reading: D0Reading) -> State {
    let inst = amb.inst;
    let nn = inst.big_n();
    let (s, j) = ((row - 1) / nn + 1, (row - 1) % nn + 1);
    let (t, i) = ((col - 1) / nn + 1, (col - 1) % nn + 1);
    let vx = &amb.vx;
    let mut acc = Acc::default();
    let (first, second) = if reading.ghost_ranges { (t..s, t + 1..s + 1) } else { (t + 1..s + 1, t..s) };
    for a in first {
        for r in 1..=nn {
            let (Some(x), Some(y)) = (amb.cur(amb.flat(a, r), amb.flat(t, i), 1), amb.ghost(amb.flat(s, j), amb.flat(a, r), 1)) else {
                continue;
            };
            let sign = sgn(inst.p_e(i, j) ^ (inst.p_e(i, r) & inst.p_e(r, j)));
            acc.add(&vx.nop(&x, &y), &Scalar::int(sign));
        }
    }
    for a in second {
        for r in 1..=nn {
            let (Some(x), Some(y)) = (amb.ghost(amb.flat(a, r), amb.flat(t, i), 1), amb.cur(amb.flat(s, j), amb.flat(a, r), 1)) else {
                continue;
            };
            let sign = -sgn(inst.p_e(i, r) & inst.p_e(r, j));
            acc.add(&vx.nop(&x, &y), &Scalar::int(sign));
        }
    }
    let alpha_fires = if reading.alpha_when_row_below { s > t } else { s < t };
    if alpha_fires {
        if let Some(g) = amb.ghost(row, col, 2) {
            acc.add(&g, &Scalar::alpha().scale_int(inst.sign(j)));
        }
    }
    if s < inst.l {
        if let Some(g) = amb.ghost(amb.flat(s + 1, j), col, 1) {
            acc.add(&g, &Scalar::int(inst.sign(j)));
        }
    }
    if t >= 2 {
        if let Some(g) = amb.ghost(row, amb.flat(t - 1, i), 1) {
            let sign = if reading.last_term_signed { -inst.sign(j) } else { -1 };
            acc.add(&g, &Scalar::int(sign));
        }
    }
    acc.finish()
}
