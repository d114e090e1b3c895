//! Mode action, normal ordering and n-th products in the universal affine
//! vertex superalgebra of a tabulated Lie superalgebra.

use std::sync::Arc;

use dashmap::DashMap;
use rustc_hash::FxBuildHasher;
use smallvec::smallvec;

use super::state::{word_parity, word_weight, Acc, Letter, State, Word};
use crate::foundation::{binom, sgn, Q, Scalar};
use crate::superalgebra::{Algebra, GenId};

type Cache<K> = DashMap<K, Arc<State>, FxBuildHasher>;

/// Universal affine vertex superalgebra V^κ(𝔞) with memoized kernels.
pub struct Vertex {
    pub alg: Algebra,
    create_cache: Cache<(Letter, Word)>,
    annih_cache: Cache<(GenId, u32, Word)>,
    prod_cache: Cache<(Word, i64, Word)>,
}

impl Vertex {
    pub fn new(alg: Algebra) -> Vertex {
        Vertex {
            alg,
            create_cache: DashMap::with_hasher(FxBuildHasher),
            annih_cache: DashMap::with_hasher(FxBuildHasher),
            prod_cache: DashMap::with_hasher(FxBuildHasher),
        }
    }

    pub fn clear_caches(&self) {
        self.create_cache.clear();
        self.annih_cache.clear();
        self.prod_cache.clear();
    }

    pub fn cache_sizes(&self) -> (usize, usize, usize) {
        (self.create_cache.len(), self.annih_cache.len(), self.prod_cache.len())
    }

    fn pp(&self, a: GenId, b: GenId) -> i64 {
        sgn(self.alg.parity(a) & self.alg.parity(b))
    }

    /// The normally ordered form of letter · word.
    pub fn create(&self, x: Letter, w: &Word) -> Arc<State> {
        if w.is_empty() || x < w[0] {
            let mut out: Word = smallvec![x];
            out.extend_from_slice(w);
            return Arc::new(State::word(out, Scalar::one()));
        }
        let key = (x, w.clone());
        if let Some(hit) = self.create_cache.get(&key) {
            return hit.clone();
        }
        let rest: Word = w[1..].into();
        let y = w[0];
        let mut acc = Acc::default();
        if x == y {
            if self.alg.parity(x.gen()) == 0 {
                let mut out: Word = smallvec![x];
                out.extend_from_slice(w);
                acc.add_word(&out, &Scalar::one());
            } else {
                // x² = ½[x, x] for odd x.
                let half = Scalar::frac(1, 2);
                for &(g, k) in self.alg.bracket(x.gen(), x.gen()) {
                    let s = self.create(Letter::new(g, 2 * x.depth()), &rest);
                    acc.add(&s, &half.scale_int(k));
                }
            }
        } else {
            // x y = ± y x + [x, y]
            let inner = self.create(x, &rest);
            let moved = self.create_state(y, &inner);
            acc.add_int(&moved, self.pp(x.gen(), y.gen()));
            let depth = x.depth() + y.depth();
            for &(g, k) in self.alg.bracket(x.gen(), y.gen()) {
                acc.add_int(&self.create(Letter::new(g, depth), &rest), k);
            }
        }
        let out = Arc::new(acc.finish());
        self.create_cache.insert(key, out.clone());
        out
    }

    /// letter · state.
    pub fn create_state(&self, x: Letter, s: &State) -> State {
        let mut acc = Acc::default();
        for (w, c) in s.terms() {
            acc.add(&self.create(x, w), c);
        }
        acc.finish()
    }

    /// g[n] · word for n ≥ 0.
    pub fn annihilate(&self, g: GenId, n: u32, w: &Word) -> Arc<State> {
        if w.is_empty() || n as i64 > word_weight(w) {
            return Arc::new(State::zero());
        }
        let key = (g, n, w.clone());
        if let Some(hit) = self.annih_cache.get(&key) {
            return hit.clone();
        }
        let y = w[0];
        let rest: Word = w[1..].into();
        let mut acc = Acc::default();
        let inner = self.annihilate(g, n, &rest);
        if !inner.is_zero() {
            acc.add_int(&self.create_state(y, &inner), self.pp(g, y.gen()));
        }
        let shift = n as i64 - y.depth() as i64;
        for &(h, k) in self.alg.bracket(g, y.gen()) {
            let part = self.mode_word(h, shift, &rest);
            acc.add_int(&part, k);
        }
        if shift == 0 {
            let f = self.alg.form(g, y.gen());
            if !f.is_zero() {
                acc.add_word(&rest, &f.scale_int(n as i64));
            }
        }
        let out = Arc::new(acc.finish());
        self.annih_cache.insert(key, out.clone());
        out
    }

    /// g[k] · word for any integer k.
    pub fn mode_word(&self, g: GenId, k: i64, w: &Word) -> Arc<State> {
        if k < 0 {
            self.create(Letter::new(g, (-k) as u32), w)
        } else {
            self.annihilate(g, k as u32, w)
        }
    }

    /// g[k] · state.
    pub fn mode_act(&self, g: GenId, k: i64, v: &State) -> State {
        let mut acc = Acc::default();
        for (w, c) in v.terms() {
            acc.add(&self.mode_word(g, k, w), c);
        }
        acc.finish()
    }

    /// Normal-ordered product of a raw letter sequence applied to the vacuum.
    pub fn normal_order(&self, letters: &[Letter]) -> State {
        let mut s = State::vacuum();
        for &x in letters.iter().rev() {
            s = self.create_state(x, &s);
        }
        s
    }

    /// u_{(n)} v on words.
    pub fn prod_word(&self, u: &Word, n: i64, v: &Word) -> Arc<State> {
        if u.is_empty() {
            return Arc::new(if n == -1 { State::word(v.clone(), Scalar::one()) } else { State::zero() });
        }
        let wv = word_weight(v);
        if n >= word_weight(u) + wv {
            return Arc::new(State::zero());
        }
        // Single-letter depth-one states act by their generator mode.
        if u.len() == 1 && u[0].depth() == 1 {
            return self.mode_word(u[0].gen(), n, v);
        }
        let key = (u.clone(), n, v.clone());
        if let Some(hit) = self.prod_cache.get(&key) {
            return hit.clone();
        }
        let a = u[0];
        let s = a.depth() as i64;
        let w: Word = u[1..].into();
        let ww = word_weight(&w);
        let mut acc = Acc::default();
        let vstate = State::word(v.clone(), Scalar::one());

        // Σ_j C(s+j−1, j) a[−s−j] (w_{(n+j)} v)
        let mut j = 0i64;
        while n + j < ww + wv {
            let inner = self.prod_word(&w, n + j, v);
            if !inner.is_zero() {
                let c = binom(s + j - 1, j as u32);
                let moved = self.create_state(a.deeper(j as u32), &inner);
                acc.add(&moved, &Scalar::constant(c));
            }
            j += 1;
        }

        // − (−1)^{p(a)p(w)} (−1)^s Σ_j C(s+j−1, j) w_{(n−s−j)} (a[j] v)
        let sign = -sgn(self.alg.parity(a.gen()) & word_parity(&self.alg, &w)) * sgn((s & 1) as u8);
        for j in 0..=wv {
            let av = self.mode_act(a.gen(), j, &vstate);
            if av.is_zero() {
                continue;
            }
            let inner = self.prod_word_state(&w, n - s - j, &av);
            if !inner.is_zero() {
                let c = binom(s + j - 1, j as u32).mul(&Q::int(sign));
                acc.add(&inner, &Scalar::constant(c));
            }
        }
        let out = Arc::new(acc.finish());
        self.prod_cache.insert(key, out.clone());
        out
    }

    fn prod_word_state(&self, u: &Word, n: i64, v: &State) -> State {
        let mut acc = Acc::default();
        for (w, c) in v.terms() {
            acc.add(&self.prod_word(u, n, w), c);
        }
        acc.finish()
    }

    /// u_{(n)} v.
    pub fn nth_product(&self, u: &State, n: i64, v: &State) -> State {
        let mut acc = Acc::default();
        for (wu, cu) in u.terms() {
            for (wv, cv) in v.terms() {
                let p = self.prod_word(wu, n, wv);
                if !p.is_zero() {
                    acc.add(&p, &cu.mul(cv));
                }
            }
        }
        acc.finish()
    }

    /// The normally ordered product u_{(−1)} v.
    pub fn nop(&self, u: &State, v: &State) -> State {
        self.nth_product(u, -1, v)
    }

    /// Translation operator ∂.
    pub fn translate(&self, u: &State) -> State {
        let mut acc = Acc::default();
        for (w, c) in u.terms() {
            acc.add(&self.translate_word(w), c);
        }
        acc.finish()
    }

    fn translate_word(&self, w: &Word) -> State {
        if w.is_empty() {
            return State::zero();
        }
        let a = w[0];
        let rest: Word = w[1..].into();
        let mut acc = Acc::default();
        acc.add_int(&self.create(a.deeper(1), &rest), a.depth() as i64);
        let d = self.translate_word(&rest);
        if !d.is_zero() {
            acc.add(&self.create_state(a, &d), &Scalar::one());
        }
        acc.finish()
    }

    /// ∂ applied k times.
    pub fn translate_pow(&self, u: &State, k: u32) -> State {
        let mut out = u.clone();
        for _ in 0..k {
            out = self.translate(&out);
        }
        out
    }

    /// [u t^a, v t^b] = Σ_r C(a, r) (u_{(r)} v) t^{a+b−r}, as (state, t-power) pairs.
    pub fn mode_commutator(&self, u: &State, a: i64, v: &State, b: i64) -> Vec<(State, i64)> {
        let mut out = Vec::new();
        let top = u.weight() + v.weight();
        for r in 0..top.max(0) {
            let c = binom(a, r as u32);
            if c.is_zero() {
                continue;
            }
            let p = self.nth_product(u, r, v);
            if !p.is_zero() {
                out.push((p.scale_q(&c), a + b - r));
            }
        }
        out
    }

    /// The state of a single generator, g[−1]|0⟩.
    pub fn gen_state(&self, g: GenId) -> State {
        State::letter(g, 1)
    }

    pub fn display(&self, s: &State) -> String {
        s.display(&self.alg)
    }
}
