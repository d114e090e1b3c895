//! Letters, PBW words and states.

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::foundation::{Q, Scalar};
use crate::superalgebra::{Algebra, GenId};

const DEPTH_TOP: u32 = 0xFFFF;

/// A creation mode u[−s], packed so that integer order is the canonical
/// order: depth descending, then generator id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(pub u32);

impl Letter {
    pub fn new(gen: GenId, depth: u32) -> Letter {
        debug_assert!(depth >= 1 && depth < DEPTH_TOP);
        Letter(((DEPTH_TOP - depth) << 16) | gen as u32)
    }

    pub fn gen(self) -> GenId {
        (self.0 & 0xFFFF) as GenId
    }

    pub fn depth(self) -> u32 {
        DEPTH_TOP - (self.0 >> 16)
    }

    pub fn deeper(self, by: u32) -> Letter {
        Letter::new(self.gen(), self.depth() + by)
    }
}

/// A normally ordered word of letters; empty is the vacuum.
pub type Word = SmallVec<[Letter; 6]>;

pub fn word_weight(w: &[Letter]) -> i64 {
    w.iter().map(|l| l.depth() as i64).sum()
}

pub fn word_parity(alg: &Algebra, w: &[Letter]) -> u8 {
    w.iter().fold(0, |p, l| p ^ alg.parity(l.gen()))
}

/// Scalar combination of normally ordered words, sorted by word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct State {
    terms: Vec<(Word, Scalar)>,
}

impl State {
    pub fn zero() -> State {
        State { terms: Vec::new() }
    }

    pub fn vacuum() -> State {
        State::word(Word::new(), Scalar::one())
    }

    pub fn word(w: Word, c: Scalar) -> State {
        if c.is_zero() {
            return State::zero();
        }
        State { terms: vec![(w, c)] }
    }

    pub fn letter(gen: GenId, depth: u32) -> State {
        State::word(smallvec::smallvec![Letter::new(gen, depth)], Scalar::one())
    }

    /// Build from unsorted, possibly repeated terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Scalar)>) -> State {
        let mut acc = Acc::default();
        for (w, c) in terms {
            acc.add_word(&w, &c);
        }
        acc.finish()
    }

    pub fn terms(&self) -> &[(Word, Scalar)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Maximum of Σ depths over words; −1 for the zero state.
    pub fn weight(&self) -> i64 {
        self.terms.iter().map(|(w, _)| word_weight(w)).max().unwrap_or(-1)
    }

    /// Minimum of Σ depths over words.
    pub fn min_weight(&self) -> i64 {
        self.terms.iter().map(|(w, _)| word_weight(w)).min().unwrap_or(-1)
    }

    /// Parity if all words agree, `None` for mixed or zero states.
    pub fn parity(&self, alg: &Algebra) -> Option<u8> {
        let mut it = self.terms.iter().map(|(w, _)| word_parity(alg, w));
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// The scalar coefficient of the vacuum.
    pub fn vacuum_coeff(&self) -> Scalar {
        match self.terms.first() {
            Some((w, c)) if w.is_empty() => c.clone(),
            _ => Scalar::zero(),
        }
    }

    pub fn add(&self, o: &State) -> State {
        let mut acc = Acc::default();
        acc.add(self, &Scalar::one());
        acc.add(o, &Scalar::one());
        acc.finish()
    }

    pub fn sub(&self, o: &State) -> State {
        let mut acc = Acc::default();
        acc.add(self, &Scalar::one());
        acc.add(o, &Scalar::int(-1));
        acc.finish()
    }

    pub fn scale(&self, c: &Scalar) -> State {
        if c.is_zero() {
            return State::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        State::from_terms(self.terms.iter().map(|(w, x)| (w.clone(), x.mul(c))))
    }

    pub fn scale_q(&self, q: &Q) -> State {
        self.scale(&Scalar::constant(q.clone()))
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> State {
        State::from_terms(self.terms.iter().map(|(w, x)| (w.clone(), f(x))))
    }

    pub fn specialize_c0(&self) -> State {
        self.map_coeffs(Scalar::specialize_c0)
    }

    /// Keep only words satisfying the predicate.
    pub fn filter(&self, keep: impl Fn(&Word) -> bool) -> State {
        State { terms: self.terms.iter().filter(|(w, _)| keep(w)).cloned().collect() }
    }

    pub fn display(&self, alg: &Algebra) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let body = if w.is_empty() {
                    "|0>".to_string()
                } else {
                    w.iter().map(|l| format!("{}[-{}]", alg.label(l.gen()), l.depth())).collect::<Vec<_>>().join(" ")
                };
                format!("({c}) {body}")
            })
            .collect();
        parts.join(" + ")
    }
}

/// Hash-map accumulator for building states.
#[derive(Default)]
pub struct Acc {
    map: FxHashMap<Word, Scalar>,
}

impl Acc {
    pub fn add_word(&mut self, w: &Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.map.get_mut(w) {
            Some(x) => x.add_assign(c),
            None => {
                self.map.insert(w.clone(), c.clone());
            }
        }
    }

    pub fn add(&mut self, s: &State, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let unit = c.is_one();
        for (w, x) in &s.terms {
            if unit {
                self.add_word(w, x);
            } else {
                self.add_word(w, &x.mul(c));
            }
        }
    }

    pub fn add_int(&mut self, s: &State, k: i64) {
        match k {
            0 => {}
            1 => self.add(s, &Scalar::one()),
            _ => self.add(s, &Scalar::int(k)),
        }
    }

    pub fn finish(self) -> State {
        let mut terms: Vec<(Word, Scalar)> = self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        State { terms }
    }
}
