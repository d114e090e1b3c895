//! Relation checking on the truncated vacuum module.

use std::sync::Arc;

use dashmap::DashMap;
use rayon::prelude::*;
use rustc_hash::FxBuildHasher;

use super::images::Images;
use super::relations::{RelExpr, RelationSpec, YGen};
use crate::foundation::{sgn, Scalar};
use crate::report::{clip, CheckReport};
use crate::vertex::basis::words_up_to;
use crate::vertex::{Acc, State, Vertex, Word};

/// Evaluates relation trees as operators, memoizing generator images on words.
pub struct Evaluator<'a> {
    pub vx: &'a Vertex,
    pub images: &'a Images,
    cache: DashMap<(YGen, Word), Arc<State>, FxBuildHasher>,
}

impl<'a> Evaluator<'a> {
    pub fn new(vx: &'a Vertex, images: &'a Images) -> Evaluator<'a> {
        Evaluator { vx, images, cache: DashMap::with_hasher(FxBuildHasher) }
    }

    pub fn apply_gen(&self, g: YGen, v: &State) -> State {
        let mut acc = Acc::default();
        for (w, c) in v.terms() {
            let key = (g, w.clone());
            let img = match self.cache.get(&key) {
                Some(hit) => hit.clone(),
                None => {
                    let out = Arc::new(self.images.get(&g).apply(self.vx, &State::word(w.clone(), Scalar::one())));
                    self.cache.insert(key, out.clone());
                    out
                }
            };
            acc.add(&img, c);
        }
        acc.finish()
    }

    pub fn eval(&self, e: &RelExpr, v: &State) -> State {
        if v.is_zero() {
            return State::zero();
        }
        let inst = &self.images.inst;
        match e {
            RelExpr::Gen(g) => self.apply_gen(*g, v),
            RelExpr::Scalar(c) => v.scale(c),
            RelExpr::Lin(ts) => {
                let mut acc = Acc::default();
                for (c, x) in ts {
                    acc.add(&self.eval(x, v), c);
                }
                acc.finish()
            }
            RelExpr::Mul(a, b) => self.eval(a, &self.eval(b, v)),
            RelExpr::Br(a, b) => {
                let ab = self.eval(a, &self.eval(b, v));
                let ba = self.eval(b, &self.eval(a, v));
                let k = sgn(a.parity(inst) & b.parity(inst));
                let mut acc = Acc::default();
                acc.add(&ab, &Scalar::one());
                acc.add_int(&ba, -k);
                acc.finish()
            }
            RelExpr::Anti(a, b) => {
                let ab = self.eval(a, &self.eval(b, v));
                let ba = self.eval(b, &self.eval(a, v));
                ab.add(&ba)
            }
        }
    }

    /// Checks "expr = 0" on every basis word of weight ≤ d.
    pub fn verify(&self, rel: &RelationSpec, basis: &[Word]) -> CheckReport {
        CheckReport::run(rel.id.clone(), rel.statement.clone(), || {
            basis
                .par_iter()
                .map(|w| {
                    let v = State::word(w.clone(), Scalar::one());
                    let r = self.eval(&rel.expr, &v);
                    (!r.is_zero()).then(|| {
                        clip(format!("on {}: {}", self.vx.display(&v), self.vx.display(&r)))
                    })
                })
                .find_first(|r| r.is_some())
                .flatten()
        })
    }

    /// All relations, in order.
    pub fn verify_all(&self, rels: &[RelationSpec], d: u32) -> Vec<CheckReport> {
        let basis = words_up_to(&self.vx.alg, d);
        rels.par_iter().map(|r| self.verify(r, &basis)).collect()
    }
}
