//! Elements of the completed mode algebra: finite sums of ordered products of
//! state modes u t^{a+b·s}, optionally summed over s ≥ 0.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::foundation::Scalar;
use crate::vertex::{Acc, State, Vertex};

/// The mode u_{(a + b·s)} of a state.
#[derive(Clone, Debug)]
pub struct Factor {
    pub state: Arc<State>,
    pub a: i64,
    pub b: i64,
}

#[derive(Clone, Debug)]
pub struct Term {
    pub coeff: Scalar,
    pub summed: bool,
    /// Applied right to left.
    pub factors: Vec<Factor>,
}

#[derive(Clone, Debug, Default)]
pub struct ModeExpr {
    pub terms: Vec<Term>,
}

impl ModeExpr {
    pub fn zero() -> ModeExpr {
        ModeExpr::default()
    }

    pub fn scalar(c: Scalar) -> ModeExpr {
        ModeExpr { terms: vec![Term { coeff: c, summed: false, factors: Vec::new() }] }
    }

    /// The single mode u t^a.
    pub fn mode(u: &State, a: i64) -> ModeExpr {
        ModeExpr {
            terms: vec![Term { coeff: Scalar::one(), summed: false, factors: vec![Factor { state: Arc::new(u.clone()), a, b: 0 }] }],
        }
    }

    /// Σ_{s≥0} c · Π u_k t^{a_k + b_k s}. The rightmost slope must be +1.
    pub fn sum_over_s(c: Scalar, factors: &[(&State, i64, i64)]) -> Result<ModeExpr> {
        match factors.last() {
            Some(&(_, _, 1)) => {}
            _ => return Err(Error::Invalid("summed term needs a rightmost factor of slope +1".into())),
        }
        if factors.iter().any(|&(_, _, b)| !(-1..=1).contains(&b)) {
            return Err(Error::Invalid("slopes must lie in {-1, 0, 1}".into()));
        }
        let factors = factors.iter().map(|&(u, a, b)| Factor { state: Arc::new(u.clone()), a, b }).collect();
        Ok(ModeExpr { terms: vec![Term { coeff: c, summed: true, factors }] })
    }

    pub fn plus(mut self, o: ModeExpr, c: &Scalar) -> ModeExpr {
        for mut t in o.terms {
            t.coeff = t.coeff.mul(c);
            if !t.coeff.is_zero() {
                self.terms.push(t);
            }
        }
        self
    }

    pub fn add(self, o: ModeExpr) -> ModeExpr {
        self.plus(o, &Scalar::one())
    }

    pub fn scale(mut self, c: &Scalar) -> ModeExpr {
        for t in &mut self.terms {
            t.coeff = t.coeff.mul(c);
        }
        self.terms.retain(|t| !t.coeff.is_zero());
        self
    }

    /// Composition self ∘ o. At most one factor may carry a summation.
    pub fn then(&self, o: &ModeExpr) -> Result<ModeExpr> {
        let mut out = ModeExpr::zero();
        for x in &self.terms {
            for y in &o.terms {
                if x.summed && y.summed {
                    return Err(Error::Invalid("product of two summed terms".into()));
                }
                if x.summed && !y.factors.is_empty() {
                    return Err(Error::Invalid("summed term must stay rightmost".into()));
                }
                let mut factors = x.factors.clone();
                factors.extend(y.factors.iter().cloned());
                out.terms.push(Term { coeff: x.coeff.mul(&y.coeff), summed: x.summed || y.summed, factors });
            }
        }
        Ok(out)
    }

    /// The expression applied to a state, exactly. Summed terms stop at the
    /// first s for which the rightmost mode kills the target on weight grounds.
    pub fn apply(&self, vx: &Vertex, v: &State) -> State {
        let mut acc = Acc::default();
        if v.is_zero() {
            return State::zero();
        }
        for t in &self.terms {
            if !t.summed {
                acc.add(&apply_factors(vx, &t.factors, 0, v), &t.coeff);
                continue;
            }
            let last = t.factors.last().expect("summed term has factors");
            let top = last.state.weight() + v.weight();
            let mut s = 0;
            while last.a + s < top {
                acc.add(&apply_factors(vx, &t.factors, s, v), &t.coeff);
                s += 1;
            }
        }
        acc.finish()
    }
}

fn apply_factors(vx: &Vertex, factors: &[Factor], s: i64, v: &State) -> State {
    let mut cur = v.clone();
    for f in factors.iter().rev() {
        cur = vx.nth_product(&f.state, f.a + f.b * s, &cur);
        if cur.is_zero() {
            break;
        }
    }
    cur
}
