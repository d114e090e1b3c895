//! Instances, parity and grading conventions, and the scalar ring.

pub mod rational;
pub mod scalar;

pub use rational::Q;
pub use scalar::Scalar;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A rectangular instance: 𝔤𝔩(m|n) blocks repeated l times, block size N = m + n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Instance {
    pub m: usize,
    pub n: usize,
    pub l: usize,
}

impl Instance {
    pub fn new(m: usize, n: usize, l: usize) -> Result<Instance> {
        if m + n == 0 {
            return Err(Error::Config("block size m+n must be at least 1".into()));
        }
        if l == 0 {
            return Err(Error::Config("l must be at least 1".into()));
        }
        Ok(Instance { m, n, l })
    }

    /// Block size N = m + n.
    pub fn big_n(&self) -> usize {
        self.m + self.n
    }

    /// Total matrix size N·l.
    pub fn dim(&self) -> usize {
        self.big_n() * self.l
    }

    /// Parity of a small index 1..=N.
    pub fn p(&self, i: usize) -> u8 {
        debug_assert!(i >= 1 && i <= self.big_n(), "small index {i} out of range");
        u8::from(i > self.m)
    }

    /// Parity of a small index read cyclically, so that p(0) = p(N).
    pub fn p_cyc(&self, i: usize) -> u8 {
        let nn = self.big_n();
        self.p((i + nn - 1) % nn + 1)
    }

    /// Parity of the small matrix unit e_{i,j}.
    pub fn p_e(&self, i: usize, j: usize) -> u8 {
        self.p(i) ^ self.p(j)
    }

    /// (−1)^{p(i)}.
    pub fn sign(&self, i: usize) -> i64 {
        sgn(self.p(i))
    }

    /// Flat index A = s·N + i for copy s (0-based) and small index i.
    pub fn flat(&self, s: usize, i: usize) -> usize {
        s * self.big_n() + i
    }

    /// Inverse of `flat`: (copy s, small index i).
    pub fn split(&self, a: usize) -> Result<(usize, usize)> {
        if a == 0 || a > self.dim() {
            return Err(Error::Index(format!("flat index {a} outside 1..={}", self.dim())));
        }
        Ok(((a - 1) / self.big_n(), (a - 1) % self.big_n() + 1))
    }

    /// Parity of a flat index.
    pub fn p_flat(&self, a: usize) -> u8 {
        self.p((a - 1) % self.big_n() + 1)
    }

    /// Grade of e_{A,B}: column copy minus row copy.
    pub fn grade(&self, a: usize, b: usize) -> Result<i64> {
        let (s1, _) = self.split(a)?;
        let (s2, _) = self.split(b)?;
        Ok(s2 as i64 - s1 as i64)
    }

    /// True when (m, n) satisfy the Yangian-side hypotheses.
    pub fn yangian_ok(&self) -> std::result::Result<(), String> {
        if self.n == 0 {
            if self.m >= 3 {
                Ok(())
            } else {
                Err(format!("n = 0 requires m >= 3, got m = {}", self.m))
            }
        } else if self.m == self.n {
            Err(format!("m = n = {} is excluded (m != n required)", self.m))
        } else if self.m < 2 || self.n < 2 {
            Err(format!("super case requires m, n >= 2, got (m, n) = ({}, {})", self.m, self.n))
        } else {
            Ok(())
        }
    }
}

impl std::fmt::Display for Instance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.m, self.n, self.l)
    }
}

/// (−1)^p for a parity bit.
pub fn sgn(p: u8) -> i64 {
    if p & 1 == 0 {
        1
    } else {
        -1
    }
}

/// Binomial coefficient C(a, r) for integer a (possibly negative) and r ≥ 0.
pub fn binom(a: i64, r: u32) -> Q {
    let mut num = Q::one();
    for k in 0..r as i64 {
        num = num.mul(&Q::int(a - k));
    }
    let mut den = Q::one();
    for k in 1..=r as i64 {
        den = den.mul(&Q::int(k));
    }
    num.div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grade_examples() {
        let i = Instance::new(2, 1, 2).unwrap();
        assert_eq!(i.grade(4, 1).unwrap(), -1);
        assert_eq!(i.grade(1, 1).unwrap(), 0);
        let j = Instance::new(2, 1, 3).unwrap();
        assert_eq!(j.grade(2 * 3 + 1, 1).unwrap(), -2);
        assert!(i.grade(7, 1).is_err());
        assert!(i.grade(0, 1).is_err());
    }

    #[test]
    fn parity_and_flat() {
        let i = Instance::new(3, 2, 2).unwrap();
        assert_eq!((1..=5).map(|k| i.p(k)).collect::<Vec<_>>(), vec![0, 0, 0, 1, 1]);
        assert_eq!(i.p_cyc(0), i.p(5));
        assert_eq!(i.split(i.flat(1, 4)).unwrap(), (1, 4));
        let z = Instance::new(3, 0, 2).unwrap();
        assert!((1..=3).all(|k| z.p(k) == 0));
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), Q::int(10));
        assert_eq!(binom(-1, 3), Q::int(-1));
        assert_eq!(binom(-2, 2), Q::int(3));
        assert_eq!(binom(2, 5), Q::zero());
    }

    #[test]
    fn hypotheses() {
        assert!(Instance::new(2, 2, 2).unwrap().yangian_ok().is_err());
        assert!(Instance::new(3, 2, 2).unwrap().yangian_ok().is_ok());
        assert!(Instance::new(3, 0, 2).unwrap().yangian_ok().is_ok());
        assert!(Instance::new(2, 1, 2).unwrap().yangian_ok().is_err());
    }
}
