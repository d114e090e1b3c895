//! Cartan data of the affine (super) Yangian of type A.

use crate::error::{Error, Result};
use crate::foundation::{sgn, Instance};

/// The matrices a_{ij} and m_{ij}, indexed by nodes 0..N−1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    pub size: usize,
    pub a: Vec<Vec<i64>>,
    pub mmat: Vec<Vec<i64>>,
}

impl CartanData {
    /// Super tables for n > 0, non-super tables for n = 0.
    pub fn new(inst: &Instance) -> CartanData {
        let nn = inst.big_n();
        let mut a = vec![vec![0; nn]; nn];
        let mut mm = vec![vec![0; nn]; nn];
        let s = |i: usize| sgn(inst.p_cyc(i));
        for i in 0..nn {
            for j in 0..nn {
                let boundary = (i == 0 && j == nn - 1) || (i == nn - 1 && j == 0);
                if inst.n == 0 {
                    a[i][j] = if i == j {
                        2
                    } else if i + 1 == j || j + 1 == i || boundary {
                        -1
                    } else {
                        0
                    };
                    mm[i][j] = if i + 1 == j {
                        1
                    } else if j + 1 == i {
                        -1
                    } else if i == 0 && j == nn - 1 {
                        1
                    } else if i == nn - 1 && j == 0 {
                        -1
                    } else {
                        0
                    };
                } else {
                    a[i][j] = if i == j {
                        s(i) + s(i + 1)
                    } else if j == i + 1 {
                        -s(i + 1)
                    } else if j + 1 == i {
                        -s(i)
                    } else if boundary {
                        1
                    } else {
                        0
                    };
                    mm[i][j] = if i == j + 1 {
                        -s(i + 1)
                    } else if i + 1 == j {
                        s(i)
                    } else if i == 0 && j == nn - 1 {
                        -1
                    } else if i == nn - 1 && j == 0 {
                        1
                    } else {
                        0
                    };
                }
            }
        }
        CartanData { size: nn, a, mmat: mm }
    }

    pub fn get(&self, i: usize, j: usize) -> Result<(i64, i64)> {
        if i >= self.size || j >= self.size {
            return Err(Error::Index(format!("node pair ({i},{j}) outside 0..{}", self.size)));
        }
        Ok((self.a[i][j], self.mmat[i][j]))
    }
}
