//! JSON form of states: a list of terms, each a coefficient map and a word.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::state::{Letter, State, Word};
use crate::error::{Error, Result};
use crate::foundation::Scalar;
use crate::superalgebra::{Algebra, Kind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LetterJson {
    pub kind: Kind,
    pub row: usize,
    pub col: usize,
    pub depth: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coefficient: BTreeMap<String, String>,
    pub word: Vec<LetterJson>,
}

pub fn to_json(alg: &Algebra, s: &State) -> Vec<TermJson> {
    s.terms()
        .iter()
        .map(|(w, c)| TermJson {
            coefficient: c.to_string_map(),
            word: w
                .iter()
                .map(|l| {
                    let g = alg.gen(l.gen());
                    LetterJson { kind: g.kind, row: g.row, col: g.col, depth: l.depth() }
                })
                .collect(),
        })
        .collect()
}

/// Rebuild a state; words must already be in canonical order.
pub fn from_json(alg: &Algebra, terms: &[TermJson]) -> Result<State> {
    let mut out = Vec::new();
    for t in terms {
        let c = Scalar::from_string_map(&t.coefficient).map_err(Error::Invalid)?;
        let mut w = Word::new();
        for l in &t.word {
            if l.depth == 0 {
                return Err(Error::Invalid("letter depth must be positive".into()));
            }
            w.push(Letter::new(alg.try_id(l.kind, l.row, l.col)?, l.depth));
        }
        if w.windows(2).any(|p| p[0] > p[1]) {
            return Err(Error::Invalid("word not in canonical order".into()));
        }
        out.push((w, c));
    }
    Ok(State::from_terms(out))
}
