//! PBW basis enumeration by weight.

use super::state::{Letter, Word};
use crate::superalgebra::Algebra;

/// All normally ordered words of weight exactly `w`, in canonical order.
pub fn words_of_weight(alg: &Algebra, w: u32) -> Vec<Word> {
    let mut letters: Vec<Letter> = Vec::new();
    for d in 1..=w {
        for g in 0..alg.len() {
            letters.push(Letter::new(g as u16, d));
        }
    }
    letters.sort();
    let mut out = Vec::new();
    let mut cur = Word::new();
    extend(alg, &letters, 0, w as i64, &mut cur, &mut out);
    out
}

fn extend(alg: &Algebra, letters: &[Letter], from: usize, left: i64, cur: &mut Word, out: &mut Vec<Word>) {
    if left == 0 {
        out.push(cur.clone());
        return;
    }
    for k in from..letters.len() {
        let x = letters[k];
        if x.depth() as i64 > left {
            continue;
        }
        // Odd letters appear at most once.
        let next = if alg.parity(x.gen()) == 1 { k + 1 } else { k };
        cur.push(x);
        extend(alg, letters, next, left - x.depth() as i64, cur, out);
        cur.pop();
    }
}

/// All words of weight at most `w`, including the vacuum.
pub fn words_up_to(alg: &Algebra, w: u32) -> Vec<Word> {
    (0..=w).flat_map(|k| words_of_weight(alg, k)).collect()
}
