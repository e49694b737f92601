//! Breadth-first search over the defining relations, used as an independent
//! check on [`Word::equals`]. Exponential; meant for short words only.

use std::collections::VecDeque;

use rustc_hash::FxHashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{commutes, Word};

/// Outcome of a bounded search. Running out of budget is reported as
/// `Inconclusive`, never as `Unequal`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Equal,
    Unequal,
    Inconclusive,
}

impl Verdict {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Verdict::Equal => Some(true),
            Verdict::Unequal => Some(false),
            Verdict::Inconclusive => None,
        }
    }
}

/// Default cap on the number of visited words.
pub const DEFAULT_STATE_BUDGET: usize = 2_000_000;

/// Searches from `a` towards `b` using the moves "insert or delete `t_i t_i`"
/// and "swap adjacent commuting letters", never exceeding `max_length`
/// letters. `Unequal` means the whole bounded component of `a` was explored.
pub fn brute_force_equals(a: &Word, b: &Word, max_length: usize) -> Result<Verdict> {
    brute_force_equals_with_budget(a, b, max_length, DEFAULT_STATE_BUDGET)
}

pub fn brute_force_equals_with_budget(
    a: &Word,
    b: &Word,
    max_length: usize,
    state_budget: usize,
) -> Result<Verdict> {
    if a.n_strands() != b.n_strands() {
        return Err(Error::StrandMismatch {
            left: a.n_strands(),
            right: b.n_strands(),
        });
    }
    let n = a.n_strands();
    if n > 16 || max_length > 31 {
        return Err(Error::OutOfRange {
            what: "search size",
            detail: format!("oracle supports at most 16 strands and length 31, got {n} and {max_length}"),
        });
    }
    if a.len() > max_length || b.len() > max_length {
        return Ok(Verdict::Inconclusive);
    }
    let start = pack_usize(a.letters());
    let target = pack_usize(b.letters());
    if start == target {
        return Ok(Verdict::Equal);
    }

    let mut seen: FxHashSet<u128> = FxHashSet::default();
    seen.insert(start);
    let mut queue = VecDeque::from([start]);
    let gens: Vec<u128> = (1..n as u128).collect();

    while let Some(key) = queue.pop_front() {
        let len = digit_len(key);
        let mut visit = |cand: u128| -> Option<Verdict> {
            if cand == target {
                return Some(Verdict::Equal);
            }
            if seen.insert(cand) {
                if seen.len() > state_budget {
                    return Some(Verdict::Inconclusive);
                }
                queue.push_back(cand);
            }
            None
        };
        for k in 0..len.saturating_sub(1) {
            let x = digit(key, k);
            let y = digit(key, k + 1);
            let cand = if x == y {
                low(key, k) | ((key >> (4 * (k + 2))) << (4 * k))
            } else if commutes(x as usize, y as usize) {
                let cleared = key & !(0xffu128 << (4 * k));
                cleared | (x << (4 * (k + 1))) | (y << (4 * k))
            } else {
                continue;
            };
            if let Some(v) = visit(cand) {
                return Ok(v);
            }
        }
        if len + 2 <= max_length {
            for pos in 0..=len {
                let head = low(key, pos);
                let tail = (key >> (4 * pos)) << (4 * (pos + 2));
                for &g in &gens {
                    if let Some(v) = visit(head | (g * 0x11) << (4 * pos) | tail) {
                        return Ok(v);
                    }
                }
            }
        }
    }
    Ok(Verdict::Unequal)
}

// Letters are nonzero and below 16, so base-16 digits (first letter in the
// lowest digit) identify the word including its length.
fn pack_usize(letters: &[usize]) -> u128 {
    letters
        .iter()
        .rev()
        .fold(0u128, |acc, &l| (acc << 4) | l as u128)
}

#[inline]
fn digit(key: u128, k: usize) -> u128 {
    (key >> (4 * k)) & 0xf
}

#[inline]
fn low(key: u128, k: usize) -> u128 {
    if k == 0 {
        0
    } else {
        key & (u128::MAX >> (128 - 4 * k))
    }
}

#[inline]
fn digit_len(key: u128) -> usize {
    (128 - key.leading_zeros() as usize).div_ceil(4)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[usize]) -> Word {
        Word::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(
            brute_force_equals(&w(3, &[1, 1]), &w(3, &[]), 4).unwrap(),
            Verdict::Equal
        );
        assert_eq!(
            brute_force_equals(&w(3, &[1, 2, 1]), &w(3, &[2, 1, 2]), 9).unwrap(),
            Verdict::Unequal
        );
        assert_eq!(
            brute_force_equals(&w(4, &[2, 1, 3, 2]), &w(4, &[2, 3, 1, 2]), 6).unwrap(),
            Verdict::Equal
        );
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let v = brute_force_equals_with_budget(&w(4, &[1, 2, 1]), &w(4, &[2, 1, 2]), 10, 50)
            .unwrap();
        assert_eq!(v, Verdict::Inconclusive);
        let v = brute_force_equals(&w(4, &[1, 2, 1, 2]), &w(4, &[]), 3).unwrap();
        assert_eq!(v, Verdict::Inconclusive);
    }

    #[test]
    fn no_shorter_word_for_the_pt3_generator() {
        // every word of length < 6 that the search reaches from (t2 t1)^3 has length >= 6
        let g = w(3, &[2, 1, 2, 1, 2, 1]);
        for len in 0..6usize {
            for code in 0..(1usize << len) {
                let letters: Vec<usize> = (0..len).map(|k| 1 + ((code >> k) & 1)).collect();
                let cand = w(3, &letters);
                assert_ne!(
                    brute_force_equals(&cand, &g, 12).unwrap(),
                    Verdict::Equal,
                    "{cand}"
                );
            }
        }
    }
}
