//! Words over the traid generators `t_1, ..., t_{N-1}`.
//!
//! The traid group `T_N` is the right-angled Coxeter group with involutive
//! generators `t_i` where `t_i` and `t_j` commute exactly when `|i - j| > 1`;
//! neighbouring generators satisfy no relation at all. Every element has a
//! unique shortlex-least reduced word, computed by [`Word::normal_form`].
//!
//! Words are read left to right as strand diagrams: the leftmost letter is the
//! first crossing. `a.multiply(&b)` therefore performs `a` and then `b`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Whether generators `t_i` and `t_j` commute (distinct and not adjacent).
#[inline]
pub fn commutes(i: usize, j: usize) -> bool {
    i.abs_diff(j) > 1
}

/// A sequence of generator indices on a fixed number of strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    n_strands: usize,
    letters: Vec<usize>,
}

impl Word {
    /// Validates `letters` against `n_strands`; letters are stored verbatim.
    pub fn new(n_strands: usize, letters: Vec<usize>) -> Result<Self> {
        if n_strands < 2 {
            return Err(Error::InvalidStrandCount {
                got: n_strands,
                min: 2,
            });
        }
        if let Some((position, &letter)) = letters
            .iter()
            .enumerate()
            .find(|&(_, &l)| l == 0 || l >= n_strands)
        {
            return Err(Error::LetterOutOfRange {
                position,
                letter,
                n_strands,
            });
        }
        Ok(Self { n_strands, letters })
    }

    /// Builds a word from signed tokens, rejecting negative or zero indices.
    pub fn from_tokens(tokens: &[i64], n_strands: usize) -> Result<Self> {
        let mut letters = Vec::with_capacity(tokens.len());
        for (position, &tok) in tokens.iter().enumerate() {
            if tok < 1 {
                return Err(Error::LetterOutOfRange {
                    position,
                    letter: tok.max(0) as usize,
                    n_strands: n_strands.max(2),
                });
            }
            letters.push(tok as usize);
        }
        Self::new(n_strands, letters)
    }

    pub fn identity(n_strands: usize) -> Result<Self> {
        Self::new(n_strands, Vec::new())
    }

    /// Single generator `t_i`.
    pub fn generator(n_strands: usize, i: usize) -> Result<Self> {
        Self::new(n_strands, vec![i])
    }

    // Internal constructor for letters already known to be valid.
    pub(crate) fn from_valid(n_strands: usize, letters: Vec<usize>) -> Self {
        debug_assert!(letters.iter().all(|&l| l >= 1 && l < n_strands));
        Self { n_strands, letters }
    }

    pub fn n_strands(&self) -> usize {
        self.n_strands
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Shortlex-least reduced word representing the same element.
    ///
    /// First cancels every pair `t_i ... t_i` whose intervening letters all
    /// commute with `t_i`, which leaves a geodesic. Then the lexicographically
    /// least arrangement under commutations is chosen greedily: at each step
    /// emit the smallest letter that can be commuted to the front.
    pub fn normal_form(&self) -> Word {
        let reduced = free_reduce(&self.letters);
        Word::from_valid(self.n_strands, lex_least(reduced))
    }

    /// Whether the stored letters already form the normal form.
    pub fn is_normal(&self) -> bool {
        self.normal_form().letters == self.letters
    }

    /// `self` followed by `other`, normalized.
    pub fn multiply(&self, other: &Word) -> Result<Word> {
        self.check_same(other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Word::from_valid(self.n_strands, letters).normal_form())
    }

    /// Concatenation without normalization.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        self.check_same(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word::from_valid(self.n_strands, letters))
    }

    /// The `k`-fold product; negative `k` uses the inverse.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Word::from_valid(self.n_strands, letters).normal_form()
    }

    /// Every generator is an involution, so the inverse is the reversal.
    pub fn inverse(&self) -> Word {
        let letters = self.letters.iter().rev().copied().collect();
        Word::from_valid(self.n_strands, letters).normal_form()
    }

    /// Word problem: equal normal forms.
    pub fn equals(&self, other: &Word) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.normal_form().letters == other.normal_form().letters)
    }

    pub fn geodesic_length(&self) -> usize {
        free_reduce(&self.letters).len()
    }

    /// Image in the symmetric group under `t_i -> (i, i+1)`.
    pub fn perm_image(&self) -> Permutation {
        let mut p = Permutation::identity(self.n_strands);
        for &l in &self.letters {
            p.swap_positions(l);
        }
        p
    }

    /// Member of the pure traid group: trivial permutation image.
    pub fn is_pure(&self) -> bool {
        self.perm_image().is_identity()
    }

    /// Space-separated `t1 t2 ...` form; `e` for the identity.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Parses `"t1 t2 t1"`, separated indices `"1 2 1"` / `"1,2,1"`, or the
    /// compact `"121"` (at most ten strands). `"e"` and the empty string
    /// denote the identity.
    pub fn parse(s: &str, n_strands: usize) -> Result<Word> {
        Word::new(n_strands, parse_letters(s)?)
    }

    fn check_same(&self, other: &Word) -> Result<()> {
        if self.n_strands != other.n_strands {
            return Err(Error::StrandMismatch {
                left: self.n_strands,
                right: other.n_strands,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "t{l}")?;
        }
        Ok(())
    }
}

/// Parsed letters without a strand count, for `FromStr`-style use.
pub struct Letters(pub Vec<usize>);

impl FromStr for Letters {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_letters(s).map(Letters)
    }
}

fn parse_letters(s: &str) -> Result<Vec<usize>> {
    let trimmed = s.trim();
    if trimmed.is_empty() || trimmed == "e" {
        return Ok(Vec::new());
    }
    let err = |reason: &str| Error::Parse {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    if trimmed.contains('t') {
        trimmed
            .split_whitespace()
            .map(|tok| {
                tok.strip_prefix('t')
                    .ok_or_else(|| err("expected tokens of the form t<i>"))?
                    .parse::<usize>()
                    .map_err(|_| err("generator index is not a number"))
            })
            .collect()
    } else if trimmed.contains(|c: char| c.is_whitespace() || c == ',') {
        trimmed
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|tok| !tok.is_empty())
            .map(|tok| tok.parse::<usize>().map_err(|_| err("generator index is not a number")))
            .collect()
    } else if trimmed.chars().all(|c| c.is_ascii_digit()) {
        Ok(trimmed
            .chars()
            .map(|c| c.to_digit(10).unwrap() as usize)
            .collect())
    } else {
        Err(err("expected \"t1 t2 ...\", \"1 2 ...\" or compact digits \"12...\""))
    }
}

/// Cancels letters pairwise until the word is geodesic.
///
/// Appending `s` to a reduced word either keeps it reduced or cancels the last
/// occurrence of `s`, provided every letter after that occurrence commutes
/// with `s`.
pub(crate) fn free_reduce(letters: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(letters.len());
    for &s in letters {
        let mut cancel_at = None;
        for j in (0..out.len()).rev() {
            if out[j] == s {
                cancel_at = Some(j);
                break;
            }
            if !commutes(out[j], s) {
                break;
            }
        }
        match cancel_at {
            Some(j) => {
                out.remove(j);
            }
            None => out.push(s),
        }
    }
    out
}

/// Lexicographically least word in the commutation class of `letters`.
pub(crate) fn lex_least(mut letters: Vec<usize>) -> Vec<usize> {
    let mut out = Vec::with_capacity(letters.len());
    while !letters.is_empty() {
        let mut best: Option<usize> = None;
        for p in 0..letters.len() {
            let l = letters[p];
            if best.is_some_and(|b| letters[b] <= l) {
                continue;
            }
            if letters[..p].iter().all(|&q| commutes(q, l)) {
                best = Some(p);
            }
        }
        // the first letter is always available
        let p = best.expect("non-empty word has an available letter");
        out.push(letters.remove(p));
    }
    out
}

/// Co-dimension `d (k - 1)` of a `k`-body coincidence in `d` dimensions.
pub fn codimension(d: usize, k: usize) -> Result<usize> {
    if d < 1 || k < 2 {
        return Err(Error::OutOfRange {
            what: "codimension arguments",
            detail: format!("need d >= 1 and k >= 2, got d = {d}, k = {k}"),
        });
    }
    Ok(d * (k - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[usize]) -> Word {
        Word::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(w(3, &[1, 2, 1]).letters(), &[1, 2, 1]);
        assert!(w(4, &[]).is_empty());
        match Word::new(3, vec![1, 3]) {
            Err(Error::LetterOutOfRange { position, letter, .. }) => {
                assert_eq!((position, letter), (1, 3))
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(Word::new(1, vec![]).is_err());
        assert!(Word::from_tokens(&[1, -2], 4).is_err());
        assert!(Word::from_tokens(&[0], 4).is_err());
    }

    #[test]
    fn normal_forms() {
        assert!(w(3, &[1, 1]).normal_form().is_empty());
        assert_eq!(w(4, &[1, 3, 1]).normal_form().letters(), &[3]);
        assert_eq!(w(4, &[3, 1]).normal_form().letters(), &[1, 3]);
        assert_eq!(
            w(3, &[1, 2, 1, 2, 1, 2]).normal_form().letters(),
            &[1, 2, 1, 2, 1, 2]
        );
        assert_eq!(w(5, &[4, 2, 3, 1]).normal_form().letters(), &[2, 1, 4, 3]);
        assert_eq!(w(5, &[3, 1, 2, 4, 1]).normal_form().letters(), &[1, 3, 2, 1, 4]);
        assert_eq!(w(5, &[1, 3, 4, 1]).normal_form().letters(), &[3, 4]);
    }

    #[test]
    fn group_operations() {
        assert!(w(3, &[1]).multiply(&w(3, &[1])).unwrap().is_empty());
        assert_eq!(
            w(3, &[]).multiply(&w(3, &[2, 2, 1])).unwrap().letters(),
            &[1]
        );
        assert!(w(3, &[1, 2]).multiply(&w(3, &[2, 1])).unwrap().is_empty());
        assert_eq!(w(3, &[1, 2, 1]).inverse().letters(), &[1, 2, 1]);
        assert_eq!(w(3, &[2, 1]).inverse().letters(), &[1, 2]);
        assert!(w(3, &[]).inverse().is_empty());
        assert!(matches!(
            w(3, &[1]).multiply(&w(4, &[1])),
            Err(Error::StrandMismatch { .. })
        ));
        assert_eq!(w(3, &[2, 1]).pow(3).letters(), &[2, 1, 2, 1, 2, 1]);
        assert_eq!(w(3, &[2, 1]).pow(-1).letters(), &[1, 2]);
    }

    #[test]
    fn equality() {
        assert!(w(4, &[1, 3]).equals(&w(4, &[3, 1])).unwrap());
        assert!(!w(3, &[1, 2, 1]).equals(&w(3, &[2, 1, 2])).unwrap());
        assert!(w(3, &[1, 2, 1, 1, 2, 1]).equals(&w(3, &[])).unwrap());
        for n in 3..8 {
            assert!(!w(n, &[1, 2, 1]).equals(&w(n, &[2, 1, 2])).unwrap());
        }
        for i in 1..6 {
            for j in 1..6 {
                let eq = w(6, &[i, j]).equals(&w(6, &[j, i])).unwrap();
                assert_eq!(eq, i == j || i.abs_diff(j) > 1, "{i} {j}");
            }
        }
    }

    #[test]
    fn permutations() {
        assert_eq!(w(3, &[1]).perm_image().images(), &[2, 1, 3]);
        assert_eq!(w(3, &[1, 2, 1]).perm_image().images(), &[3, 2, 1]);
        assert!(w(3, &[1, 2, 1, 2, 1, 2]).perm_image().is_identity());
        assert!(w(3, &[2, 1, 2, 1, 2, 1]).is_pure());
        assert!(!w(3, &[1]).is_pure());
        assert!(w(3, &[]).is_pure());
    }

    #[test]
    fn lengths_and_codimension() {
        assert_eq!(w(3, &[1, 1, 2]).geodesic_length(), 1);
        assert_eq!(w(3, &[]).geodesic_length(), 0);
        assert_eq!(w(3, &[2, 1, 2, 1, 2, 1]).geodesic_length(), 6);
        assert_eq!(codimension(1, 3).unwrap(), 2);
        assert_eq!(codimension(2, 2).unwrap(), 2);
        assert_eq!(codimension(3, 4).unwrap(), 9);
        assert!(codimension(0, 3).is_err());
        assert!(codimension(1, 1).is_err());
    }

    #[test]
    fn text_formats() {
        assert_eq!(Word::parse("t1 t2 t1", 3).unwrap().letters(), &[1, 2, 1]);
        assert_eq!(Word::parse("121", 3).unwrap().letters(), &[1, 2, 1]);
        assert_eq!(Word::parse("10 2, 1", 12).unwrap().letters(), &[10, 2, 1]);
        assert!(Word::parse("e", 3).unwrap().is_empty());
        assert!(Word::parse("", 3).unwrap().is_empty());
        assert!(Word::parse("t1 x2", 3).is_err());
        assert!(Word::parse("1a", 3).is_err());
        assert!(Word::parse("t4", 3).is_err());
        assert_eq!(w(4, &[1, 3]).to_string(), "t1 t3");
        assert_eq!(w(4, &[]).to_string(), "e");
        let x = w(6, &[5, 1, 3, 2]);
        assert_eq!(Word::parse(&x.to_text(), 6).unwrap(), x);
    }
}
