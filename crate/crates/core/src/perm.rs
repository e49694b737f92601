use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::Word;

/// A permutation of `{1, ..., N}` stored as an arrangement: `images[p - 1]` is
/// the label of the strand sitting at position `p`, starting from strand `k`
/// at position `k`.
///
/// With this reading the image of a word `a b` is `a.compose(&b)`, i.e.
/// `(a ∘ b)[p] = a[b[p]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::OutOfRange {
                    what: "permutation",
                    detail: format!("{images:?} is not a bijection of 1..={n}"),
                });
            }
            seen[v] = true;
        }
        Ok(Self { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// Applies the adjacent transposition `s_i`, exchanging positions `i` and `i + 1`.
    pub fn swap_positions(&mut self, i: usize) {
        self.images.swap(i - 1, i);
    }

    /// `(self ∘ other)[p] = self[other[p]]`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "permutation sizes differ");
        Permutation {
            images: other.images.iter().map(|&p| self.images[p - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Permutation { images: inv }
    }

    /// Canonical reduced word whose image is `self`.
    ///
    /// Bubble-sorts the arrangement back to the identity, always swapping the
    /// smallest inverted position first, and reverses the recorded swaps.
    pub fn canonical_word(&self) -> Word {
        let mut arr = self.images.clone();
        let mut swaps = Vec::new();
        'outer: loop {
            for i in 1..arr.len() {
                if arr[i - 1] > arr[i] {
                    arr.swap(i - 1, i);
                    swaps.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        swaps.reverse();
        Word::from_valid(self.len().max(2), swaps)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}
