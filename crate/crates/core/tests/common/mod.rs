#![allow(dead_code)]

use rand::Rng;
use traid::pure::pt4_gamma;
use traid::Word;

pub fn random_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len).map(|_| rng.gen_range(1..n)).collect();
    Word::new(n, letters).unwrap()
}

/// A word equal to `w` in the group, built from relation moves only.
pub fn perturb<R: Rng>(rng: &mut R, w: &Word, moves: usize) -> Word {
    let n = w.n_strands();
    let mut letters = w.letters().to_vec();
    for _ in 0..moves {
        match rng.gen_range(0..3) {
            0 => {
                let at = rng.gen_range(0..=letters.len());
                let i = rng.gen_range(1..n);
                letters.splice(at..at, [i, i]);
            }
            1 => {
                if let Some(k) = (0..letters.len().saturating_sub(1)).find(|&k| letters[k] == letters[k + 1]) {
                    letters.drain(k..k + 2);
                }
            }
            _ => {
                if letters.len() >= 2 {
                    let k = rng.gen_range(0..letters.len() - 1);
                    if letters[k].abs_diff(letters[k + 1]) > 1 {
                        letters.swap(k, k + 1);
                    }
                }
            }
        }
    }
    Word::new(n, letters).unwrap()
}

/// Pure four-strand word: random conjugates of the γ loops and their inverses.
pub fn random_pure4<R: Rng>(rng: &mut R, factors: usize, conj_len: usize) -> Word {
    let mut w = Word::identity(4).unwrap();
    for _ in 0..rng.gen_range(1..=factors) {
        let g = pt4_gamma(rng.gen_range(1..=8)).unwrap();
        let g = if rng.gen_bool(0.5) { g } else { g.inverse() };
        let c = random_word(rng, 4, conj_len);
        let term = c.concat(&g).unwrap().concat(&c.inverse()).unwrap();
        w = w.concat(&term).unwrap();
    }
    w
}

/// `w` followed by the canonical word undoing its permutation.
pub fn purify(w: &Word) -> Word {
    let fix = w.perm_image().inverse().canonical_word();
    let fix = Word::new(w.n_strands(), fix.letters().to_vec()).unwrap();
    w.concat(&fix).unwrap()
}
