//! Seeded randomized consistency checks across the library.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use traid::oracle::brute_force_equals;
use traid::pure::{pt4_gamma, winding_vector};
use traid::{trajectory_to_word, word_to_choreography, Verdict, Word};

use crate::{CliError, Report};

fn random_word(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::new(n, (0..len).map(|_| rng.gen_range(1..n)).collect()).expect("letters in range")
}

fn random_pure4(rng: &mut ChaCha8Rng) -> Word {
    let mut w = Word::identity(4).expect("four strands");
    for _ in 0..rng.gen_range(1..=3) {
        let g = pt4_gamma(rng.gen_range(1..=8)).expect("loop index");
        let c = random_word(rng, 4, 5);
        let term = c.concat(&g).and_then(|x| x.concat(&c.inverse())).expect("same strands");
        w = w.concat(&term).expect("same strands");
    }
    w
}

pub fn run(seed: u64, cases: usize) -> Result<Report, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();

    let mut inconclusive = 0;
    for _ in 0..cases {
        let a = random_word(&mut rng, 4, 6);
        let b = random_word(&mut rng, 4, 6);
        let fast = a.equals(&b)?;
        match brute_force_equals(&a, &b, 10)? {
            Verdict::Inconclusive => inconclusive += 1,
            v if v.as_bool() != Some(fast) => failures.push(format!("word problem: {a} vs {b}")),
            _ => {}
        }
    }

    for _ in 0..cases {
        let n = rng.gen_range(2..=6);
        let w = random_word(&mut rng, n, 30);
        let back = trajectory_to_word(&word_to_choreography(&w))?;
        if !back.equals(&w)? {
            failures.push(format!("round trip: {w} read back as {back}"));
        }
    }

    for _ in 0..cases.min(100) {
        let (a, b) = (random_pure4(&mut rng), random_pure4(&mut rng));
        let sum = winding_vector(&a)?.add(&winding_vector(&b)?);
        if winding_vector(&a.concat(&b)?)? != sum {
            failures.push(format!("winding additivity: {a} · {b}"));
        }
    }

    let json = json!({
        "seed": seed,
        "cases": cases,
        "inconclusive": inconclusive,
        "failures": failures,
    });
    if failures.is_empty() {
        Ok(Report {
            text: format!("selftest seed {seed}: ok ({cases} cases per check, {inconclusive} inconclusive)"),
            json,
        })
    } else {
        Err(CliError::Failed(format!(
            "selftest seed {seed}: {} failures; first: {}",
            failures.len(),
            failures[0]
        )))
    }
}
