mod common;

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use traid::pure::{
    betti_lower_bound, check_pt4_relation, holonomies, pt4_gamma, puncture_directions, winding_vector, PUNCTURES,
};
use traid::{Error, Word};

#[test]
fn gamma_loops_give_the_standard_basis() {
    let mut sum = [0i64; 7];
    for k in 1..=7 {
        let wv = winding_vector(&pt4_gamma(k).unwrap()).unwrap();
        let mut e = [0i64; 7];
        e[k - 1] = 1;
        assert_eq!(wv.entries, e, "γ{k}");
        for (s, x) in sum.iter_mut().zip(wv.entries) {
            *s += x;
        }
    }
    let last = winding_vector(&pt4_gamma(8).unwrap()).unwrap();
    assert_eq!(last.entries, sum.map(|x| -x));
    assert_eq!(last.infinite_puncture_winding(), 7);
}

#[test]
fn additivity_on_random_pure_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..200 {
        let a = common::random_pure4(&mut rng, 3, 6);
        let b = common::purify(&common::random_word(&mut rng, 4, 16));
        let wa = winding_vector(&a).unwrap();
        let wb = winding_vector(&b).unwrap();
        let wab = winding_vector(&a.concat(&b).unwrap()).unwrap();
        assert_eq!(wab, wa.add(&wb));
    }
}

#[test]
fn windings_are_invariants_of_the_group_element() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..100 {
        let a = common::random_pure4(&mut rng, 3, 5);
        let b = common::perturb(&mut rng, &a, 20);
        assert_eq!(winding_vector(&a).unwrap(), winding_vector(&b).unwrap());
        assert_eq!(winding_vector(&a.normal_form()).unwrap(), winding_vector(&a).unwrap());
        let inv = winding_vector(&a.inverse()).unwrap();
        assert_eq!(inv.entries, winding_vector(&a).unwrap().entries.map(|x| -x));
    }
}

#[test]
fn holonomies_are_near_integers() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let start = Instant::now();
    for _ in 0..100 {
        let w = common::random_pure4(&mut rng, 4, 8);
        for h in holonomies(&w).unwrap() {
            assert!((h - h.round()).abs() < 1e-6, "{h}");
        }
    }
    assert!(start.elapsed().as_secs() < 30);
}

#[test]
fn relation_and_ranks() {
    let check = check_pt4_relation();
    assert!(check.descending && check.all_pure);
    assert!(!check.ascending);
    assert_eq!(betti_lower_bound(3).unwrap(), 1);
    assert_eq!(betti_lower_bound(4).unwrap(), 7);
}

#[test]
fn punctures_are_distinct_unit_vectors_without_center_of_mass() {
    let dirs = puncture_directions();
    for (k, d) in dirs.iter().enumerate() {
        assert!(d.iter().sum::<f64>().abs() < 1e-12);
        assert!((d.iter().map(|x| x * x).sum::<f64>() - 1.0).abs() < 1e-12);
        for e in &dirs[k + 1..] {
            let dot: f64 = d.iter().zip(e).map(|(x, y)| x * y).sum();
            assert!(dot < 1.0 - 1e-6);
        }
    }
    assert_eq!(PUNCTURES.len(), 8);
}

#[test]
fn non_pure_words_are_rejected() {
    let w = Word::parse("t1", 4).unwrap();
    assert!(matches!(winding_vector(&w), Err(Error::NotPure)));
    let w = Word::parse("e", 3).unwrap();
    assert!(winding_vector(&w).is_err());
}
