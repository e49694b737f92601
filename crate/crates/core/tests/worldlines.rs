mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use traid::worldlines::{render_strand_diagram, DiagramOptions};
use traid::{trajectory_to_word, word_to_choreography, Error, Trajectory, Word};

#[test]
fn choreography_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let n = rng.gen_range(2..=6);
        let w = common::random_word(&mut rng, n, 30);
        let tr = word_to_choreography(&w);
        tr.validate().unwrap();
        let back = trajectory_to_word(&tr).unwrap();
        assert_eq!(back.letters(), w.letters());
        assert_eq!(tr.returns_home(), w.is_pure(), "{w}");
    }
}

#[test]
fn jittered_choreographies_read_back_the_same_element() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..300 {
        let n = rng.gen_range(2..=6);
        let w = common::random_word(&mut rng, n, 20);
        let mut tr = word_to_choreography(&w);
        let last = tr.positions.len() - 1;
        for (k, row) in tr.positions.iter_mut().enumerate() {
            if k == 0 || k == last {
                continue;
            }
            for x in row.iter_mut() {
                *x += rng.gen_range(-0.1..0.1);
            }
        }
        for t in tr.times.iter_mut().skip(1) {
            *t *= 1.7;
        }
        let back = trajectory_to_word(&tr).unwrap();
        assert!(back.equals(&w).unwrap(), "{w} read as {back}");
    }
}

#[test]
fn simultaneous_disjoint_crossings() {
    let tr = Trajectory::new(4, vec![0.0, 1.0], vec![vec![1.0, 2.0, 3.0, 4.0], vec![2.0, 1.0, 4.0, 3.0]]).unwrap();
    assert_eq!(trajectory_to_word(&tr).unwrap().letters(), &[1, 3]);
}

#[test]
fn engineered_triple_coincidences_are_rejected() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        let n = rng.gen_range(3..=6);
        let w = common::random_word(&mut rng, n, 12);
        let mut tr = word_to_choreography(&w);
        // squeeze three neighbours onto one point at an inserted breakpoint
        let k = rng.gen_range(0..tr.times.len() - 1);
        let t = 0.5 * (tr.times[k] + tr.times[k + 1]);
        let mut row = tr.at(t);
        let mut by_pos: Vec<usize> = (0..n).collect();
        by_pos.sort_by(|&a, &b| row[a].total_cmp(&row[b]));
        let r = rng.gen_range(0..n - 2);
        let meet = row[by_pos[r + 1]];
        for &p in &by_pos[r..r + 3] {
            row[p] = meet;
        }
        tr.times.insert(k + 1, t);
        tr.positions.insert(k + 1, row);
        assert!(matches!(tr.validate(), Err(Error::TripleCoincidence { .. })));
        assert!(matches!(trajectory_to_word(&tr), Err(Error::TripleCoincidence { .. })));
    }
}

#[test]
fn tangency_is_rejected() {
    let tr = Trajectory {
        n: 2,
        times: vec![0.0, 1.0, 2.0],
        positions: vec![vec![1.0, 2.0], vec![1.5, 1.5], vec![1.0, 2.0]],
    };
    assert!(matches!(trajectory_to_word(&tr), Err(Error::Tangency { .. })));
}

#[test]
fn malformed_trajectories() {
    assert!(Trajectory::new(2, vec![0.0, 1.0], vec![vec![1.0, 2.0]]).is_err());
    assert!(Trajectory::new(2, vec![1.0, 0.0], vec![vec![1.0, 2.0], vec![1.0, 2.0]]).is_err());
    assert!(Trajectory::new(2, vec![0.0, 1.0], vec![vec![1.0, 2.0], vec![1.0]]).is_err());
    assert!(Trajectory::new(2, vec![0.0, 1.0], vec![vec![1.0, f64::NAN], vec![1.0, 2.0]]).is_err());
}

#[test]
fn json_round_trip() {
    let w = Word::parse("t1 t2 t3 t1", 4).unwrap();
    let tr = word_to_choreography(&w);
    let text = serde_json::to_string(&tr).unwrap();
    let back: Trajectory = serde_json::from_str(&text).unwrap();
    assert_eq!(back, tr);
    assert_eq!(trajectory_to_word(&back).unwrap(), w);
}

#[test]
fn diagrams_are_deterministic() {
    let w = Word::parse("t1 t2 t1", 3).unwrap();
    let opts = DiagramOptions::default();
    let a = render_strand_diagram(&w, &opts);
    assert_eq!(a, render_strand_diagram(&w, &opts));
    assert!(a.starts_with("<svg") && a.trim_end().ends_with("</svg>"));
    assert_eq!(a.matches("<polyline").count(), 3);
}
