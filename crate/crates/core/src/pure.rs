//! The pure traid groups.
//!
//! `PT_3` is infinite cyclic, generated by `(t2 t1)^3`. `PT_4` is free of rank
//! seven; it is presented here by eight loops `γ_1..γ_8`, each going once
//! around one triple-coincidence puncture of the reduced configuration
//! sphere, subject to the single relation that their product is trivial.
//!
//! Abelian invariants of pure `T_4` words are computed geometrically: the
//! word's choreography is pushed onto the reduced sphere `S^2` (center of
//! mass removed, scale normalized), stereographically projected from the
//! puncture of `γ_8`, and the winding number around each of the remaining
//! seven punctures is measured.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::word::Word;
use crate::worldlines::{trajectory_to_word, word_to_choreography, Trajectory};

const GAMMAS: [&[usize]; 8] = [
    &[2, 1, 2, 1, 2, 1],
    &[2, 1, 3, 2, 3, 2, 3, 2, 1, 2],
    &[2, 3, 2, 1, 2, 1, 2, 1, 3, 2],
    &[3, 2, 3, 2, 3, 2],
    &[3, 2, 1, 2, 3, 2, 3, 2, 3, 1, 2, 3],
    &[3, 1, 2, 1, 2, 1, 2, 3],
    &[1, 2, 3, 2, 3, 2, 3, 1],
    &[1, 2, 3, 1, 2, 1, 2, 1, 2, 3, 2, 1],
];

/// The generator `(t2 t1)^3` of `PT_3`.
pub fn pt3_generator() -> Word {
    Word::from_valid(3, GAMMAS[0].to_vec())
}

/// The integer `n` with `w = ((t2 t1)^3)^n` for a pure three-strand word.
///
/// `T_3` is infinite dihedral, so the reduced word of a pure element
/// alternates `t1, t2` with length `6|n|`; it ends in `t1` for positive `n`.
pub fn pt3_winding(w: &Word) -> Result<i64> {
    if w.n_strands() != 3 {
        return Err(Error::StrandMismatch {
            left: w.n_strands(),
            right: 3,
        });
    }
    if !w.is_pure() {
        return Err(Error::NotPure);
    }
    let nf = w.normal_form();
    let letters = nf.letters();
    debug_assert_eq!(letters.len() % 6, 0);
    let n = (letters.len() / 6) as i64;
    Ok(match letters.last() {
        None => 0,
        Some(1) => n,
        Some(_) => -n,
    })
}

/// The loop `γ_k` (`1 <= k <= 8`) as a word on four strands.
pub fn pt4_gamma(k: usize) -> Result<Word> {
    if !(1..=8).contains(&k) {
        return Err(Error::OutOfRange {
            what: "gamma index",
            detail: format!("expected 1..=8, got {k}"),
        });
    }
    Ok(Word::from_valid(4, GAMMAS[k - 1].to_vec()))
}

/// Which orderings of the eight generators multiply to the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Pt4RelationCheck {
    /// Letters of `γ_8` first, then `γ_7`, ..., `γ_1`.
    pub descending: bool,
    /// Letters of `γ_1` first, then `γ_2`, ..., `γ_8`.
    pub ascending: bool,
    pub all_pure: bool,
}

pub fn check_pt4_relation() -> Pt4RelationCheck {
    let product = |order: &mut dyn Iterator<Item = usize>| {
        let letters: Vec<usize> = order.flat_map(|k| GAMMAS[k - 1].iter().copied()).collect();
        Word::from_valid(4, letters).normal_form().is_empty()
    };
    Pt4RelationCheck {
        descending: product(&mut (1..=8).rev()),
        ascending: product(&mut (1..=8)),
        all_pure: (1..=8).all(|k| pt4_gamma(k).unwrap().is_pure()),
    }
}

/// The defining relation `γ_8 γ_7 ... γ_1 = 1` holds with the words read as
/// written (letters of `γ_8` first) and every generator is pure.
pub fn verify_pt4_relation() -> bool {
    let check = check_pt4_relation();
    check.descending && check.all_pure
}

/// `2^(N-3) (N^2 - 5N + 8) - 1`, the first Betti number of the configuration
/// space of `N` points on a line with triple coincidences removed.
pub fn betti_lower_bound(n: usize) -> Result<u64> {
    if n < 3 {
        return Err(Error::OutOfRange {
            what: "strand count",
            detail: format!("Betti bound needs N >= 3, got {n}"),
        });
    }
    let n64 = n as u64;
    let overflow = || Error::OutOfRange {
        what: "strand count",
        detail: format!("Betti bound overflows for N = {n}"),
    };
    let pow = 1u64.checked_shl((n - 3) as u32).filter(|_| n - 3 < 64).ok_or_else(overflow)?;
    let quad = n64
        .checked_mul(n64)
        .and_then(|sq| sq.checked_add(8))
        .and_then(|v| v.checked_sub(5 * n64))
        .ok_or_else(overflow)?;
    pow.checked_mul(quad).map(|v| v - 1).ok_or_else(overflow)
}

/// A word split along `T_N = PT_N ⋊ S_N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PureDecomposition {
    pub pure_part: Word,
    pub perm_part: Permutation,
    pub transversal_word: Word,
}

/// Splits `w` as `pure_part · transversal_word`, where the transversal is the
/// canonical bubble-sort lift of the permutation image.
pub fn transversal_decompose(w: &Word) -> PureDecomposition {
    let perm_part = w.perm_image();
    let transversal_word = Word::from_valid(w.n_strands(), perm_part.canonical_word().letters().to_vec())
        .normal_form();
    let pure_part = w
        .multiply(&transversal_word.inverse())
        .expect("same strand count");
    PureDecomposition {
        pure_part,
        perm_part,
        transversal_word,
    }
}

/// A triple coincidence of four particles: three coincide, the fourth
/// (`loner`) sits to their left or right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PunctureLabel {
    pub triple: [usize; 3],
    pub loner: usize,
    pub loner_right: bool,
}

impl PunctureLabel {
    const fn new(triple: [usize; 3], loner: usize, loner_right: bool) -> Self {
        PunctureLabel {
            triple,
            loner,
            loner_right,
        }
    }

    /// Unit vector in the relative space, in the basis of [`RELATIVE_BASIS`].
    pub fn direction(&self) -> [f64; 3] {
        // x_i = x_j = x_k = τ, x_l = -3τ with τ = -1 when the loner is on the right
        let tau = if self.loner_right { -1.0 } else { 1.0 };
        let mut x = [tau; 4];
        x[self.loner - 1] = -3.0 * tau;
        normalize3(to_relative(&x))
    }
}

impl fmt::Display for PunctureLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [i, j, k] = self.triple;
        if self.loner_right {
            write!(f, "{{{i},{j},{k}}}<{}", self.loner)
        } else {
            write!(f, "{}<{{{i},{j},{k}}}", self.loner)
        }
    }
}

/// Punctures in winding-vector order: entry `k` is the puncture encircled by
/// `γ_{k+1}`. The last one is sent to infinity by the chart.
pub const PUNCTURES: [PunctureLabel; 8] = [
    PunctureLabel::new([1, 2, 3], 4, true),
    PunctureLabel::new([1, 2, 4], 3, false),
    PunctureLabel::new([1, 3, 4], 2, true),
    PunctureLabel::new([2, 3, 4], 1, false),
    PunctureLabel::new([1, 2, 3], 4, false),
    PunctureLabel::new([1, 2, 4], 3, true),
    PunctureLabel::new([1, 3, 4], 2, false),
    PunctureLabel::new([2, 3, 4], 1, true),
];

/// Orthonormal basis of the center-of-mass-free subspace of `R^4`:
/// `(1,-1,0,0)/√2`, `(1,1,-2,0)/√6`, `(1,1,1,-3)/√12`.
pub const RELATIVE_BASIS: [[f64; 4]; 3] = [
    [
        std::f64::consts::FRAC_1_SQRT_2,
        -std::f64::consts::FRAC_1_SQRT_2,
        0.0,
        0.0,
    ],
    [
        0.408_248_290_463_863,
        0.408_248_290_463_863,
        -0.816_496_580_927_726,
        0.0,
    ],
    [
        0.288_675_134_594_812_9,
        0.288_675_134_594_812_9,
        0.288_675_134_594_812_9,
        -0.866_025_403_784_438_6,
    ],
];

fn to_relative(x: &[f64; 4]) -> [f64; 3] {
    let mut out = [0.0; 3];
    for (o, b) in out.iter_mut().zip(RELATIVE_BASIS.iter()) {
        *o = b.iter().zip(x).map(|(u, v)| u * v).sum();
    }
    out
}

fn normalize3(v: [f64; 3]) -> [f64; 3] {
    let r = dot3(&v, &v).sqrt();
    [v[0] / r, v[1] / r, v[2] / r]
}

fn dot3(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross3(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// The eight puncture directions on the reduced sphere, expressed back in
/// `R^4` coordinates (each orthogonal to `(1,1,1,1)`), in [`PUNCTURES`] order.
pub fn puncture_directions() -> [[f64; 4]; 8] {
    let mut out = [[0.0; 4]; 8];
    for (o, p) in out.iter_mut().zip(PUNCTURES.iter()) {
        let d = p.direction();
        for (c, slot) in o.iter_mut().enumerate() {
            *slot = (0..3).map(|r| d[r] * RELATIVE_BASIS[r][c]).sum();
        }
    }
    out
}

/// Stereographic chart of the reduced sphere with the last puncture at
/// infinity. The chart frame `(e1, e2)` satisfies `e1 × e2 = -pole`; with
/// this orientation `γ_1` winds `+1` around its puncture.
struct Chart {
    pole: [f64; 3],
    e1: [f64; 3],
    e2: [f64; 3],
    centers: [(f64, f64); 7],
}

impl Chart {
    fn new() -> Self {
        let pole = PUNCTURES[7].direction();
        let seed = [1.0, 0.0, 0.0];
        let along = dot3(&seed, &pole);
        let e1 = normalize3([
            seed[0] - along * pole[0],
            seed[1] - along * pole[1],
            seed[2] - along * pole[2],
        ]);
        let e2 = cross3(&e1, &pole);
        let mut chart = Chart {
            pole,
            e1,
            e2,
            centers: [(0.0, 0.0); 7],
        };
        for (k, p) in PUNCTURES[..7].iter().enumerate() {
            chart.centers[k] = chart.project_unit(&p.direction());
        }
        chart
    }

    fn project_unit(&self, u: &[f64; 3]) -> (f64, f64) {
        let denom = 1.0 - dot3(u, &self.pole);
        (dot3(u, &self.e1) / denom, dot3(u, &self.e2) / denom)
    }

    fn project(&self, x: &[f64]) -> (f64, f64) {
        let x4 = [x[0], x[1], x[2], x[3]];
        self.project_unit(&normalize3(to_relative(&x4)))
    }
}

/// Integer homology class of a pure four-strand word: windings around the
/// seven finite punctures of [`PUNCTURES`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WindingVector {
    pub entries: [i64; 7],
    pub puncture_labels: Vec<String>,
    pub infinite_puncture: String,
}

impl WindingVector {
    pub fn zero() -> Self {
        Self::from_entries([0; 7])
    }

    pub fn from_entries(entries: [i64; 7]) -> Self {
        WindingVector {
            entries,
            puncture_labels: PUNCTURES[..7].iter().map(|p| p.to_string()).collect(),
            infinite_puncture: PUNCTURES[7].to_string(),
        }
    }

    /// Winding at the puncture sent to infinity, fixed so that all eight
    /// values sum to zero.
    pub fn infinite_puncture_winding(&self) -> i64 {
        -self.entries.iter().sum::<i64>()
    }

    pub fn add(&self, other: &WindingVector) -> WindingVector {
        let mut e = self.entries;
        for (a, b) in e.iter_mut().zip(other.entries) {
            *a += b;
        }
        WindingVector::from_entries(e)
    }
}

/// Maximum angle subtended at any puncture by consecutive samples.
const MAX_STEP_ANGLE: f64 = PI / 16.0;
const MAX_BISECTIONS: u32 = 48;
const INTEGER_TOLERANCE: f64 = 1e-6;

/// Raw (unrounded) windings of the choreography of a pure four-strand word.
pub fn holonomies(w: &Word) -> Result<[f64; 7]> {
    if w.n_strands() != 4 {
        return Err(Error::StrandMismatch {
            left: w.n_strands(),
            right: 4,
        });
    }
    if !w.is_pure() {
        return Err(Error::NotPure);
    }
    let chart = Chart::new();
    let tr = word_to_choreography(w);
    let mut total = [0.0f64; 7];
    for k in 0..tr.times.len() - 1 {
        accumulate_segment(&chart, &tr, k, &mut total)?;
    }
    Ok(total.map(|a| a / (2.0 * PI)))
}

fn accumulate_segment(chart: &Chart, tr: &Trajectory, k: usize, total: &mut [f64; 7]) -> Result<()> {
    let a = &tr.positions[k];
    let b = &tr.positions[k + 1];
    let point = |s: f64| -> (f64, f64) {
        let x: Vec<f64> = a.iter().zip(b).map(|(p, q)| p + s * (q - p)).collect();
        chart.project(&x)
    };
    // explicit stack of parameter intervals, processed left to right
    let mut stack = vec![(0.0f64, 1.0f64, point(0.0), point(1.0), 0u32)];
    while let Some((s0, s1, p0, p1, depth)) = stack.pop() {
        let steps: Vec<f64> = chart
            .centers
            .iter()
            .map(|c| {
                let (ux, uy) = (p0.0 - c.0, p0.1 - c.1);
                let (vx, vy) = (p1.0 - c.0, p1.1 - c.1);
                (ux * vy - uy * vx).atan2(ux * vx + uy * vy)
            })
            .collect();
        if steps.iter().all(|d| d.abs() < MAX_STEP_ANGLE) {
            for (t, d) in total.iter_mut().zip(steps) {
                *t += d;
            }
            continue;
        }
        if depth >= MAX_BISECTIONS {
            let worst = steps
                .iter()
                .enumerate()
                .max_by(|x, y| x.1.abs().total_cmp(&y.1.abs()))
                .map(|(i, _)| i)
                .unwrap_or(0);
            return Err(Error::NonIntegerHolonomy {
                puncture: worst + 1,
                value: f64::NAN,
            });
        }
        let mid = 0.5 * (s0 + s1);
        let pm = point(mid);
        stack.push((mid, s1, pm, p1, depth + 1));
        stack.push((s0, mid, p0, pm, depth + 1));
    }
    Ok(())
}

/// Winding vector of a pure four-strand word.
pub fn winding_vector(w: &Word) -> Result<WindingVector> {
    let raw = holonomies(w)?;
    let mut entries = [0i64; 7];
    for (k, (&h, e)) in raw.iter().zip(entries.iter_mut()).enumerate() {
        let r = h.round();
        if (h - r).abs() > INTEGER_TOLERANCE {
            return Err(Error::NonIntegerHolonomy {
                puncture: k + 1,
                value: h,
            });
        }
        *e = r as i64;
    }
    Ok(WindingVector::from_entries(entries))
}

/// Deletes every strand outside `keep` from the choreography of a pure word
/// and reads the remaining three strands as a `T_3` word.
///
/// This is a diagnostic on choreographies; no homomorphism property is
/// claimed.
pub fn restrict_to_strands(w: &Word, keep: [usize; 3]) -> Result<Word> {
    if !w.is_pure() {
        return Err(Error::NotPure);
    }
    let mut sorted = keep;
    sorted.sort_unstable();
    if sorted[0] == 0 || sorted[2] > w.n_strands() || sorted[0] == sorted[1] || sorted[1] == sorted[2] {
        return Err(Error::OutOfRange {
            what: "kept strands",
            detail: format!("{keep:?} must be three distinct labels in 1..={}", w.n_strands()),
        });
    }
    let tr = word_to_choreography(w);
    let positions = tr
        .positions
        .iter()
        .map(|row| sorted.iter().map(|&p| row[p - 1]).collect())
        .collect();
    let sub = Trajectory {
        n: 3,
        times: tr.times.clone(),
        positions,
    };
    trajectory_to_word(&sub)
}
