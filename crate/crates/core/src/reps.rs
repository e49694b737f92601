//! Representations of the traid groups.
//!
//! Abelian representations send each generator to `±1`; every sign choice is
//! valid. Non-abelian ones come from linear Coxeter quotients
//! `[m_1, ..., m_{N-2}]`, realized here by the geometric reflection
//! representation. `PT_4` additionally admits abelian phase representations
//! `γ_k -> e^{iθ_k}` with `Σθ_k ≡ 0 (mod 2π)`.
//!
//! Matrices multiply in reading order, so `eval_matrix(ab) = eval_matrix(a) *
//! eval_matrix(b)`.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::pure::WindingVector;
use crate::word::Word;

/// Generator signs `ρ(t_1), ..., ρ(t_{N-1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianRep {
    signs: Vec<i8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Statistics {
    Bosonic,
    Fermionic,
    Mixed,
}

impl fmt::Display for Statistics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Statistics::Bosonic => "BOSONIC",
            Statistics::Fermionic => "FERMIONIC",
            Statistics::Mixed => "MIXED",
        })
    }
}

impl AbelianRep {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if signs.is_empty() {
            return Err(Error::InvalidRep("need at least one generator sign".into()));
        }
        if let Some(s) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::InvalidRep(format!("sign {s} is not ±1")));
        }
        Ok(AbelianRep { signs })
    }

    pub fn bosonic(n_strands: usize) -> Self {
        AbelianRep {
            signs: vec![1; n_strands.saturating_sub(1).max(1)],
        }
    }

    pub fn fermionic(n_strands: usize) -> Self {
        AbelianRep {
            signs: vec![-1; n_strands.saturating_sub(1).max(1)],
        }
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn n_strands(&self) -> usize {
        self.signs.len() + 1
    }

    /// Value on generator `t_i`.
    pub fn sign(&self, i: usize) -> i8 {
        self.signs[i - 1]
    }

    pub fn classify(&self) -> Statistics {
        if self.signs.iter().all(|&s| s == 1) {
            Statistics::Bosonic
        } else if self.signs.iter().all(|&s| s == -1) {
            Statistics::Fermionic
        } else {
            Statistics::Mixed
        }
    }

    /// Product of the generator signs over the letters of `w`.
    pub fn eval(&self, w: &Word) -> Result<i8> {
        if w.n_strands() != self.n_strands() {
            return Err(Error::StrandMismatch {
                left: self.n_strands(),
                right: w.n_strands(),
            });
        }
        Ok(w.letters().iter().map(|&l| self.signs[l - 1]).product())
    }
}

impl fmt::Display for AbelianRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.signs {
            f.write_str(if s > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl FromStr for AbelianRep {
    type Err = Error;

    /// Parses strings like `"+-"`.
    fn from_str(s: &str) -> Result<Self> {
        let signs = s
            .trim()
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                other => Err(Error::InvalidRep(format!(
                    "unexpected character {other:?} in sign string {s:?}"
                ))),
            })
            .collect::<Result<Vec<i8>>>()?;
        AbelianRep::new(signs)
    }
}

/// All `2^(N-1)` sign assignments, `+` before `-` lexicographically.
pub fn all_abelian_reps(n_strands: usize) -> Result<Vec<AbelianRep>> {
    if !(2..=24).contains(&n_strands) {
        return Err(Error::InvalidStrandCount {
            got: n_strands,
            min: 2,
        });
    }
    let k = n_strands - 1;
    Ok((0..1u32 << k)
        .map(|mask| AbelianRep {
            signs: (0..k)
                .map(|i| if mask >> (k - 1 - i) & 1 == 1 { -1 } else { 1 })
                .collect(),
        })
        .collect())
}

pub fn eval_abelian(rep: &AbelianRep, w: &Word) -> Result<i8> {
    rep.eval(w)
}

pub fn classify_abelian(rep: &AbelianRep) -> Statistics {
    rep.classify()
}

/// Edge label of a linear Coxeter diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CoxeterLabel {
    Finite(u32),
    Infinite,
}

impl CoxeterLabel {
    /// `-cos(π/m)`, with `-1` for an infinite label.
    pub fn gram_entry(self) -> f64 {
        match self {
            CoxeterLabel::Finite(m) => -(PI / m as f64).cos(),
            CoxeterLabel::Infinite => -1.0,
        }
    }
}

impl fmt::Display for CoxeterLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterLabel::Finite(m) => write!(f, "{m}"),
            CoxeterLabel::Infinite => f.write_str("inf"),
        }
    }
}

/// Labels `[m_1, ..., m_{N-2}]` of the quotient by `(t_{i+1} t_i)^{m_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoxeterLabels {
    labels: Vec<CoxeterLabel>,
}

impl CoxeterLabels {
    pub fn new(labels: Vec<CoxeterLabel>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidRep("need at least one Coxeter label".into()));
        }
        if let Some(CoxeterLabel::Finite(m)) =
            labels.iter().find(|l| matches!(l, CoxeterLabel::Finite(m) if *m < 2))
        {
            return Err(Error::InvalidRep(format!("Coxeter label {m} is below 2")));
        }
        Ok(CoxeterLabels { labels })
    }

    pub fn labels(&self) -> &[CoxeterLabel] {
        &self.labels
    }

    pub fn n_strands(&self) -> usize {
        self.labels.len() + 2
    }

    /// Bilinear form `B(e_i, e_j) = -cos(π / m_ij)`.
    pub fn gram(&self) -> DMatrix<f64> {
        let r = self.labels.len() + 1;
        let mut b = DMatrix::identity(r, r);
        for (i, l) in self.labels.iter().enumerate() {
            b[(i, i + 1)] = l.gram_entry();
            b[(i + 1, i)] = l.gram_entry();
        }
        b
    }
}

impl fmt::Display for CoxeterLabels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, l) in self.labels.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for CoxeterLabels {
    type Err = Error;

    /// Parses `"5,3"`, `"inf,4"`, `"∞"`.
    fn from_str(s: &str) -> Result<Self> {
        let labels = s
            .trim()
            .trim_start_matches('[')
            .trim_end_matches(']')
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                match tok.to_ascii_lowercase().as_str() {
                    "inf" | "infinity" | "∞" => Ok(CoxeterLabel::Infinite),
                    t => t
                        .parse::<u32>()
                        .map(CoxeterLabel::Finite)
                        .map_err(|_| Error::InvalidRep(format!("bad Coxeter label {tok:?}"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        CoxeterLabels::new(labels)
    }
}

/// Reflection matrices `σ_i(v) = v - 2 B(e_i, v) e_i` in the basis `e_j`.
pub fn coxeter_generators(labels: &CoxeterLabels) -> Vec<DMatrix<f64>> {
    let b = labels.gram();
    let r = b.nrows();
    (0..r)
        .map(|i| {
            let mut m = DMatrix::identity(r, r);
            for j in 0..r {
                m[(i, j)] -= 2.0 * b[(i, j)];
            }
            m
        })
        .collect()
}

/// Image of `w` in the Coxeter quotient, multiplied in reading order.
pub fn eval_matrix(labels: &CoxeterLabels, w: &Word) -> Result<DMatrix<f64>> {
    if w.n_strands() != labels.n_strands() {
        return Err(Error::StrandMismatch {
            left: labels.n_strands(),
            right: w.n_strands(),
        });
    }
    let gens = coxeter_generators(labels);
    let r = gens.len();
    Ok(w
        .letters()
        .iter()
        .fold(DMatrix::identity(r, r), |acc, &l| acc * &gens[l - 1]))
}

/// Entrywise max-norm distance; infinite for mismatched shapes.
pub fn max_abs_diff(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    if a.shape() != b.shape() {
        return f64::INFINITY;
    }
    a.iter()
        .zip(b.iter())
        .fold(0.0f64, |m, (x, y)| m.max((x - y).abs()))
}

/// Tolerance for identifying matrices during group enumeration.
pub const MATRIX_TOLERANCE: f64 = 1e-9;

/// All distinct products of `gens`, found breadth-first from the identity.
/// Fails once more than `limit` elements have been found.
pub fn matrix_group_closure(gens: &[DMatrix<f64>], limit: usize) -> Result<Vec<DMatrix<f64>>> {
    let r = gens.first().map_or(0, |g| g.nrows());
    let mut elements = vec![DMatrix::identity(r, r)];
    let mut frontier = 0;
    while frontier < elements.len() {
        let current = elements[frontier].clone();
        frontier += 1;
        for g in gens {
            let cand = &current * g;
            if !elements
                .iter()
                .any(|e| max_abs_diff(e, &cand) < MATRIX_TOLERANCE)
            {
                elements.push(cand);
                if elements.len() > limit {
                    return Err(Error::OutOfRange {
                        what: "group order",
                        detail: format!("more than {limit} elements"),
                    });
                }
            }
        }
    }
    Ok(elements)
}

/// Abelian representation of `PT_4` given by phases `θ_1..θ_8` on `γ_1..γ_8`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PureAbelianRep {
    thetas: [f64; 8],
}

impl PureAbelianRep {
    /// Phases are reduced into `[0, 2π)`; their sum must vanish mod `2π`
    /// within `1e-12`.
    pub fn new(thetas: [f64; 8]) -> Result<Self> {
        if thetas.iter().any(|t| !t.is_finite()) {
            return Err(Error::InvalidRep("phases must be finite".into()));
        }
        let thetas = thetas.map(|t| t.rem_euclid(TAU));
        let sum: f64 = thetas.iter().sum();
        let off = sum - (sum / TAU).round() * TAU;
        if off.abs() > 1e-12 {
            return Err(Error::InvalidRep(format!(
                "phases sum to {sum}, which is not a multiple of 2π"
            )));
        }
        Ok(PureAbelianRep { thetas })
    }

    pub fn thetas(&self) -> &[f64; 8] {
        &self.thetas
    }

    /// `exp(i Σ_k w_k θ_k)` over the seven finite punctures; entry `k` of the
    /// winding vector counts loops around the puncture of `γ_k`.
    pub fn eval(&self, wv: &WindingVector) -> Complex64 {
        let phase: f64 = wv
            .entries
            .iter()
            .zip(&self.thetas)
            .map(|(&w, &t)| w as f64 * t)
            .sum();
        Complex64::from_polar(1.0, phase)
    }
}

pub fn eval_pure_abelian(rep: &PureAbelianRep, wv: &WindingVector) -> Complex64 {
    rep.eval(wv)
}
