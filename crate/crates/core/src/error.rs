use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("strand count must be at least {min}, got {got}")]
    InvalidStrandCount { got: usize, min: usize },
    #[error("letter t{letter} at position {position} is out of range for {n_strands} strands (valid: t1..t{})", n_strands - 1)]
    LetterOutOfRange {
        position: usize,
        letter: usize,
        n_strands: usize,
    },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("could not parse word {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("word is not pure (its permutation image is not the identity)")]
    NotPure,
    #[error("three particles meet at t = {time}")]
    TripleCoincidence { time: f64 },
    #[error("particles {a} and {b} touch without crossing at t = {time}")]
    Tangency { time: f64, a: usize, b: usize },
    #[error("overlapping pairs cross at the same instant t = {time}")]
    AmbiguousOrdering { time: f64 },
    #[error("invalid trajectory: {0}")]
    InvalidTrajectory(String),
    #[error("holonomy around puncture {puncture} is {value}, not within 1e-6 of an integer")]
    NonIntegerHolonomy { puncture: usize, value: f64 },
    #[error("invalid representation: {0}")]
    InvalidRep(String),
    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
