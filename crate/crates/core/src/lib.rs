//! Computational toolkit for the traid (twin) groups `T_N` and their pure
//! subgroups `PT_N`.
//!
//! * [`word`]: words, normal forms, the word problem and the map to `S_N`.
//! * [`oracle`]: brute-force relation search used to cross-check [`word`].
//! * [`worldlines`]: piecewise-linear particle trajectories and strand diagrams.
//! * [`pure`]: `PT_3` windings, the `PT_4` generators and winding vectors.
//! * [`reps`]: abelian and Coxeter-quotient representations.
//! * [`harmonic`]: three hard-core particles in a harmonic trap.
//!
//! ```
//! use traid::{harmonic, pure::winding_vector, reps::AbelianRep, Word};
//!
//! let a = Word::parse("t1 t2 t1", 3)?;
//! let b = Word::parse("t2 t1 t2", 3)?;
//! assert!(!a.equals(&b)?);
//! assert_eq!(a.perm_image(), b.perm_image());
//!
//! let g4 = Word::parse("323232", 4)?;
//! assert_eq!(winding_vector(&g4)?.entries, [0, 0, 0, 1, 0, 0, 0]);
//!
//! let mixed: AbelianRep = "+-".parse()?;
//! assert_eq!(harmonic::ground_energy(&mixed)?.to_string(), "5/2");
//! # Ok::<(), traid::Error>(())
//! ```

pub mod error;
pub mod harmonic;
pub mod oracle;
pub mod perm;
pub mod pure;
pub mod reps;
mod svg;
pub mod word;
pub mod worldlines;

pub use error::{Error, Result};
pub use oracle::{brute_force_equals, Verdict};
pub use perm::Permutation;
pub use word::{codimension, Word};
pub use worldlines::{
    render_strand_diagram, trajectory_to_word, word_to_choreography, DiagramOptions, Trajectory,
};
