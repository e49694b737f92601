//! `traid`: word algebra, strand diagrams, windings, representations and
//! trapped three-body spectra from the command line.

mod commands;
mod selftest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

const EXIT_CODES: &str = "\
Exit codes:
  0  success
  2  usage error (unknown subcommand, missing or malformed flag)
  3  invalid input (malformed word, letter out of range, bad representation or trajectory file)
  4  file I/O failure
  5  computation rejected the input (not pure, triple coincidence, tangency, non-integer holonomy, failed self-test)

Environment:
  TRAID_OUT_DIR  directory against which relative --out/--svg paths are resolved";

#[derive(Parser)]
#[command(name = "traid", version, about = "Traid groups, pure traids and the hard-core three-body trap", after_help = EXIT_CODES)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct WordArg {
    /// Number of strands.
    #[arg(long = "n", short = 'n')]
    n: usize,
    /// Word as "t1 t2 t1", "1 2 1", "121", or "e" for the identity.
    word: String,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of a word.
    Normalize(WordArg),
    /// Decide whether two words are equal in the group.
    Equal {
        #[arg(long = "n", short = 'n')]
        n: usize,
        a: String,
        b: String,
    },
    /// Print the permutation image of a word.
    Perm(WordArg),
    /// Report whether a word is pure.
    Pure(WordArg),
    /// Split a word into pure part and canonical transversal word.
    Decompose(WordArg),
    /// Print the loop words generating PT4.
    Gamma {
        /// Loop index 1..=8; all loops if omitted.
        k: Option<usize>,
        /// Check that the descending product of the loops is trivial.
        #[arg(long)]
        relation: bool,
    },
    /// Winding vector of a pure four-strand word.
    Winding(WordArg),
    /// Lower bound on the first Betti number of the pure traid group.
    Betti { n: usize },
    /// One-dimensional and reflection representations.
    #[command(subcommand)]
    Rep(RepCommand),
    /// Render a strand diagram as SVG.
    Diagram {
        #[command(flatten)]
        word: WordArg,
        /// Output file; stdout if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 480.0)]
        width: f64,
        #[arg(long, default_value_t = 200.0)]
        height: f64,
        /// Draw every strand in one color.
        #[arg(long)]
        mono: bool,
        #[arg(long)]
        no_labels: bool,
    },
    /// Write the choreography of a word as a JSON trajectory.
    Choreography {
        #[command(flatten)]
        word: WordArg,
        /// Output file; stdout if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Read a JSON trajectory file and print the word of its crossings.
    ExtractWord { file: PathBuf },
    /// Energy levels of three trapped particles for a two-sign representation.
    Spectrum {
        /// Signs of t1 and t2, e.g. "+-".
        #[arg(long, allow_hyphen_values = true)]
        rep: String,
        #[arg(long)]
        emax: f64,
    },
    /// Sample a relative wave function on a grid.
    Field {
        #[arg(long, allow_hyphen_values = true)]
        rep: String,
        #[arg(long, default_value_t = 0)]
        nu: u32,
        /// Angular momentum, e.g. 3 or 3/2.
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = 4.0)]
        half_width: f64,
        #[arg(long, default_value_t = 101)]
        resolution: usize,
        /// CSV output (x,y,psi); stdout if neither --out nor --svg is given.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Contour plot with coincidence rays and branch cut.
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, default_value_t = 8)]
        levels: usize,
    },
    /// Codimension d(k-1) of the k-fold coincidence locus in d dimensions.
    Codim { d: usize, k: usize },
    /// Randomized consistency checks.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random cases per check.
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

#[derive(Subcommand)]
enum RepCommand {
    /// List all sign representations, or evaluate one on a word.
    Abelian {
        #[arg(long = "n", short = 'n')]
        n: usize,
        /// Signs of t1..t_{n-1}, e.g. "+-+".
        #[arg(long, allow_hyphen_values = true)]
        signs: Option<String>,
        #[arg(long)]
        word: Option<String>,
    },
    /// Reflection representation of a Coxeter quotient.
    Coxeter {
        /// Labels m_1..m_{N-2}, e.g. "5,3" or "inf,inf".
        #[arg(long)]
        labels: String,
        /// Print the matrix of this word.
        #[arg(long)]
        word: Option<String>,
        /// Enumerate the matrix group up to --limit elements.
        #[arg(long)]
        order: bool,
        #[arg(long, default_value_t = 10_000)]
        limit: usize,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Traid(#[from] traid::Error),
    #[error("{0}")]
    Input(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use traid::Error as E;
        match self {
            CliError::Traid(
                E::NotPure
                | E::TripleCoincidence { .. }
                | E::Tangency { .. }
                | E::AmbiguousOrdering { .. }
                | E::NonIntegerHolonomy { .. },
            ) => 5,
            CliError::Traid(_) | CliError::Input(_) => 3,
            CliError::Io { .. } => 4,
            CliError::Failed(_) => 5,
        }
    }

    fn kind(&self) -> &'static str {
        match self.exit_code() {
            3 => "input",
            4 => "io",
            _ => "computation",
        }
    }
}

/// Text and JSON renderings of one command's result.
pub struct Report {
    pub text: String,
    pub json: Value,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.json);
            } else if !report.text.is_empty() {
                println!("{}", report.text);
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            let code = err.exit_code();
            if cli.json {
                let v = serde_json::json!({
                    "error": { "code": code, "kind": err.kind(), "message": err.to_string() }
                });
                eprintln!("{v}");
            } else {
                eprintln!("error ({}): {err}", err.kind());
            }
            ExitCode::from(code)
        }
    }
}
