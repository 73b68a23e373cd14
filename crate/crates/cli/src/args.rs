use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "frobmon", version, about = "Monodromy data of semisimple Frobenius manifolds")]
pub struct Cli {
    /// Output format for reports and matrices
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write the main output here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the constraints on a dataset: `a3`, `g24` or a JSON file
    Verify { target: String },
    /// Apply a braid word such as "1 -2 3" to a data file
    Braid {
        input: PathBuf,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Read off the braid word of a sampled path
    Track {
        path: PathBuf,
        /// Overrides the angle stored in the path file
        #[arg(long, allow_hyphen_values = true)]
        phi: Option<f64>,
        /// Apply the word to this data file and emit the result
        #[arg(long)]
        apply: Option<PathBuf>,
    },
    /// The A3 Frobenius manifold
    A3 {
        #[command(subcommand)]
        command: A3Command,
    },
    /// Quantum cohomology of G(2,4)
    G24 {
        #[command(subcommand)]
        command: G24Command,
    },
}

#[derive(Subcommand, Debug)]
pub enum A3Command {
    /// Reproduce the table of Stokes and connection matrices
    Table,
    /// Canonical coordinates and Psi at a point
    Point {
        #[arg(long, allow_hyphen_values = true)]
        t1: String,
        #[arg(long, allow_hyphen_values = true)]
        t2: String,
        #[arg(long, allow_hyphen_values = true)]
        t3: String,
    },
    /// Tabulated data of one band and cell
    Data {
        #[arg(long, default_value_t = 0)]
        band: usize,
        #[arg(long, default_value_t = 1)]
        cell: u8,
    },
    /// The quarter-turn split path as a path file
    Path {
        #[arg(long, default_value_t = 2001)]
        samples: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum G24Command {
    /// Constraints, the identity in v, the value of v and Psi
    Verify,
    /// The Gamma class of the tangent bundle
    Gamma {
        #[arg(long, allow_hyphen_values = true, default_value = "-")]
        sign: String,
    },
    /// The Gram matrix of the Kapranov collection by Riemann-Roch
    Gram,
    /// The passage to the Kapranov collection
    Kapranov,
    /// The Stokes matrices of all bands
    Bands,
    /// The Levelt form of the solution at the origin
    Levelt,
    /// The data at t = 0 with v = 6, or in the lexicographic order of a band
    Data {
        #[arg(long)]
        band: Option<usize>,
    },
    /// The split path crossing from the first band to the second
    Path {
        #[arg(long, default_value_t = 0.2, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, default_value_t = 2001)]
        samples: usize,
    },
}
