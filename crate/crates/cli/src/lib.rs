//! The `frobmon` command line: verification reports, braid and path
//! tracking, and the two worked examples.

pub mod args;
mod output;
mod run;

pub use args::{A3Command, Cli, Command, Format, G24Command};
pub use output::{matrix_csv, Output};
pub use run::{execute, parse_complex, run, CliError};
