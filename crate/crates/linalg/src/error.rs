use symring::SymError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("entry ({0},{1}) is not a Gaussian rational")]
    Symbolic(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("unsupported exponent: {0}")]
    UnsupportedExponent(String),
    #[error("malformed matrix: {0}")]
    Malformed(String),
    #[error(transparent)]
    Sym(#[from] SymError),
}
