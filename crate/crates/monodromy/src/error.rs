use linalg::LinalgError;
use symring::SymError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonodromyError {
    #[error("invalid monodromy data: {0}")]
    Invalid(String),
    #[error("mu entry {0} has a denominator not dividing 4")]
    UnsupportedMu(String),
    #[error("Stokes matrix is not upper triangular in the current labeling")]
    NotTriangular,
    #[error("gauge matrix is not in the isotropy group: {0}")]
    NotMember(String),
    #[error("gauge matrix is singular")]
    Singular,
    #[error("bad braid word: {0}")]
    BadWord(String),
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Sym(#[from] SymError),
}
