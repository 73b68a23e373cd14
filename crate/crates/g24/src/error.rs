use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum G24Error {
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Monodromy(#[from] monodromy::MonodromyError),
    #[error(transparent)]
    Linalg(#[from] linalg::LinalgError),
    #[error(transparent)]
    Sym(#[from] symring::SymError),
    #[error(transparent)]
    Chamber(#[from] chambers::ChamberError),
}
