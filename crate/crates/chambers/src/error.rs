use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ChamberError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("line at angle {0} is not admissible")]
    Inadmissible(f64),
    #[error("refinement failure: {0}")]
    Refinement(String),
}
