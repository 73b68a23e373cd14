use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum A3Error {
    #[error("degenerate point: {0}")]
    Degenerate(String),
    #[error("no band {0}; bands are 0 to 4")]
    BadBand(usize),
    #[error("no cell {0}; cells are 1 and 2")]
    BadCell(u8),
    #[error(transparent)]
    Monodromy(#[from] monodromy::MonodromyError),
    #[error(transparent)]
    Chamber(#[from] chambers::ChamberError),
}
