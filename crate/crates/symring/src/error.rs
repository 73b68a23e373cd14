use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("operands belong to different symbol tables")]
    TableMismatch,
    #[error("symbol '{0}' has no numeric value")]
    MissingValue(String),
    #[error("unknown symbol '{0}'")]
    UnknownSymbol(String),
    #[error("unsupported root of unity: {0}")]
    UnsupportedRoot(String),
    #[error("expression is not invertible: {0}")]
    NotInvertible(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid symbol table: {0}")]
    InvalidTable(String),
    #[error("rewrite system does not terminate: {0}")]
    NonTerminating(String),
    #[error("rewrite system is not locally confluent: {0}")]
    NonConfluent(String),
}
