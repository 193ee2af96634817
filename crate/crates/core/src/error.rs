use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("bound exceeded: {what} has size {size}, bound is {bound}")]
    BoundExceeded { what: &'static str, size: u128, bound: u128 },

    #[error("element is not a member of the group")]
    NotMember,

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("value is not a rational integer: {0}")]
    NotInteger(String),

    #[error("exponent {k} is not coprime to conductor {n}")]
    NotCoprime { k: i64, n: u64 },

    #[error("character table rejected: {0}")]
    TableRejected(String),

    #[error("missing power map for prime {0}")]
    MissingPowerMap(u64),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("check failed: {0}")]
    CheckFailed(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse { position, message: message.into() }
    }
}
