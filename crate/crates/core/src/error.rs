use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("characteristic {0} is not a prime below 2^31")]
    BadCharacteristic(u64),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("exponent overflow (limit {})", u16::MAX)]
    ExponentOverflow,
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("input must be homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("budget exceeded after {pairs} S-pairs: {what}")]
    BudgetExceeded { pairs: usize, what: String },
    #[error("time limit reached after {pairs} S-pairs")]
    TimeLimit { pairs: usize },
    #[error("invalid parameters: {0}")]
    InvalidSpec(String),
    #[error("characteristic constraint violated: {0}")]
    Characteristic(String),
    #[error("{0}")]
    Unsupported(String),
}

impl Error {
    /// Budget and time-limit failures, as opposed to bad input.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. } | Error::TimeLimit { .. })
    }
}
