use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("evaluation at a pole (t = 0 with negative powers present)")]
    EvaluationAtPole,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("input must be nonzero")]
    ZeroInput,

    #[error("{0} is not a prime")]
    NotPrime(String),

    #[error("f and g have a common zero (gcd = {0})")]
    CommonZero(String),

    #[error("invalid degrees: {0}")]
    InvalidDegrees(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("precondition `{flag}` violated: {detail}")]
    Precondition { flag: &'static str, detail: String },

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
