use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exp requires a zero constant term, found {coefficient}")]
    NonZeroConstant { coefficient: String },

    #[error("log requires constant term 1, found {coefficient}")]
    ConstantNotOne { coefficient: String },

    #[error("constant term {coefficient} is not invertible")]
    NotInvertible { coefficient: String },

    #[error("requested coefficient of q^{power} but series is truncated at order {trunc}")]
    BeyondTruncation { power: usize, trunc: usize },

    #[error("{what} exceeds guard: {value} > {limit}")]
    Guard {
        what: &'static str,
        value: u128,
        limit: u128,
    },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("theory mismatch: expected {expected} diamond, got {found}")]
    TheoryMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn guard(what: &'static str, value: u128, limit: u128) -> Self {
        Error::Guard { what, value, limit }
    }
}
