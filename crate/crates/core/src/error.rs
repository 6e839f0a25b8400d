use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid shift: reversing pair {index} leaves the Dyck paths ({word})")]
    InvalidShift { index: usize, word: String },

    #[error("size limit exceeded: {what} = {value} exceeds bound {bound}")]
    SizeLimit { what: &'static str, value: usize, bound: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("variable count mismatch: {left} vs {right}")]
    NvarsMismatch { left: usize, right: usize },

    #[error("not divisible: {dividend} / {divisor}")]
    Divisibility { dividend: String, divisor: String },

    #[error("invalid admissible subchain: {0}")]
    InvalidSubchain(String),

    #[error("invalid Kupisch series: {0}")]
    InvalidKupisch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
