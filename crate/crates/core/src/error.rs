use thiserror::Error;

use crate::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The derivation was applied to a word with a nonzero exponent.
    #[error("derivation is only defined on scalar words, found {0:?}")]
    NonScalarWord(Vec<u32>),
    #[error("operation requires weight 0, context has weight {0}")]
    NonzeroWeight(Rational),
    #[error("geometric series needs every term in filtration degree >= 1")]
    NonPositiveDegree,
    #[error("operands live in different algebra contexts")]
    ContextMismatch,
    #[error("empty operand list")]
    EmptyList,
    #[error("sequence must vanish at index 0")]
    NonzeroConstantTerm,
    #[error("bad arguments: {0}")]
    BadArguments(String),
    #[error("enumeration exceeded the search limit of {limit} states")]
    SizeLimit { limit: u64 },
    #[error("truncation mismatch: {left} vs {right}")]
    TruncMismatch { left: usize, right: usize },
    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
}

impl Error {
    pub(crate) fn bad(msg: impl Into<String>) -> Self {
        Error::BadArguments(msg.into())
    }
}
