use std::fmt;

use num_bigint::BigUint;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid presentation matrix: {0}")]
    InvalidMatrix(String),

    #[error("torsion coefficient {0} does not fit in 64 bits and cannot be factored")]
    TorsionTooLarge(BigUint),

    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("homology unsupported for {0}")]
    UnsupportedHomology(String),

    #[error("truncation too low: degree {requested} requested but inputs are known only through degree {available}")]
    TruncationTooLow { requested: u32, available: u32 },

    #[error("enumeration unavailable: count only ({0})")]
    EnumerationUnavailable(u64),

    #[error("group order {order} exceeds the oracle bound {bound}")]
    OrderTooLarge { order: u64, bound: u64 },

    #[error("element set is not a subgroup: {0}")]
    NotASubgroup(String),
}

/// Syntax error with the byte offset where parsing stopped and the tokens
/// that would have been accepted there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: expected ", self.position)?;
        match self.expected.as_slice() {
            [] => write!(f, "end of input"),
            [one] => write!(f, "{one}"),
            many => write!(f, "one of {}", many.join(", ")),
        }
    }
}

impl std::error::Error for ParseError {}
