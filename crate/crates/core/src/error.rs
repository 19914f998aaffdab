use thiserror::Error;

use crate::monomial::Letter;

/// Errors reported by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet mismatch: expected {expected} letters, got {found}")]
    AlphabetMismatch { expected: usize, found: usize },
    #[error("letter index {letter} out of range for an alphabet of size {size}")]
    InvalidLetter { letter: Letter, size: usize },
    #[error("monomial has empty support")]
    EmptySupport,
    #[error("monomial set is not an antichain: member {divisor} divides member {multiple}")]
    NotAntichain { divisor: usize, multiple: usize },
    #[error("unit monomial is not allowed here")]
    UnitMonomial,
    #[error("exponent arithmetic overflowed")]
    Overflow,
    #[error("the ideal is not finitely generated under this ordering")]
    NotFinitelyGenerated,
    #[error("member {0} is not quadratic")]
    NonQuadratic(usize),
    #[error("member {0} is not square-free")]
    NotSquareFree(usize),
    #[error("subset contains a monomial that is not in the ambient set")]
    NotSubset,
    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("orientation does not match the edge set of the graph")]
    OrientationMismatch,
    #[error("orientation contains a directed cycle")]
    CyclicOrientation,
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
    #[error("budget of {limit} exceeded")]
    BudgetExceeded { limit: u64 },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
