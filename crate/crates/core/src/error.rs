use thiserror::Error;

/// Errors produced by group construction, graph oracles and exact algebra.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid group order {0}: order must be at least 1")]
    InvalidOrder(usize),

    #[error("group order {order} exceeds the table limit of {limit}")]
    OrderTooLarge { order: usize, limit: usize },

    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },

    #[error("table entry {value} at ({row}, {col}) is out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("table is not a Latin square: {line} {index} repeats element {value}")]
    NotLatinSquare {
        line: &'static str,
        index: usize,
        value: usize,
    },

    #[error("table has no two-sided identity element")]
    NoIdentity,

    #[error("element {0} has no two-sided inverse")]
    MissingInverse(usize),

    #[error("operation is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NonAssociative { a: usize, b: usize, c: usize },

    #[error("element index {index} out of range for order {order}")]
    ElementOutOfRange { index: usize, order: usize },

    #[error("cannot parse group spec at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("{context}: {message}")]
    Io { context: String, message: String },

    #[error("{operation} is limited to size {limit}, got {size}")]
    TooLarge {
        operation: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix is not square")]
    NotSquareMatrix,

    #[error("connection set contains the identity element")]
    IdentityInConnectionSet,

    #[error("connection set is not closed under inverses: {0} is present but its inverse is not")]
    NotInverseClosed(usize),

    #[error("spectrum is empty")]
    EmptySpectrum,

    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("eigenvalue solver did not converge")]
    NoConvergence,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(context: impl Into<String>, err: impl std::fmt::Display) -> Self {
        Error::Io {
            context: context.into(),
            message: err.to_string(),
        }
    }
}
