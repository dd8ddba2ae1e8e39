use thiserror::Error;

/// Errors raised by tensor, symmetrizer, state and measure operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("order mismatch: expected {expected}, got {found}")]
    OrderMismatch { expected: usize, found: usize },

    #[error("coefficient count {found} does not match dim^order = {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("non-finite coefficient at flat index {0}")]
    NonFinite(usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("zero tensor")]
    ZeroTensor,

    #[error("{what} out of range: {value} (allowed {allowed})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        allowed: String,
    },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("not in symmetry class: {0}")]
    NotInClass(String),

    #[error("factors are linearly dependent")]
    DependentFactors,

    #[error("invalid operator: {0}")]
    InvalidOperator(String),

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("invalid option: {0}")]
    InvalidOption(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
