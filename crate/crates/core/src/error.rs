use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("size mismatch: expected degree {expected}, got {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("shape mismatch: {left} vs {right}")]
    ShapeMismatch { left: String, right: String },

    #[error("tableau index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("{what} refused for n = {n} (limit {limit}); pass force to override")]
    CostGuard {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("structural invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
