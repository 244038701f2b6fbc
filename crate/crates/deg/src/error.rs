//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by constructors and operations in this crate.
#[derive(Debug, Error)]
pub enum DegError {
    /// A list of parts does not form a partition (weakly decreasing, positive).
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// A pair of partitions does not form a skew shape, or a cell set is not
    /// the cell set of any skew shape.
    #[error("invalid shape: {0}")]
    InvalidShape(String),

    /// A filling is not a standard tableau of the given shape.
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    /// A word fails a precondition (for example, it is not a permutation).
    #[error("invalid word: {0}")]
    InvalidWord(String),

    /// A move index lies outside the range on which the move is defined.
    #[error("move index {index} out of range for word of length {len}")]
    MoveOutOfRange { index: usize, len: usize },

    /// A content-bound word fails validation.
    #[error("invalid content bound: {0}")]
    InvalidTau(String),

    /// Graph construction or surgery produced inconsistent data.
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    /// Two expansions that should live in the same degree do not.
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    /// The explicit Schur expansion is only available through diameter 3.
    #[error("tuple has diameter {diam}, but the explicit expansion requires diameter at most 3")]
    DiameterTooLarge { diam: usize },

    /// Schur-coefficient extraction failed: no expansion with nonnegative
    /// integer polynomial coefficients exists, or the residual was nonzero.
    #[error("not Schur positive: {0}")]
    NotSchurPositive(String),

    /// A shape contains a translate of a subdiagram that the requested
    /// expansion mode cannot handle.
    #[error("shape not covered: it contains the subdiagram {pattern}")]
    ShapeNotCovered { pattern: String },

    /// A map between graphs fails to be a morphism of the requested kind.
    #[error("morphism violation: {0}")]
    MorphismViolation(String),

    /// Restriction parameters lie outside the admissible range.
    #[error("restriction out of range: {0}")]
    RestrictionOutOfRange(String),

    /// A verification campaign could not run (bad parameters, missing data).
    #[error("campaign error: {0}")]
    Campaign(String),

    /// A sweep was refused because it exceeds the size guard; pass `force` to
    /// override.
    #[error("size guard: {0}")]
    Guard(String),

    /// JSON (de)serialization failure.
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
