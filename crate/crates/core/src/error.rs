use thiserror::Error;

use crate::algebra::Algebra;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DesignError {
    #[error("algebra mismatch: {0:?} vs {1:?}")]
    AlgebraMismatch(Algebra, Algebra),

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vector is not unit length (norm {norm})")]
    NotUnit { norm: f64 },

    #[error("invalid space: {0}")]
    InvalidSpace(String),

    #[error("invalid design: {0}")]
    InvalidDesign(String),

    #[error("{monomials} monomials exceed the cap of {cap}; use the gegenbauer method instead")]
    CapExceeded { monomials: u128, cap: u128 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("base point {index} does not lie in the fiber over its base point")]
    BasepointNotInFiber { index: usize },

    #[error("lifted points {first} and {second} collide")]
    PointCollision { first: usize, second: usize },

    #[error("points {first} and {second} have images {distance:e} apart; tighten the input")]
    GroupingAmbiguity {
        first: usize,
        second: usize,
        distance: f64,
    },

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),
}

pub type Result<T> = std::result::Result<T, DesignError>;
