use thiserror::Error;

/// Errors produced by tensor construction, interval handling and the solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("index {index:?} out of range for order {order}, dimension {dim} (indices are 1-based)")]
    IndexOutOfRange {
        index: Vec<usize>,
        order: usize,
        dim: usize,
    },

    #[error("duplicate entry at index {index:?}")]
    DuplicateIndex { index: Vec<usize> },

    #[error("conflicting values {a} and {b} for index {index:?} under symmetric closure")]
    ConflictingClosure { index: Vec<usize>, a: f64, b: f64 },

    #[error("shape mismatch: ({order_a},{dim_a}) vs ({order_b},{dim_b})")]
    ShapeMismatch {
        order_a: usize,
        dim_a: usize,
        order_b: usize,
        dim_b: usize,
    },

    #[error("vector length {got} does not match tensor dimension {dim}")]
    DimensionMismatch { got: usize, dim: usize },

    #[error("invalid tensor shape: order {order}, dim {dim}")]
    InvalidShape { order: usize, dim: usize },

    #[error("operation requires even order, got {order}")]
    UnsupportedOddOrder { order: usize },

    #[error("operation requires a symmetric tensor")]
    NotSymmetric,

    #[error("lower bound {lower} exceeds upper bound {upper} at index {index:?}")]
    BoundsOutOfOrder {
        index: Vec<usize>,
        lower: f64,
        upper: f64,
    },

    #[error("radius is negative ({value}) at index {index:?}")]
    NegativeRadius { index: Vec<usize>, value: f64 },

    #[error("extreme point enumeration would produce {count} tensors, cap is {cap}")]
    ExtremePointCap { count: u128, cap: u128 },

    #[error("asymmetric interval: {0}")]
    AsymmetricInterval(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
