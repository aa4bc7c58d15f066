//! Error types shared across the library.

use thiserror::Error;

/// Errors produced by state construction, channel application and the
/// feasibility checkers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoreError {
    /// A matrix that must be square is not.
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    /// Hermiticity violated beyond tolerance.
    #[error("matrix is not Hermitian (max |m - m^dag| = {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    /// Trace differs from one beyond tolerance.
    #[error("trace must equal 1 (got {trace:.12})")]
    InvalidTrace { trace: f64 },

    /// An eigenvalue is negative beyond tolerance.
    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    /// Two objects that must share a dimension do not.
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    /// A relative entropy was requested where the reference state has a zero
    /// eigenvalue on the support of the first argument.
    #[error("support violation: reference state is singular on the state's support (overlap {overlap:.3e})")]
    SupportViolation { overlap: f64 },

    /// A scalar argument lies outside its admissible range.
    #[error("invalid argument: {0}")]
    Domain(String),

    /// The ladder reservoir's superposition sits within shift reach of the
    /// truncated edge, so the embedded unitary would act as the identity on
    /// part of its support.
    #[error(
        "ladder truncation: support [{offset}, {}] of {num_levels} levels is within one shift of the boundary",
        offset + support_length - 1
    )]
    Truncation {
        offset: usize,
        support_length: usize,
        num_levels: usize,
    },
}
