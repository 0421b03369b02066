use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("invalid dimensions: {rows}x{cols} with {len} entries")]
    InvalidDimensions {
        rows: usize,
        cols: usize,
        len: usize,
    },

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("{op}: shape mismatch between {left:?} and {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("{op} requires a square matrix, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },

    #[error("matrix is not Hermitian: max |a - a^H| = {deviation:e} exceeds {tol:e}")]
    NotHermitian { deviation: f64, tol: f64 },

    #[error("matrix is not upper triangular: nonzero entry at ({row}, {col})")]
    NotUpperTriangular { row: usize, col: usize },

    #[error("row {row} has a negligible pivot but entry ({row}, {col}) is nonzero")]
    NonZeroDroppedRow { row: usize, col: usize },

    #[error("singular triangular factor: |r[{index}, {index}]| = {magnitude:e} <= {tol:e}")]
    SingularFactor {
        index: usize,
        magnitude: f64,
        tol: f64,
    },

    #[error("matrix is not positive definite: pivot {index} is {pivot:e}")]
    NotPositiveDefinite { index: usize, pivot: f64 },

    #[error(
        "matrix is not positive semi-definite: pivot {index} is {pivot:e} (below {threshold:e})"
    )]
    NotPositiveSemidefinite {
        index: usize,
        pivot: f64,
        threshold: f64,
    },

    #[error(
        "matrix is not positive semi-definite: pivot {index} vanished but its coupling to \
         {coupled} has magnitude {magnitude:e} (at most {bound:e} allowed)"
    )]
    IndefiniteCoupling {
        index: usize,
        coupled: usize,
        magnitude: f64,
        bound: f64,
    },

    #[error("invalid tolerance {0:e}: must be finite and non-negative")]
    InvalidTolerance(f64),

    #[error("invalid iteration config: {0}")]
    InvalidConfig(String),

    #[error("invalid shift {0:e}: must be finite and non-negative")]
    InvalidShift(f64),

    #[error("convergence integrity violated: {0}")]
    ConvergenceIntegrity(String),

    #[error("jacobi sweeps did not converge after {sweeps} sweeps (off-diagonal ratio {ratio:e})")]
    NoConvergence { sweeps: usize, ratio: f64 },
}
