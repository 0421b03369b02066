//! Singular values of dense real and complex matrices, computed with the
//! Cholesky factorization as the only factorization primitive.
//!
//! The crate is organised bottom-up:
//!
//! - [`matrix`]: the dense complex matrix type and its primitive operations
//!   (products, Gram matrices, norms, triangular inverse and pseudo-inverse).
//! - [`cholesky`]: Cholesky factorization for positive definite and positive
//!   semi-definite Hermitian matrices.
//! - [`iterations`]: Cholesky iterations `J <- R R^H` for PSD, Hermitian
//!   (shifted) and arbitrary rectangular matrices.
//! - [`qr`]: QR factors obtained from `chol(A^H A)` and the pure QR iteration
//!   built on top of them.
//! - [`oracle`]: an independent cyclic Jacobi eigensolver used for
//!   verification.
//! - [`matrix_market`], [`demo`] and [`cli`]: file I/O, reproducible demo
//!   matrices and the command-line front end.
//!
//! ```
//! use cholsvd::{cholesky_iterate_psd, DenseMatrix, IterationConfig};
//!
//! let a = DenseMatrix::from_real_rows(&[[2.0, 1.0], [1.0, 2.0]]).unwrap();
//! let result = cholesky_iterate_psd(&a, &IterationConfig::default()).unwrap();
//! assert!((result.values[0] - 3.0).abs() < 1e-8);
//! assert!((result.values[1] - 1.0).abs() < 1e-8);
//! ```

pub mod cholesky;
pub mod cli;
pub mod demo;
mod error;
pub mod iterations;
pub mod matrix;
pub mod matrix_market;
pub mod oracle;
pub mod qr;

pub use cholesky::{chol_pd, chol_psd, PsdTolerance};
pub use error::LinalgError;
pub use iterations::{
    cholesky_iterate_arbitrary, cholesky_iterate_psd, cholesky_iterate_symmetric,
    cholesky_iterate_symmetric_with_shift, compute_shift, IterateStats, IterationConfig,
    ShiftReport, SingularValueResult,
};
pub use matrix::{
    invert_upper_triangular, pinv_upper_triangular, DenseMatrix, Scalar, UpperTriangular,
};
pub use matrix_market::{parse_matrix_market, write_matrix_market, MatrixMarketError};
pub use oracle::{jacobi_eigenvalues, singular_values_oracle, OracleResult};
pub use qr::{qr_iterate, qr_via_cholesky, QrFactors};

pub type Result<T, E = LinalgError> = std::result::Result<T, E>;
