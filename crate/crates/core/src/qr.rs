//! QR factors from `R = chol(A^H A)`, `Q = A R^{-1}`, and the pure QR
//! iteration built on them.

use crate::cholesky::{chol_psd, PsdTolerance};
use crate::iterations::{sort_descending, IterateStats, IterationConfig, SingularValueResult};
use crate::matrix::{invert_upper_triangular, pinv_upper_triangular, DenseMatrix, UpperTriangular};
use crate::{LinalgError, Result};

/// Relative Frobenius drift of `J^(k)` that aborts [`qr_iterate`].
pub const NORM_DRIFT_LIMIT: f64 = 1e-6;

/// `A = Q R` with `R` the (semi-definite) Cholesky factor of `A^H A`.
#[derive(Debug, Clone, PartialEq)]
pub struct QrFactors {
    /// `m x n`; columns at zero pivots of `R` are exactly zero.
    pub q: DenseMatrix,
    /// `n x n`.
    pub r: UpperTriangular,
    /// Some pivot of `R` vanished and `Q` was formed with `R^+`.
    pub rank_deficient: bool,
}

/// QR decomposition of any `m x n` matrix.
///
/// For full column rank `Q = A R^{-1}` has orthonormal columns
/// (`Q^H Q = R^{-H} A^H A R^{-1} = I`). Otherwise `Q = A R^+` and
/// `rank_deficient` is set.
pub fn qr_via_cholesky(a: &DenseMatrix, tol: PsdTolerance) -> Result<QrFactors> {
    let r = chol_psd(&a.gram(), tol)?;
    let q_from = |r: &UpperTriangular| -> Result<(DenseMatrix, bool)> {
        if r.diagonal().iter().all(|d| d.re > 0.0) {
            Ok((a.matmul(&invert_upper_triangular(r, 0.0)?)?, false))
        } else {
            Ok((a.matmul(&pinv_upper_triangular(r, 0.0)?)?, true))
        }
    };
    let (q, rank_deficient) = q_from(&r)?;
    Ok(QrFactors {
        q,
        r,
        rank_deficient,
    })
}

/// Pure QR iteration `J <- R Q` on a square matrix, with the QR factors of
/// each iterate taken from [`qr_via_cholesky`].
///
/// Stops when `‖strictly_lower(J)‖_F / ‖J‖_F <= convergence_tol`. The
/// reported values are `|diag(J)|` sorted descending: singular values for
/// normal inputs and eigenvalue magnitudes in general. Non-normal inputs
/// with complex-conjugate eigenvalue pairs may never reach triangular form;
/// the result then carries `converged = false`.
///
/// Each step is a unitary similarity, so `‖J‖_F` is tracked and a relative
/// drift above [`NORM_DRIFT_LIMIT`] is reported as
/// [`LinalgError::ConvergenceIntegrity`].
pub fn qr_iterate(a: &DenseMatrix, cfg: &IterationConfig) -> Result<SingularValueResult> {
    cfg.validate()?;
    if !a.is_square() {
        return Err(LinalgError::NotSquare {
            op: "qr_iterate (use cholesky_iterate_arbitrary for rectangular input)",
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let norm0 = a.frobenius_norm();
    let stats = |k: usize, j: &DenseMatrix| -> Result<IterateStats> {
        let frobenius = j.frobenius_norm();
        let lower = j.strictly_lower_norm()?;
        Ok(IterateStats {
            iteration: k,
            trace: j.trace()?.re,
            frobenius,
            off_diagonal_ratio: if frobenius > 0.0 {
                lower / frobenius
            } else {
                0.0
            },
        })
    };

    let mut history = vec![stats(0, a)?];
    let mut j = a.clone();
    let mut converged = false;
    let mut ratio = history[0].off_diagonal_ratio;
    let mut iterations = 0;
    while iterations < cfg.max_iterations {
        let QrFactors { q, r, .. } = qr_via_cholesky(&j, cfg.psd_tolerance)?;
        j = r.as_matrix().matmul(&q)?;
        iterations += 1;
        let s = stats(iterations, &j)?;
        let drift = (s.frobenius - norm0).abs();
        if drift > NORM_DRIFT_LIMIT * norm0 {
            return Err(LinalgError::ConvergenceIntegrity(format!(
                "QR iterate {iterations} has Frobenius norm {:.6e}, started at {norm0:.6e}",
                s.frobenius
            )));
        }
        ratio = s.off_diagonal_ratio;
        history.push(s);
        if ratio <= cfg.convergence_tol {
            converged = true;
            break;
        }
    }

    let mut values: Vec<f64> = j.diag_vector()?.iter().map(|z| z.norm()).collect();
    sort_descending(&mut values);
    Ok(SingularValueResult {
        values,
        iterations_used: iterations,
        converged,
        final_off_diagonal_ratio: ratio,
        shift: None,
        signed_eigenvalues: None,
        warnings: Vec::new(),
        history,
    })
}
