//! Cyclic Jacobi eigensolver for Hermitian matrices.
//!
//! Used only for verification. It relies on nothing from the Cholesky or QR
//! code, only on the matrix primitives.

use crate::iterations::sort_descending;
use crate::matrix::{DenseMatrix, Scalar};
use crate::{LinalgError, Result};

pub const MAX_SWEEPS: usize = 60;

const HERMITIAN_RTOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    /// Real eigenvalues, descending.
    pub eigenvalues: Vec<f64>,
    pub sweeps_used: usize,
}

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations.
///
/// Each sweep visits every pair `(p, q)`, `p < q`, and applies the unitary
/// rotation
///
/// ```text
/// G_pp = c, G_pq = s w, G_qp = -s conj(w), G_qq = c,   w = a_pq / |a_pq|
/// ```
///
/// with `t = s / c` the smaller root of `t^2 + 2 τ t - 1 = 0`,
/// `τ = (a_qq - a_pp) / (2 |a_pq|)`, which zeroes `a_pq` in `G^H A G`.
/// Sweeps continue until `‖offdiag(A)‖_F / ‖A‖_F <= tol`, at most
/// [`MAX_SWEEPS`] times.
pub fn jacobi_eigenvalues(a: &DenseMatrix, tol: f64) -> Result<OracleResult> {
    let norm = a.frobenius_norm();
    a.require_hermitian("jacobi_eigenvalues", HERMITIAN_RTOL * norm)?;
    let n = a.rows();
    let mut m: Vec<Scalar> = a.as_slice().to_vec();
    for i in 0..n {
        m[i * n + i].im = 0.0;
    }

    let off_ratio = |m: &[Scalar]| -> f64 {
        if norm == 0.0 {
            return 0.0;
        }
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += m[i * n + j].norm_sqr();
                }
            }
        }
        s.sqrt() / norm
    };

    let mut ratio = off_ratio(&m);
    for sweep in 1..=MAX_SWEEPS {
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut m, n, p, q);
            }
        }
        ratio = off_ratio(&m);
        if ratio <= tol {
            let mut eigenvalues: Vec<f64> = (0..n).map(|i| m[i * n + i].re).collect();
            sort_descending(&mut eigenvalues);
            return Ok(OracleResult {
                eigenvalues,
                sweeps_used: sweep,
            });
        }
    }
    Err(LinalgError::NoConvergence {
        sweeps: MAX_SWEEPS,
        ratio,
    })
}

fn rotate(m: &mut [Scalar], n: usize, p: usize, q: usize) {
    let apq = m[p * n + q];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let w = apq / mag;
    let app = m[p * n + p].re;
    let aqq = m[q * n + q].re;
    let tau = (aqq - app) / (2.0 * mag);
    let t = if tau.is_infinite() {
        0.5 / tau
    } else {
        tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let sw = w * s;
    let swc = sw.conj();

    // A <- A G (columns p, q)
    for k in 0..n {
        let akp = m[k * n + p];
        let akq = m[k * n + q];
        m[k * n + p] = akp * c - akq * swc;
        m[k * n + q] = akp * sw + akq * c;
    }
    // A <- G^H A (rows p, q)
    for k in 0..n {
        let apk = m[p * n + k];
        let aqk = m[q * n + k];
        m[p * n + k] = apk * c - aqk * sw;
        m[q * n + k] = apk * swc + aqk * c;
    }
    m[p * n + q] = Scalar::new(0.0, 0.0);
    m[q * n + p] = Scalar::new(0.0, 0.0);
    m[p * n + p].im = 0.0;
    m[q * n + q].im = 0.0;
}

/// Singular values of any matrix as `sqrt(max(λ, 0))` over the Jacobi
/// eigenvalues of `A^H A`; one value per column, descending.
pub fn singular_values_oracle(a: &DenseMatrix, tol: f64) -> Result<Vec<f64>> {
    let eig = jacobi_eigenvalues(&a.gram(), tol)?;
    Ok(eig
        .eigenvalues
        .into_iter()
        .map(|l| l.max(0.0).sqrt())
        .collect())
}
