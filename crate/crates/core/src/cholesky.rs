//! Cholesky factorization `A = R^H R` of Hermitian positive definite and
//! positive semi-definite matrices.

use crate::matrix::{DenseMatrix, Scalar, UpperTriangular};
use crate::{LinalgError, Result};

/// Relative tolerance used for the Hermitian precondition.
const HERMITIAN_RTOL: f64 = 1e-10;

/// Threshold `ε` below which a semi-definite pivot `|R_ii|` is treated as zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PsdTolerance {
    /// Scale-invariant default. A pivot is dropped when its radicand
    /// `A_ii - Σ |R_ki|^2` is at most `factor * max_i |A_ii|`, i.e.
    /// `ε = sqrt(factor * max_i |A_ii|)` (floored at `1e-300`).
    Relative(f64),
    /// Fixed `ε`, compared directly against `|R_ii|`.
    Absolute(f64),
}

impl Default for PsdTolerance {
    fn default() -> Self {
        PsdTolerance::Relative(1e-10)
    }
}

impl PsdTolerance {
    pub fn absolute(epsilon: f64) -> Result<Self> {
        Self::Absolute(epsilon).validated()
    }

    pub fn relative(factor: f64) -> Result<Self> {
        Self::Relative(factor).validated()
    }

    pub fn validated(self) -> Result<Self> {
        let v = match self {
            Self::Relative(v) | Self::Absolute(v) => v,
        };
        if v.is_finite() && v >= 0.0 {
            Ok(self)
        } else {
            Err(LinalgError::InvalidTolerance(v))
        }
    }

    /// The pivot threshold `ε` for a particular input.
    pub fn epsilon_for(&self, a: &DenseMatrix) -> f64 {
        match *self {
            Self::Absolute(eps) => eps,
            Self::Relative(factor) => {
                let n = a.rows().min(a.cols());
                let max_diag = (0..n).map(|i| a[(i, i)].norm()).fold(0.0, f64::max);
                (factor * max_diag).sqrt().max(1e-300)
            }
        }
    }
}

/// Cholesky factor of a Hermitian positive definite matrix.
///
/// Only the upper triangle of `a` is read once the Hermitian check passes.
/// Any pivot that is not strictly positive aborts with
/// [`LinalgError::NotPositiveDefinite`]; use [`chol_psd`] or a diagonal shift
/// in that case.
pub fn chol_pd(a: &DenseMatrix) -> Result<UpperTriangular> {
    a.require_hermitian("chol_pd", HERMITIAN_RTOL * a.frobenius_norm())?;
    let n = a.rows();
    let mut r = DenseMatrix::zeros(n, n);
    for i in 0..n {
        let pivot = a[(i, i)].re - column_norm_sqr(&r, i);
        if pivot.is_nan() || pivot <= 0.0 {
            return Err(LinalgError::NotPositiveDefinite { index: i, pivot });
        }
        let rii = pivot.sqrt();
        r.set(i, i, Scalar::new(rii, 0.0));
        fill_row(&mut r, a, i, rii);
    }
    Ok(UpperTriangular::from_dense_unchecked(r))
}

/// Cholesky factor of a Hermitian positive semi-definite matrix.
///
/// For each row the pivot radicand `A_ii - Σ_{k<i} |R_ki|^2` is clamped at
/// zero before the square root. When the resulting `|R_ii| <= ε` the whole
/// row `i` of `R` (diagonal included) is left at exact zero, so the number of
/// nonzero diagonal entries equals the numerical rank.
///
/// With `τ = n * max(ε², 1e-10 ‖A‖_F)`, the input is reported as
/// indefinite when a radicand falls below `-τ`
/// ([`LinalgError::NotPositiveSemidefinite`]), or when a dropped row still
/// carries a residual off-diagonal entry ([`LinalgError::IndefiniteCoupling`])
/// violating `|S_ij|^2 <= (S_ii + τ)(S_jj + τ)`, which
/// every PSD Schur complement `S` satisfies.
pub fn chol_psd(a: &DenseMatrix, tol: PsdTolerance) -> Result<UpperTriangular> {
    let tol = tol.validated()?;
    let norm = a.frobenius_norm();
    a.require_hermitian("chol_psd", HERMITIAN_RTOL * norm)?;
    let n = a.rows();
    let eps = tol.epsilon_for(a);
    let floor = n as f64 * (eps * eps).max(1e-10 * norm);

    let mut r = DenseMatrix::zeros(n, n);
    for i in 0..n {
        let radicand = a[(i, i)].re - column_norm_sqr(&r, i);
        if radicand < -floor {
            return Err(LinalgError::NotPositiveSemidefinite {
                index: i,
                pivot: radicand,
                threshold: -floor,
            });
        }
        let rii = radicand.max(0.0).sqrt();
        if rii > eps {
            r.set(i, i, Scalar::new(rii, 0.0));
            fill_row(&mut r, a, i, rii);
        } else {
            check_dropped_row(&r, a, i, radicand.max(0.0), floor)?;
        }
    }
    Ok(UpperTriangular::from_dense_unchecked(r))
}

fn check_dropped_row(
    r: &DenseMatrix,
    a: &DenseMatrix,
    i: usize,
    sii: f64,
    floor: f64,
) -> Result<()> {
    for j in i + 1..a.cols() {
        let mut s = a[(i, j)];
        for k in 0..i {
            s -= r[(k, i)].conj() * r[(k, j)];
        }
        let sjj = (a[(j, j)].re - column_norm_sqr(r, j)).max(0.0);
        let bound = ((sii + floor) * (sjj + floor)).sqrt();
        if s.norm() > bound {
            return Err(LinalgError::IndefiniteCoupling {
                index: i,
                coupled: j,
                magnitude: s.norm(),
                bound,
            });
        }
    }
    Ok(())
}

/// `Σ_{k<i} |R_ki|^2`.
fn column_norm_sqr(r: &DenseMatrix, i: usize) -> f64 {
    (0..i).map(|k| r[(k, i)].norm_sqr()).sum()
}

/// `R_ij = (A_ij - Σ_{k<i} conj(R_ki) R_kj) / R_ii` for `j > i`.
fn fill_row(r: &mut DenseMatrix, a: &DenseMatrix, i: usize, rii: f64) {
    for j in i + 1..a.cols() {
        let mut s = a[(i, j)];
        for k in 0..i {
            s -= r[(k, i)].conj() * r[(k, j)];
        }
        r.set(i, j, s / rii);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> DenseMatrix {
        DenseMatrix::from_fn(rows, cols, |_, _| {
            Scalar::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        })
        .unwrap()
    }

    fn rel_reconstruction(a: &DenseMatrix, r: &UpperTriangular) -> f64 {
        r.adjoint_times_self().sub(a).unwrap().frobenius_norm() / a.frobenius_norm()
    }

    #[test]
    fn chol_pd_examples() {
        let i = DenseMatrix::identity(4);
        assert_eq!(chol_pd(&i).unwrap().as_matrix(), &i);

        let a = DenseMatrix::from_real_rows(&[[4.0, 0.0], [0.0, 1.0]]).unwrap();
        assert_eq!(
            chol_pd(&a).unwrap().into_matrix(),
            DenseMatrix::from_real_rows(&[[2.0, 0.0], [0.0, 1.0]]).unwrap()
        );

        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let b = random(&mut rng, 6, 6);
        let a = b.gram().shift_diagonal(1.0).unwrap();
        let r = chol_pd(&a).unwrap();
        assert!(rel_reconstruction(&a, &r) <= 1e-12);
        for d in r.diagonal() {
            assert!(d.re > 0.0 && d.im == 0.0);
        }
    }

    #[test]
    fn chol_pd_errors() {
        let asym = DenseMatrix::from_real_rows(&[[2.0, 1.0], [0.0, 2.0]]).unwrap();
        assert!(matches!(
            chol_pd(&asym),
            Err(LinalgError::NotHermitian { .. })
        ));
        let indef = DenseMatrix::from_real_rows(&[[1.0, 2.0], [2.0, 1.0]]).unwrap();
        assert!(matches!(
            chol_pd(&indef),
            Err(LinalgError::NotPositiveDefinite { index: 1, .. })
        ));
        let semi = DenseMatrix::from_real_rows(&[[1.0, 1.0], [1.0, 1.0]]).unwrap();
        assert!(matches!(
            chol_pd(&semi),
            Err(LinalgError::NotPositiveDefinite { index: 1, .. })
        ));
        assert!(matches!(
            chol_pd(&DenseMatrix::zeros(2, 3)),
            Err(LinalgError::NotSquare { .. })
        ));
    }

    #[test]
    fn chol_psd_examples() {
        let ones = DenseMatrix::from_real_rows(&[[1.0, 1.0], [1.0, 1.0]]).unwrap();
        assert_eq!(
            chol_psd(&ones, PsdTolerance::default())
                .unwrap()
                .into_matrix(),
            DenseMatrix::from_real_rows(&[[1.0, 1.0], [0.0, 0.0]]).unwrap()
        );

        let z = DenseMatrix::zeros(3, 3);
        assert_eq!(
            chol_psd(&z, PsdTolerance::default()).unwrap().into_matrix(),
            z
        );

        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let b = random(&mut rng, 3, 5);
        let a = b.gram();
        let r = chol_psd(&a, PsdTolerance::default()).unwrap();
        assert!(rel_reconstruction(&a, &r) <= 1e-10);
        let nonzero = r
            .diagonal()
            .iter()
            .filter(|d| **d != Scalar::new(0.0, 0.0))
            .count();
        assert_eq!(nonzero, 3);
    }

    #[test]
    fn chol_psd_rejects_indefinite() {
        let a = DenseMatrix::from_real_rows(&[[0.0, 2.0], [2.0, 0.0]]).unwrap();
        // Zero pivot with a nonzero coupling: caught by the dropped-row check.
        assert!(matches!(
            chol_psd(&a, PsdTolerance::default()),
            Err(LinalgError::IndefiniteCoupling {
                index: 0,
                coupled: 1,
                ..
            })
        ));
        let b = DenseMatrix::from_real_rows(&[[1.0, 0.0], [0.0, -1.0]]).unwrap();
        assert!(matches!(
            chol_psd(&b, PsdTolerance::default()),
            Err(LinalgError::NotPositiveSemidefinite { index: 1, .. })
        ));
    }

    #[test]
    fn clamps_roundoff_negative_pivots() {
        // Rank-one matrix whose second radicand evaluates slightly negative.
        let v = [0.1_f64, 0.7, 0.3];
        let a = DenseMatrix::from_fn(3, 3, |i, j| Scalar::new(v[i] * v[j], 0.0)).unwrap();
        let r = chol_psd(&a, PsdTolerance::Absolute(0.0)).unwrap();
        for d in r.diagonal() {
            assert!(d.re.is_finite() && d.re >= 0.0 && d.im == 0.0);
        }
    }

    #[test]
    fn pd_and_psd_agree_on_definite_input() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let a = random(&mut rng, 5, 5).gram().shift_diagonal(0.5).unwrap();
        let pd = chol_pd(&a).unwrap();
        let psd = chol_psd(&a, PsdTolerance::default()).unwrap();
        let diff = pd.as_matrix().sub(psd.as_matrix()).unwrap();
        assert!(diff.as_slice().iter().all(|z| z.norm() <= 1e-12));
    }

    #[test]
    fn diagonal_input_gives_square_roots() {
        let d = [4.0, 2.0, 0.0, 9.0];
        let a = DenseMatrix::from_diagonal(&d).unwrap();
        let r = chol_psd(&a, PsdTolerance::default()).unwrap();
        for (i, x) in d.iter().enumerate() {
            assert_eq!(r.as_matrix()[(i, i)].re, x.sqrt());
        }
    }

    #[test]
    fn tolerance_validation() {
        assert!(PsdTolerance::absolute(-1.0).is_err());
        assert!(PsdTolerance::relative(f64::NAN).is_err());
        assert!(PsdTolerance::absolute(0.0).is_ok());
        let a = DenseMatrix::from_diagonal(&[4.0, 1.0]).unwrap();
        assert_eq!(PsdTolerance::Absolute(0.25).epsilon_for(&a), 0.25);
        assert!((PsdTolerance::Relative(1e-10).epsilon_for(&a) - 2e-5).abs() < 1e-18);
        assert_eq!(
            PsdTolerance::default().epsilon_for(&DenseMatrix::zeros(2, 2)),
            1e-300
        );
        let bad = chol_psd(&a, PsdTolerance::Absolute(-1.0));
        assert!(matches!(bad, Err(LinalgError::InvalidTolerance(_))));
    }
}
