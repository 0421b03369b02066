//! Semi-definite Cholesky on a rank-deficient Gram matrix: zero pivots
//! reveal the rank.

use cholsvd::{chol_psd, DenseMatrix, PsdTolerance};

fn main() -> cholsvd::Result<()> {
    // 2 x 4 factor, so B^T B is 4 x 4 with rank 2.
    let b = DenseMatrix::from_real_rows(&[[1.0, 2.0, 0.0, 1.0], [0.0, 1.0, 1.0, -1.0]])?;
    let a = b.gram();

    for tol in [PsdTolerance::default(), PsdTolerance::absolute(1e-6)?] {
        let r = chol_psd(&a, tol)?;
        let eps = tol.epsilon_for(&a);
        let diag: Vec<f64> = r.diagonal().iter().map(|d| d.re).collect();
        println!("{tol:?}: eps = {eps:.2e}");
        println!("  diag(R) = {diag:.6?}");
        println!("  rank    = {}", r.count_nonzero_pivots(eps));
        let err = r.adjoint_times_self().sub(&a)?.frobenius_norm() / a.frobenius_norm();
        println!("  ‖R^H R - A‖/‖A‖ = {err:.2e}");
    }

    let bad = DenseMatrix::from_real_rows(&[[0.0, 2.0], [2.0, 0.0]])?;
    if let Err(e) = chol_psd(&bad, PsdTolerance::default()) {
        println!("[[0,2],[2,0]]: {e}");
    }
    Ok(())
}
