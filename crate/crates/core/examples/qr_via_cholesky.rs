//! QR decomposition with `R = chol(A^H A)` and `Q = A R^{-1}`, falling back
//! to the pseudo-inverse when `A` loses column rank.

use cholsvd::{qr_via_cholesky, DenseMatrix, PsdTolerance};

fn report(name: &str, a: &DenseMatrix) -> cholsvd::Result<()> {
    let f = qr_via_cholesky(a, PsdTolerance::default())?;
    let n = a.cols();
    let orth = f.q.gram().sub(&DenseMatrix::identity(n))?.frobenius_norm();
    let rec = f.q.matmul(f.r.as_matrix())?.sub(a)?.frobenius_norm() / a.frobenius_norm();
    println!("{name}: rank deficient = {}", f.rank_deficient);
    println!("  ‖Q^H Q - I‖_F = {orth:.2e}");
    println!("  ‖QR - A‖/‖A‖  = {rec:.2e}");
    let col_norms: Vec<f64> = (0..n)
        .map(|j| {
            (0..a.rows())
                .map(|i| f.q[(i, j)].norm_sqr())
                .sum::<f64>()
                .sqrt()
        })
        .collect();
    println!("  column norms of Q = {col_norms:.3?}");
    Ok(())
}

fn main() -> cholsvd::Result<()> {
    let full = DenseMatrix::from_real_rows(&[[1.0, 2.0], [3.0, 4.0], [5.0, 7.0]])?;
    report("full column rank", &full)?;

    // Third column is the sum of the first two.
    let deficient = DenseMatrix::from_real_rows(&[
        [1.0, 0.0, 1.0],
        [2.0, 1.0, 3.0],
        [0.0, 1.0, 1.0],
        [1.0, 1.0, 2.0],
    ])?;
    report("rank 2 of 3", &deficient)?;
    Ok(())
}
