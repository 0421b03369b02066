//! Unshifted QR iteration `A <- R Q` where each QR step comes from a
//! Cholesky factorization.

use cholsvd::{qr_iterate, DenseMatrix, IterationConfig};

fn main() -> cholsvd::Result<()> {
    let a = DenseMatrix::from_real_rows(&[[4.0, 1.0, 0.0], [1.0, 3.0, 1.0], [0.0, 1.0, 2.0]])?;
    let res = qr_iterate(&a, &IterationConfig::default().with_max_iterations(1000))?;
    let f0 = res.history[0].frobenius;
    let drift = res
        .history
        .iter()
        .map(|s| (s.frobenius - f0).abs())
        .fold(0.0, f64::max);
    println!("values {:?}", res.values);
    println!(
        "converged={} in {} iterations, max norm drift {drift:.2e}",
        res.converged, res.iterations_used
    );

    // A rotation has complex eigenvalues and never becomes triangular.
    let rot = DenseMatrix::from_real_rows(&[[0.0, -1.0], [1.0, 0.0]])?;
    let res = qr_iterate(&rot, &IterationConfig::default().with_max_iterations(20))?;
    println!(
        "rotation: converged={} ratio={:.2}",
        res.converged, res.final_off_diagonal_ratio
    );
    Ok(())
}
