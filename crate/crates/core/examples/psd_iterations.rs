//! Cholesky iterations `J <- R R^H` on a positive definite matrix. The
//! diagonal converges to the eigenvalues; trace and Frobenius norm stay put.

use cholsvd::{cholesky_iterate_psd, jacobi_eigenvalues, DenseMatrix, IterationConfig};

fn main() -> cholsvd::Result<()> {
    let a = DenseMatrix::from_real_rows(&[
        [10.0, 2.0, 1.0, 0.0],
        [2.0, 6.0, 0.5, 0.3],
        [1.0, 0.5, 3.0, 0.2],
        [0.0, 0.3, 0.2, 1.0],
    ])?;
    let res = cholesky_iterate_psd(&a, &IterationConfig::default())?;

    for s in res.history.iter().step_by(5) {
        println!(
            "k={:>3}  trace={:.12}  ‖J‖_F={:.12}  off/‖J‖={:.2e}",
            s.iteration, s.trace, s.frobenius, s.off_diagonal_ratio
        );
    }
    println!(
        "converged={} after {} iterations",
        res.converged, res.iterations_used
    );
    println!("values  = {:?}", res.values);
    println!("jacobi  = {:?}", jacobi_eigenvalues(&a, 1e-14)?.eigenvalues);
    Ok(())
}
