//! Factor a Hermitian positive definite matrix and check `R^H R = A`.

use cholsvd::{chol_pd, DenseMatrix, Scalar};

fn main() -> cholsvd::Result<()> {
    let a = DenseMatrix::from_rows(&[
        [
            Scalar::new(4.0, 0.0),
            Scalar::new(1.0, 1.0),
            Scalar::new(0.0, 0.0),
        ],
        [
            Scalar::new(1.0, -1.0),
            Scalar::new(3.0, 0.0),
            Scalar::new(0.5, 0.0),
        ],
        [
            Scalar::new(0.0, 0.0),
            Scalar::new(0.5, 0.0),
            Scalar::new(2.0, 0.0),
        ],
    ])?;
    let r = chol_pd(&a)?;
    println!("R = {:?}", r.as_matrix());

    let err = r.adjoint_times_self().sub(&a)?.frobenius_norm() / a.frobenius_norm();
    println!("relative reconstruction error: {err:.2e}");

    // Not positive definite: the factorization stops at the failing pivot.
    let indefinite = DenseMatrix::from_real_rows(&[[1.0, 2.0], [2.0, 1.0]])?;
    match chol_pd(&indefinite) {
        Err(e) => println!("[[1,2],[2,1]]: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
