//! Cyclic Jacobi eigenvalues, independent of the Cholesky code.

use cholsvd::{jacobi_eigenvalues, singular_values_oracle, DenseMatrix, Scalar};

fn main() -> cholsvd::Result<()> {
    let a = DenseMatrix::from_rows(&[
        [
            Scalar::new(2.0, 0.0),
            Scalar::new(0.0, 1.0),
            Scalar::new(1.0, 0.0),
        ],
        [
            Scalar::new(0.0, -1.0),
            Scalar::new(-1.0, 0.0),
            Scalar::new(0.0, 0.5),
        ],
        [
            Scalar::new(1.0, 0.0),
            Scalar::new(0.0, -0.5),
            Scalar::new(0.5, 0.0),
        ],
    ])?;
    let o = jacobi_eigenvalues(&a, 1e-14)?;
    let sum: f64 = o.eigenvalues.iter().sum();
    let sq: f64 = o.eigenvalues.iter().map(|l| l * l).sum();
    println!("eigenvalues {:?} ({} sweeps)", o.eigenvalues, o.sweeps_used);
    println!("Σλ  = {sum:.14}  trace = {:.14}", a.trace()?.re);
    println!("Σλ² = {sq:.14}  ‖A‖²  = {:.14}", a.frobenius_norm().powi(2));

    let b = DenseMatrix::from_real_rows(&[[3.0, 0.0], [0.0, 0.0], [0.0, 4.0]])?;
    println!(
        "singular values of diag(3, 4) padded: {:?}",
        singular_values_oracle(&b, 1e-14)?
    );
    Ok(())
}
