//! Singular values of a rectangular matrix from the iteration on `A^H A`
//! or `A A^H`.

use cholsvd::{cholesky_iterate_arbitrary, singular_values_oracle, DenseMatrix, IterationConfig};

fn main() -> cholsvd::Result<()> {
    let a = DenseMatrix::from_real_rows(&[
        [1.0, 2.0, 0.0, 1.0, 3.0],
        [0.0, 1.0, 4.0, -1.0, 0.0],
        [2.0, 0.0, 1.0, 0.0, 1.0],
    ])?;
    let cfg = IterationConfig::default().with_max_iterations(5000);

    // A^H A is 5 x 5 with rank 3, so two values come out as zero.
    let left = cholesky_iterate_arbitrary(&a, &cfg, false)?;
    println!("from A^H A: {:?}", left.values);

    // A A^H is 3 x 3 and full rank for this full-row-rank input.
    let right = cholesky_iterate_arbitrary(&a, &cfg, true)?;
    println!("from A A^H: {:?}", right.values);

    let sum: f64 = right.values.iter().map(|s| s * s).sum();
    println!(
        "Σσ² = {sum:.12}, ‖A‖_F² = {:.12}",
        a.frobenius_norm().powi(2)
    );
    println!("oracle:     {:?}", singular_values_oracle(&a, 1e-14)?);
    for w in &left.warnings {
        println!("warning: {w}");
    }
    Ok(())
}
