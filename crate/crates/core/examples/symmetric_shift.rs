//! Indefinite Hermitian input: shift by a Gershgorin bound, iterate on
//! `A + μI`, read eigenvalues back as `diag(J) - μ`.

use cholsvd::{
    cholesky_iterate_symmetric, cholesky_iterate_symmetric_with_shift, compute_shift, DenseMatrix,
    IterationConfig,
};

fn main() -> cholsvd::Result<()> {
    let a = DenseMatrix::from_real_rows(&[[2.0, 1.0, 0.0], [1.0, -3.0, 0.5], [0.0, 0.5, 1.0]])?;
    let shift = compute_shift(&a)?;
    println!(
        "Gershgorin lower bound {:.4}, μ = {:.6}",
        shift.gershgorin_lower_bound, shift.mu
    );

    let cfg = IterationConfig::default().with_max_iterations(2000);
    let res = cholesky_iterate_symmetric(&a, &cfg)?;
    println!("eigenvalues     {:?}", res.eigenvalues_signed().unwrap());
    println!("singular values {:?}", res.values);
    println!("iterations      {}", res.iterations_used);

    // Any larger shift works too, at the price of slower convergence.
    let wide = cholesky_iterate_symmetric_with_shift(&a, 2.0 * shift.mu, &cfg)?;
    println!(
        "with 2μ         {:?} ({} iterations)",
        wide.values, wide.iterations_used
    );
    Ok(())
}
