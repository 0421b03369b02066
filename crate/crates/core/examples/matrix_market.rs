//! Read a symmetric coordinate file, run the shifted iteration, write the
//! matrix back in dense array form.

use cholsvd::{
    cholesky_iterate_symmetric, parse_matrix_market, write_matrix_market, IterationConfig,
};

const INPUT: &str = "\
%%MatrixMarket matrix coordinate real symmetric
% lower triangle only
3 3 4
1 1 1.0
2 1 2.0
3 2 -1.0
3 3 0.5
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = parse_matrix_market(INPUT.as_bytes())?;
    println!("{a:?}");

    let res =
        cholesky_iterate_symmetric(&a, &IterationConfig::default().with_max_iterations(5000))?;
    println!("eigenvalues {:?}", res.eigenvalues_signed().unwrap());

    let mut out = Vec::new();
    write_matrix_market(&a, &mut out)?;
    print!("{}", String::from_utf8(out)?);

    let err = parse_matrix_market("%%MatrixMarket matrix array real general\n2 2\n1\n".as_bytes());
    println!("truncated file: {}", err.unwrap_err());
    Ok(())
}
