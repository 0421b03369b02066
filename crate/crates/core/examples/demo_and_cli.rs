//! Reproducible demo matrices and the CLI driven in-process.

use cholsvd::cli::main_with_io;
use cholsvd::demo::{demo_matrix, DemoKind};

fn main() {
    let a = demo_matrix(3, DemoKind::Symmetric).unwrap();
    println!("demo 3x3 symmetric: {a:?}");

    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let code = main_with_io(
        [
            "cholsvd",
            "--algo",
            "chol-sym",
            "--seed-demo",
            "3",
            "--verify",
            "--max-iter",
            "5000",
        ],
        &mut stdout,
        &mut stderr,
    );
    println!("exit {code}");
    print!("{}", String::from_utf8_lossy(&stdout));
    print!("{}", String::from_utf8_lossy(&stderr));
}
