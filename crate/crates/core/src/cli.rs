//! Command-line front end: read a Matrix Market file (or build a demo
//! matrix), run one algorithm and print a JSON or CSV report.
//!
//! Exit codes: `0` converged, `2` iteration cap reached without convergence,
//! `1` any error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{error::ErrorKind, Parser, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::demo::{demo_matrix, DemoKind};
use crate::iterations::{
    cholesky_iterate_arbitrary, cholesky_iterate_psd, cholesky_iterate_symmetric, IterationConfig,
    SingularValueResult,
};
use crate::matrix::DenseMatrix;
use crate::matrix_market::{parse_matrix_market, MatrixMarketError};
use crate::oracle::{jacobi_eigenvalues, singular_values_oracle};
use crate::qr::qr_iterate;
use crate::{LinalgError, PsdTolerance};

/// Off-diagonal ratio at which the Jacobi oracle stops.
pub const ORACLE_TOL: f64 = 1e-13;
/// `--verify` deviations above this are turned into a warning.
pub const VERIFY_WARN_THRESHOLD: f64 = 1e-6;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_NOT_CONVERGED: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    /// Cholesky iterations on a Hermitian PSD matrix.
    CholPsd,
    /// Shifted Cholesky iterations on a Hermitian matrix.
    CholSym,
    /// Cholesky iterations on the Gram matrix of any matrix.
    CholArb,
    /// Pure QR iterations with Cholesky-based QR factors (square input).
    QrIter,
    /// Jacobi eigenvalues of A^H A (reference values).
    Oracle,
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let value = self.to_possible_value().expect("no skipped variants");
        f.write_str(value.get_name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

/// Singular values of a dense matrix using Cholesky factorization.
#[derive(Debug, Clone, Parser)]
#[command(name = "cholsvd", version)]
pub struct Args {
    /// Algorithm to run.
    #[arg(long, value_enum)]
    pub algo: Algorithm,

    /// Matrix Market input file.
    #[arg(
        long,
        required_unless_present = "seed_demo",
        conflicts_with = "seed_demo"
    )]
    pub input: Option<PathBuf>,

    #[arg(long, default_value_t = 200)]
    pub max_iter: usize,

    /// Convergence tolerance on the off-diagonal ratio.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,

    /// Absolute pivot tolerance for the semi-definite Cholesky factorization.
    #[arg(long)]
    pub eps: Option<f64>,

    /// Start chol-arb from A A^H instead of A^H A (full-row-rank input).
    #[arg(long)]
    pub use_right_gram: bool,

    /// Also run the Jacobi oracle and report the maximum relative deviation.
    #[arg(long)]
    pub verify: bool,

    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,

    /// Use a reproducible N x N demo matrix instead of --input.
    #[arg(long, value_name = "N")]
    pub seed_demo: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub algorithm: Algorithm,
    pub values: Vec<f64>,
    pub iterations_used: usize,
    pub converged: bool,
    pub mu: Option<f64>,
    pub warnings: Vec<String>,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOutcome {
    pub report: RunReport,
    /// Max relative deviation from the oracle when `--verify` was given.
    pub verify_deviation: Option<f64>,
    pub exit_code: i32,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Usage(#[from] clap::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Parse {
        path: PathBuf,
        source: MatrixMarketError,
    },
    #[error("{algorithm} failed: {source}")]
    Algorithm {
        algorithm: Algorithm,
        source: LinalgError,
    },
    #[error("{0}")]
    Invalid(String),
}

/// Parse command-line arguments (program name first) and run.
pub fn run<I, T>(args: I) -> Result<RunOutcome, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = Args::try_parse_from(args)?;
    execute(&args)
}

fn load_matrix(args: &Args) -> Result<DenseMatrix, CliError> {
    if let Some(n) = args.seed_demo {
        let kind = match args.algo {
            Algorithm::CholPsd => DemoKind::PositiveSemidefinite,
            Algorithm::CholSym => DemoKind::Symmetric,
            _ => DemoKind::General,
        };
        return demo_matrix(n, kind)
            .ok_or_else(|| CliError::Invalid("--seed-demo needs N >= 1".into()));
    }
    let path = args
        .input
        .clone()
        .ok_or_else(|| CliError::Invalid("--input is required".into()))?;
    let file = File::open(&path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    parse_matrix_market(BufReader::new(file)).map_err(|source| CliError::Parse { path, source })
}

/// Run with already-parsed arguments.
pub fn execute(args: &Args) -> Result<RunOutcome, CliError> {
    let a = load_matrix(args)?;
    let mut cfg = IterationConfig::default()
        .with_max_iterations(args.max_iter)
        .with_convergence_tol(args.tol);
    if let Some(eps) = args.eps {
        cfg = cfg.with_psd_tolerance(PsdTolerance::Absolute(eps));
    }
    let algorithm = args.algo;
    let wrap = |source: LinalgError| CliError::Algorithm { algorithm, source };
    cfg.validate().map_err(wrap)?;

    let start = Instant::now();
    let result: SingularValueResult = match algorithm {
        Algorithm::CholPsd => cholesky_iterate_psd(&a, &cfg),
        Algorithm::CholSym => cholesky_iterate_symmetric(&a, &cfg),
        Algorithm::CholArb => cholesky_iterate_arbitrary(&a, &cfg, args.use_right_gram),
        Algorithm::QrIter => qr_iterate(&a, &cfg),
        Algorithm::Oracle => oracle_result(&a),
    }
    .map_err(wrap)?;

    let mut warnings = result.warnings.clone();
    if !result.converged {
        warnings.push(format!(
            "iteration cap {} reached without convergence (off-diagonal ratio {:.3e})",
            cfg.max_iterations, result.final_off_diagonal_ratio
        ));
    }
    let verify_deviation = if args.verify {
        let reference = singular_values_oracle(&a, ORACLE_TOL).map_err(wrap)?;
        let deviation = max_relative_deviation(&result.values, &reference);
        if deviation > VERIFY_WARN_THRESHOLD {
            warnings.push(format!(
                "verification deviation {deviation:.3e} exceeds {VERIFY_WARN_THRESHOLD:.0e}"
            ));
        }
        Some(deviation)
    } else {
        None
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;

    let exit_code = if result.converged {
        EXIT_OK
    } else {
        EXIT_NOT_CONVERGED
    };
    Ok(RunOutcome {
        report: RunReport {
            algorithm,
            values: result.values,
            iterations_used: result.iterations_used,
            converged: result.converged,
            mu: result.shift.map(|s| s.mu),
            warnings,
            elapsed_ms,
        },
        verify_deviation,
        exit_code,
    })
}

fn oracle_result(a: &DenseMatrix) -> crate::Result<SingularValueResult> {
    let eig = jacobi_eigenvalues(&a.gram(), ORACLE_TOL)?;
    Ok(SingularValueResult {
        values: eig.eigenvalues.iter().map(|l| l.max(0.0).sqrt()).collect(),
        iterations_used: eig.sweeps_used,
        converged: true,
        final_off_diagonal_ratio: 0.0,
        shift: None,
        signed_eigenvalues: None,
        warnings: Vec::new(),
        history: Vec::new(),
    })
}

/// `max_i |σ_i - σ_i^ref| / max(σ_1^ref, 1e-300)` over the common prefix.
pub fn max_relative_deviation(values: &[f64], reference: &[f64]) -> f64 {
    let scale = reference.first().copied().unwrap_or(0.0).max(1e-300);
    values
        .iter()
        .zip(reference)
        .map(|(v, r)| (v - r).abs() / scale)
        .fold(0.0, f64::max)
}

/// Serialize the report as a single JSON object followed by a newline.
pub fn render_json(report: &RunReport) -> String {
    let mut s = serde_json::to_string(report).expect("report serializes");
    s.push('\n');
    s
}

/// Header row `value`, then one value per line.
pub fn render_csv(report: &RunReport) -> String {
    let mut s = String::from("value\n");
    for v in &report.values {
        s.push_str(&format!("{v:?}\n"));
    }
    s
}

/// Full CLI behaviour over explicit streams; returns the process exit code.
pub fn main_with_io<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let parsed = match Args::try_parse_from(args) {
        Ok(parsed) => parsed,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    EXIT_ERROR
                }
            };
        }
    };
    match execute(&parsed) {
        Ok(outcome) => {
            let body = match parsed.output {
                OutputFormat::Json => render_json(&outcome.report),
                OutputFormat::Csv => {
                    let r = &outcome.report;
                    let _ = writeln!(
                        stderr,
                        "algorithm={} iterations={} converged={} mu={}",
                        r.algorithm,
                        r.iterations_used,
                        r.converged,
                        r.mu.map_or("none".to_string(), |m| format!("{m:e}"))
                    );
                    for w in &r.warnings {
                        let _ = writeln!(stderr, "warning: {w}");
                    }
                    render_csv(r)
                }
            };
            if let Some(d) = outcome.verify_deviation {
                let _ = writeln!(stderr, "verify: max relative deviation {d:e}");
            }
            if stdout.write_all(body.as_bytes()).is_err() {
                return EXIT_ERROR;
            }
            outcome.exit_code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_ERROR
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deviation_uses_largest_reference_value() {
        assert_eq!(max_relative_deviation(&[2.0, 1.0], &[2.0, 1.5]), 0.25);
        assert_eq!(max_relative_deviation(&[], &[]), 0.0);
        assert_eq!(max_relative_deviation(&[1.0, 0.0, 0.0], &[1.0]), 0.0);
    }

    #[test]
    fn csv_has_header_and_one_value_per_line() {
        let r = RunReport {
            algorithm: Algorithm::CholPsd,
            values: vec![3.0, 0.5],
            iterations_used: 1,
            converged: true,
            mu: None,
            warnings: vec![],
            elapsed_ms: 0.0,
        };
        assert_eq!(render_csv(&r), "value\n3.0\n0.5\n");
        let json = render_json(&r);
        assert!(json.contains("\"algorithm\":\"chol-psd\""));
        assert!(json.ends_with("}\n"));
    }

    #[test]
    fn seed_demo_runs_without_input() {
        let out = run(["cholsvd", "--algo", "chol-psd", "--seed-demo", "5"]).unwrap();
        assert_eq!(out.report.values.len(), 5);
        assert!(run(["cholsvd", "--algo", "chol-psd", "--seed-demo", "0"]).is_err());
    }

    #[test]
    fn unknown_flag_exits_with_one() {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        assert_eq!(
            main_with_io(["cholsvd", "--bogus"], &mut o, &mut e),
            EXIT_ERROR
        );
        assert!(!e.is_empty());
        let (mut o, mut e) = (Vec::new(), Vec::new());
        assert_eq!(main_with_io(["cholsvd", "--help"], &mut o, &mut e), EXIT_OK);
        assert!(String::from_utf8(o).unwrap().contains("--algo"));
    }
}
