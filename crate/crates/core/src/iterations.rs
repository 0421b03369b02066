//! Cholesky iterations `J <- R R^H` with `R = chol(J)`.
//!
//! Each step is the similarity `J' = R J R^{-1}`, so trace and Frobenius
//! norm are conserved while the off-diagonal part decays and the diagonal
//! approaches the eigenvalues of the starting matrix. Three entry points
//! differ only in the starting matrix and in how the diagonal is read out:
//!
//! | entry point                      | `J^(0)`                | read-out                 |
//! |----------------------------------|------------------------|--------------------------|
//! | [`cholesky_iterate_psd`]         | `A`                    | `diag(J)`                |
//! | [`cholesky_iterate_symmetric`]   | `A + μI`               | `|diag(J) - μ|`          |
//! | [`cholesky_iterate_arbitrary`]   | `A^H A` or `A A^H`     | `sqrt(diag(J))`          |

use serde::{Deserialize, Serialize};

use crate::cholesky::{chol_psd, PsdTolerance};
use crate::matrix::{DenseMatrix, UpperTriangular};
use crate::{LinalgError, Result};

/// Ratio of max/min nonzero pivot of the first factor above which an
/// ill-conditioning warning is attached to the result.
pub const CONDITION_WARNING_THRESHOLD: f64 = 1e7;

const HERMITIAN_RTOL: f64 = 1e-10;

// ── Configuration and results ───────────────────────────────────────

/// Loop bound and stopping rule shared by every iteration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IterationConfig {
    /// Hard cap on the number of iterations.
    pub max_iterations: usize,
    /// Stop once the off-diagonal ratio `‖offdiag(J)‖_F / ‖J‖_F` is at most this.
    pub convergence_tol: f64,
    pub psd_tolerance: PsdTolerance,
}

impl Default for IterationConfig {
    fn default() -> Self {
        Self {
            max_iterations: 200,
            convergence_tol: 1e-10,
            psd_tolerance: PsdTolerance::default(),
        }
    }
}

impl IterationConfig {
    pub fn with_max_iterations(mut self, max_iterations: usize) -> Self {
        self.max_iterations = max_iterations;
        self
    }

    pub fn with_convergence_tol(mut self, tol: f64) -> Self {
        self.convergence_tol = tol;
        self
    }

    pub fn with_psd_tolerance(mut self, tol: PsdTolerance) -> Self {
        self.psd_tolerance = tol;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_iterations == 0 {
            return Err(LinalgError::InvalidConfig(
                "max_iterations must be at least 1".into(),
            ));
        }
        if !(self.convergence_tol > 0.0 && self.convergence_tol.is_finite()) {
            return Err(LinalgError::InvalidConfig(format!(
                "convergence_tol must be positive and finite, got {:e}",
                self.convergence_tol
            )));
        }
        self.psd_tolerance.validated().map(|_| ())
    }
}

/// Pivoting constant `μ` for the shifted iteration and the Gershgorin bound
/// it was derived from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShiftReport {
    pub mu: f64,
    /// `min_i (Re a_ii - Σ_{j≠i} |a_ij|)`, a lower bound on the spectrum.
    pub gershgorin_lower_bound: f64,
}

/// Snapshot of one iterate `J^(k)`; `iteration == 0` is the starting matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IterateStats {
    pub iteration: usize,
    /// Real part of `trace(J^(k))`.
    pub trace: f64,
    pub frobenius: f64,
    /// Convergence measure for this iterate.
    pub off_diagonal_ratio: f64,
}

/// Singular values (descending) plus convergence diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularValueResult {
    pub values: Vec<f64>,
    pub iterations_used: usize,
    pub converged: bool,
    pub final_off_diagonal_ratio: f64,
    /// Shift used by the symmetric iteration.
    pub shift: Option<ShiftReport>,
    /// Signed eigenvalues `Λ` from the symmetric iteration, descending.
    pub signed_eigenvalues: Option<Vec<f64>>,
    pub warnings: Vec<String>,
    /// One entry per iterate, starting with `J^(0)`.
    pub history: Vec<IterateStats>,
}

impl SingularValueResult {
    /// `Λ = diag(J) - μ` for results of [`cholesky_iterate_symmetric`].
    pub fn eigenvalues_signed(&self) -> Option<&[f64]> {
        self.signed_eigenvalues.as_deref()
    }
}

/// Descending sort that keeps diagonal index order among ties.
pub(crate) fn sort_descending(values: &mut [f64]) {
    values.sort_by(|a, b| b.total_cmp(a));
}

// ── Shift ───────────────────────────────────────────────────────────

/// Gershgorin-based `μ` making `A + μI` positive definite.
///
/// `μ = -bound + δ` with `δ = 1e-8 max(1, ‖A‖_F)` when the Gershgorin lower
/// bound is negative; `μ = 0` otherwise.
pub fn compute_shift(a: &DenseMatrix) -> Result<ShiftReport> {
    a.require_hermitian("compute_shift", HERMITIAN_RTOL * a.frobenius_norm())?;
    let bound = gershgorin_lower_bound(a);
    let mu = if bound < 0.0 {
        -bound + 1e-8 * a.frobenius_norm().max(1.0)
    } else {
        0.0
    };
    Ok(ShiftReport {
        mu,
        gershgorin_lower_bound: bound,
    })
}

fn gershgorin_lower_bound(a: &DenseMatrix) -> f64 {
    (0..a.rows())
        .map(|i| {
            let radius: f64 = (0..a.cols())
                .filter(|&j| j != i)
                .map(|j| a[(i, j)].norm())
                .sum();
            a[(i, i)].re - radius
        })
        .fold(f64::INFINITY, f64::min)
}

// ── Core loop ───────────────────────────────────────────────────────

struct LoopOutcome {
    j: DenseMatrix,
    first_factor: Option<UpperTriangular>,
    last_factor: Option<UpperTriangular>,
    iterations: usize,
    converged: bool,
    ratio: f64,
    history: Vec<IterateStats>,
}

fn stats(iteration: usize, j: &DenseMatrix) -> Result<IterateStats> {
    let frobenius = j.frobenius_norm();
    let off = j.off_diagonal_norm()?;
    Ok(IterateStats {
        iteration,
        trace: j.trace()?.re,
        frobenius,
        off_diagonal_ratio: if frobenius > 0.0 {
            off / frobenius
        } else {
            0.0
        },
    })
}

/// Runs `R = chol_psd(J); J = R R^H` at least once and until the
/// off-diagonal ratio drops to the tolerance or the cap binds.
fn run_cholesky_loop(j0: DenseMatrix, cfg: &IterationConfig) -> Result<LoopOutcome> {
    let mut history = Vec::with_capacity(cfg.max_iterations.min(1024) + 1);
    history.push(stats(0, &j0)?);
    let mut j = j0;
    let mut first_factor = None;
    let mut last_factor = None;
    let mut ratio = history[0].off_diagonal_ratio;
    let mut converged = false;
    let mut iterations = 0;
    while iterations < cfg.max_iterations {
        let r = chol_psd(&j, cfg.psd_tolerance)?;
        j = r.times_own_adjoint();
        iterations += 1;
        let s = stats(iterations, &j)?;
        ratio = s.off_diagonal_ratio;
        history.push(s);
        if first_factor.is_none() {
            first_factor = Some(r.clone());
        }
        last_factor = Some(r);
        if ratio <= cfg.convergence_tol {
            converged = true;
            break;
        }
    }
    Ok(LoopOutcome {
        j,
        first_factor,
        last_factor,
        iterations,
        converged,
        ratio,
        history,
    })
}

fn result_from(out: &LoopOutcome, values: Vec<f64>) -> SingularValueResult {
    SingularValueResult {
        values,
        iterations_used: out.iterations,
        converged: out.converged,
        final_off_diagonal_ratio: out.ratio,
        shift: None,
        signed_eigenvalues: None,
        warnings: Vec::new(),
        history: out.history.clone(),
    }
}

fn real_diagonal(j: &DenseMatrix) -> Result<Vec<f64>> {
    Ok(j.diag_vector()?.into_iter().map(|z| z.re).collect())
}

// ── Entry points ────────────────────────────────────────────────────

/// Eigenvalues (equal to the singular values) of a Hermitian positive
/// semi-definite matrix.
///
/// An indefinite input surfaces as the factorization error from
/// [`chol_psd`].
pub fn cholesky_iterate_psd(a: &DenseMatrix, cfg: &IterationConfig) -> Result<SingularValueResult> {
    cfg.validate()?;
    a.require_hermitian("cholesky_iterate_psd", HERMITIAN_RTOL * a.frobenius_norm())?;
    let out = run_cholesky_loop(a.clone(), cfg)?;
    let mut values = real_diagonal(&out.j)?;
    sort_descending(&mut values);
    Ok(result_from(&out, values))
}

/// Singular values `|λ|` of a Hermitian, possibly indefinite, matrix via
/// the shifted iteration on `A + μI` with `μ` from [`compute_shift`].
pub fn cholesky_iterate_symmetric(
    a: &DenseMatrix,
    cfg: &IterationConfig,
) -> Result<SingularValueResult> {
    let shift = compute_shift(a)?;
    iterate_shifted(a, shift, cfg)
}

/// Same as [`cholesky_iterate_symmetric`] with a caller-chosen `μ`.
///
/// `A + μI` must be positive semi-definite; a too-small `μ` surfaces as a
/// factorization error.
pub fn cholesky_iterate_symmetric_with_shift(
    a: &DenseMatrix,
    mu: f64,
    cfg: &IterationConfig,
) -> Result<SingularValueResult> {
    if !(mu.is_finite() && mu >= 0.0) {
        return Err(LinalgError::InvalidShift(mu));
    }
    a.require_hermitian(
        "cholesky_iterate_symmetric",
        HERMITIAN_RTOL * a.frobenius_norm(),
    )?;
    let shift = ShiftReport {
        mu,
        gershgorin_lower_bound: gershgorin_lower_bound(a),
    };
    iterate_shifted(a, shift, cfg)
}

fn iterate_shifted(
    a: &DenseMatrix,
    shift: ShiftReport,
    cfg: &IterationConfig,
) -> Result<SingularValueResult> {
    cfg.validate()?;
    let out = run_cholesky_loop(a.shift_diagonal(shift.mu)?, cfg)?;
    let mut signed: Vec<f64> = real_diagonal(&out.j)?
        .into_iter()
        .map(|d| d - shift.mu)
        .collect();
    let mut values: Vec<f64> = signed.iter().map(|l| l.abs()).collect();
    sort_descending(&mut signed);
    sort_descending(&mut values);
    let mut result = result_from(&out, values);
    result.shift = Some(shift);
    result.signed_eigenvalues = Some(signed);
    Ok(result)
}

/// Singular values of an arbitrary `m x n` matrix from the iteration on
/// `A^H A` (`n` values) or, with `use_right_gram`, on `A A^H` (`m` values).
///
/// The right Gram variant is meant for full-row-rank inputs. The reported
/// values are `sqrt(diag(J))`; at convergence they are cross-checked against
/// `diag(R)` of the last factor and a warning is recorded if the two
/// disagree by more than `10 * convergence_tol * ‖A‖_F`.
pub fn cholesky_iterate_arbitrary(
    a: &DenseMatrix,
    cfg: &IterationConfig,
    use_right_gram: bool,
) -> Result<SingularValueResult> {
    cfg.validate()?;
    let j0 = if use_right_gram {
        a.gram_right()
    } else {
        a.gram()
    };
    let out = run_cholesky_loop(j0, cfg)?;

    let j_norm = out.j.frobenius_norm();
    let mut values = Vec::with_capacity(out.j.rows());
    for (i, d) in real_diagonal(&out.j)?.into_iter().enumerate() {
        if d < -cfg.convergence_tol * j_norm {
            return Err(LinalgError::ConvergenceIntegrity(format!(
                "diagonal entry {i} of the converged Gram iterate is negative ({d:e})"
            )));
        }
        values.push(d.max(0.0).sqrt());
    }

    let mut warnings = Vec::new();
    if let Some(first) = &out.first_factor {
        let pivots: Vec<f64> = first
            .diagonal()
            .iter()
            .map(|d| d.re)
            .filter(|&d| d > 0.0)
            .collect();
        let max = pivots.iter().cloned().fold(0.0, f64::max);
        let min = pivots.iter().cloned().fold(f64::INFINITY, f64::min);
        if !pivots.is_empty() && max / min > CONDITION_WARNING_THRESHOLD {
            warnings.push(format!(
                "ill-conditioned input: first factor pivot ratio {:.3e} exceeds {:.0e}",
                max / min,
                CONDITION_WARNING_THRESHOLD
            ));
        }
    }
    if out.converged {
        if let Some(last) = &out.last_factor {
            let limit = 10.0 * cfg.convergence_tol * a.frobenius_norm();
            let worst = last
                .diagonal()
                .iter()
                .zip(&values)
                .map(|(r, s)| (r.re - s).abs())
                .fold(0.0, f64::max);
            if worst > limit {
                warnings.push(format!(
                    "diag(R) read-out deviates from sqrt(diag(J)) by {worst:.3e} (limit {limit:.3e})"
                ));
            }
        }
    }

    sort_descending(&mut values);
    let mut result = result_from(&out, values);
    result.warnings = warnings;
    Ok(result)
}
