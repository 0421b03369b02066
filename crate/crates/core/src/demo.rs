//! Reproducible demo matrices.
//!
//! Entries come from a 64-bit linear congruential generator with Knuth's
//! MMIX parameters
//!
//! ```text
//! state <- 6364136223846793005 * state + 1442695040888963407   (mod 2^64)
//! u      = (state >> 11) / 2^53                                 in [0, 1)
//! entry  = 2u - 1                                               in [-1, 1)
//! ```
//!
//! seeded with [`DEMO_SEED`]. The generator is advanced once before each
//! entry and entries are drawn in row-major order, so the same matrix can
//! be regenerated in any language with 64-bit wrapping arithmetic.

use crate::matrix::{DenseMatrix, Scalar};

pub const DEMO_SEED: u64 = 0x5EED;
pub const LCG_MULTIPLIER: u64 = 6364136223846793005;
pub const LCG_INCREMENT: u64 = 1442695040888963407;

#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(LCG_MULTIPLIER)
            .wrapping_add(LCG_INCREMENT);
        self.state
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    pub fn next_unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[-1, 1)`.
    pub fn next_symmetric(&mut self) -> f64 {
        2.0 * self.next_unit() - 1.0
    }
}

/// Structure imposed on the raw `n x n` matrix `B` of LCG entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DemoKind {
    /// `B^T B`.
    PositiveSemidefinite,
    /// `(B + B^T) / 2`.
    Symmetric,
    /// `B` itself.
    General,
}

/// Real `n x n` demo matrix. Returns `None` for `n == 0`.
pub fn demo_matrix(n: usize, kind: DemoKind) -> Option<DenseMatrix> {
    if n == 0 {
        return None;
    }
    let mut lcg = Lcg::new(DEMO_SEED);
    let raw: Vec<f64> = (0..n * n).map(|_| lcg.next_symmetric()).collect();
    let b = DenseMatrix::from_real(n, n, &raw).ok()?;
    Some(match kind {
        DemoKind::PositiveSemidefinite => b.gram(),
        DemoKind::Symmetric => DenseMatrix::from_fn(n, n, |i, j| {
            Scalar::new(0.5 * (raw[i * n + j] + raw[j * n + i]), 0.0)
        })
        .ok()?,
        DemoKind::General => b,
    })
}
