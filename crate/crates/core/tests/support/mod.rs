//! Random test matrices with known spectra.
//!
//! Unitary factors come from Gram-Schmidt, kept separate from the Cholesky
//! code under test.
#![allow(dead_code)]

use cholsvd::{DenseMatrix, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, complex: bool) -> DenseMatrix {
    DenseMatrix::from_fn(rows, cols, |_, _| {
        let re = rng.gen_range(-1.0..1.0);
        let im = if complex {
            rng.gen_range(-1.0..1.0)
        } else {
            0.0
        };
        Scalar::new(re, im)
    })
    .unwrap()
}

pub fn random_hermitian(rng: &mut ChaCha8Rng, n: usize, complex: bool) -> DenseMatrix {
    let b = random_matrix(rng, n, n, complex);
    DenseMatrix::from_fn(n, n, |i, j| (b[(i, j)] + b[(j, i)].conj()) * 0.5).unwrap()
}

/// `n x k` matrix with orthonormal columns (modified Gram-Schmidt, two passes).
pub fn random_isometry(
    rng: &mut ChaCha8Rng,
    n: usize,
    k: usize,
    complex: bool,
) -> Vec<Vec<Scalar>> {
    assert!(k <= n);
    let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(k);
    while cols.len() < k {
        let mut v: Vec<Scalar> = (0..n)
            .map(|_| {
                let re = rng.gen_range(-1.0..1.0);
                let im = if complex {
                    rng.gen_range(-1.0..1.0)
                } else {
                    0.0
                };
                Scalar::new(re, im)
            })
            .collect();
        for _ in 0..2 {
            for q in &cols {
                let dot: Scalar = q.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                for (vi, qi) in v.iter_mut().zip(q) {
                    *vi -= dot * qi;
                }
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-3 {
            cols.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    cols
}

/// `U diag(eigs) U^H` with random unitary `U`.
pub fn hermitian_with_spectrum(rng: &mut ChaCha8Rng, eigs: &[f64], complex: bool) -> DenseMatrix {
    let n = eigs.len();
    let u = random_isometry(rng, n, n, complex);
    let a = DenseMatrix::from_fn(n, n, |i, j| {
        (0..n).map(|k| u[k][i] * eigs[k] * u[k][j].conj()).sum()
    })
    .unwrap();
    // Exact Hermitian symmetry.
    DenseMatrix::from_fn(n, n, |i, j| (a[(i, j)] + a[(j, i)].conj()) * 0.5).unwrap()
}

/// `m x n` matrix `U diag(sv) V^H` with `sv.len() <= min(m, n)`.
pub fn matrix_with_singular_values(
    rng: &mut ChaCha8Rng,
    m: usize,
    n: usize,
    sv: &[f64],
    complex: bool,
) -> DenseMatrix {
    let k = sv.len();
    assert!(k <= m.min(n));
    let u = random_isometry(rng, m, k, complex);
    let v = random_isometry(rng, n, k, complex);
    DenseMatrix::from_fn(m, n, |i, j| {
        (0..k).map(|l| u[l][i] * sv[l] * v[l][j].conj()).sum()
    })
    .unwrap()
}

/// `n` values from 1 down to `1/kappa`, evenly spaced on a log scale.
pub fn geometric_spectrum(n: usize, kappa: f64) -> Vec<f64> {
    if n == 1 {
        return vec![1.0];
    }
    (0..n)
        .map(|i| kappa.powf(-(i as f64) / (n - 1) as f64))
        .collect()
}

pub fn log_uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    (rng.gen_range(lo.ln()..=hi.ln())).exp()
}

/// `max_i |v_i - r_i| / max(r_1, 1e-300)`; lengths must match.
pub fn max_rel_dev(values: &[f64], reference: &[f64]) -> f64 {
    assert_eq!(values.len(), reference.len(), "length mismatch");
    let scale = reference
        .iter()
        .fold(0.0_f64, |m, r| m.max(r.abs()))
        .max(1e-300);
    values
        .iter()
        .zip(reference)
        .map(|(v, r)| (v - r).abs() / scale)
        .fold(0.0, f64::max)
}

pub fn sorted_desc(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

pub fn rel_frobenius(a: &DenseMatrix, b: &DenseMatrix) -> f64 {
    a.sub(b).unwrap().frobenius_norm() / b.frobenius_norm().max(1e-300)
}
