//! Dense complex matrices and the primitive operations the factorizations
//! are built from.

use std::fmt;
use std::ops::Index;

use num_complex::Complex64;

use crate::cholesky::chol_pd;
use crate::{LinalgError, Result};

/// Element type. Real matrices are complex matrices with zero imaginary part.
pub type Scalar = Complex64;

const ZERO: Scalar = Scalar::new(0.0, 0.0);
const ONE: Scalar = Scalar::new(1.0, 0.0);

// ── DenseMatrix ─────────────────────────────────────────────────────

/// Row-major dense `rows x cols` complex matrix with finite entries.
///
/// Both dimensions are at least one. Values are immutable once built; every
/// operation returns a fresh matrix.
#[derive(Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl DenseMatrix {
    /// Build from row-major data, rejecting empty shapes, length mismatches
    /// and NaN/Inf entries.
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if rows == 0 || cols == 0 || rows.checked_mul(cols) != Some(data.len()) {
            return Err(LinalgError::InvalidDimensions {
                rows,
                cols,
                len: data.len(),
            });
        }
        if let Some(pos) = data
            .iter()
            .position(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(LinalgError::NonFinite {
                row: pos / cols,
                col: pos % cols,
            });
        }
        Ok(Self { rows, cols, data })
    }

    /// Build a real matrix from row-major data.
    pub fn from_real(rows: usize, cols: usize, data: &[f64]) -> Result<Self> {
        Self::new(
            rows,
            cols,
            data.iter().map(|&x| Scalar::new(x, 0.0)).collect(),
        )
    }

    /// Build a real matrix from a slice of equally long rows.
    pub fn from_real_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(LinalgError::InvalidDimensions {
                    rows: rows.len(),
                    cols,
                    len: data.len() + row.len(),
                });
            }
            data.extend(row.iter().map(|&x| Scalar::new(x, 0.0)));
        }
        Self::new(rows.len(), cols, data)
    }

    /// Build a complex matrix from a slice of equally long rows.
    pub fn from_rows<R: AsRef<[Scalar]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(LinalgError::InvalidDimensions {
                    rows: rows.len(),
                    cols,
                    len: data.len() + row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Self::new(rows.len(), cols, data)
    }

    /// Build entrywise from `f(row, col)`.
    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self::new(rows, cols, data)
    }

    /// # Panics
    /// If either dimension is zero.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    /// # Panics
    /// If `n` is zero.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = ONE;
        }
        m
    }

    /// Real diagonal matrix.
    pub fn from_diagonal(diag: &[f64]) -> Result<Self> {
        let n = diag.len();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Scalar::new(diag[i], 0.0)
            } else {
                ZERO
            }
        })
    }

    /// Internal constructor for results of arithmetic on validated matrices.
    pub(crate) fn from_parts(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        debug_assert_eq!(rows * cols, data.len());
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> Scalar {
        self[(row, col)]
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// True when every imaginary part is exactly zero.
    pub fn is_real(&self) -> bool {
        self.data.iter().all(|z| z.im == 0.0)
    }

    pub(crate) fn set(&mut self, row: usize, col: usize, value: Scalar) {
        self.data[row * self.cols + col] = value;
    }

    fn require_square(&self, op: &'static str) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(LinalgError::NotSquare {
                op,
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Conjugate transpose: `result[j][i] = conj(a[i][j])`.
    pub fn hermitian_transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.data[i * self.cols + j].conj());
            }
        }
        Self::from_parts(self.cols, self.rows, data)
    }

    /// Matrix product `self * rhs`.
    pub fn matmul(&self, rhs: &DenseMatrix) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(LinalgError::ShapeMismatch {
                op: "matmul",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let (m, n) = (self.rows, rhs.cols);
        let mut data = vec![ZERO; m * n];
        for i in 0..m {
            let out = &mut data[i * n..(i + 1) * n];
            for (k, &aik) in self.row(i).iter().enumerate() {
                if aik == ZERO {
                    continue;
                }
                for (o, &bkj) in out.iter_mut().zip(rhs.row(k)) {
                    *o += aik * bkj;
                }
            }
        }
        Ok(Self::from_parts(m, n, data))
    }

    /// Gram matrix `A^H A` (`cols x cols`), averaged with its own conjugate
    /// transpose so the result is exactly Hermitian.
    pub fn gram(&self) -> Self {
        let n = self.cols;
        let mut g = vec![ZERO; n * n];
        for k in 0..self.rows {
            let row = self.row(k);
            for (i, &aki) in row.iter().enumerate() {
                let c = aki.conj();
                for (j, &akj) in row.iter().enumerate() {
                    g[i * n + j] += c * akj;
                }
            }
        }
        symmetrized(n, g)
    }

    /// Right Gram matrix `A A^H` (`rows x rows`), symmetrized like [`gram`](Self::gram).
    pub fn gram_right(&self) -> Self {
        let m = self.rows;
        let mut g = vec![ZERO; m * m];
        for i in 0..m {
            for j in 0..m {
                g[i * m + j] = self
                    .row(i)
                    .iter()
                    .zip(self.row(j))
                    .map(|(&a, &b)| a * b.conj())
                    .sum();
            }
        }
        symmetrized(m, g)
    }

    /// Largest entrywise `|a - a^H|`, or `None` for non-square input.
    pub fn hermitian_deviation(&self) -> Option<f64> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in i..n {
                let d = (self.data[i * n + j] - self.data[j * n + i].conj()).norm();
                worst = worst.max(d);
            }
        }
        Some(worst)
    }

    /// Square and entrywise within `tol` of its conjugate transpose.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_deviation().is_some_and(|d| d <= tol)
    }

    pub(crate) fn require_hermitian(&self, op: &'static str, tol: f64) -> Result<()> {
        self.require_square(op)?;
        let deviation = self.hermitian_deviation().unwrap_or(f64::INFINITY);
        if deviation <= tol {
            Ok(())
        } else {
            Err(LinalgError::NotHermitian { deviation, tol })
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Frobenius norm with the diagonal zeroed.
    pub fn off_diagonal_norm(&self) -> Result<f64> {
        self.require_square("off_diagonal_norm")?;
        let n = self.rows;
        let mut sum = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    sum += self.data[i * n + j].norm_sqr();
                }
            }
        }
        Ok(sum.sqrt())
    }

    /// Frobenius norm of the strictly lower triangle.
    pub fn strictly_lower_norm(&self) -> Result<f64> {
        self.require_square("strictly_lower_norm")?;
        let n = self.rows;
        let mut sum = 0.0;
        for i in 1..n {
            for j in 0..i {
                sum += self.data[i * n + j].norm_sqr();
            }
        }
        Ok(sum.sqrt())
    }

    /// Diagonal entries in index order.
    pub fn diag_vector(&self) -> Result<Vec<Scalar>> {
        self.require_square("diag_vector")?;
        Ok((0..self.rows)
            .map(|i| self.data[i * self.cols + i])
            .collect())
    }

    pub fn trace(&self) -> Result<Scalar> {
        Ok(self.diag_vector()?.into_iter().sum())
    }

    /// `self + mu * I`.
    pub fn shift_diagonal(&self, mu: f64) -> Result<Self> {
        self.require_square("shift_diagonal")?;
        let mut out = self.clone();
        for i in 0..self.rows {
            out.data[i * self.cols + i] += mu;
        }
        Ok(out)
    }

    /// Entrywise difference `self - rhs`.
    pub fn sub(&self, rhs: &DenseMatrix) -> Result<Self> {
        if self.shape() != rhs.shape() {
            return Err(LinalgError::ShapeMismatch {
                op: "sub",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self::from_parts(self.rows, self.cols, data))
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self::from_parts(
            self.rows,
            self.cols,
            self.data.iter().map(|z| z * factor).collect(),
        )
    }

    /// Copy of the rows and columns listed in `rows` and `cols`.
    pub(crate) fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self.data[i * self.cols + j]);
            }
        }
        Self::from_parts(rows.len(), cols.len(), data)
    }
}

fn symmetrized(n: usize, mut g: Vec<Scalar>) -> DenseMatrix {
    for i in 0..n {
        for j in i..n {
            let upper = (g[i * n + j] + g[j * n + i].conj()) * 0.5;
            g[i * n + j] = upper;
            g[j * n + i] = upper.conj();
        }
    }
    DenseMatrix::from_parts(n, n, g)
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = Scalar;

    fn index(&self, (row, col): (usize, usize)) -> &Scalar {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        &self.data[row * self.cols + col]
    }
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DenseMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for z in self.row(i) {
                if z.im == 0.0 {
                    write!(f, "{:>12.5e} ", z.re)?;
                } else {
                    write!(f, "{:>12.5e}{:+.5e}i ", z.re, z.im)?;
                }
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

// ── UpperTriangular ─────────────────────────────────────────────────

/// Square matrix whose strictly lower triangle is exactly zero.
///
/// Factors produced by this crate additionally have a real, non-negative
/// diagonal.
#[derive(Clone, PartialEq, Debug)]
pub struct UpperTriangular {
    inner: DenseMatrix,
}

impl UpperTriangular {
    /// Wrap a square matrix, rejecting any nonzero below the diagonal.
    pub fn new(m: DenseMatrix) -> Result<Self> {
        m.require_square("UpperTriangular::new")?;
        let n = m.rows;
        for i in 1..n {
            for j in 0..i {
                if m.data[i * n + j] != ZERO {
                    return Err(LinalgError::NotUpperTriangular { row: i, col: j });
                }
            }
        }
        Ok(Self { inner: m })
    }

    pub(crate) fn from_dense_unchecked(m: DenseMatrix) -> Self {
        debug_assert!(Self::new(m.clone()).is_ok());
        Self { inner: m }
    }

    pub fn dim(&self) -> usize {
        self.inner.rows
    }

    pub fn as_matrix(&self) -> &DenseMatrix {
        &self.inner
    }

    pub fn into_matrix(self) -> DenseMatrix {
        self.inner
    }

    pub fn diagonal(&self) -> Vec<Scalar> {
        (0..self.dim()).map(|i| self.inner[(i, i)]).collect()
    }

    /// Number of diagonal entries with magnitude above `tol`.
    pub fn count_nonzero_pivots(&self, tol: f64) -> usize {
        self.diagonal().iter().filter(|d| d.norm() > tol).count()
    }

    /// `R R^H`, computed from the triangular structure and exactly Hermitian.
    pub fn times_own_adjoint(&self) -> DenseMatrix {
        let n = self.dim();
        let r = &self.inner.data;
        let mut out = vec![ZERO; n * n];
        for i in 0..n {
            for j in i..n {
                let mut s = ZERO;
                for k in j..n {
                    s += r[i * n + k] * r[j * n + k].conj();
                }
                if i == j {
                    s.im = 0.0;
                }
                out[i * n + j] = s;
                out[j * n + i] = s.conj();
            }
        }
        DenseMatrix::from_parts(n, n, out)
    }

    /// `R^H R`.
    pub fn adjoint_times_self(&self) -> DenseMatrix {
        let n = self.dim();
        let r = &self.inner.data;
        let mut out = vec![ZERO; n * n];
        for i in 0..n {
            for j in i..n {
                let mut s = ZERO;
                for k in 0..=i {
                    s += r[k * n + i].conj() * r[k * n + j];
                }
                if i == j {
                    s.im = 0.0;
                }
                out[i * n + j] = s;
                out[j * n + i] = s.conj();
            }
        }
        DenseMatrix::from_parts(n, n, out)
    }
}

// ── Triangular inverse and pseudo-inverse ───────────────────────────

/// `R^{-1}` by column-wise back-substitution.
///
/// Every diagonal entry must exceed `tol` in magnitude; otherwise the first
/// offending index is reported. The result is upper triangular by
/// construction.
pub fn invert_upper_triangular(r: &UpperTriangular, tol: f64) -> Result<DenseMatrix> {
    let n = r.dim();
    let a = &r.inner.data;
    for i in 0..n {
        let magnitude = a[i * n + i].norm();
        if magnitude <= tol {
            return Err(LinalgError::SingularFactor {
                index: i,
                magnitude,
                tol,
            });
        }
    }
    let mut inv = vec![ZERO; n * n];
    for col in 0..n {
        // Solve R x = e_col; x[i] = 0 for i > col.
        inv[col * n + col] = ONE / a[col * n + col];
        for i in (0..col).rev() {
            let mut s = ZERO;
            for k in i + 1..=col {
                s += a[i * n + k] * inv[k * n + col];
            }
            inv[i * n + col] = -s / a[i * n + i];
        }
    }
    Ok(DenseMatrix::from_parts(n, n, inv))
}

/// Moore–Penrose pseudo-inverse of `R`.
///
/// Rows whose diagonal magnitude is at most `tol` must be zero rows (every
/// entry at most `tol`), which is the shape [`crate::chol_psd`] produces;
/// otherwise [`LinalgError::NonZeroDroppedRow`] is returned. The remaining rows `R_P` form a full-row-rank matrix whose pivot columns
/// hold an invertible triangle `T`; writing `R_P = T [I X]` (pivot columns
/// first) gives
///
/// ```text
/// R_P^+ = [I; X^H] (I + X X^H)^{-1} T^{-1}
/// ```
///
/// with `(I + X X^H)^{-1}` obtained from its Cholesky factor. The result is
/// re-embedded with zero columns at the dropped rows.
pub fn pinv_upper_triangular(r: &UpperTriangular, tol: f64) -> Result<DenseMatrix> {
    let n = r.dim();
    let m = &r.inner;
    let (pivots, free): (Vec<usize>, Vec<usize>) = (0..n).partition(|&i| m[(i, i)].norm() > tol);
    for &i in &free {
        if let Some(j) = (i + 1..n).find(|&j| m[(i, j)].norm() > tol) {
            return Err(LinalgError::NonZeroDroppedRow { row: i, col: j });
        }
    }
    let mut out = DenseMatrix::zeros(n, n);
    if pivots.is_empty() {
        return Ok(out);
    }
    let t = UpperTriangular::from_dense_unchecked(m.select(&pivots, &pivots));
    let t_inv = invert_upper_triangular(&t, 0.0)?;

    // Rows of the pseudo-inverse indexed by pivot columns and by free columns.
    let (top, bottom) = if free.is_empty() {
        (t_inv, None)
    } else {
        let x = t_inv.matmul(&m.select(&pivots, &free))?;
        let s = x.matmul(&x.hermitian_transpose())?.shift_diagonal(1.0)?;
        let l = chol_pd(&s)?;
        let l_inv = invert_upper_triangular(&l, 0.0)?;
        let s_inv = l_inv.matmul(&l_inv.hermitian_transpose())?;
        let core = s_inv.matmul(&t_inv)?;
        let bottom = x.hermitian_transpose().matmul(&core)?;
        (core, Some(bottom))
    };
    for (a, &i) in pivots.iter().enumerate() {
        for (b, &j) in pivots.iter().enumerate() {
            out.set(i, j, top[(a, b)]);
        }
    }
    if let Some(bottom) = bottom {
        for (a, &i) in free.iter().enumerate() {
            for (b, &j) in pivots.iter().enumerate() {
                out.set(i, j, bottom[(a, b)]);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Scalar {
        Scalar::new(re, im)
    }

    fn random(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> DenseMatrix {
        DenseMatrix::from_fn(rows, cols, |_, _| {
            c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        })
        .unwrap()
    }

    fn max_abs_diff(a: &DenseMatrix, b: &DenseMatrix) -> f64 {
        assert_eq!(a.shape(), b.shape());
        a.as_slice()
            .iter()
            .zip(b.as_slice())
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    #[test]
    fn constructors_reject_bad_input() {
        assert!(matches!(
            DenseMatrix::from_real(2, 2, &[1.0, 2.0, 3.0]),
            Err(LinalgError::InvalidDimensions { .. })
        ));
        assert!(matches!(
            DenseMatrix::from_real(0, 0, &[]),
            Err(LinalgError::InvalidDimensions { .. })
        ));
        assert_eq!(
            DenseMatrix::from_real(2, 2, &[1.0, f64::NAN, 0.0, 1.0]),
            Err(LinalgError::NonFinite { row: 0, col: 1 })
        );
        assert_eq!(
            DenseMatrix::new(1, 2, vec![ONE, c(0.0, f64::INFINITY)]),
            Err(LinalgError::NonFinite { row: 0, col: 1 })
        );
        assert!(DenseMatrix::from_real_rows(&[vec![1.0, 2.0], vec![3.0]]).is_err());
    }

    #[test]
    fn hermitian_transpose_examples() {
        let a = DenseMatrix::from_rows(&[[c(1.0, 0.0), c(0.0, 1.0)], [ZERO, c(2.0, 0.0)]]).unwrap();
        let expected =
            DenseMatrix::from_rows(&[[c(1.0, 0.0), ZERO], [c(0.0, -1.0), c(2.0, 0.0)]]).unwrap();
        assert_eq!(a.hermitian_transpose(), expected);

        let sym = DenseMatrix::from_real_rows(&[[1.0, 2.0], [2.0, 5.0]]).unwrap();
        assert_eq!(sym.hermitian_transpose(), sym);

        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = random(&mut rng, 3, 2);
        let ah = a.hermitian_transpose();
        assert_eq!(ah.shape(), (2, 3));
        for i in 0..3 {
            for j in 0..2 {
                assert_eq!(ah[(j, i)], a[(i, j)].conj());
            }
        }
    }

    #[test]
    fn matmul_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let a = random(&mut rng, 3, 3);
        assert_eq!(DenseMatrix::identity(3).matmul(&a).unwrap(), a);

        let d = DenseMatrix::from_real_rows(&[[2.0, 0.0], [0.0, 3.0]]).unwrap();
        let v = DenseMatrix::from_real_rows(&[[1.0], [1.0]]).unwrap();
        assert_eq!(
            d.matmul(&v).unwrap(),
            DenseMatrix::from_real_rows(&[[2.0], [3.0]]).unwrap()
        );

        let a = random(&mut rng, 4, 3);
        let b = random(&mut rng, 3, 5);
        let p = a.matmul(&b).unwrap();
        assert_eq!(p.shape(), (4, 5));
        for i in 0..4 {
            for j in 0..5 {
                let mut s = ZERO;
                for k in 0..3 {
                    s += a[(i, k)] * b[(k, j)];
                }
                assert!((p[(i, j)] - s).norm() <= 1e-14);
            }
        }
    }

    #[test]
    fn matmul_shape_error_names_both_shapes() {
        let a = DenseMatrix::zeros(2, 3);
        let b = DenseMatrix::zeros(2, 3);
        let err = a.matmul(&b).unwrap_err();
        assert_eq!(
            err,
            LinalgError::ShapeMismatch {
                op: "matmul",
                left: (2, 3),
                right: (2, 3)
            }
        );
        assert!(err.to_string().contains("(2, 3)"));
    }

    #[test]
    fn gram_examples() {
        assert_eq!(DenseMatrix::identity(3).gram(), DenseMatrix::identity(3));
        let p = DenseMatrix::from_real_rows(&[[0.0, 1.0], [1.0, 0.0]]).unwrap();
        assert_eq!(p.gram(), DenseMatrix::identity(2));

        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random(&mut rng, 5, 3);
        let g = a.gram();
        let direct = a.hermitian_transpose().matmul(&a).unwrap();
        assert!(max_abs_diff(&g, &direct) <= 1e-14);
        assert!(g.is_hermitian(1e-14));
        assert_eq!(g.hermitian_deviation(), Some(0.0));

        let gr = a.gram_right();
        let direct = a.matmul(&a.hermitian_transpose()).unwrap();
        assert_eq!(gr.shape(), (5, 5));
        assert!(max_abs_diff(&gr, &direct) <= 1e-14);
    }

    #[test]
    fn is_hermitian_examples() {
        assert!(DenseMatrix::from_diagonal(&[1.0, -4.0, 7.5])
            .unwrap()
            .is_hermitian(0.0));
        let a = DenseMatrix::from_real_rows(&[[0.0, 1.0], [2.0, 0.0]]).unwrap();
        assert!(!a.is_hermitian(1e-12));
        assert!(!DenseMatrix::zeros(2, 3).is_hermitian(1.0));
        let complex_diag = DenseMatrix::from_rows(&[[c(1.0, 1e-3)]]).unwrap();
        assert!(!complex_diag.is_hermitian(1e-12));
    }

    #[test]
    fn off_diagonal_norm_examples() {
        let d = DenseMatrix::from_diagonal(&[3.0, -1.0, 2.0]).unwrap();
        assert_eq!(d.off_diagonal_norm().unwrap(), 0.0);
        let a = DenseMatrix::from_real_rows(&[[0.0, 3.0], [4.0, 0.0]]).unwrap();
        assert_eq!(a.off_diagonal_norm().unwrap(), 5.0);
        assert!(matches!(
            DenseMatrix::zeros(2, 3).off_diagonal_norm(),
            Err(LinalgError::NotSquare { .. })
        ));

        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let a = random(&mut rng, 6, 6);
        let mut sum = 0.0;
        for i in 0..6 {
            for j in 0..6 {
                if i != j {
                    sum += a[(i, j)].re * a[(i, j)].re + a[(i, j)].im * a[(i, j)].im;
                }
            }
        }
        assert!((a.off_diagonal_norm().unwrap() - sum.sqrt()).abs() <= 1e-14);
    }

    #[test]
    fn diag_vector_examples() {
        assert_eq!(
            DenseMatrix::identity(3).diag_vector().unwrap(),
            vec![ONE; 3]
        );
        let d = DenseMatrix::from_diagonal(&[5.0, 2.0, 7.0]).unwrap();
        assert_eq!(
            d.diag_vector().unwrap(),
            vec![c(5.0, 0.0), c(2.0, 0.0), c(7.0, 0.0)]
        );
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = random(&mut rng, 4, 4);
        let expected: Vec<Scalar> = (0..4).map(|i| a.as_slice()[i * 4 + i]).collect();
        assert_eq!(a.diag_vector().unwrap(), expected);
        assert!(DenseMatrix::zeros(3, 1).diag_vector().is_err());
    }

    #[test]
    fn upper_triangular_rejects_lower_entries() {
        let a = DenseMatrix::from_real_rows(&[[1.0, 2.0], [1e-300, 3.0]]).unwrap();
        assert_eq!(
            UpperTriangular::new(a),
            Err(LinalgError::NotUpperTriangular { row: 1, col: 0 })
        );
        assert!(UpperTriangular::new(DenseMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn structured_products_match_matmul() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let mut a = random(&mut rng, 5, 5);
        for i in 1..5 {
            for j in 0..i {
                a.set(i, j, ZERO);
            }
        }
        let r = UpperTriangular::new(a.clone()).unwrap();
        let rrh = a.matmul(&a.hermitian_transpose()).unwrap();
        let rhr = a.hermitian_transpose().matmul(&a).unwrap();
        assert!(max_abs_diff(&r.times_own_adjoint(), &rrh) <= 1e-14);
        assert!(max_abs_diff(&r.adjoint_times_self(), &rhr) <= 1e-14);
    }

    #[test]
    fn invert_examples() {
        let i3 = UpperTriangular::new(DenseMatrix::identity(3)).unwrap();
        assert_eq!(
            invert_upper_triangular(&i3, 0.0).unwrap(),
            DenseMatrix::identity(3)
        );

        let d = UpperTriangular::new(DenseMatrix::from_diagonal(&[2.0, 4.0]).unwrap()).unwrap();
        assert_eq!(
            invert_upper_triangular(&d, 0.0).unwrap(),
            DenseMatrix::from_diagonal(&[0.5, 0.25]).unwrap()
        );

        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut a = random(&mut rng, 6, 6);
        for i in 0..6 {
            for j in 0..i {
                a.set(i, j, ZERO);
            }
            a.set(
                i,
                i,
                c(2.0 + rng.gen_range(0.0..1.0), rng.gen_range(-0.5..0.5)),
            );
        }
        let r = UpperTriangular::new(a.clone()).unwrap();
        let inv = invert_upper_triangular(&r, 1e-12).unwrap();
        let err = a
            .matmul(&inv)
            .unwrap()
            .sub(&DenseMatrix::identity(6))
            .unwrap();
        assert!(err.frobenius_norm() <= 1e-10);
        assert!(UpperTriangular::new(inv).is_ok());
    }

    #[test]
    fn invert_reports_singular_index() {
        let r = UpperTriangular::new(
            DenseMatrix::from_real_rows(&[[1.0, 1.0, 0.0], [0.0, 1e-14, 1.0], [0.0, 0.0, 1.0]])
                .unwrap(),
        )
        .unwrap();
        match invert_upper_triangular(&r, 1e-12) {
            Err(LinalgError::SingularFactor { index, .. }) => assert_eq!(index, 1),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn pinv_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let mut a = random(&mut rng, 4, 4);
        for i in 0..4 {
            for j in 0..i {
                a.set(i, j, ZERO);
            }
            a.set(i, i, c(1.5 + i as f64, 0.0));
        }
        let r = UpperTriangular::new(a).unwrap();
        let inv = invert_upper_triangular(&r, 0.0).unwrap();
        let pinv = pinv_upper_triangular(&r, 1e-12).unwrap();
        assert!(max_abs_diff(&inv, &pinv) <= 1e-10);

        let z = UpperTriangular::new(DenseMatrix::zeros(3, 3)).unwrap();
        assert_eq!(
            pinv_upper_triangular(&z, 1e-12).unwrap(),
            DenseMatrix::zeros(3, 3)
        );

        // [[1,1],[0,0]]: Moore-Penrose inverse is [[1/2,0],[1/2,0]].
        let r =
            UpperTriangular::new(DenseMatrix::from_real_rows(&[[1.0, 1.0], [0.0, 0.0]]).unwrap())
                .unwrap();
        let p = pinv_upper_triangular(&r, 1e-12).unwrap();
        let rm = r.as_matrix();
        let back = rm.matmul(&p).unwrap().matmul(rm).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!((back[(i, j)] - rm[(i, j)]).norm() <= 1e-12);
            }
        }
        let expected = DenseMatrix::from_real_rows(&[[0.5, 0.0], [0.5, 0.0]]).unwrap();
        assert!(max_abs_diff(&p, &expected) <= 1e-15);

        let r =
            UpperTriangular::new(DenseMatrix::from_real_rows(&[[0.0, 2.0], [0.0, 1.0]]).unwrap())
                .unwrap();
        assert_eq!(
            pinv_upper_triangular(&r, 1e-12),
            Err(LinalgError::NonZeroDroppedRow { row: 0, col: 1 })
        );
    }
}
