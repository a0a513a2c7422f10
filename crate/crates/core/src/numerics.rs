//! Dense complex linear algebra for small operators (everything in this
//! crate is 3x3 or 9x9).
//!
//! Conventions: row-major storage, column vectors (an operator acts on a
//! ket from the left, so the image of basis vector `j` is column `j`).
//! Hermitian eigenvalues come back ascending, singular values descending.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Absolute entrywise tolerance for accepting a matrix as Hermitian.
pub const HERMITICITY_TOLERANCE: f64 = 1e-10;

/// Off-diagonal Frobenius norm at which the Jacobi iteration stops.
const JACOBI_OFF_NORM_TARGET: f64 = 1e-14;

/// Hard cap on Jacobi sweeps; convergence is quadratic and in practice
/// needs fewer than ten sweeps at 9x9.
const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigenvalues of a Gram matrix more negative than this indicate a solver
/// defect; anything in [-1e-12, 0) is roundoff and is clamped to zero.
const GRAM_CLAMP_FLOOR: f64 = -1e-12;

/// Gram eigenvalues below this fraction of the largest one are eigensolve
/// residuals around an exact zero, not genuine singular values.
const GRAM_RELATIVE_NOISE_FLOOR: f64 = 1e-13;

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    /// Builds a matrix from a row-major entry list.
    pub fn from_entries(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                rows: data.len(),
                cols: 1,
            });
        }
        if !data.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::NonFiniteEntries);
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix by evaluating `f(row, col)` at every position.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.cols + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.data[row * self.cols + col] = value;
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn scale_re(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                if aik == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, cur + aik * other.get(k, j));
                }
            }
        }
        out
    }

    /// Matrix-vector product (the vector is a column of length `cols`).
    pub fn matvec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square());
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    /// Kronecker product; row index is `i_self * other.rows + i_other`,
    /// column index likewise, so composite basis order is row-major in the
    /// factor labels.
    pub fn tensor(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let aij = self.get(i, j);
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, aij * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entrywise absolute difference against `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entrywise magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise deviation from self-adjointness.
    pub fn hermiticity_deviation(&self) -> f64 {
        assert!(self.is_square());
        let mut dev: f64 = 0.0;
        for i in 0..self.rows {
            for j in i..self.cols {
                dev = dev.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        dev
    }
}

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// The input is checked against [`HERMITICITY_TOLERANCE`] and symmetrized
/// as (m + m†)/2 before solving, so roundoff-level asymmetry is tolerated
/// but anything larger is rejected.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>> {
    hermitian_eigen(m).map(|(values, _)| values)
}

/// Eigendecomposition of a Hermitian matrix: ascending eigenvalues and the
/// unitary whose columns are the matching eigenvectors.
pub fn hermitian_eigen(m: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix)> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let deviation = m.hermiticity_deviation();
    if deviation > HERMITICITY_TOLERANCE {
        return Err(Error::NotHermitian {
            deviation,
            tolerance: HERMITICITY_TOLERANCE,
        });
    }
    let symmetrized = m.add(&m.adjoint()).scale_re(0.5);
    jacobi_hermitian(symmetrized)
}

/// Singular values, descending. Works for any rectangular matrix; the
/// values are square roots of the eigenvalues of the smaller Gram matrix
/// (m m† or m† m), with roundoff negatives clamped to zero.
///
/// Squaring costs accuracy near zero: an eigensolve residual of order
/// eps * lambda_max turns into a spurious singular value of order
/// sqrt(eps * lambda_max) after the square root. Gram eigenvalues below
/// 1e-13 * lambda_max are therefore treated as exact zeros; that floor sits
/// two orders of magnitude above the observed residuals and only truncates
/// singular values below ~3e-7 of the largest, which contribute nothing at
/// the tolerances used here.
pub fn singular_values(m: &ComplexMatrix) -> Vec<f64> {
    let gram = if m.rows <= m.cols {
        m.matmul(&m.adjoint())
    } else {
        m.adjoint().matmul(m)
    };
    // The Gram matrix is Hermitian by construction up to roundoff.
    let symmetrized = gram.add(&gram.adjoint()).scale_re(0.5);
    let (eigenvalues, _) =
        jacobi_hermitian(symmetrized).expect("Gram matrix eigensolve cannot fail");
    let largest = eigenvalues.last().copied().unwrap_or(0.0).max(0.0);
    let noise_floor = largest * GRAM_RELATIVE_NOISE_FLOOR;
    let mut values: Vec<f64> = eigenvalues
        .into_iter()
        .map(|v| {
            debug_assert!(v >= GRAM_CLAMP_FLOOR, "Gram eigenvalue {v} below clamp floor");
            if v <= noise_floor {
                0.0
            } else {
                v.sqrt()
            }
        })
        .collect();
    values.reverse();
    values
}

/// Sum of all singular values.
pub fn trace_norm(m: &ComplexMatrix) -> f64 {
    singular_values(m).iter().sum()
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a.get(i, j).norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// Cyclic Jacobi iteration for a Hermitian matrix. Each rotation is the
/// complex plane rotation that annihilates one off-diagonal pair; sweeps
/// repeat until the off-diagonal Frobenius norm falls below the target.
fn jacobi_hermitian(mut a: ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix)> {
    let n = a.rows();
    let mut v = ComplexMatrix::identity(n);
    let mut converged = false;
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(&a) <= JACOBI_OFF_NORM_TARGET {
            converged = true;
            break;
        }
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged && off_diagonal_norm(&a) > JACOBI_OFF_NORM_TARGET {
        return Err(Error::NoConvergence(JACOBI_MAX_SWEEPS));
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
    order.sort_by(|&i, &j| diag[i].total_cmp(&diag[j]));
    let values: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, j| v.get(i, order[j]));
    Ok((values, vectors))
}

/// One Jacobi rotation zeroing a[p][q] (and its mirror), with the rotation
/// accumulated into `v`. Uses the phase of the pivot entry to reduce the
/// 2x2 block to the real symmetric case.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let beta = a.get(p, q);
    let beta_abs = beta.norm();
    if beta_abs == 0.0 {
        a.set(q, p, Complex64::new(0.0, 0.0));
        return;
    }
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;
    let tau = (aqq - app) / (2.0 * beta_abs);
    let t = if tau.is_finite() {
        tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
    } else {
        0.0
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let w = beta / beta_abs; // unit phase of the pivot

    let sw = w * s;
    let sw_conj = w.conj() * s;
    let n = a.rows();
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a.get(k, p);
        let akq = a.get(k, q);
        let new_kp = akp * c - akq * sw_conj;
        let new_kq = akp * sw + akq * c;
        a.set(k, p, new_kp);
        a.set(p, k, new_kp.conj());
        a.set(k, q, new_kq);
        a.set(q, k, new_kq.conj());
    }
    let app_new = c * c * app - 2.0 * c * s * beta_abs + s * s * aqq;
    let aqq_new = s * s * app + 2.0 * c * s * beta_abs + c * c * aqq;
    a.set(p, p, Complex64::new(app_new, 0.0));
    a.set(q, q, Complex64::new(aqq_new, 0.0));
    a.set(p, q, Complex64::new(0.0, 0.0));
    a.set(q, p, Complex64::new(0.0, 0.0));

    for k in 0..n {
        let vkp = v.get(k, p);
        let vkq = v.get(k, q);
        v.set(k, p, vkp * c - vkq * sw_conj);
        v.set(k, q, vkp * sw + vkq * c);
    }
}
