//! Dense square complex matrices and the decompositions built on them.
//!
//! Everything in this crate works on one concrete type: a small dense n×n
//! matrix of `Complex64` entries, stored row-major. Real matrices are the
//! special case with zero imaginary parts. The kernels are written for desk
//! scale (n ≤ 64) and favor robustness over asymptotic speed.

mod eig;
mod exp;
mod logm;
mod schur;
mod solve;

pub(crate) use eig::{dense_eigenvalues, null_space_basis, unitary_eigs};
pub use eig::{hermitian_eigs, singular_values, small_eigs, EigenPair};
pub use exp::mat_exp;
pub use logm::{principal_log_special_orthogonal, principal_log_unitary};
pub use schur::{block_diagonal, skew_block_schur};
pub(crate) use solve::solve_particular;
pub use solve::{determinant, inverse};

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense n×n complex matrix, row-major storage.
#[derive(Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<Complex64>,
}

impl Matrix {
    /// Zero matrix of dimension `n` (n ≥ 1).
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "matrix dimension must be at least 1");
        Matrix {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    /// Identity matrix of dimension `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Build from rows of complex entries. Rejects ragged or empty input
    /// and non-finite entries.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidInput("matrix has no rows".into()));
        }
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::InvalidInput(format!(
                    "ragged matrix: expected {} columns, found {}",
                    n,
                    row.len()
                )));
            }
            data.extend_from_slice(row);
        }
        let m = Matrix { n, data };
        if !m.is_finite() {
            return Err(Error::InvalidInput("matrix has non-finite entries".into()));
        }
        Ok(m)
    }

    /// Build from rows of real entries.
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let complex: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Matrix::from_rows(&complex)
    }

    /// Build by evaluating `f(i, j)` at every position.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Diagonal matrix with the given entries.
    pub fn diag(entries: &[Complex64]) -> Self {
        let mut m = Matrix::zeros(entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    /// Diagonal matrix with real entries.
    pub fn diag_real(entries: &[f64]) -> Self {
        Matrix::diag(
            &entries
                .iter()
                .map(|&x| Complex64::new(x, 0.0))
                .collect::<Vec<_>>(),
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_finite(&self) -> bool {
        self.data
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Matrix {
        Matrix::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    /// Transpose without conjugation.
    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.n, |i, j| self[(j, i)])
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Matrix {
        Matrix::from_fn(self.n, |i, j| self[(i, j)].conj())
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    /// Frobenius norm.
    pub fn norm_fro(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Maximum absolute column sum (induced 1-norm).
    pub fn norm_one(&self) -> f64 {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| self[(i, j)].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest absolute imaginary part; zero for genuinely real matrices.
    pub fn max_imag(&self) -> f64 {
        self.data.iter().map(|z| z.im.abs()).fold(0.0, f64::max)
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.max_imag() <= tol
    }

    pub fn scale(&self, c: Complex64) -> Matrix {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|z| z * c).collect(),
        }
    }

    pub fn scale_re(&self, c: f64) -> Matrix {
        self.scale(Complex64::new(c, 0.0))
    }

    /// Frobenius distance to another matrix.
    pub fn dist(&self, other: &Matrix) -> f64 {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Frobenius distance to the identity.
    pub fn dist_identity(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                let target = if i == j { 1.0 } else { 0.0 };
                acc += (self[(i, j)] - Complex64::new(target, 0.0)).norm_sqr();
            }
        }
        acc.sqrt()
    }

    /// ‖A·A* − I‖_F, the unitarity defect.
    pub fn unitary_defect(&self) -> f64 {
        (self * &self.adjoint()).dist_identity()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.dist(&self.adjoint()) <= tol
    }

    pub fn is_skew_hermitian(&self, tol: f64) -> bool {
        self.dist(&self.adjoint().scale_re(-1.0)) <= tol
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.n, "dimension mismatch");
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    /// Row `i` as a vector.
    pub fn row(&self, i: usize) -> Vec<Complex64> {
        (0..self.n).map(|j| self[(i, j)]).collect()
    }

    /// Column `j` as a vector.
    pub fn col(&self, j: usize) -> Vec<Complex64> {
        (0..self.n).map(|i| self[(i, j)]).collect()
    }

    /// Assemble a matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<Complex64>]) -> Result<Self> {
        let n = cols.len();
        if n == 0 || cols.iter().any(|c| c.len() != n) {
            return Err(Error::InvalidInput(
                "columns must form a square matrix".into(),
            ));
        }
        Ok(Matrix::from_fn(n, |i, j| cols[j][i]))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.n + j]
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        Matrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(rhs.data.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        Matrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(rhs.data.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.n, self.n)?;
        for i in 0..self.n {
            write!(f, "  ")?;
            for j in 0..self.n {
                let z = self[(i, j)];
                write!(f, "{:>9.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Complex inner product ⟨a, b⟩ = Σ conj(a_k) b_k.
pub(crate) fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}

pub(crate) fn vec_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}
