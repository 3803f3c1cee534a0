//! Gaussian elimination: determinants, inverses, and particular solutions
//! of (possibly singular) linear systems.

use num_complex::Complex64;

use super::Matrix;
use crate::error::{Error, Result};

/// LU factorization with partial pivoting, returning the factors in place
/// plus the permutation sign. `None` pivot magnitude means the matrix was
/// numerically singular at that column.
fn lu_decompose(a: &Matrix) -> (Matrix, Vec<usize>, f64) {
    let n = a.dim();
    let mut lu = a.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut sign = 1.0;
    for k in 0..n {
        let mut p = k;
        let mut best = lu[(k, k)].norm();
        for i in (k + 1)..n {
            let v = lu[(i, k)].norm();
            if v > best {
                best = v;
                p = i;
            }
        }
        if p != k {
            for j in 0..n {
                let tmp = lu[(k, j)];
                lu[(k, j)] = lu[(p, j)];
                lu[(p, j)] = tmp;
            }
            perm.swap(k, p);
            sign = -sign;
        }
        let pivot = lu[(k, k)];
        if pivot.norm() == 0.0 {
            continue;
        }
        for i in (k + 1)..n {
            let f = lu[(i, k)] / pivot;
            lu[(i, k)] = f;
            for j in (k + 1)..n {
                let sub = f * lu[(k, j)];
                lu[(i, j)] -= sub;
            }
        }
    }
    (lu, perm, sign)
}

/// Determinant via LU with partial pivoting.
pub fn determinant(a: &Matrix) -> Complex64 {
    let (lu, _, sign) = lu_decompose(a);
    let mut det = Complex64::new(sign, 0.0);
    for i in 0..a.dim() {
        det *= lu[(i, i)];
    }
    det
}

/// Inverse via LU; errors if the matrix is numerically singular.
pub fn inverse(a: &Matrix) -> Result<Matrix> {
    let n = a.dim();
    let (lu, perm, _) = lu_decompose(a);
    let scale = a.norm_fro().max(1.0);
    for i in 0..n {
        if lu[(i, i)].norm() <= 1e-14 * scale {
            return Err(Error::InvalidInput("matrix is numerically singular".into()));
        }
    }
    let mut inv = Matrix::zeros(n);
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    for col in 0..n {
        // forward substitution on the permuted unit vector
        for i in 0..n {
            let mut s = if perm[i] == col {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            };
            for j in 0..i {
                s -= lu[(i, j)] * x[j];
            }
            x[i] = s;
        }
        // back substitution
        for i in (0..n).rev() {
            let mut s = x[i];
            for j in (i + 1)..n {
                s -= lu[(i, j)] * x[j];
            }
            x[i] = s / lu[(i, i)];
        }
        for i in 0..n {
            inv[(i, col)] = x[i];
        }
    }
    Ok(inv)
}

/// A particular solution of A·x = b where A may be singular but the system
/// is consistent (b in the range of A). Free variables are set to zero.
/// Pivots with magnitude at most `tol` are treated as zero rows; returns
/// `None` when the system is numerically inconsistent.
#[allow(clippy::needless_range_loop)]
pub(crate) fn solve_particular(a: &Matrix, b: &[Complex64], tol: f64) -> Option<Vec<Complex64>> {
    let n = a.dim();
    assert_eq!(b.len(), n);
    // augmented row echelon with partial pivoting
    let mut m: Vec<Vec<Complex64>> = (0..n)
        .map(|i| {
            let mut row = a.row(i);
            row.push(b[i]);
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let mut p = r;
        let mut best = 0.0;
        for i in r..n {
            let v = m[i][c].norm();
            if v > best {
                best = v;
                p = i;
            }
        }
        if best <= tol {
            continue;
        }
        m.swap(r, p);
        let pv = m[r][c];
        for j in c..=n {
            m[r][j] /= pv;
        }
        for i in 0..n {
            if i != r && m[i][c].norm() > 0.0 {
                let f = m[i][c];
                for j in c..=n {
                    let sub = f * m[r][j];
                    m[i][j] -= sub;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == n {
            break;
        }
    }
    // consistency: zero rows must have ~zero rhs
    let rhs_scale = b.iter().map(|z| z.norm()).fold(1.0, f64::max);
    for row in m.iter().skip(r) {
        if row[n].norm() > tol.max(1e-9 * rhs_scale) {
            return None;
        }
    }
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    for (row_idx, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[row_idx][n];
    }
    Some(x)
}
