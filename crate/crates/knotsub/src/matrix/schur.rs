//! Block Schur form for real skew-symmetric matrices.
//!
//! A real skew-symmetric X satisfies X = Qᵀ D Q with Q orthogonal and D
//! block diagonal: 2×2 blocks `J(λ) = [[0, λ], [−λ, 0]]` for each conjugate
//! eigenvalue pair ±iλ, then 1×1 zero blocks. The construction reuses the
//! Hermitian eigensolver on iX: the eigenvector u + iw for eigenvalue λ > 0
//! yields the orthonormal real plane (√2·w, √2·u) on which X acts as J(λ).

use num_complex::Complex64;

use super::{determinant, hermitian_eigs, Matrix};
use crate::error::{Error, Result};

/// Decompose a real skew-symmetric matrix into rotation blocks.
///
/// Returns `(q, blocks, zero_count)` with X = Qᵀ·D·Q, det(Q) = +1, and D
/// assembled from 2×2 blocks J(λ_j) in the order given by `blocks`
/// (descending) followed by `zero_count` zero rows/columns.
///
/// When n is even, X has full rank, and the orientations of the invariant
/// planes multiply to −1, no special-orthogonal Q reaches an all-positive
/// block list; in that case the last entry of `blocks` is negative and
/// det(Q) = +1 is kept. All other inputs produce strictly positive blocks.
pub fn skew_block_schur(x: &Matrix) -> Result<(Matrix, Vec<f64>, usize)> {
    let n = x.dim();
    let scale = x.norm_fro();
    if !x.is_real(1e-10 * (1.0 + scale)) {
        return Err(Error::Precondition("matrix is not real".into()));
    }
    if x.dist(&x.transpose().scale_re(-1.0)) > 1e-10 * scale.max(1.0) {
        return Err(Error::Precondition("matrix is not skew-symmetric".into()));
    }

    // iX is Hermitian; its eigenvalue λ > 0 with eigenvector v = u + iw
    // gives X w = -λ u and X u = λ w.
    let h = x.scale(Complex64::new(0.0, 1.0));
    let pairs = hermitian_eigs(&h)?;
    let zero_tol = 1e-9 * (1.0 + scale);

    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut blocks = Vec::new();
    for pair in pairs.iter().filter(|p| p.value.re > zero_tol) {
        let u: Vec<f64> = pair.vector.iter().map(|z| z.re).collect();
        let w: Vec<f64> = pair.vector.iter().map(|z| z.im).collect();
        let sqrt2 = std::f64::consts::SQRT_2;
        rows.push(w.iter().map(|&t| sqrt2 * t).collect());
        rows.push(u.iter().map(|&t| sqrt2 * t).collect());
        blocks.push(pair.value.re);
    }
    let pair_count = blocks.len();
    let negatives = pairs.iter().filter(|p| p.value.re < -zero_tol).count();
    if negatives != pair_count {
        return Err(Error::NoConvergence(
            "eigenvalue pairing of the skew spectrum failed".into(),
        ));
    }
    let zero_count = n - 2 * pair_count;

    // complete with an orthonormal kernel basis (X vanishes on the
    // orthogonal complement of the rotation planes)
    let mut kernel_added = 0;
    let mut candidates: Vec<Vec<f64>> = pairs
        .iter()
        .filter(|p| p.value.re.abs() <= zero_tol)
        .flat_map(|p| {
            let u: Vec<f64> = p.vector.iter().map(|z| z.re).collect();
            let w: Vec<f64> = p.vector.iter().map(|z| z.im).collect();
            [u, w]
        })
        .collect();
    for k in 0..n {
        let mut e = vec![0.0; n];
        e[k] = 1.0;
        candidates.push(e);
    }
    for cand in candidates {
        if kernel_added == zero_count {
            break;
        }
        let mut v = cand;
        for row in &rows {
            let proj: f64 = row.iter().zip(v.iter()).map(|(a, b)| a * b).sum();
            for (vi, ri) in v.iter_mut().zip(row.iter()) {
                *vi -= proj * ri;
            }
        }
        let nrm: f64 = v.iter().map(|t| t * t).sum::<f64>().sqrt();
        if nrm > 1e-6 {
            for vi in v.iter_mut() {
                *vi /= nrm;
            }
            rows.push(v);
            kernel_added += 1;
        }
    }
    if rows.len() != n {
        return Err(Error::NoConvergence(
            "failed to complete the orthonormal basis".into(),
        ));
    }

    // one polishing pass of modified Gram-Schmidt over all rows
    for i in 0..n {
        for j in 0..i {
            let proj: f64 = rows[j].iter().zip(rows[i].iter()).map(|(a, b)| a * b).sum();
            let prev = rows[j].clone();
            for (vi, ri) in rows[i].iter_mut().zip(prev.iter()) {
                *vi -= proj * ri;
            }
        }
        let nrm: f64 = rows[i].iter().map(|t| t * t).sum::<f64>().sqrt();
        for vi in rows[i].iter_mut() {
            *vi /= nrm;
        }
    }

    let mut q = Matrix::from_real_rows(&rows)?;
    if determinant(&q).re < 0.0 {
        if zero_count > 0 {
            // negating a kernel row flips det and leaves D unchanged
            let last = n - 1;
            for j in 0..n {
                q[(last, j)] = -q[(last, j)];
            }
        } else {
            // swap the two rows of the last block: det flips and the block
            // becomes J(−λ)
            let r1 = 2 * pair_count - 2;
            let r2 = 2 * pair_count - 1;
            for j in 0..n {
                let tmp = q[(r1, j)];
                q[(r1, j)] = q[(r2, j)];
                q[(r2, j)] = tmp;
            }
            let last = blocks.len() - 1;
            blocks[last] = -blocks[last];
        }
    }
    Ok((q, blocks, zero_count))
}

/// Assemble the block-diagonal matrix described by `blocks` and
/// `zero_count`, with exact zeros outside the blocks.
pub fn block_diagonal(blocks: &[f64], zero_count: usize) -> Matrix {
    let n = 2 * blocks.len() + zero_count;
    let mut d = Matrix::zeros(n);
    for (j, &lam) in blocks.iter().enumerate() {
        d[(2 * j, 2 * j + 1)] = Complex64::new(lam, 0.0);
        d[(2 * j + 1, 2 * j)] = Complex64::new(-lam, 0.0);
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rotation_block(lam: f64) -> Vec<Vec<f64>> {
        vec![vec![0.0, lam], vec![-lam, 0.0]]
    }

    #[test]
    fn already_in_form() {
        // J(1) ⊕ 0
        let x = Matrix::from_real_rows(&[
            vec![0.0, 1.0, 0.0],
            vec![-1.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0],
        ])
        .unwrap();
        let (q, blocks, zero_count) = skew_block_schur(&x).unwrap();
        assert_eq!(blocks.len(), 1);
        assert!((blocks[0] - 1.0).abs() < 1e-10);
        assert_eq!(zero_count, 1);
        let d = block_diagonal(&blocks, zero_count);
        let rebuilt = &(&q.transpose() * &d) * &q;
        assert!(rebuilt.dist(&x) <= 1e-8 * (1.0 + x.norm_fro()));
        assert!((determinant(&q).re - 1.0).abs() < 1e-9);
    }

    #[test]
    fn zero_matrix() {
        let x = Matrix::zeros(4);
        let (q, blocks, zero_count) = skew_block_schur(&x).unwrap();
        assert!(blocks.is_empty());
        assert_eq!(zero_count, 4);
        assert!(q.unitary_defect() < 1e-9);
    }

    #[test]
    fn recovers_blocks_after_rotation() {
        // conjugate J(2) ⊕ J(1) by a fixed rotation with det +1 and make
        // sure the block magnitudes come back in descending order
        let d = block_diagonal(&[2.0, 1.0], 0);
        let angle: f64 = 0.7;
        let mut g = Matrix::identity(4);
        g[(0, 0)] = Complex64::new(angle.cos(), 0.0);
        g[(0, 2)] = Complex64::new(angle.sin(), 0.0);
        g[(2, 0)] = Complex64::new(-angle.sin(), 0.0);
        g[(2, 2)] = Complex64::new(angle.cos(), 0.0);
        let x = &(&g.transpose() * &d) * &g;
        let (q, blocks, zero_count) = skew_block_schur(&x).unwrap();
        assert_eq!(zero_count, 0);
        assert!((blocks[0] - 2.0).abs() < 1e-9);
        assert!((blocks[1].abs() - 1.0).abs() < 1e-9);
        let rebuilt = &(&q.transpose() * &block_diagonal(&blocks, 0)) * &q;
        assert!(rebuilt.dist(&x) <= 1e-8 * (1.0 + x.norm_fro()));
        assert!((determinant(&q).re - 1.0).abs() < 1e-9);
        assert!(q.unitary_defect() <= 1e-9);
    }

    #[test]
    fn reversed_orientation_keeps_special_q() {
        // J(-1) in dimension 2: an SO(2) conjugation cannot make the block
        // positive, so the block stays negative and det(Q) stays +1
        let x = Matrix::from_real_rows(&rotation_block(-1.0)).unwrap();
        let (q, blocks, zero_count) = skew_block_schur(&x).unwrap();
        assert_eq!(zero_count, 0);
        assert_eq!(blocks.len(), 1);
        assert!((blocks[0] + 1.0).abs() < 1e-9);
        assert!((determinant(&q).re - 1.0).abs() < 1e-9);
        let rebuilt = &(&q.transpose() * &block_diagonal(&blocks, 0)) * &q;
        assert!(rebuilt.dist(&x) <= 1e-8);
    }

    #[test]
    fn odd_dimension_reversed_orientation_gets_positive_blocks() {
        let x = Matrix::from_real_rows(&[
            vec![0.0, -1.0, 0.0],
            vec![1.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0],
        ])
        .unwrap();
        let (q, blocks, zero_count) = skew_block_schur(&x).unwrap();
        assert_eq!(zero_count, 1);
        assert!((blocks[0] - 1.0).abs() < 1e-9);
        assert!((determinant(&q).re - 1.0).abs() < 1e-9);
        let rebuilt = &(&q.transpose() * &block_diagonal(&blocks, 1)) * &q;
        assert!(rebuilt.dist(&x) <= 1e-8);
    }

    #[test]
    fn symmetric_input_rejected() {
        let x = Matrix::from_real_rows(&[
            vec![0.0, 1.0, 0.0],
            vec![1.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0],
        ])
        .unwrap();
        assert!(matches!(skew_block_schur(&x), Err(Error::Precondition(_))));
    }
}
