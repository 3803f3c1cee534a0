//! Principal matrix logarithms of unitary and special orthogonal matrices.

use num_complex::Complex64;

use super::{determinant, mat_exp, unitary_eigs, Matrix};
use crate::error::{Error, Result};

/// Principal logarithm of a unitary matrix.
///
/// Returns the skew-Hermitian K with e^K = P whose eigenphases lie in
/// (−π, π]; a phase of exactly π keeps the +π branch. The residual
/// ‖e^K − P‖ is verified to be at most 1e-8.
pub fn principal_log_unitary(p: &Matrix) -> Result<Matrix> {
    let (phases, v) = unitary_eigs(p)?;
    let log_diag = Matrix::diag(
        &phases
            .iter()
            .map(|&t| Complex64::new(0.0, t))
            .collect::<Vec<_>>(),
    );
    let k = &(&v * &log_diag) * &v.adjoint();
    // enforce exact skew-Hermitian structure
    let k = (&k - &k.adjoint()).scale_re(0.5);
    let residual = mat_exp(&k)?.dist(p);
    if residual > 1e-8 {
        return Err(Error::NoConvergence(format!(
            "principal log residual {residual:.3e} exceeds 1e-8"
        )));
    }
    Ok(k)
}

/// Principal logarithm of a special orthogonal matrix, returned as a real
/// skew-symmetric generator.
///
/// Eigenphase pairs ±θ of P span real invariant planes; on each plane the
/// generator acts as the rotation generator scaled by θ. The −1 eigenspace
/// (phase π) has even dimension for det = +1 and is filled with π-rotation
/// planes paired arbitrarily. Matrices with det = −1 have no logarithm in
/// the special orthogonal group and are rejected.
pub fn principal_log_special_orthogonal(p: &Matrix) -> Result<Matrix> {
    let n = p.dim();
    let scale = 1.0 + p.norm_fro();
    if !p.is_real(1e-9 * scale) {
        return Err(Error::Precondition("matrix is not real".into()));
    }
    if p.unitary_defect() > 1e-9 * scale {
        return Err(Error::Precondition("matrix is not orthogonal".into()));
    }
    if determinant(p).re < 0.0 {
        return Err(Error::Domain(
            "determinant is -1: no path to the identity inside the rotation group".into(),
        ));
    }

    let (phases, v) = unitary_eigs(p)?;
    let phase_tol = 1e-7;
    let mut k = Matrix::zeros(n);

    // rank-two update K += θ (a bᵀ − b aᵀ) for the orthonormal plane (a, b)
    let add_plane = |k: &mut Matrix, a: &[f64], b: &[f64], theta: f64| {
        for i in 0..n {
            for j in 0..n {
                let upd = theta * (a[i] * b[j] - b[i] * a[j]);
                k[(i, j)] += Complex64::new(upd, 0.0);
            }
        }
    };

    // generic phases 0 < θ < π: eigenvector u + iw gives the plane
    for (idx, &theta) in phases.iter().enumerate() {
        if theta > phase_tol && theta < std::f64::consts::PI - phase_tol {
            let col = v.col(idx);
            let sqrt2 = std::f64::consts::SQRT_2;
            let a: Vec<f64> = col.iter().map(|z| sqrt2 * z.re).collect();
            let b: Vec<f64> = col.iter().map(|z| sqrt2 * z.im).collect();
            add_plane(&mut k, &a, &b, theta);
        }
    }

    // the −1 eigenspace: extract a real orthonormal basis and pair it up
    let minus_cols: Vec<Vec<Complex64>> = phases
        .iter()
        .enumerate()
        .filter(|(_, &t)| t >= std::f64::consts::PI - phase_tol)
        .map(|(idx, _)| v.col(idx))
        .collect();
    if !minus_cols.is_empty() {
        let mut real_basis: Vec<Vec<f64>> = Vec::new();
        for col in &minus_cols {
            for part in [
                col.iter().map(|z| z.re).collect::<Vec<f64>>(),
                col.iter().map(|z| z.im).collect::<Vec<f64>>(),
            ] {
                let mut cand = part;
                for prev in &real_basis {
                    let proj: f64 = prev.iter().zip(cand.iter()).map(|(a, b)| a * b).sum();
                    for (ci, pi) in cand.iter_mut().zip(prev.iter()) {
                        *ci -= proj * pi;
                    }
                }
                let nrm: f64 = cand.iter().map(|t| t * t).sum::<f64>().sqrt();
                if nrm > 1e-6 {
                    for ci in cand.iter_mut() {
                        *ci /= nrm;
                    }
                    real_basis.push(cand);
                }
            }
        }
        if real_basis.len() != minus_cols.len() || !real_basis.len().is_multiple_of(2) {
            return Err(Error::NoConvergence(
                "could not extract a real basis for the -1 eigenspace".into(),
            ));
        }
        for pair in real_basis.chunks(2) {
            add_plane(&mut k, &pair[0], &pair[1], std::f64::consts::PI);
        }
    }

    let residual = mat_exp(&k)?.dist(p);
    if residual > 1e-8 {
        return Err(Error::NoConvergence(format!(
            "orthogonal log residual {residual:.3e} exceeds 1e-8"
        )));
    }
    Ok(k)
}
