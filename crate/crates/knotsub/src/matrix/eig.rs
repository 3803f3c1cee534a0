//! Eigenvalue kernels.
//!
//! Three solvers cover every need of the crate:
//!
//! * a cyclic Jacobi iteration for Hermitian matrices (unconditionally
//!   convergent, accumulates an orthonormal eigenbasis),
//! * closed-form quadratic/cubic formulas for matrices up to 3×3,
//! * a characteristic-polynomial root finder (Faddeev–LeVerrier
//!   coefficients, Durand–Kerner iteration) for general small matrices.
//!
//! Singular values, numerical ranks, and null spaces are derived from the
//! Jacobi solver applied to A*A, so every rank decision in the crate rests
//! on a single engine.

use num_complex::Complex64;

use super::{inner, vec_norm, Matrix};
use crate::error::{Error, Result};

/// One eigenvalue with a unit eigenvector.
#[derive(Debug, Clone)]
pub struct EigenPair {
    pub value: Complex64,
    pub vector: Vec<Complex64>,
}

const JACOBI_MAX_SWEEPS: usize = 100;

/// Off-diagonal Frobenius mass, the Jacobi convergence measure.
fn off_diagonal_mass(a: &Matrix) -> f64 {
    let n = a.dim();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
///
/// Returns eigenvalues (unsorted) and the unitary matrix of eigenvectors as
/// columns, with A = V Λ V*. Convergence is declared when the off-diagonal
/// Frobenius mass drops below 1e-12·‖A‖_F.
fn jacobi_hermitian(a: &Matrix) -> Result<(Vec<f64>, Matrix)> {
    let n = a.dim();
    let mut m = a.clone();
    let mut v = Matrix::identity(n);
    let target = 1e-12 * a.norm_fro();

    for _sweep in 0..JACOBI_MAX_SWEEPS {
        if off_diagonal_mass(&m) <= target {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let beta = m[(p, q)];
                let mag = beta.norm();
                if mag == 0.0 {
                    continue;
                }
                let phase = beta / mag; // e^{i phi}
                let alpha = m[(p, p)].re;
                let gamma = m[(q, q)].re;
                let tau = (gamma - alpha) / (2.0 * mag);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let s_phase = phase * s; // s e^{i phi}
                let s_phase_conj = s_phase.conj();

                // column update: M <- M G
                for i in 0..n {
                    let mp = m[(i, p)];
                    let mq = m[(i, q)];
                    m[(i, p)] = mp * c - mq * s_phase_conj;
                    m[(i, q)] = mp * s_phase + mq * c;
                }
                // row update: M <- G* M
                for j in 0..n {
                    let mp = m[(p, j)];
                    let mq = m[(q, j)];
                    m[(p, j)] = mp * c - mq * s_phase;
                    m[(q, j)] = mp * s_phase_conj + mq * c;
                }
                m[(p, q)] = Complex64::new(0.0, 0.0);
                m[(q, p)] = Complex64::new(0.0, 0.0);
                // accumulate V <- V G
                for i in 0..n {
                    let vp = v[(i, p)];
                    let vq = v[(i, q)];
                    v[(i, p)] = vp * c - vq * s_phase_conj;
                    v[(i, q)] = vp * s_phase + vq * c;
                }
            }
        }
    }
    if off_diagonal_mass(&m) > target.max(1e-300) && off_diagonal_mass(&m) > 10.0 * target {
        return Err(Error::NoConvergence(
            "Jacobi iteration did not reach the off-diagonal target".into(),
        ));
    }
    let values = (0..n).map(|i| m[(i, i)].re).collect();
    Ok((values, v))
}

/// Eigendecomposition of a Hermitian matrix: real eigenvalues sorted in
/// descending order with orthonormal eigenvectors.
///
/// The input must satisfy ‖H − H*‖ ≤ 1e-10·‖H‖.
pub fn hermitian_eigs(h: &Matrix) -> Result<Vec<EigenPair>> {
    if !h.is_finite() {
        return Err(Error::InvalidInput("matrix has non-finite entries".into()));
    }
    if !h.is_hermitian(1e-10 * h.norm_fro().max(1.0)) {
        return Err(Error::Precondition("matrix is not Hermitian".into()));
    }
    let (values, vecs) = jacobi_hermitian(h)?;
    let n = h.dim();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[b].partial_cmp(&values[a]).unwrap());
    Ok(order
        .into_iter()
        .map(|k| EigenPair {
            value: Complex64::new(values[k], 0.0),
            vector: vecs.col(k),
        })
        .collect())
}

/// Singular values of a square matrix, descending. Computed as the square
/// roots of the eigenvalues of A*A.
pub fn singular_values(a: &Matrix) -> Result<Vec<f64>> {
    let gram = &a.adjoint() * a;
    let (values, _) = jacobi_hermitian(&gram)?;
    let mut sv: Vec<f64> = values.into_iter().map(|v| v.max(0.0).sqrt()).collect();
    sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok(sv)
}

/// Orthonormal basis of the numerical null space of A: eigenvectors of A*A
/// whose singular value is at most `tol`, most null first.
pub(crate) fn null_space_basis(a: &Matrix, tol: f64) -> Result<Vec<Vec<Complex64>>> {
    let gram = &a.adjoint() * a;
    let (values, vecs) = jacobi_hermitian(&gram)?;
    let n = a.dim();
    let mut hits: Vec<(f64, usize)> = (0..n)
        .filter_map(|k| {
            let sv = values[k].max(0.0).sqrt();
            (sv <= tol).then_some((sv, k))
        })
        .collect();
    hits.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    Ok(hits.into_iter().map(|(_, k)| vecs.col(k)).collect())
}

/// Eigenphases and eigenvectors of a unitary matrix.
///
/// A unitary P is normal, so it is diagonalized by simultaneously
/// diagonalizing the commuting Hermitian pair H = (P+P*)/2 and
/// S = (P−P*)/(2i): first H, then S restricted to each eigenvalue cluster
/// of H. Phases are Rayleigh quotients v*Pv taken in (−π, π], with −π
/// mapped to +π.
pub(crate) fn unitary_eigs(p: &Matrix) -> Result<(Vec<f64>, Matrix)> {
    let n = p.dim();
    if p.unitary_defect() > 1e-9 * (1.0 + p.norm_fro()) {
        return Err(Error::Precondition("matrix is not unitary".into()));
    }
    let h = &(p + &p.adjoint()).scale_re(0.5);
    let s = (p - &p.adjoint()).scale(Complex64::new(0.0, -0.5));
    let pairs = hermitian_eigs(h)?;

    // cluster equal cosines (phases ±θ share one), then split by the sine part
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    let mut idx = 0;
    while idx < n {
        let mut end = idx + 1;
        while end < n && (pairs[end].value.re - pairs[idx].value.re).abs() <= 1e-7 {
            end += 1;
        }
        let cluster: Vec<&Vec<Complex64>> = pairs[idx..end].iter().map(|p| &p.vector).collect();
        let m = cluster.len();
        if m == 1 {
            cols.push(cluster[0].clone());
        } else {
            // restrict S to the cluster and diagonalize
            let mut sm = Matrix::zeros(m);
            let s_applied: Vec<Vec<Complex64>> = cluster.iter().map(|v| s.apply(v)).collect();
            for i in 0..m {
                for j in 0..m {
                    sm[(i, j)] = inner(cluster[i], &s_applied[j]);
                }
            }
            // symmetrize away the projection noise
            sm = (&sm + &sm.adjoint()).scale_re(0.5);
            let sub = hermitian_eigs(&sm)?;
            for pair in sub {
                let mut v = vec![Complex64::new(0.0, 0.0); n];
                for (i, base) in cluster.iter().enumerate() {
                    for (k, item) in v.iter_mut().enumerate() {
                        *item += pair.vector[i] * base[k];
                    }
                }
                let nrm = vec_norm(&v);
                for z in v.iter_mut() {
                    *z /= nrm;
                }
                cols.push(v);
            }
        }
        idx = end;
    }

    let mut phases = Vec::with_capacity(n);
    for v in &cols {
        let pv = p.apply(v);
        let lambda = inner(v, &pv);
        let mut theta = lambda.im.atan2(lambda.re);
        if theta <= -std::f64::consts::PI {
            theta = std::f64::consts::PI;
        }
        phases.push(theta);
    }
    let vmat = Matrix::from_cols(&cols)?;
    Ok((phases, vmat))
}

/// All eigenvalues of a matrix of dimension at most 3, with multiplicity,
/// from the closed-form roots of the characteristic polynomial.
pub fn small_eigs(x: &Matrix) -> Result<Vec<Complex64>> {
    let n = x.dim();
    if n > 3 {
        return Err(Error::UnsupportedDimension(format!(
            "closed-form eigenvalues support n <= 3, got {n}"
        )));
    }
    if !x.is_finite() {
        return Err(Error::InvalidInput("matrix has non-finite entries".into()));
    }
    match n {
        1 => Ok(vec![x[(0, 0)]]),
        2 => Ok(eigs2(x)),
        _ => Ok(eigs3(x)),
    }
}

fn eigs2(x: &Matrix) -> Vec<Complex64> {
    let tr = x.trace();
    let det = x[(0, 0)] * x[(1, 1)] - x[(0, 1)] * x[(1, 0)];
    let real_input = x.max_imag() == 0.0;
    if real_input {
        let tr = tr.re;
        let det = det.re;
        let disc = tr * tr - 4.0 * det;
        if disc >= 0.0 {
            let r = disc.sqrt();
            // avoid cancellation: pick the large-magnitude root first
            let l1 = if tr >= 0.0 {
                (tr + r) / 2.0
            } else {
                (tr - r) / 2.0
            };
            let l2 = if l1 != 0.0 { det / l1 } else { tr - l1 };
            vec![Complex64::new(l1, 0.0), Complex64::new(l2, 0.0)]
        } else {
            let im = (-disc).sqrt() / 2.0;
            vec![Complex64::new(tr / 2.0, im), Complex64::new(tr / 2.0, -im)]
        }
    } else {
        let half = tr / 2.0;
        let disc = half * half - det;
        let r = disc.sqrt();
        vec![half + r, half - r]
    }
}

fn eigs3(x: &Matrix) -> Vec<Complex64> {
    // shift to a trace-free matrix: roots of t^3 + p t + q, then shift back
    let shift = x.trace() / 3.0;
    let y = x - &Matrix::diag(&[shift, shift, shift]);
    let y2 = &y * &y;
    let p = -(y2.trace()) / 2.0;
    let q = -det3(&y);
    let real_input = x.max_imag() == 0.0;
    let roots = if real_input {
        depressed_cubic_roots_real(p.re, q.re)
    } else {
        depressed_cubic_roots_complex(p, q)
    };
    roots.into_iter().map(|t| t + shift).collect()
}

fn det3(m: &Matrix) -> Complex64 {
    m[(0, 0)] * (m[(1, 1)] * m[(2, 2)] - m[(1, 2)] * m[(2, 1)])
        - m[(0, 1)] * (m[(1, 0)] * m[(2, 2)] - m[(1, 2)] * m[(2, 0)])
        + m[(0, 2)] * (m[(1, 0)] * m[(2, 1)] - m[(1, 1)] * m[(2, 0)])
}

/// Roots of t^3 + p t + q for real p, q. Real roots come out exactly real
/// and complex roots in exactly conjugate pairs.
fn depressed_cubic_roots_real(p: f64, q: f64) -> Vec<Complex64> {
    let disc = -4.0 * p * p * p - 27.0 * q * q;
    if p == 0.0 && q == 0.0 {
        return vec![Complex64::new(0.0, 0.0); 3];
    }
    if disc >= 0.0 {
        // three real roots: trigonometric form (p < 0 is forced here)
        let mp = (-p / 3.0).max(0.0);
        let m = 2.0 * mp.sqrt();
        if m == 0.0 {
            return vec![Complex64::new(0.0, 0.0); 3];
        }
        let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        (0..3)
            .map(|k| {
                let t = m * (theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos();
                Complex64::new(t, 0.0)
            })
            .collect()
    } else {
        // one real root by Cardano, conjugate pair by deflation
        let half_q = q / 2.0;
        let rad = (half_q * half_q + p * p * p / 27.0).sqrt();
        // choose the sign that avoids cancellation
        let u3 = if half_q >= 0.0 {
            -half_q - rad
        } else {
            -half_q + rad
        };
        let u = u3.cbrt();
        let t0 = if u != 0.0 { u - p / (3.0 * u) } else { 0.0 };
        let b_sq = 3.0 * t0 * t0 + 4.0 * p;
        let b = (b_sq.max(0.0)).sqrt() / 2.0;
        vec![
            Complex64::new(t0, 0.0),
            Complex64::new(-t0 / 2.0, b),
            Complex64::new(-t0 / 2.0, -b),
        ]
    }
}

fn depressed_cubic_roots_complex(p: Complex64, q: Complex64) -> Vec<Complex64> {
    let zero = Complex64::new(0.0, 0.0);
    if p.norm() == 0.0 && q.norm() == 0.0 {
        return vec![zero; 3];
    }
    let half_q = q / 2.0;
    let rad = (half_q * half_q + p * p * p / 27.0).sqrt();
    // pick the branch with the larger magnitude to avoid cancellation
    let c1 = -half_q + rad;
    let c2 = -half_q - rad;
    let u3 = if c1.norm() >= c2.norm() { c1 } else { c2 };
    let u = u3.cbrt();
    let omega = Complex64::new(-0.5, 3.0f64.sqrt() / 2.0);
    (0..3)
        .map(|k| {
            let w = match k {
                0 => Complex64::new(1.0, 0.0),
                1 => omega,
                _ => omega * omega,
            };
            let uk = u * w;
            if uk.norm() > 0.0 {
                uk - p / (uk * 3.0)
            } else {
                zero
            }
        })
        .collect()
}

/// Monic characteristic polynomial coefficients by the Faddeev–LeVerrier
/// recurrence: returns `a` with charpoly(λ) = λ^n + a[0] λ^{n−1} + … + a[n−1].
fn charpoly(x: &Matrix) -> Vec<Complex64> {
    let n = x.dim();
    let mut coeffs = Vec::with_capacity(n);
    let mut m = x.clone();
    for k in 1..=n {
        let a_k = -m.trace() / k as f64;
        coeffs.push(a_k);
        if k < n {
            let shifted = &m + &Matrix::diag(&vec![a_k; n]);
            m = x * &shifted;
        }
    }
    coeffs
}

/// All eigenvalues of a general square matrix via Durand–Kerner iteration
/// on the characteristic polynomial. Adequate for the desk-scale matrices
/// this crate handles; accuracy degrades near defective spectra, which the
/// callers account for.
pub(crate) fn dense_eigenvalues(x: &Matrix) -> Vec<Complex64> {
    let n = x.dim();
    if n <= 3 {
        return small_eigs(x).expect("dims checked");
    }
    let coeffs = charpoly(x);
    let radius = 1.0 + coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    // distinct, non-symmetric starting points
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n)
        .map(|j| {
            let angle = 2.0 * std::f64::consts::PI * j as f64 / n as f64 + 0.39;
            Complex64::new(angle.cos(), angle.sin()) * (0.5 * radius) + seed * 1e-3
        })
        .collect();
    let eval = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(1.0, 0.0);
        for c in &coeffs {
            acc = acc * z + c;
        }
        acc
    };
    for _ in 0..500 {
        let mut max_step = 0.0f64;
        for j in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for k in 0..n {
                if k != j {
                    let d = roots[j] - roots[k];
                    denom *= if d.norm() > 1e-300 {
                        d
                    } else {
                        Complex64::new(1e-300, 0.0)
                    };
                }
            }
            let step = eval(roots[j]) / denom;
            roots[j] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step <= 1e-13 * radius {
            break;
        }
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn hermitian_diagonal_sorted() {
        let h = Matrix::diag_real(&[3.0, 5.0, -8.0]);
        let pairs = hermitian_eigs(&h).unwrap();
        let values: Vec<f64> = pairs.iter().map(|p| p.value.re).collect();
        assert!((values[0] - 5.0).abs() < 1e-12);
        assert!((values[1] - 3.0).abs() < 1e-12);
        assert!((values[2] + 8.0).abs() < 1e-12);
    }

    #[test]
    fn hermitian_symmetric_pair() {
        let h = Matrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let pairs = hermitian_eigs(&h).unwrap();
        assert!((pairs[0].value.re - 1.0).abs() < 1e-12);
        assert!((pairs[1].value.re + 1.0).abs() < 1e-12);
    }

    #[test]
    fn hermitian_antidiagonal_i_sigma_z() {
        // i·antidiag(i, i) = antidiag(-1, -1); by hand the characteristic
        // polynomial is λ² − 1, so the values are (1, -1)
        let h = Matrix::from_rows(&[
            vec![c(0.0, 0.0), c(-1.0, 0.0)],
            vec![c(-1.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        let pairs = hermitian_eigs(&h).unwrap();
        assert!((pairs[0].value.re - 1.0).abs() < 1e-12);
        assert!((pairs[1].value.re + 1.0).abs() < 1e-12);
    }

    #[test]
    fn hermitian_reconstruction_and_residual() {
        // fixed complex Hermitian: check V Λ V* = H and the eigen residual
        let h = Matrix::from_rows(&[
            vec![c(2.0, 0.0), c(1.0, 1.0), c(0.0, -2.0)],
            vec![c(1.0, -1.0), c(-1.0, 0.0), c(3.0, 0.5)],
            vec![c(0.0, 2.0), c(3.0, -0.5), c(0.5, 0.0)],
        ])
        .unwrap();
        let pairs = hermitian_eigs(&h).unwrap();
        let v =
            Matrix::from_cols(&pairs.iter().map(|p| p.vector.clone()).collect::<Vec<_>>()).unwrap();
        let lam = Matrix::diag(&pairs.iter().map(|p| p.value).collect::<Vec<_>>());
        let rebuilt = &(&v * &lam) * &v.adjoint();
        assert!(rebuilt.dist(&h) <= 1e-8 * (1.0 + h.norm_fro()));
        assert!(v.unitary_defect() < 1e-9);
        for p in &pairs {
            let hv = h.apply(&p.vector);
            let lv: Vec<Complex64> = p.vector.iter().map(|z| z * p.value).collect();
            let resid: f64 = hv
                .iter()
                .zip(lv.iter())
                .map(|(a, b)| (a - b).norm_sqr())
                .sum::<f64>()
                .sqrt();
            assert!(resid <= 1e-8 * h.norm_fro());
        }
    }

    #[test]
    fn non_hermitian_rejected() {
        let m = Matrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert!(matches!(hermitian_eigs(&m), Err(Error::Precondition(_))));
    }

    #[test]
    fn small_eigs_symmetric_2x2() {
        let x = Matrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let mut eigs = small_eigs(&x).unwrap();
        eigs.sort_by(|a, b| b.re.partial_cmp(&a.re).unwrap());
        assert!((eigs[0] - c(1.0, 0.0)).norm() < 1e-12);
        assert!((eigs[1] - c(-1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn small_eigs_rotation_block_3x3() {
        // [[0,2,0],[-2,0,0],[0,0,0]] has eigenvalues ±2i and 0
        let x = Matrix::from_real_rows(&[
            vec![0.0, 2.0, 0.0],
            vec![-2.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0],
        ])
        .unwrap();
        let eigs = small_eigs(&x).unwrap();
        let mut ims: Vec<f64> = eigs.iter().map(|z| z.im).collect();
        ims.sort_by(|a, b| b.partial_cmp(a).unwrap());
        assert!((ims[0] - 2.0).abs() < 1e-10);
        assert!((ims[1] - 0.0).abs() < 1e-10);
        assert!((ims[2] + 2.0).abs() < 1e-10);
        assert!(eigs.iter().all(|z| z.re.abs() < 1e-10));
    }

    #[test]
    fn small_eigs_nilpotent() {
        let x = Matrix::from_real_rows(&[
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 1.0],
            vec![0.0, 0.0, 0.0],
        ])
        .unwrap();
        let eigs = small_eigs(&x).unwrap();
        assert!(eigs.iter().all(|z| z.norm() < 1e-10));
    }

    #[test]
    fn small_eigs_residual_contract() {
        let x = Matrix::from_real_rows(&[
            vec![1.0, 2.0, -1.0],
            vec![0.5, -3.0, 2.0],
            vec![4.0, 0.0, 2.0],
        ])
        .unwrap();
        let eigs = small_eigs(&x).unwrap();
        let scale = (1.0 + x.norm_fro()).powi(3);
        for &lam in &eigs {
            // |charpoly(λ)| via det(X − λI)
            let shifted = &x - &Matrix::diag(&[lam, lam, lam]);
            let resid = super::det3(&shifted).norm();
            assert!(resid <= 1e-8 * scale, "residual {resid} too large");
        }
        // conjugate-pair symmetry for real input
        let mut ims: Vec<f64> = eigs.iter().map(|z| z.im).collect();
        ims.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((ims[0] + ims[2]).abs() < 1e-8 && ims[1].abs() < 1e-8);
    }

    #[test]
    fn small_eigs_dimension_guard() {
        let x = Matrix::identity(4);
        assert!(matches!(
            small_eigs(&x),
            Err(Error::UnsupportedDimension(_))
        ));
    }

    #[test]
    fn dense_eigenvalues_match_diagonal() {
        let x = Matrix::diag_real(&[1.0, -2.0, 3.5, -2.5]);
        let mut eigs: Vec<f64> = dense_eigenvalues(&x).iter().map(|z| z.re).collect();
        eigs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let expect = [-2.5, -2.0, 1.0, 3.5];
        for (got, want) in eigs.iter().zip(expect.iter()) {
            assert!((got - want).abs() < 1e-9);
        }
    }

    #[test]
    fn dense_eigenvalues_rotation_blocks() {
        // J(3) ⊕ J(1) has spectrum ±3i, ±1i
        let x = Matrix::from_real_rows(&[
            vec![0.0, 3.0, 0.0, 0.0],
            vec![-3.0, 0.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0, 1.0],
            vec![0.0, 0.0, -1.0, 0.0],
        ])
        .unwrap();
        let mut ims: Vec<f64> = dense_eigenvalues(&x).iter().map(|z| z.im).collect();
        ims.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let expect = [-3.0, -1.0, 1.0, 3.0];
        for (got, want) in ims.iter().zip(expect.iter()) {
            assert!((got - want).abs() < 1e-8, "{got} vs {want}");
        }
    }

    #[test]
    fn singular_values_of_diagonal() {
        let x = Matrix::diag_real(&[-3.0, 2.0, 0.0]);
        let sv = singular_values(&x).unwrap();
        assert!((sv[0] - 3.0).abs() < 1e-10);
        assert!((sv[1] - 2.0).abs() < 1e-10);
        assert!(sv[2].abs() < 1e-10);
    }

    #[test]
    fn null_space_of_rank_two() {
        let x = Matrix::from_real_rows(&[
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 1.0],
            vec![0.0, 0.0, 0.0],
        ])
        .unwrap();
        let basis = null_space_basis(&x, 1e-8).unwrap();
        assert_eq!(basis.len(), 1);
        let img = x.apply(&basis[0]);
        assert!(vec_norm(&img) < 1e-8);
    }

    #[test]
    fn unitary_eigs_recovers_phases() {
        // block-diagonal unitary with phases ±π/3 and 1
        let ang = std::f64::consts::PI / 3.0;
        let p = Matrix::from_rows(&[
            vec![c(ang.cos(), 0.0), c(ang.sin(), 0.0), c(0.0, 0.0)],
            vec![c(-ang.sin(), 0.0), c(ang.cos(), 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
        ])
        .unwrap();
        let (phases, v) = unitary_eigs(&p).unwrap();
        let mut sorted = phases.clone();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((sorted[0] + ang).abs() < 1e-9);
        assert!(sorted[1].abs() < 1e-9);
        assert!((sorted[2] - ang).abs() < 1e-9);
        // V diag(e^{iθ}) V* = P
        let lam = Matrix::diag(
            &phases
                .iter()
                .map(|&t| Complex64::new(t.cos(), t.sin()))
                .collect::<Vec<_>>(),
        );
        let rebuilt = &(&v * &lam) * &v.adjoint();
        assert!(rebuilt.dist(&p) < 1e-9);
    }
}
