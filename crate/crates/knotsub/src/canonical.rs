//! Canonical one-parameter subgroup forms and conjugating matrices.
//!
//! Every supported family has a normal form for its generators: diagonal
//! imaginary for su(n), rotation blocks for so(n), a pure rotation
//! generator for the periodic cone of sl(2,ℝ), and the four conjugacy
//! templates of sl(3,ℝ). The canonicalizers return the normal form, the
//! conjugating matrix P with P·X·P⁻¹ = generator, and the residual of that
//! identity so callers can judge numerical trust. For unitary and special
//! orthogonal conjugators an explicit path from the identity is available
//! through the principal logarithm.

use num_complex::Complex64;

use crate::algebra::{check_membership, AlgebraFamily, LieAlgebraElement, Sl2Coords};
use crate::error::{Error, Result};
use crate::matrix::{
    determinant, hermitian_eigs, inverse, mat_exp, null_space_basis,
    principal_log_special_orthogonal, principal_log_unitary, singular_values, skew_block_schur,
    solve_particular, Matrix,
};

/// Group in which a canonical curve (and its conjugator) lives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupTag {
    SpecialUnitary(usize),
    SpecialOrthogonal(usize),
    SpecialLinear(usize),
}

impl GroupTag {
    pub fn as_str(&self) -> String {
        match self {
            GroupTag::SpecialUnitary(n) => format!("SU({n})"),
            GroupTag::SpecialOrthogonal(n) => format!("SO({n})"),
            GroupTag::SpecialLinear(n) => format!("SL({n},R)"),
        }
    }
}

/// A canonical generator together with the conjugation that reaches it.
///
/// The stored conjugator maps the original element to the canonical one:
/// conjugator · X · conjugator⁻¹ = generator, with ‖·‖ error `residual`.
#[derive(Debug, Clone)]
pub struct CanonicalForm {
    pub generator: Matrix,
    pub conjugator: Matrix,
    pub target_group: GroupTag,
    pub residual: f64,
}

fn conjugation_residual(conjugator: &Matrix, x: &Matrix, generator: &Matrix) -> Result<f64> {
    let inv = inverse(conjugator)?;
    let conj = &(conjugator * x) * &inv;
    Ok(conj.dist(generator))
}

/// Diagonal canonical form for su(n): generator diag(iβ₁, …, iβₙ) with the
/// betas in descending order, conjugator unitary.
pub fn canonical_su(elem: &LieAlgebraElement) -> Result<CanonicalForm> {
    let n = require_family(elem, |f| matches!(f, AlgebraFamily::Su(_)))?;
    let x = &elem.matrix;
    // −iX is Hermitian with eigenvalues β (descending from the solver)
    let h = x.scale(Complex64::new(0.0, -1.0));
    let pairs = hermitian_eigs(&h)?;
    let generator = Matrix::diag(
        &pairs
            .iter()
            .map(|p| Complex64::new(0.0, p.value.re))
            .collect::<Vec<_>>(),
    );
    let v = Matrix::from_cols(&pairs.iter().map(|p| p.vector.clone()).collect::<Vec<_>>())?;
    // X = V D V*, so V* maps X to D
    let conjugator = v.adjoint();
    let residual = (&(&conjugator * x) * &v).dist(&generator);
    Ok(CanonicalForm {
        generator,
        conjugator,
        target_group: GroupTag::SpecialUnitary(n),
        residual,
    })
}

/// Rotation-block canonical form for so(n): generator J(λ₁) ⊕ … ⊕ J(λ_ℓ) ⊕ 0
/// with exact zeros outside the blocks, conjugator special orthogonal.
pub fn canonical_so(elem: &LieAlgebraElement) -> Result<CanonicalForm> {
    let n = require_family(elem, |f| matches!(f, AlgebraFamily::So(_)))?;
    let x = &elem.matrix;
    let (q, blocks, zero_count) = skew_block_schur(x)?;
    let generator = crate::matrix::block_diagonal(&blocks, zero_count);
    let residual = (&(&q * x) * &q.transpose()).dist(&generator);
    Ok(CanonicalForm {
        generator,
        conjugator: q,
        target_group: GroupTag::SpecialOrthogonal(n),
        residual,
    })
}

/// Pure-rotation canonical form for the periodic cone of sl(2,ℝ).
///
/// Requires a² + b² < c²; the generator is `λ·[[0, −1], [1, 0]]` with
/// λ = √(c² − a² − b²) > 0. The conjugator is real invertible; its
/// determinant sign is an invariant of the input (the rotation generator's
/// commutant is the nonzero complex numbers, all with positive
/// determinant), so one orientation class of inputs is reached with
/// det > 0 and the other with det < 0.
pub fn canonical_sl2(elem: &LieAlgebraElement) -> Result<CanonicalForm> {
    require_family(elem, |f| {
        matches!(f, AlgebraFamily::Sl2R | AlgebraFamily::SlnR(2))
    })?;
    let x = &elem.matrix;
    let coords = Sl2Coords::from_matrix(x)?;
    let rho_sq = coords.rho_squared();
    if rho_sq >= 0.0 {
        return Err(Error::Domain(
            "canonical rotation form requires a^2 + b^2 < c^2".into(),
        ));
    }
    let lambda = (-rho_sq).sqrt();
    let generator = Matrix::from_real_rows(&[vec![0.0, -lambda], vec![lambda, 0.0]])?;
    // eigenvector for +iλ: orthogonal to the first row of (X − iλ)
    let v = [-x[(0, 1)], x[(0, 0)] - Complex64::new(0.0, lambda)];
    let u = [v[0].re, v[1].re];
    let w = [v[0].im, v[1].im];
    let nrm = (w[0] * w[0] + w[1] * w[1]).sqrt().max(1e-300);
    // columns (w, u) satisfy X·w = λu, X·u = −λw, so M⁻¹ X M = generator
    let m = Matrix::from_real_rows(&[vec![w[0] / nrm, u[0] / nrm], vec![w[1] / nrm, u[1] / nrm]])?;
    let conjugator = inverse(&m)?;
    let residual = conjugation_residual(&conjugator, x, &generator)?;
    Ok(CanonicalForm {
        generator,
        conjugator,
        target_group: GroupTag::SpecialLinear(2),
        residual,
    })
}

/// The four conjugacy templates of traceless real 3×3 matrices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum JordanClass {
    /// Diagonalizable with real spectrum: diag(λ₁, λ₂, −λ₁−λ₂).
    RealDiagonal { l1: f64, l2: f64 },
    /// Double real eigenvalue with a one-dimensional eigenspace:
    /// `[[λ, 1, 0], [0, λ, 0], [0, 0, −2λ]]`.
    DefectiveDouble { l: f64 },
    /// Nilpotent of index 3: ones on the superdiagonal.
    NilpotentCube,
    /// Complex pair a ± bi: `[[a, b, 0], [−b, a, 0], [0, 0, −2a]]`.
    SpiralBlock { a: f64, b: f64 },
}

impl JordanClass {
    /// The template matrix of the class.
    pub fn template(&self) -> Matrix {
        match *self {
            JordanClass::RealDiagonal { l1, l2 } => Matrix::diag_real(&[l1, l2, -(l1 + l2)]),
            JordanClass::DefectiveDouble { l } => Matrix::from_real_rows(&[
                vec![l, 1.0, 0.0],
                vec![0.0, l, 0.0],
                vec![0.0, 0.0, -2.0 * l],
            ])
            .expect("finite"),
            JordanClass::NilpotentCube => Matrix::from_real_rows(&[
                vec![0.0, 1.0, 0.0],
                vec![0.0, 0.0, 1.0],
                vec![0.0, 0.0, 0.0],
            ])
            .expect("finite"),
            JordanClass::SpiralBlock { a, b } => Matrix::from_real_rows(&[
                vec![a, b, 0.0],
                vec![-b, a, 0.0],
                vec![0.0, 0.0, -2.0 * a],
            ])
            .expect("finite"),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            JordanClass::RealDiagonal { .. } => "X1",
            JordanClass::DefectiveDouble { .. } => "X2",
            JordanClass::NilpotentCube => "X3",
            JordanClass::SpiralBlock { .. } => "X4",
        }
    }

    /// Class parameters in template order.
    pub fn params(&self) -> Vec<f64> {
        match *self {
            JordanClass::RealDiagonal { l1, l2 } => vec![l1, l2],
            JordanClass::DefectiveDouble { l } => vec![l],
            JordanClass::NilpotentCube => vec![],
            JordanClass::SpiralBlock { a, b } => vec![a, b],
        }
    }
}

/// λ₁ ≤ λ₂ after dropping one instance of the minimum: diag(1, 2, −3)
/// stays literally equal to its own template.
fn real_diagonal_params(mut roots: [f64; 3]) -> JordanClass {
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    JordanClass::RealDiagonal {
        l1: roots[1],
        l2: roots[2],
    }
}

/// Jordan class of a traceless real 3×3 matrix.
///
/// The class is decided from the characteristic polynomial λ³ + pλ + q
/// through its discriminant Δ = −4p³ − 27q² plus rank tests, not by
/// clustering computed eigenvalues: conjugates of defective matrices
/// scatter their numerical eigenvalues on a cube-root-of-roundoff scale,
/// which no fixed eigenvalue tolerance survives, while p, q, and ranks
/// stay stable.
pub(crate) fn detect_jordan_class(x: &Matrix) -> Result<JordanClass> {
    let norm = x.norm_fro();
    let x2 = x * x;
    let p = -x2.trace().re / 2.0;
    let q = -determinant(x).re;
    let delta = -4.0 * p * p * p - 27.0 * q * q;
    let sigma = p.abs().sqrt().max(q.abs().cbrt());
    let tau_delta = 1e-10 * (1.0 + norm).powi(3) * (1.0 + sigma).powi(3);

    if delta > tau_delta {
        // three distinct real roots: trigonometric form
        let m = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        let roots = [
            m * theta.cos(),
            m * (theta - 2.0 * std::f64::consts::PI / 3.0).cos(),
            m * (theta - 4.0 * std::f64::consts::PI / 3.0).cos(),
        ];
        return Ok(real_diagonal_params(roots));
    }
    if delta < -tau_delta {
        // one real root and a conjugate pair
        let half_q = q / 2.0;
        let rad = (half_q * half_q + p * p * p / 27.0).sqrt();
        let u3 = if half_q >= 0.0 {
            -half_q - rad
        } else {
            -half_q + rad
        };
        let u = u3.cbrt();
        let real_root = if u != 0.0 { u - p / (3.0 * u) } else { 0.0 };
        let a_raw = -real_root / 2.0;
        let b = ((3.0 * real_root * real_root + 4.0 * p).max(0.0)).sqrt() / 2.0;
        // snap the spiral rate to zero at spectral resolution so the
        // periodic case gets the exact rotation-block generator
        let a = if a_raw.abs() <= 1e-9 * (1.0 + norm) {
            0.0
        } else {
            a_raw
        };
        return Ok(JordanClass::SpiralBlock { a, b });
    }

    // repeated spectrum
    let tau_p = 1e-9 * (1.0 + norm).powi(2);
    let tau_q = 1e-9 * (1.0 + norm).powi(3);
    let rank_tol = 1e-8 * norm;
    if p.abs() <= tau_p && q.abs() <= tau_q {
        // triple zero: the rank separates 0, the index-2, and the index-3
        // nilpotent
        let rank = matrix_rank(x, rank_tol)?;
        return Ok(match rank {
            0 => JordanClass::RealDiagonal { l1: 0.0, l2: 0.0 },
            1 => JordanClass::DefectiveDouble { l: 0.0 },
            _ => JordanClass::NilpotentCube,
        });
    }
    // double root r, simple root −2r
    let r = -3.0 * q / (2.0 * p);
    let shifted = x - &Matrix::diag_real(&[r, r, r]);
    let rank = matrix_rank(&shifted, rank_tol)?;
    if rank <= 1 {
        Ok(real_diagonal_params([r, r, -2.0 * r]))
    } else {
        Ok(JordanClass::DefectiveDouble { l: r })
    }
}

fn matrix_rank(m: &Matrix, tol: f64) -> Result<usize> {
    Ok(singular_values(m)?.iter().filter(|&&s| s > tol).count())
}

/// Canonical form for sl(3,ℝ): identifies the Jordan class, builds the
/// template generator, and returns a real conjugator with positive
/// determinant.
pub fn canonical_sl3(elem: &LieAlgebraElement) -> Result<(JordanClass, CanonicalForm)> {
    require_family(elem, |f| {
        matches!(f, AlgebraFamily::Sl3R | AlgebraFamily::SlnR(3))
    })?;
    let x = &elem.matrix;
    let class = detect_jordan_class(x)?;
    let generator = class.template();
    let rank_tol = (1e-8 * x.norm_fro()).max(1e-14);

    // columns m_k with X·M = M·template
    let columns: Vec<Vec<f64>> = match class {
        JordanClass::RealDiagonal { l1, l2 } => {
            // one eigenvector per template slot; equal eigenvalues share
            // their eigenspace, so extract a real basis per group
            let evals = [l1, l2, -(l1 + l2)];
            let eq_tol = 1e-9 * (1.0 + x.norm_fro());
            let mut slots: [Option<Vec<f64>>; 3] = [None, None, None];
            let mut done = [false; 3];
            for i in 0..3 {
                if done[i] {
                    continue;
                }
                let group: Vec<usize> = (0..3)
                    .filter(|&j| (evals[j] - evals[i]).abs() <= eq_tol)
                    .collect();
                for &j in &group {
                    done[j] = true;
                }
                let shifted = x - &Matrix::diag_real(&[evals[i]; 3]);
                let basis = null_space_basis(&shifted, rank_tol.max(1e-6 * (1.0 + x.norm_fro())))?;
                let real_basis = real_orthonormal_span(&basis);
                if real_basis.len() < group.len() {
                    return Err(Error::NoConvergence(
                        "eigenspace basis extraction failed".into(),
                    ));
                }
                for (slot, vec) in group.into_iter().zip(real_basis) {
                    slots[slot] = Some(vec);
                }
            }
            slots
                .into_iter()
                .map(|s| s.expect("every slot filled"))
                .collect()
        }
        JordanClass::DefectiveDouble { l } => {
            let shifted = x - &Matrix::diag_real(&[l, l, l]);
            let eq_tol = 1e-9 * (1.0 + x.norm_fro());
            if (3.0 * l).abs() <= eq_tol {
                // index-2 nilpotent: the −2λ eigenvalue coincides with the
                // double one, so the kernel is two-dimensional and the
                // chain head is the kernel direction inside range(X)
                let mut best: Option<(f64, usize)> = None;
                for k in 0..3 {
                    let e: Vec<Complex64> = (0..3)
                        .map(|i| Complex64::new(if i == k { 1.0 } else { 0.0 }, 0.0))
                        .collect();
                    let img = shifted.apply(&e);
                    let nrm = img.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                    if best.map(|(b, _)| nrm > b).unwrap_or(true) {
                        best = Some((nrm, k));
                    }
                }
                let (scale, k) = best.expect("three candidates");
                if scale == 0.0 {
                    return Err(Error::NoConvergence("chain head extraction failed".into()));
                }
                let w: Vec<f64> = (0..3)
                    .map(|i| if i == k { 1.0 / scale } else { 0.0 })
                    .collect();
                let wc: Vec<Complex64> = w.iter().map(|&t| Complex64::new(t, 0.0)).collect();
                // keep the exact image so X·w = v holds with no sign games
                let v: Vec<f64> = shifted.apply(&wc).iter().map(|z| z.re).collect();
                // the remaining kernel direction, orthogonalized against v
                let basis = null_space_basis(&shifted, rank_tol.max(1e-6 * (1.0 + x.norm_fro())))?;
                let mut z = real_orthonormal_span(&basis)
                    .into_iter()
                    .min_by(|a, b| {
                        let da: f64 = a.iter().zip(v.iter()).map(|(x, y)| x * y).sum();
                        let db: f64 = b.iter().zip(v.iter()).map(|(x, y)| x * y).sum();
                        da.abs().partial_cmp(&db.abs()).unwrap()
                    })
                    .ok_or_else(|| Error::NoConvergence("missing kernel direction".into()))?;
                let vnorm_sq: f64 = v.iter().map(|t| t * t).sum();
                let proj: f64 = z.iter().zip(v.iter()).map(|(a, b)| a * b).sum::<f64>() / vnorm_sq;
                for (zi, vi) in z.iter_mut().zip(v.iter()) {
                    *zi -= proj * vi;
                }
                let znorm: f64 = z.iter().map(|t| t * t).sum::<f64>().sqrt();
                if znorm < 1e-8 {
                    return Err(Error::NoConvergence("missing kernel direction".into()));
                }
                for zi in z.iter_mut() {
                    *zi /= znorm;
                }
                vec![v, w, z]
            } else {
                let v = realify(
                    null_space_basis(&shifted, rank_tol.max(1e-6 * (1.0 + x.norm_fro())))?
                        .first()
                        .ok_or_else(|| Error::NoConvergence("missing eigenvector".into()))?,
                );
                // Jordan chain: (X − λ)w = v; w is kept verbatim — any
                // rescaling would scale the template's unit coupling entry
                let vc: Vec<Complex64> = v.iter().map(|&t| Complex64::new(t, 0.0)).collect();
                let w = solve_particular(&shifted, &vc, rank_tol.max(1e-10))
                    .ok_or_else(|| Error::NoConvergence("Jordan chain solve failed".into()))?;
                let w: Vec<f64> = w.iter().map(|z| z.re).collect();
                let other = x - &Matrix::diag_real(&[-2.0 * l, -2.0 * l, -2.0 * l]);
                let z = realify(
                    null_space_basis(&other, rank_tol.max(1e-6 * (1.0 + x.norm_fro())))?
                        .first()
                        .ok_or_else(|| Error::NoConvergence("missing eigenvector".into()))?,
                );
                vec![v, w, z]
            }
        }
        JordanClass::NilpotentCube => {
            // chain v₁ = X v₂, v₂ = X v₃ with X² v₃ ≠ 0
            let x2 = x * x;
            let mut best: Option<(f64, usize)> = None;
            for k in 0..3 {
                let e: Vec<Complex64> = (0..3)
                    .map(|i| Complex64::new(if i == k { 1.0 } else { 0.0 }, 0.0))
                    .collect();
                let img = x2.apply(&e);
                let nrm = img.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                if best.map(|(b, _)| nrm > b).unwrap_or(true) {
                    best = Some((nrm, k));
                }
            }
            let (_, k) = best.expect("three candidates");
            // the chain images are kept verbatim so X·v₃ = v₂ and
            // X·v₂ = v₁ hold exactly; only a global scale is free
            let v3: Vec<f64> = (0..3).map(|i| if i == k { 1.0 } else { 0.0 }).collect();
            let v3c: Vec<Complex64> = v3.iter().map(|&t| Complex64::new(t, 0.0)).collect();
            let v2: Vec<f64> = x.apply(&v3c).iter().map(|z| z.re).collect();
            let v2c: Vec<Complex64> = v2.iter().map(|&t| Complex64::new(t, 0.0)).collect();
            let v1: Vec<f64> = x.apply(&v2c).iter().map(|z| z.re).collect();
            vec![v1, v2, v3]
        }
        JordanClass::SpiralBlock { a, b } => {
            let lam = Complex64::new(a, b);
            let shifted = x - &Matrix::diag(&[lam, lam, lam]);
            let v = null_space_basis(&shifted, rank_tol.max(1e-6 * (1.0 + x.norm_fro())))?
                .first()
                .cloned()
                .ok_or_else(|| Error::NoConvergence("missing complex eigenvector".into()))?;
            let u: Vec<f64> = v.iter().map(|z| z.re).collect();
            let w: Vec<f64> = v.iter().map(|z| z.im).collect();
            let other = x - &Matrix::diag_real(&[-2.0 * a, -2.0 * a, -2.0 * a]);
            let z = realify(
                null_space_basis(&other, rank_tol.max(1e-6 * (1.0 + x.norm_fro())))?
                    .first()
                    .ok_or_else(|| Error::NoConvergence("missing real eigenvector".into()))?,
            );
            vec![u, w, z]
        }
    };

    let mut m = Matrix::from_real_rows(&transpose_cols(&columns))?;
    // in odd dimension, negating M flips the determinant and preserves
    // X·M = M·template
    if determinant(&m).re < 0.0 {
        m = m.scale_re(-1.0);
    }
    let conjugator = inverse(&m)?;
    let residual = (&(&conjugator * x) * &m).dist(&generator);
    Ok((
        class,
        CanonicalForm {
            generator,
            conjugator,
            target_group: GroupTag::SpecialLinear(3),
            residual,
        },
    ))
}

/// Real orthonormal spanning set extracted from a complex basis of a real
/// subspace: real and imaginary parts, Gram-Schmidt, drop near-zero rests.
fn real_orthonormal_span(basis: &[Vec<Complex64>]) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = Vec::new();
    for v in basis {
        for part in [
            v.iter().map(|z| z.re).collect::<Vec<f64>>(),
            v.iter().map(|z| z.im).collect::<Vec<f64>>(),
        ] {
            let mut cand = part;
            for prev in &out {
                let proj: f64 = prev.iter().zip(cand.iter()).map(|(a, b)| a * b).sum();
                for (c, p) in cand.iter_mut().zip(prev.iter()) {
                    *c -= proj * p;
                }
            }
            let nrm: f64 = cand.iter().map(|t| t * t).sum::<f64>().sqrt();
            if nrm > 1e-6 {
                for c in cand.iter_mut() {
                    *c /= nrm;
                }
                out.push(cand);
            }
        }
    }
    out
}

/// Rotate the global phase of a complex null vector onto the real axis and
/// normalize; valid when the underlying eigenspace is real.
fn realify(v: &[Complex64]) -> Vec<f64> {
    let lead = v
        .iter()
        .cloned()
        .max_by(|a, b| a.norm().partial_cmp(&b.norm()).unwrap())
        .unwrap_or(Complex64::new(1.0, 0.0));
    let phase = if lead.norm() > 0.0 {
        lead / lead.norm()
    } else {
        Complex64::new(1.0, 0.0)
    };
    let rotated: Vec<f64> = v.iter().map(|z| (z * phase.conj()).re).collect();
    let nrm = rotated
        .iter()
        .map(|t| t * t)
        .sum::<f64>()
        .sqrt()
        .max(1e-300);
    rotated.into_iter().map(|t| t / nrm).collect()
}

fn transpose_cols(cols: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = cols.len();
    (0..n)
        .map(|i| (0..n).map(|j| cols[j][i]).collect())
        .collect()
}

/// Group a conjugator path lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AmbientGroup {
    /// Unitary matrices; the natural home of su(n) conjugators.
    Unitary,
    /// Special orthogonal matrices; the natural home of so(n) conjugators.
    SpecialOrthogonal,
}

/// Point ξ(s) = exp(s·log P) on the canonical path from the identity to P.
///
/// The path stays inside the group for every s: unitary for `Unitary`,
/// special orthogonal for `SpecialOrthogonal`. Orthogonal matrices with
/// determinant −1 are rejected: no continuous path inside the rotation
/// group reaches them.
pub fn ambient_path(p: &Matrix, s: f64, group: AmbientGroup) -> Result<Matrix> {
    if !(0.0..=1.0).contains(&s) {
        return Err(Error::InvalidInput(format!(
            "path parameter must lie in [0, 1], got {s}"
        )));
    }
    let k = match group {
        AmbientGroup::Unitary => principal_log_unitary(p)?,
        AmbientGroup::SpecialOrthogonal => principal_log_special_orthogonal(p)?,
    };
    mat_exp(&k.scale_re(s))
}

fn require_family(
    elem: &LieAlgebraElement,
    pred: impl Fn(&AlgebraFamily) -> bool,
) -> Result<usize> {
    if !pred(&elem.family) {
        return Err(Error::InvalidInput(format!(
            "operation does not apply to {}",
            elem.family
        )));
    }
    if !check_membership(elem.family, &elem.matrix)? {
        return Err(Error::InvalidInput(format!(
            "matrix is not a member of {}",
            elem.family
        )));
    }
    Ok(elem.matrix.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_sl2, pauli_basis, sigma_x, PauliKind};
    use crate::matrix::block_diagonal;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn su_diagonal_stays_put() {
        let elem = LieAlgebraElement::new(AlgebraFamily::Su(2), sigma_x()).unwrap();
        let form = canonical_su(&elem).unwrap();
        let expect = Matrix::diag(&[c(0.0, 1.0), c(0.0, -1.0)]);
        assert!(form.generator.dist(&expect) < 1e-12);
        assert!(form.residual <= 1e-8);
        assert!(form.conjugator.unitary_defect() < 1e-9);
    }

    #[test]
    fn su_rotation_generator_diagonalizes() {
        let elem = pauli_basis(2, PauliKind::X, (1, 2)).unwrap();
        let form = canonical_su(&elem).unwrap();
        let expect = Matrix::diag(&[c(0.0, 1.0), c(0.0, -1.0)]);
        assert!(form.generator.dist(&expect) < 1e-9);
        assert!(form.residual <= 1e-8);
    }

    #[test]
    fn su_y_generator_in_three_dims() {
        // Y_{1,2} in su(3) has spectrum {i, 0, −i}; descending order puts
        // the zero in the middle
        let elem = pauli_basis(3, PauliKind::Y, (1, 2)).unwrap();
        let form = canonical_su(&elem).unwrap();
        let expect = Matrix::diag(&[c(0.0, 1.0), c(0.0, 0.0), c(0.0, -1.0)]);
        assert!(form.generator.dist(&expect) < 1e-9);
        // the diagonal is traceless
        assert!(form.generator.trace().norm() < 1e-9);
    }

    #[test]
    fn su_canonical_curve_match() {
        let elem = pauli_basis(3, PauliKind::Y, (1, 2)).unwrap();
        let form = canonical_su(&elem).unwrap();
        let pinv = form.conjugator.adjoint();
        for &t in &[0.1, 0.7, 2.5, PI] {
            let lhs = &(&form.conjugator * &mat_exp(&elem.matrix.scale_re(t)).unwrap()) * &pinv;
            let rhs = mat_exp(&form.generator.scale_re(t)).unwrap();
            assert!(lhs.dist(&rhs) <= 1e-7, "t = {t}");
        }
    }

    #[test]
    fn so_block_form_round_trip() {
        let d = block_diagonal(&[2.0, 1.0], 0);
        let elem = LieAlgebraElement::new(AlgebraFamily::So(4), d.clone()).unwrap();
        let form = canonical_so(&elem).unwrap();
        assert!(form.generator.dist(&d) < 1e-9);
        assert!(form.residual <= 1e-8 * (1.0 + d.norm_fro()));
        // exact block structure: entries away from the blocks are exactly zero
        assert_eq!(form.generator[(0, 2)], c(0.0, 0.0));
        assert_eq!(form.generator[(3, 0)], c(0.0, 0.0));
    }

    #[test]
    fn so_zero_element() {
        let elem = LieAlgebraElement::new(AlgebraFamily::So(3), Matrix::zeros(3)).unwrap();
        let form = canonical_so(&elem).unwrap();
        assert!(form.generator.norm_fro() == 0.0);
        assert!(form.residual < 1e-12);
    }

    #[test]
    fn sl2_canonical_rotation() {
        let elem = build_sl2(Sl2Coords::new(0.0, 0.0, 1.0));
        let form = canonical_sl2(&elem).unwrap();
        let expect = Matrix::from_real_rows(&[vec![0.0, -1.0], vec![1.0, 0.0]]).unwrap();
        assert!(form.generator.dist(&expect) < 1e-12);
        assert!(form.residual <= 1e-8);

        let elem = build_sl2(Sl2Coords::new(0.0, 0.0, 2.0));
        let form = canonical_sl2(&elem).unwrap();
        assert!(form.generator.dist(&expect.scale_re(2.0)) < 1e-12);
    }

    #[test]
    fn sl2_canonical_derived_example() {
        // a = 0, b = 0.6, c = 1.0: λ = 0.8 by hand from the eigenproblem
        let elem = build_sl2(Sl2Coords::new(0.0, 0.6, 1.0));
        let form = canonical_sl2(&elem).unwrap();
        let expect = Matrix::from_real_rows(&[vec![0.0, -0.8], vec![0.8, 0.0]]).unwrap();
        assert!(form.generator.dist(&expect) < 1e-12);
        assert!(form.residual <= 1e-8);
        assert!(determinant(&form.conjugator).re > 0.0);
    }

    #[test]
    fn sl2_reversed_orientation_conjugates_correctly() {
        // c < 0 flips the rotation orientation; the generator keeps λ > 0
        // and the conjugator lands in the negative determinant component
        let elem = build_sl2(Sl2Coords::new(0.0, 0.0, -1.0));
        let form = canonical_sl2(&elem).unwrap();
        let expect = Matrix::from_real_rows(&[vec![0.0, -1.0], vec![1.0, 0.0]]).unwrap();
        assert!(form.generator.dist(&expect) < 1e-12);
        assert!(form.residual <= 1e-8);
        assert!(determinant(&form.conjugator).re < 0.0);
    }

    #[test]
    fn sl2_rejects_non_periodic() {
        let elem = build_sl2(Sl2Coords::new(1.0, 0.0, 1.0));
        assert!(matches!(canonical_sl2(&elem), Err(Error::Domain(_))));
    }

    #[test]
    fn sl3_templates_recognized() {
        let cases: Vec<(Matrix, &str)> = vec![
            (Matrix::diag_real(&[1.0, 2.0, -3.0]), "X1"),
            (JordanClass::DefectiveDouble { l: 1.0 }.template(), "X2"),
            (JordanClass::NilpotentCube.template(), "X3"),
            (JordanClass::SpiralBlock { a: 0.0, b: 3.0 }.template(), "X4"),
            (JordanClass::SpiralBlock { a: 1.0, b: 1.0 }.template(), "X4"),
        ];
        for (x, tag) in cases {
            let elem = LieAlgebraElement::new(AlgebraFamily::Sl3R, x.clone()).unwrap();
            let (class, form) = canonical_sl3(&elem).unwrap();
            assert_eq!(class.tag(), tag, "{x:?}");
            assert!(
                form.residual <= 1e-8 * (1.0 + x.norm_fro()),
                "{tag}: residual {}",
                form.residual
            );
        }
    }

    #[test]
    fn sl3_repeated_diagonalizable_is_diagonal_class() {
        // diag(1, 1, −2) has a double eigenvalue but no defect
        let x = Matrix::diag_real(&[1.0, 1.0, -2.0]);
        let elem = LieAlgebraElement::new(AlgebraFamily::Sl3R, x.clone()).unwrap();
        let (class, form) = canonical_sl3(&elem).unwrap();
        match class {
            JordanClass::RealDiagonal { l1, l2 } => {
                assert!((l1 - 1.0).abs() < 1e-9 && (l2 - 1.0).abs() < 1e-9);
            }
            other => panic!("wrong class {other:?}"),
        }
        assert!(form.residual <= 1e-8 * (1.0 + x.norm_fro()));
    }

    #[test]
    fn sl3_index_two_nilpotent_is_defective_double_zero() {
        let x = Matrix::from_real_rows(&[
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0],
        ])
        .unwrap();
        let elem = LieAlgebraElement::new(AlgebraFamily::Sl3R, x.clone()).unwrap();
        let (class, form) = canonical_sl3(&elem).unwrap();
        assert_eq!(class, JordanClass::DefectiveDouble { l: 0.0 });
        assert!(form.residual <= 1e-8);
        // a skewed conjugate lands in the same class
        let p = Matrix::from_real_rows(&[
            vec![1.0, 2.0, 0.5],
            vec![0.0, 1.0, -1.0],
            vec![1.0, 0.0, 1.0],
        ])
        .unwrap();
        let conj = &(&inverse(&p).unwrap() * &x) * &p;
        let elem = LieAlgebraElement::new(AlgebraFamily::Sl3R, conj).unwrap();
        let (class, form) = canonical_sl3(&elem).unwrap();
        assert_eq!(class, JordanClass::DefectiveDouble { l: 0.0 });
        assert!(form.residual <= 1e-7);
    }

    #[test]
    fn sl3_diag_example_params() {
        let x = Matrix::diag_real(&[1.0, 2.0, -3.0]);
        let elem = LieAlgebraElement::new(AlgebraFamily::Sl3R, x.clone()).unwrap();
        let (class, form) = canonical_sl3(&elem).unwrap();
        match class {
            JordanClass::RealDiagonal { l1, l2 } => {
                assert!((l1 - 1.0).abs() < 1e-9);
                assert!((l2 - 2.0).abs() < 1e-9);
            }
            other => panic!("wrong class {other:?}"),
        }
        assert!(form.generator.dist(&x) < 1e-9);
    }

    #[test]
    fn sl3_knotted_template_has_rotation_generator() {
        let x = JordanClass::SpiralBlock { a: 0.0, b: 3.0 }.template();
        let elem = LieAlgebraElement::new(AlgebraFamily::Sl3R, x).unwrap();
        let (class, form) = canonical_sl3(&elem).unwrap();
        match class {
            JordanClass::SpiralBlock { a, b } => {
                assert_eq!(a, 0.0);
                assert!((b - 3.0).abs() < 1e-9);
            }
            other => panic!("wrong class {other:?}"),
        }
        assert!((form.generator[(0, 1)].re - 3.0).abs() < 1e-12);
        assert!(determinant(&form.conjugator).re > 0.0);
    }

    #[test]
    fn ambient_path_endpoints() {
        let p = Matrix::diag(&[c(0.0, 1.0), c(0.0, -1.0)]);
        let start = ambient_path(&p, 0.0, AmbientGroup::Unitary).unwrap();
        assert!(start.dist_identity() < 1e-9);
        let end = ambient_path(&p, 1.0, AmbientGroup::Unitary).unwrap();
        assert!(end.dist(&p) <= 1e-8);
        // halfway: diag(e^{iπ/4}, e^{−iπ/4})
        let mid = ambient_path(&p, 0.5, AmbientGroup::Unitary).unwrap();
        let expect = Matrix::diag(&[
            c((FRAC_PI_2 / 2.0).cos(), (FRAC_PI_2 / 2.0).sin()),
            c((FRAC_PI_2 / 2.0).cos(), -(FRAC_PI_2 / 2.0).sin()),
        ]);
        assert!(mid.dist(&expect) < 1e-9);
    }

    #[test]
    fn ambient_path_so3_rotation() {
        let p = Matrix::from_real_rows(&[
            vec![0.0, -1.0, 0.0],
            vec![1.0, 0.0, 0.0],
            vec![0.0, 0.0, 1.0],
        ])
        .unwrap();
        let end = ambient_path(&p, 1.0, AmbientGroup::SpecialOrthogonal).unwrap();
        assert!(end.dist(&p) <= 1e-8);
        for &s in &[0.25, 0.5, 0.75] {
            let xi = ambient_path(&p, s, AmbientGroup::SpecialOrthogonal).unwrap();
            assert!(xi.unitary_defect() < 1e-9);
            assert!(xi.is_real(1e-10));
        }
    }

    #[test]
    fn ambient_path_rejects_reflections() {
        let p = Matrix::diag_real(&[-1.0, 1.0, 1.0]);
        assert!(matches!(
            ambient_path(&p, 0.5, AmbientGroup::SpecialOrthogonal),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn ambient_path_parameter_range() {
        let p = Matrix::identity(2);
        assert!(ambient_path(&p, 1.5, AmbientGroup::Unitary).is_err());
    }
}
