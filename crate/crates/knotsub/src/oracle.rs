//! Brute-force verification tools.
//!
//! Two independent routes around the generic exponential: a numerical
//! period scanner that looks for returns of exp(tX) to the identity, and
//! closed-form curve evaluators for the special-linear families. The
//! closed forms never call the generic exponential, so agreement between
//! the two is a real consistency check.

use num_complex::Complex64;

use crate::algebra::Sl2Coords;
use crate::canonical::JordanClass;
use crate::error::{Error, Result};
use crate::matrix::{mat_exp, Matrix};

/// Parameters and outcome of one period scan.
#[derive(Debug, Clone)]
pub struct PeriodScan {
    pub t_max: f64,
    pub steps: usize,
    pub eps: f64,
    /// Detected period with its distance to the identity after refinement.
    pub result: Option<(f64, f64)>,
}

impl PeriodScan {
    pub fn new(t_max: f64, steps: usize, eps: f64) -> Self {
        PeriodScan {
            t_max,
            steps,
            eps,
            result: None,
        }
    }

    /// Scan with the default grid resolution for the given generator.
    pub fn with_default_steps(t_max: f64, eps: f64, x: &Matrix) -> Self {
        PeriodScan::new(t_max, default_steps(t_max, x), eps)
    }

    /// Run the scan, record the outcome, and return the detected period.
    pub fn run(&mut self, x: &Matrix) -> Result<Option<f64>> {
        let found = detect_period_numeric(x, self.t_max, self.steps, self.eps)?;
        self.result = match found {
            Some(t) => {
                let residual = mat_exp(&x.scale_re(t))?.dist_identity();
                Some((t, residual))
            }
            None => None,
        };
        Ok(found)
    }
}

/// Default grid resolution: at least 10⁴ points, and at least 20 samples
/// per unit of t·‖X‖ so the fastest frequency cannot slip between grid
/// points.
pub fn default_steps(t_max: f64, x: &Matrix) -> usize {
    let by_frequency = (20.0 * t_max * x.norm_fro()).ceil() as usize;
    by_frequency.max(10_000)
}

/// d/dt ‖exp(tX) − I‖²_F = 2 Re tr((exp(tX) − I)* X exp(tX)).
fn distance_sq_derivative(x: &Matrix, t: f64) -> Result<f64> {
    let e = mat_exp(&x.scale_re(t))?;
    let diff = &e - &Matrix::identity(x.dim());
    let xe = x * &e;
    let mut acc = Complex64::new(0.0, 0.0);
    let n = x.dim();
    // tr(diff* · xe)
    for i in 0..n {
        for j in 0..n {
            acc += diff[(j, i)].conj() * xe[(j, i)];
        }
    }
    Ok(2.0 * acc.re)
}

fn distance_to_identity(x: &Matrix, t: f64) -> Result<f64> {
    Ok(mat_exp(&x.scale_re(t))?.dist_identity())
}

/// Scan for the smallest t in (0, t_max] with exp(tX) = I.
///
/// The grid walk flags strict local minima of ‖exp(tX) − I‖ that dip below
/// the candidate threshold, refines each bracket by bisecting the sign of
/// the distance derivative, and accepts the first refined point whose
/// distance is at most `eps`. Absence of a hit is a valid outcome and is
/// evidence — not proof — that the curve is injective up to t_max.
pub fn detect_period_numeric(
    x: &Matrix,
    t_max: f64,
    steps: usize,
    eps: f64,
) -> Result<Option<f64>> {
    if t_max <= 0.0 || !t_max.is_finite() || eps <= 0.0 {
        return Err(Error::InvalidInput("t_max and eps must be positive".into()));
    }
    if steps < 10 {
        return Err(Error::InvalidInput("need at least 10 scan steps".into()));
    }
    let dt = t_max / steps as f64;
    // A true period sits within dt/2 of some grid point, where the distance
    // is at most about ‖X‖_F·dt/2; the candidate threshold has to clear that
    // bound or fine periods would be skipped at the default resolution.
    let threshold = (eps.sqrt()).max(x.norm_fro() * dt);

    // incremental grid walk: exp((j+1)·dt·X) = exp(j·dt·X) · exp(dt·X)
    let step_matrix = mat_exp(&x.scale_re(dt))?;
    let mut current = step_matrix.clone();
    let mut prev_dist = 0.0; // t = 0 is the identity
    let mut dist = current.dist_identity();
    for j in 1..steps {
        let next = &current * &step_matrix;
        let next_dist = next.dist_identity();
        if dist < prev_dist && dist < next_dist && dist < threshold {
            // strict local minimum at t_j: refine on [t_{j-1}, t_{j+1}]
            let t_lo = (j as f64 - 1.0) * dt;
            let t_hi = (j as f64 + 1.0) * dt;
            if let Some(t_star) = refine_minimum(x, t_lo, t_hi)? {
                let d = distance_to_identity(x, t_star)?;
                if d <= eps && t_star > 0.0 {
                    return Ok(Some(t_star));
                }
            }
        }
        current = next;
        prev_dist = dist;
        dist = next_dist;
        if !dist.is_finite() {
            // the curve escaped floating-point range; nothing periodic out here
            break;
        }
    }
    Ok(None)
}

/// Bisect the derivative of the squared distance inside a bracketed local
/// minimum. 50 iterations shrink the bracket far below any tolerance used
/// by the callers.
fn refine_minimum(x: &Matrix, mut lo: f64, mut hi: f64) -> Result<Option<f64>> {
    let g_lo = distance_sq_derivative(x, lo)?;
    let g_hi = distance_sq_derivative(x, hi)?;
    if g_lo > 0.0 || g_hi < 0.0 {
        // not actually bracketed (flat or noisy neighborhood); fall back to
        // the midpoint
        return Ok(Some(0.5 * (lo + hi)));
    }
    for _ in 0..50 {
        let mid = 0.5 * (lo + hi);
        let g_mid = distance_sq_derivative(x, mid)?;
        if g_mid < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Some(0.5 * (lo + hi)))
}

/// Closed-form exp(tX) for `X = [[b, a−c], [a+c, −b]]` in sl(2,ℝ).
///
/// X² = (a² + b² − c²)·I, so the exponential collapses to a two-term
/// expression whose character depends on the sign of ρ² = a² + b² − c²:
/// hyperbolic for ρ² > 0, linear for ρ² = 0, trigonometric for ρ² < 0.
pub fn closed_form_sl2(coords: Sl2Coords, t: f64) -> Matrix {
    let x = coords.matrix();
    let rho_sq = coords.rho_squared();
    let id = Matrix::identity(2);
    if rho_sq.abs() <= 1e-12 {
        // nilpotent: exp(tX) = I + tX
        return &id + &x.scale_re(t);
    }
    if rho_sq > 0.0 {
        let rho = rho_sq.sqrt();
        &id.scale_re((rho * t).cosh()) + &x.scale_re((rho * t).sinh() / rho)
    } else {
        let lambda = (-rho_sq).sqrt();
        &id.scale_re((lambda * t).cos()) + &x.scale_re((lambda * t).sin() / lambda)
    }
}

/// Closed-form exp(t·X_c) for the four sl(3,ℝ) conjugacy templates.
pub fn closed_form_sl3(class: JordanClass, t: f64) -> Result<Matrix> {
    let m = match class {
        JordanClass::RealDiagonal { l1, l2 } => {
            Matrix::diag_real(&[(l1 * t).exp(), (l2 * t).exp(), (-(l1 + l2) * t).exp()])
        }
        JordanClass::DefectiveDouble { l } => {
            let e = (l * t).exp();
            Matrix::from_real_rows(&[
                vec![e, t * e, 0.0],
                vec![0.0, e, 0.0],
                vec![0.0, 0.0, (-2.0 * l * t).exp()],
            ])?
        }
        JordanClass::NilpotentCube => Matrix::from_real_rows(&[
            vec![1.0, t, t * t / 2.0],
            vec![0.0, 1.0, t],
            vec![0.0, 0.0, 1.0],
        ])?,
        JordanClass::SpiralBlock { a, b } => {
            let e = (a * t).exp();
            let (s, c) = (b * t).sin_cos();
            Matrix::from_real_rows(&[
                vec![e * c, e * s, 0.0],
                vec![-e * s, e * c, 0.0],
                vec![0.0, 0.0, (-2.0 * a * t).exp()],
            ])?
        }
    };
    Ok(m)
}
