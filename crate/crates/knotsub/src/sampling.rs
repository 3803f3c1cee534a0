//! Seeded random matrix generators for self-checks and randomized tests.
//!
//! All randomness flows through a `ChaCha8Rng`. The KNOTSUB_SEED
//! environment variable pins the seed so randomized verification runs are
//! reproducible.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::algebra::{AlgebraFamily, LieAlgebraElement};
use crate::error::Result;
use crate::matrix::{determinant, singular_values, Matrix};

/// Seed from KNOTSUB_SEED, or a fixed default.
pub fn seed_from_env() -> u64 {
    std::env::var("KNOTSUB_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0x6b6e_6f74)
}

pub fn rng_from_env() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed_from_env())
}

pub fn rng_with_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian(rng: &mut impl Rng) -> f64 {
    rng.sample(StandardNormal)
}

fn gaussian_complex(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(gaussian(rng), gaussian(rng))
}

/// Orthonormalize the columns of a matrix in place (modified Gram-Schmidt).
fn orthonormalize_columns(m: &mut Matrix) {
    let n = m.dim();
    for j in 0..n {
        for k in 0..j {
            let mut proj = Complex64::new(0.0, 0.0);
            for i in 0..n {
                proj += m[(i, k)].conj() * m[(i, j)];
            }
            for i in 0..n {
                let sub = proj * m[(i, k)];
                m[(i, j)] -= sub;
            }
        }
        let nrm: f64 = (0..n).map(|i| m[(i, j)].norm_sqr()).sum::<f64>().sqrt();
        for i in 0..n {
            m[(i, j)] /= nrm;
        }
    }
}

/// Haar-ish random unitary from a complex Gaussian via Gram-Schmidt.
pub fn random_unitary(n: usize, rng: &mut impl Rng) -> Matrix {
    let mut m = Matrix::from_fn(n, |_, _| gaussian_complex(rng));
    orthonormalize_columns(&mut m);
    m
}

/// Random rotation: orthonormalized real Gaussian with det fixed to +1.
pub fn random_special_orthogonal(n: usize, rng: &mut impl Rng) -> Matrix {
    let mut m = Matrix::from_fn(n, |_, _| Complex64::new(gaussian(rng), 0.0));
    orthonormalize_columns(&mut m);
    if determinant(&m).re < 0.0 {
        for i in 0..n {
            m[(i, 0)] = -m[(i, 0)];
        }
    }
    m
}

/// Random real invertible matrix with 2-norm condition number at most
/// `cond_max`, by rejection.
pub fn random_invertible(n: usize, cond_max: f64, rng: &mut impl Rng) -> Result<Matrix> {
    loop {
        let m = Matrix::from_fn(n, |_, _| Complex64::new(gaussian(rng), 0.0));
        let sv = singular_values(&m)?;
        let smin = sv.last().copied().unwrap_or(0.0);
        let smax = sv.first().copied().unwrap_or(0.0);
        if smin > 0.0 && smax / smin <= cond_max {
            return Ok(m);
        }
    }
}

/// Random traceless skew-Hermitian matrix with entries on the unit scale.
pub fn random_su_element(n: usize, rng: &mut impl Rng) -> LieAlgebraElement {
    let a = Matrix::from_fn(n, |_, _| gaussian_complex(rng));
    let mut x = (&a - &a.adjoint()).scale_re(0.5);
    let shift = x.trace() / n as f64;
    for i in 0..n {
        x[(i, i)] -= shift;
    }
    LieAlgebraElement {
        family: AlgebraFamily::Su(n),
        matrix: x,
    }
}

/// Random skew-symmetric matrix with entries on the unit scale.
pub fn random_so_element(n: usize, rng: &mut impl Rng) -> LieAlgebraElement {
    let a = Matrix::from_fn(n, |_, _| Complex64::new(gaussian(rng), 0.0));
    let x = (&a - &a.transpose()).scale_re(0.5);
    LieAlgebraElement {
        family: AlgebraFamily::So(n),
        matrix: x,
    }
}

/// su(n) element with prescribed integer frequencies: U·diag(i·k)·U* for a
/// random unitary U. The entries of `k` must sum to zero.
pub fn su_element_from_frequencies(k: &[i64], rng: &mut impl Rng) -> LieAlgebraElement {
    assert_eq!(k.iter().sum::<i64>(), 0, "frequencies must sum to zero");
    let n = k.len();
    let d = Matrix::diag(
        &k.iter()
            .map(|&v| Complex64::new(0.0, v as f64))
            .collect::<Vec<_>>(),
    );
    let u = random_unitary(n, rng);
    let x = &(&u * &d) * &u.adjoint();
    LieAlgebraElement {
        family: AlgebraFamily::Su(n),
        matrix: x,
    }
}
