//! Lie-algebra families, membership checks, and structured constructors.
//!
//! Each supported family is a set of square matrices closed under the
//! commutator: skew-Hermitian traceless (su), real skew-symmetric (so),
//! real traceless (sl(2,ℝ), sl(3,ℝ), sl(n,ℝ)), and strictly upper
//! triangular 3×3 (the Heisenberg algebra). Constructors mirror the bases
//! used throughout the crate and always produce exact members.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// The matrix Lie algebra a classified element belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraFamily {
    /// su(n): traceless skew-Hermitian, n ≥ 2.
    Su(usize),
    /// so(n): real skew-symmetric, n ≥ 2.
    So(usize),
    /// sl(2,ℝ): real traceless 2×2.
    Sl2R,
    /// sl(3,ℝ): real traceless 3×3.
    Sl3R,
    /// sl(n,ℝ): real traceless; classification for n ≥ 4 is experimental.
    SlnR(usize),
    /// Heisenberg algebra: strictly upper triangular real 3×3.
    Heisenberg,
}

impl AlgebraFamily {
    /// Matrix dimension of the family.
    pub fn dim(&self) -> usize {
        match self {
            AlgebraFamily::Su(n) | AlgebraFamily::So(n) | AlgebraFamily::SlnR(n) => *n,
            AlgebraFamily::Sl2R => 2,
            AlgebraFamily::Sl3R | AlgebraFamily::Heisenberg => 3,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            AlgebraFamily::Su(_) => "su",
            AlgebraFamily::So(_) => "so",
            AlgebraFamily::Sl2R => "sl2R",
            AlgebraFamily::Sl3R => "sl3R",
            AlgebraFamily::SlnR(_) => "slnR",
            AlgebraFamily::Heisenberg => "heisenberg",
        }
    }

    /// Validate the dimension parameter.
    pub fn validate(&self) -> Result<()> {
        match self {
            AlgebraFamily::Su(n) | AlgebraFamily::So(n) | AlgebraFamily::SlnR(n) if *n < 2 => {
                Err(Error::InvalidInput(format!(
                    "family {} needs dimension at least 2, got {n}",
                    self.tag()
                )))
            }
            _ => Ok(()),
        }
    }
}

impl std::fmt::Display for AlgebraFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AlgebraFamily::Su(n) => write!(f, "su({n})"),
            AlgebraFamily::So(n) => write!(f, "so({n})"),
            AlgebraFamily::Sl2R => write!(f, "sl(2,R)"),
            AlgebraFamily::Sl3R => write!(f, "sl(3,R)"),
            AlgebraFamily::SlnR(n) => write!(f, "sl({n},R)"),
            AlgebraFamily::Heisenberg => write!(f, "heisenberg"),
        }
    }
}

/// A matrix tagged with the algebra it belongs to; the unit of
/// classification.
#[derive(Debug, Clone)]
pub struct LieAlgebraElement {
    pub family: AlgebraFamily,
    pub matrix: Matrix,
}

impl LieAlgebraElement {
    /// Tag a matrix with a family, verifying membership.
    pub fn new(family: AlgebraFamily, matrix: Matrix) -> Result<Self> {
        family.validate()?;
        if check_membership(family, &matrix)? {
            Ok(LieAlgebraElement { family, matrix })
        } else {
            Err(Error::InvalidInput(format!(
                "matrix is not a member of {family}"
            )))
        }
    }
}

/// Coefficients in the sl(2,ℝ) basis `E = [[0,1],[1,0]]`, `H = [[1,0],[0,−1]]`,
/// `F = [[0,−1],[1,0]]`, so that `aE + bH + cF = [[b, a−c], [a+c, −b]]`.
///
/// The squared spectral parameter a² + b² − c² controls everything: its
/// sign separates hyperbolic, nilpotent, and rotational behavior.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sl2Coords {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Sl2Coords {
    pub fn new(a: f64, b: f64, c: f64) -> Self {
        Sl2Coords { a, b, c }
    }

    /// a² + b² − c²; negative exactly on the rotational (periodic) cone.
    pub fn rho_squared(&self) -> f64 {
        self.a * self.a + self.b * self.b - self.c * self.c
    }

    pub fn matrix(&self) -> Matrix {
        Matrix::from_real_rows(&[
            vec![self.b, self.a - self.c],
            vec![self.a + self.c, -self.b],
        ])
        .expect("entries are finite")
    }

    /// Invert the basis expansion of a traceless real 2×2 matrix.
    pub fn from_matrix(x: &Matrix) -> Result<Self> {
        if x.dim() != 2 {
            return Err(Error::InvalidInput("expected a 2x2 matrix".into()));
        }
        let scale = 1.0 + x.norm_fro();
        if !x.is_real(1e-10 * scale) || x.trace().norm() > 1e-10 * scale {
            return Err(Error::InvalidInput(
                "expected a real traceless 2x2 matrix".into(),
            ));
        }
        let b = x[(0, 0)].re;
        let a = (x[(0, 1)].re + x[(1, 0)].re) / 2.0;
        let c = (x[(1, 0)].re - x[(0, 1)].re) / 2.0;
        Ok(Sl2Coords { a, b, c })
    }
}

/// Membership predicate for each family, at tolerance 1e-10·(1 + ‖X‖).
pub fn check_membership(family: AlgebraFamily, x: &Matrix) -> Result<bool> {
    family.validate()?;
    if x.dim() != family.dim() {
        return Err(Error::InvalidInput(format!(
            "dimension mismatch: {family} expects {}x{} but the matrix is {}x{}",
            family.dim(),
            family.dim(),
            x.dim(),
            x.dim()
        )));
    }
    if !x.is_finite() {
        return Err(Error::InvalidInput("matrix has non-finite entries".into()));
    }
    let tol = 1e-10 * (1.0 + x.norm_fro());
    let ok = match family {
        AlgebraFamily::Su(_) => x.is_skew_hermitian(tol) && x.trace().norm() <= tol,
        AlgebraFamily::So(_) => x.is_real(tol) && x.dist(&x.transpose().scale_re(-1.0)) <= tol,
        AlgebraFamily::Sl2R | AlgebraFamily::Sl3R | AlgebraFamily::SlnR(_) => {
            x.is_real(tol) && x.trace().norm() <= tol
        }
        AlgebraFamily::Heisenberg => {
            let mut strictly_upper = x.is_real(tol);
            for i in 0..3 {
                for j in 0..=i {
                    strictly_upper &= x[(i, j)].norm() <= tol;
                }
            }
            strictly_upper
        }
    };
    Ok(ok)
}

/// Build an sl(2,ℝ) element from basis coefficients.
pub fn build_sl2(coords: Sl2Coords) -> LieAlgebraElement {
    LieAlgebraElement {
        family: AlgebraFamily::Sl2R,
        matrix: coords.matrix(),
    }
}

/// σ_X = diag(i, −i).
pub fn sigma_x() -> Matrix {
    Matrix::diag(&[Complex64::new(0.0, 1.0), Complex64::new(0.0, -1.0)])
}

/// σ_Y = `[[0, 1], [−1, 0]]`.
pub fn sigma_y() -> Matrix {
    Matrix::from_real_rows(&[vec![0.0, 1.0], vec![-1.0, 0.0]]).expect("finite")
}

/// σ_Z = `[[0, i], [i, 0]]`.
pub fn sigma_z() -> Matrix {
    Matrix::from_rows(&[
        vec![Complex64::new(0.0, 0.0), Complex64::new(0.0, 1.0)],
        vec![Complex64::new(0.0, 1.0), Complex64::new(0.0, 0.0)],
    ])
    .expect("finite")
}

/// Unit combination Σ = x₁σ_X + x₂σ_Y + x₃σ_Z of the su(2) basis.
///
/// Requires x₁² + x₂² + x₃² = 1; then Σ² = −I and exp(tΣ) traces the great
/// circle cos(t)·I + sin(t)·Σ.
pub fn build_su2_sigma(x1: f64, x2: f64, x3: f64) -> Result<LieAlgebraElement> {
    let norm_sq = x1 * x1 + x2 * x2 + x3 * x3;
    if (norm_sq - 1.0).abs() > 1e-9 {
        return Err(Error::Precondition(format!(
            "coefficient vector must be unit length, |x|^2 = {norm_sq}"
        )));
    }
    let sigma = &(&sigma_x().scale_re(x1) + &sigma_y().scale_re(x2)) + &sigma_z().scale_re(x3);
    Ok(LieAlgebraElement {
        family: AlgebraFamily::Su(2),
        matrix: sigma,
    })
}

/// Which generator of the standard su(n) basis to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PauliKind {
    /// H_ℓ = i(E_{ℓ,ℓ} − E_{ℓ+1,ℓ+1}), 1 ≤ ℓ ≤ n−1.
    H,
    /// X_{r,s} = E_{r,s} − E_{s,r}, 1 ≤ r < s ≤ n.
    X,
    /// Y_{r,s} = i(E_{r,s} + E_{s,r}), 1 ≤ r < s ≤ n.
    Y,
}

/// Standard basis generator of su(n). Indices are 1-based to match the
/// usual notation; `indices` is (ℓ, 0) for H and (r, s) for X/Y.
pub fn pauli_basis(
    n: usize,
    kind: PauliKind,
    indices: (usize, usize),
) -> Result<LieAlgebraElement> {
    if n < 2 {
        return Err(Error::InvalidInput("su(n) needs n >= 2".into()));
    }
    let i = Complex64::new(0.0, 1.0);
    let one = Complex64::new(1.0, 0.0);
    let mut m = Matrix::zeros(n);
    match kind {
        PauliKind::H => {
            let (l, _) = indices;
            if l < 1 || l > n - 1 {
                return Err(Error::InvalidInput(format!(
                    "H index must satisfy 1 <= l <= {}, got {l}",
                    n - 1
                )));
            }
            m[(l - 1, l - 1)] = i;
            m[(l, l)] = -i;
        }
        PauliKind::X => {
            let (r, s) = indices;
            if r < 1 || s <= r || s > n {
                return Err(Error::InvalidInput(format!(
                    "X indices must satisfy 1 <= r < s <= {n}, got ({r}, {s})"
                )));
            }
            m[(r - 1, s - 1)] = one;
            m[(s - 1, r - 1)] = -one;
        }
        PauliKind::Y => {
            let (r, s) = indices;
            if r < 1 || s <= r || s > n {
                return Err(Error::InvalidInput(format!(
                    "Y indices must satisfy 1 <= r < s <= {n}, got ({r}, {s})"
                )));
            }
            m[(r - 1, s - 1)] = i;
            m[(s - 1, r - 1)] = i;
        }
    }
    Ok(LieAlgebraElement {
        family: AlgebraFamily::Su(n),
        matrix: m,
    })
}

/// Heisenberg element `[[0, a, c], [0, 0, b], [0, 0, 0]]`.
pub fn build_heisenberg(a: f64, b: f64, c: f64) -> LieAlgebraElement {
    let m = Matrix::from_real_rows(&[vec![0.0, a, c], vec![0.0, 0.0, b], vec![0.0, 0.0, 0.0]])
        .expect("finite");
    LieAlgebraElement {
        family: AlgebraFamily::Heisenberg,
        matrix: m,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::mat_exp;

    #[test]
    fn membership_examples() {
        assert!(check_membership(AlgebraFamily::Su(2), &sigma_x()).unwrap());
        // the index-3 nilpotent is traceless and real
        let x3 = Matrix::from_real_rows(&[
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 1.0],
            vec![0.0, 0.0, 0.0],
        ])
        .unwrap();
        assert!(check_membership(AlgebraFamily::Sl3R, &x3).unwrap());
        // symmetric is not skew
        let sym = Matrix::from_real_rows(&[
            vec![0.0, 1.0, 0.0],
            vec![1.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0],
        ])
        .unwrap();
        assert!(!check_membership(AlgebraFamily::So(3), &sym).unwrap());
    }

    #[test]
    fn membership_dimension_mismatch() {
        let x = Matrix::zeros(2);
        assert!(check_membership(AlgebraFamily::So(3), &x).is_err());
    }

    #[test]
    fn sl2_constructor_matches_display() {
        let f = build_sl2(Sl2Coords::new(0.0, 0.0, 1.0));
        let expect = Matrix::from_real_rows(&[vec![0.0, -1.0], vec![1.0, 0.0]]).unwrap();
        assert!(f.matrix.dist(&expect) < 1e-15);

        let h = build_sl2(Sl2Coords::new(0.0, 1.0, 0.0));
        let expect = Matrix::diag_real(&[1.0, -1.0]);
        assert!(h.matrix.dist(&expect) < 1e-15);

        // a = c = 1 is nilpotent of index 2
        let n = build_sl2(Sl2Coords::new(1.0, 0.0, 1.0));
        let expect = Matrix::from_real_rows(&[vec![0.0, 0.0], vec![2.0, 0.0]]).unwrap();
        assert!(n.matrix.dist(&expect) < 1e-15);
        let sq = &n.matrix * &n.matrix;
        assert!(sq.norm_fro() < 1e-15);
    }

    #[test]
    fn sl2_coords_round_trip() {
        let coords = Sl2Coords::new(0.3, -1.2, 2.5);
        let back = Sl2Coords::from_matrix(&coords.matrix()).unwrap();
        assert!((back.a - coords.a).abs() < 1e-14);
        assert!((back.b - coords.b).abs() < 1e-14);
        assert!((back.c - coords.c).abs() < 1e-14);
    }

    #[test]
    fn sigma_constructors() {
        let sx = build_su2_sigma(1.0, 0.0, 0.0).unwrap();
        assert!(sx.matrix.dist(&sigma_x()) < 1e-15);
        let sy = build_su2_sigma(0.0, 1.0, 0.0).unwrap();
        assert!(sy.matrix.dist(&sigma_y()) < 1e-15);
        // a mixed combination still squares to −I
        let s = 1.0 / 2.0f64.sqrt();
        let mix = build_su2_sigma(s, s, 0.0).unwrap();
        let sq = &mix.matrix * &mix.matrix;
        assert!(sq.dist(&Matrix::identity(2).scale_re(-1.0)) < 1e-9);
    }

    #[test]
    fn sigma_requires_unit_vector() {
        assert!(matches!(
            build_su2_sigma(1.0, 1.0, 0.0),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn sigma_exp_is_circle() {
        // exp(tΣ) = cos(t) I + sin(t) Σ
        let s = 1.0 / 3.0f64.sqrt();
        let sigma = build_su2_sigma(s, s, s).unwrap().matrix;
        for &t in &[0.3, 1.0, 2.7, -1.9] {
            let lhs = mat_exp(&sigma.scale_re(t)).unwrap();
            let rhs = &Matrix::identity(2).scale_re(t.cos()) + &sigma.scale_re(t.sin());
            assert!(lhs.dist(&rhs) < 1e-9, "t = {t}");
        }
    }

    #[test]
    fn pauli_basis_matches_displays() {
        let h1 = pauli_basis(4, PauliKind::H, (1, 0)).unwrap();
        let expect = Matrix::diag(&[
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, -1.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
        ]);
        assert_eq!(h1.matrix, expect);

        let x12 = pauli_basis(4, PauliKind::X, (1, 2)).unwrap();
        assert_eq!(x12.matrix[(0, 1)], Complex64::new(1.0, 0.0));
        assert_eq!(x12.matrix[(1, 0)], Complex64::new(-1.0, 0.0));

        let y24 = pauli_basis(4, PauliKind::Y, (2, 4)).unwrap();
        assert_eq!(y24.matrix[(1, 3)], Complex64::new(0.0, 1.0));
        assert_eq!(y24.matrix[(3, 1)], Complex64::new(0.0, 1.0));
    }

    #[test]
    fn pauli_basis_exact_membership() {
        // traceless and skew-Hermitian at the entry level
        for n in [2usize, 3, 5] {
            let mut elems = vec![];
            for l in 1..n {
                elems.push(pauli_basis(n, PauliKind::H, (l, 0)).unwrap());
            }
            for r in 1..n {
                for s in (r + 1)..=n {
                    elems.push(pauli_basis(n, PauliKind::X, (r, s)).unwrap());
                    elems.push(pauli_basis(n, PauliKind::Y, (r, s)).unwrap());
                }
            }
            for e in elems {
                assert_eq!(e.matrix.trace(), Complex64::new(0.0, 0.0));
                assert!(e.matrix.dist(&e.matrix.adjoint().scale_re(-1.0)) == 0.0);
                assert!(check_membership(AlgebraFamily::Su(n), &e.matrix).unwrap());
            }
        }
    }

    #[test]
    fn pauli_basis_index_guards() {
        assert!(pauli_basis(3, PauliKind::H, (3, 0)).is_err());
        assert!(pauli_basis(3, PauliKind::X, (2, 2)).is_err());
        assert!(pauli_basis(3, PauliKind::Y, (1, 4)).is_err());
    }

    #[test]
    fn constructors_pass_membership() {
        let elems = [
            build_sl2(Sl2Coords::new(0.4, -0.3, 1.1)),
            build_su2_sigma(0.0, 0.0, 1.0).unwrap(),
            build_heisenberg(1.0, 1.0, 1.0),
        ];
        for e in elems {
            assert!(check_membership(e.family, &e.matrix).unwrap());
        }
    }
}
