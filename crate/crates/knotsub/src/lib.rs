//! Classify one-parameter subgroups `t ↦ exp(tX)` of matrix Lie groups.
//!
//! Given an element X of a supported Lie algebra, the crate decides whether
//! the curve exp(tX) is trivial, an injective line, or a circle subgroup;
//! for circles it computes the minimal period, the integer frequency
//! vector, a torus-knot label when one exists, and a canonical form with an
//! explicit conjugating matrix. A brute-force numerical period scanner
//! provides an independent cross-check for every analytic verdict.
//!
//! Supported algebras: su(n), so(n), sl(2,ℝ), sl(3,ℝ), the Heisenberg
//! algebra, and — as an explicitly experimental mode — sl(n,ℝ) for n ≥ 4.
//!
//! The `book/` directory of the repository contains a guide whose code
//! snippets compile and run as part of this crate's doctests.

pub mod algebra;
pub mod canonical;
pub mod classify;
pub mod cli;
pub mod error;
pub mod io;
pub mod matrix;
pub mod oracle;
pub mod sampling;

pub use algebra::{
    build_heisenberg, build_sl2, build_su2_sigma, check_membership, pauli_basis, AlgebraFamily,
    LieAlgebraElement, PauliKind, Sl2Coords,
};
pub use canonical::{
    ambient_path, canonical_sl2, canonical_sl3, canonical_so, canonical_su, AmbientGroup,
    CanonicalForm, GroupTag, JordanClass,
};
pub use classify::{
    classify, commensurate, minimal_period, spectrum_frequencies, torus_knot_type, Classification,
    FrequencyVector, IntegerForm, TorusKnotType, Verdict,
};
pub use error::{Error, Result};
pub use matrix::{
    hermitian_eigs, mat_exp, principal_log_special_orthogonal, principal_log_unitary,
    singular_values, skew_block_schur, small_eigs, EigenPair, Matrix,
};
pub use oracle::{closed_form_sl2, closed_form_sl3, detect_period_numeric, PeriodScan};

// The guide chapters double as doctests so the book can never drift from
// the library.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/one-parameter-subgroups.md")]
    pub struct OneParameterSubgroups;
    #[doc = include_str!("../../../book/src/unitary-and-orthogonal.md")]
    pub struct UnitaryAndOrthogonal;
    #[doc = include_str!("../../../book/src/special-linear.md")]
    pub struct SpecialLinear;
    #[doc = include_str!("../../../book/src/oracle.md")]
    pub struct Oracle;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
