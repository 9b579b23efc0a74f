//! Hirzebruch class constructors: smooth fixed points and χ_y sums, SNC
//! strata, toric germs, projective cones, and pushforward assembly.
//!
//! Every class here is K-normalized: the restriction of `td_y^T` to a
//! fixed point divided by the equivariant Euler class, a rational function
//! in `T^w = e^{-w}`.

mod assemble;
mod cone;
mod fixed;
mod snc;
mod toric;

pub use assemble::{assemble, cusp_comparison, ChartTerm, CuspWitness, Factor};
pub use cone::{
    bfm_cone_check, chi_of_projective_class, cone_class, full_space_f, hypersurface_f, quadric_recursion, BfmWitness,
    ConeRegion, UPoly,
};
pub use fixed::{
    cell_polynomial, chi_from_local, orbit_polynomial, smooth_local_class, solve_singular_contribution, FixedPointData,
};
pub use snc::{snc_local_class, snc_t1_identity, SncVariant, SncWitness};
pub use toric::{toric_delta0_check, toric_local_class, toric_y0_check, ToricWitness};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::lattice::LatticeError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HirzError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("zero tangent weight at an isolated fixed point")]
    ZeroWeight,
    #[error("k = {k} is outside 0..={n}")]
    KOutOfRange { n: usize, k: usize },
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("the fixed-point sum depends on T: {0}")]
    NotTorusFree(String),
    #[error("coefficient {0} is not a polynomial in δ")]
    NotPolynomial(String),
    #[error("division is not exact: {0}")]
    InexactDivision(String),
    #[error("f has degree {degree} in U but must be below n = {n}")]
    DegreeTooHigh { degree: usize, n: usize },
    #[error("{0}")]
    InvalidArgument(String),
}
