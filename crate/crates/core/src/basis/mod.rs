//! Classes as polynomials in `S_w = T^w - 1` and `δ`, sign reports, and
//! expansions in the cohomology variables.

mod cohomology;
mod positivity;
mod rewrite;
mod spoly;
mod torsimp;

pub use cohomology::{character_series, cohomology_limit, TSeries};
pub use positivity::{positivity_report, PositivityReport, Verdict};
pub use rewrite::{rewrite_in_s, Representer, Rewritten};
pub use spoly::{monomial_class, parse_spoly, SMonomial, SPolynomial, SVariableSet};
pub use torsimp::{generator_alphabet, open_orbit_class, torsimp_expansion, TorsimpExpansion};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::lattice::LatticeError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BasisError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("exponent {0} is not a nonnegative combination of the alphabet")]
    Unrepresentable(String),
    #[error("denominator factor 1 - T^{0}: neither the weight nor its negative is a letter")]
    MissingDenominator(String),
    #[error("coefficient {0} is not a polynomial in d")]
    NotPolynomial(String),
    #[error("the alphabet does not lie in an open half-space")]
    NoGrading,
    #[error("parse error at byte {at}: {msg}")]
    Parse { at: usize, msg: String },
    #[error("pole at t = 0 in {0}")]
    Pole(String),
    #[error("{0}")]
    InvalidArgument(String),
}
