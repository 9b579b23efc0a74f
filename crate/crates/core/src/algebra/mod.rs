//! Exact arithmetic: rationals, ℚ(δ) coefficients, Laurent polynomials in
//! torus characters, class fractions with factored denominators, and
//! truncated series for residue computations.

mod character;
mod class;
mod coeff;
mod laurent;
mod qpoly;
mod residue;
mod series;

pub use character::Character;
pub use class::ClassFraction;
pub use coeff::{CoeffFrac, GenusVar};
pub use laurent::LaurentPoly;
pub use qpoly::{q, qq, QPoly, Rational};
pub use residue::{residue, residue_with_order, shifted_pole_series, u_of_h};
pub use series::{Coefficient, SeriesTrunc, SeriesVar};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("coefficient {coefficient} has a pole at {value}")]
    SpecializationPole { coefficient: String, value: String },
    #[error("torus rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("zero character in a denominator")]
    ZeroCharacter,
    #[error("coefficient of degree {degree} requested but series is valid below degree {order}")]
    InsufficientTruncation { degree: i64, order: i64 },
    #[error("series variables differ: {0}")]
    VariableMismatch(String),
    #[error("series has no invertible leading term")]
    NotInvertible,
}
