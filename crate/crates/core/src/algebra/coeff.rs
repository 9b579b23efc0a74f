//! The coefficient field ℚ(δ), with `y = -1 - δ` as a presentation alias.

use std::fmt;

use num_traits::{One, Zero};

use super::qpoly::{q, QPoly, Rational};
use super::AlgebraError;

/// Which genus variable a coefficient is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum GenusVar {
    /// The internal variable `δ = -1 - y`, rendered as `d`.
    #[default]
    Delta,
    /// The classical Hirzebruch variable `y`.
    Y,
}

impl GenusVar {
    pub fn symbol(self) -> &'static str {
        match self {
            GenusVar::Delta => "d",
            GenusVar::Y => "y",
        }
    }
}

/// A reduced fraction of polynomials in δ with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CoeffFrac {
    num: QPoly,
    den: QPoly,
}

impl CoeffFrac {
    pub fn zero() -> Self {
        CoeffFrac {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        CoeffFrac::rational(Rational::one())
    }

    pub fn int(n: i64) -> Self {
        CoeffFrac::rational(q(n))
    }

    pub fn rational(c: Rational) -> Self {
        CoeffFrac {
            num: QPoly::constant(c),
            den: QPoly::one(),
        }
    }

    /// The variable δ itself.
    pub fn delta() -> Self {
        CoeffFrac::poly(QPoly::x())
    }

    /// The variable `y = -1 - δ`.
    pub fn y() -> Self {
        CoeffFrac::poly(QPoly::from_ints(&[-1, -1]))
    }

    pub fn poly(num: QPoly) -> Self {
        CoeffFrac { num, den: QPoly::one() }
    }

    /// Builds a polynomial given in the `y` presentation.
    pub fn from_y_poly(p: &QPoly) -> Self {
        CoeffFrac::poly(p.reflect())
    }

    /// `num / den`, reduced. Errors when `den` is zero.
    pub fn new(num: QPoly, den: QPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return CoeffFrac::zero();
        }
        if den.is_constant() {
            let c = den.coeff(0);
            let num = if c.is_one() { num } else { num.scale(&c.recip()) };
            return CoeffFrac { num, den: QPoly::one() };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lead = den.leading().expect("nonzero denominator").clone();
        if lead.is_one() {
            CoeffFrac { num, den }
        } else {
            let inv = lead.recip();
            CoeffFrac {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a polynomial in δ, if it is one.
    pub fn as_delta_poly(&self) -> Option<&QPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    /// The value as a polynomial in `y`, if it is one.
    pub fn to_y_poly(&self) -> Option<QPoly> {
        self.as_delta_poly().map(QPoly::reflect)
    }

    /// A constant (δ-free) value.
    pub fn as_rational(&self) -> Option<Rational> {
        (self.is_polynomial() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn add(&self, other: &CoeffFrac) -> CoeffFrac {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return CoeffFrac::poly(self.num.add(&other.num));
        }
        if self.den == other.den {
            return Self::reduce(self.num.add(&other.num), self.den.clone());
        }
        Self::reduce(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> CoeffFrac {
        CoeffFrac {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &CoeffFrac) -> CoeffFrac {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &CoeffFrac) -> CoeffFrac {
        if self.is_zero() || other.is_zero() {
            return CoeffFrac::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return CoeffFrac::poly(self.num.mul(&other.num));
        }
        Self::reduce(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn scale(&self, c: &Rational) -> CoeffFrac {
        if c.is_zero() {
            return CoeffFrac::zero();
        }
        CoeffFrac {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<CoeffFrac, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &CoeffFrac) -> Result<CoeffFrac, AlgebraError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: u32) -> CoeffFrac {
        CoeffFrac {
            num: self.num.pow(k),
            den: self.den.pow(k),
        }
    }

    /// Evaluates at `δ = value`.
    pub fn eval_delta(&self, value: &Rational) -> Result<Rational, AlgebraError> {
        let d = self.den.eval(value);
        if d.is_zero() {
            return Err(AlgebraError::SpecializationPole {
                coefficient: self.render(GenusVar::Delta),
                value: value.to_string(),
            });
        }
        Ok(self.num.eval(value) / d)
    }

    /// Evaluates at `y = value`, i.e. `δ = -1 - value`.
    pub fn eval_y(&self, value: &Rational) -> Result<Rational, AlgebraError> {
        let delta = -Rational::one() - value;
        self.eval_delta(&delta).map_err(|e| match e {
            AlgebraError::SpecializationPole { .. } => AlgebraError::SpecializationPole {
                coefficient: self.render(GenusVar::Y),
                value: value.to_string(),
            },
            other => other,
        })
    }

    /// Renders in the requested presentation. Polynomials print bare,
    /// proper fractions as `(num)/(den)`.
    pub fn render(&self, var: GenusVar) -> String {
        let (num, den) = match var {
            GenusVar::Delta => (self.num.clone(), self.den.clone()),
            GenusVar::Y => (self.num.reflect(), self.den.reflect()),
        };
        let s = var.symbol();
        if self.den.is_one() {
            num.render(s)
        } else {
            format!("({})/({})", num.render(s), den.render(s))
        }
    }

    /// Whether the rendering needs parentheses when used as a factor.
    pub(crate) fn is_compound(&self, var: GenusVar) -> bool {
        if !self.den.is_one() {
            return true;
        }
        match var {
            GenusVar::Delta => self.num.term_count() > 1,
            GenusVar::Y => self.num.reflect().term_count() > 1,
        }
    }
}

impl Default for CoeffFrac {
    fn default() -> Self {
        CoeffFrac::zero()
    }
}

impl fmt::Debug for CoeffFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoeffFrac({})", self.render(GenusVar::Delta))
    }
}

impl fmt::Display for CoeffFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(GenusVar::Delta))
    }
}

impl Zero for CoeffFrac {
    fn zero() -> Self {
        CoeffFrac::zero()
    }
    fn is_zero(&self) -> bool {
        CoeffFrac::is_zero(self)
    }
}

impl std::ops::Add for CoeffFrac {
    type Output = CoeffFrac;
    fn add(self, rhs: CoeffFrac) -> CoeffFrac {
        CoeffFrac::add(&self, &rhs)
    }
}
