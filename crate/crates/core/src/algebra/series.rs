//! Truncated Laurent series in one variable with a recorded valid order.

use std::fmt;

use num_traits::{One, Zero};

use super::class::ClassFraction;
use super::coeff::CoeffFrac;
use super::qpoly::Rational;
use super::AlgebraError;

/// The ring operations a series coefficient has to support.
pub trait Coefficient: Clone + PartialEq {
    /// A zero of the same shape (same torus rank, for classes).
    fn zero_like(&self) -> Self;
    /// A one of the same shape.
    fn one_like(&self) -> Self;
    fn is_zero_coeff(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn scale_q(&self, c: &Rational) -> Self;
    /// Multiplicative inverse, when the coefficient ring has one for `self`.
    fn inv_ref(&self) -> Option<Self> {
        None
    }
}

impl Coefficient for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale_q(&self, c: &Rational) -> Self {
        self * c
    }
    fn inv_ref(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

impl Coefficient for CoeffFrac {
    fn zero_like(&self) -> Self {
        CoeffFrac::zero()
    }
    fn one_like(&self) -> Self {
        CoeffFrac::one()
    }
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn scale_q(&self, c: &Rational) -> Self {
        self.scale(c)
    }
    fn inv_ref(&self) -> Option<Self> {
        self.inv().ok()
    }
}

impl Coefficient for ClassFraction {
    fn zero_like(&self) -> Self {
        ClassFraction::zero(self.rank())
    }
    fn one_like(&self) -> Self {
        ClassFraction::one(self.rank())
    }
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn scale_q(&self, c: &Rational) -> Self {
        self.scale_rational(c)
    }
}

/// Name of the series variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesVar {
    /// The cohomological variable `h`.
    H,
    /// `U = e^{-h} - 1`.
    U,
}

impl SeriesVar {
    pub fn symbol(self) -> &'static str {
        match self {
            SeriesVar::H => "h",
            SeriesVar::U => "U",
        }
    }
}

/// `Σ_{k ≥ low} c_k x^k`, known exactly for all degrees `k < order`.
///
/// `order == None` marks a series that is exact in every degree, i.e. a
/// Laurent polynomial. Products and sums carry the order that is actually
/// justified by the operands.
#[derive(Clone, PartialEq)]
pub struct SeriesTrunc<C: Coefficient> {
    var: SeriesVar,
    low: i64,
    coeffs: Vec<C>,
    order: Option<i64>,
    zero: C,
}

impl<C: Coefficient> SeriesTrunc<C> {
    /// A series whose coefficient of `x^(low + i)` is `coeffs[i]`.
    pub fn new(var: SeriesVar, low: i64, coeffs: Vec<C>, order: Option<i64>, zero: C) -> Self {
        let mut s = SeriesTrunc {
            var,
            low,
            coeffs,
            order,
            zero,
        };
        s.normalize();
        s
    }

    /// An exact Laurent polynomial.
    pub fn polynomial(var: SeriesVar, low: i64, coeffs: Vec<C>, zero: C) -> Self {
        SeriesTrunc::new(var, low, coeffs, None, zero)
    }

    pub fn zero(var: SeriesVar, zero: C) -> Self {
        SeriesTrunc::polynomial(var, 0, Vec::new(), zero)
    }

    pub fn constant(var: SeriesVar, c: C) -> Self {
        let zero = c.zero_like();
        SeriesTrunc::polynomial(var, 0, vec![c], zero)
    }

    fn normalize(&mut self) {
        if let Some(ord) = self.order {
            let keep = (ord - self.low).max(0) as usize;
            self.coeffs.truncate(keep);
        }
        while self.coeffs.last().is_some_and(C::is_zero_coeff) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero_coeff()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = self.order.unwrap_or(0);
        }
    }

    pub fn var(&self) -> SeriesVar {
        self.var
    }

    /// Lowest possibly nonzero degree.
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Degrees below this are exact; `None` means exact everywhere.
    pub fn order(&self) -> Option<i64> {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest stored degree, if any coefficient is nonzero.
    pub fn high(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// The coefficient of `x^k`, or an error if `k` is past the valid order.
    pub fn coeff(&self, k: i64) -> Result<C, AlgebraError> {
        if let Some(ord) = self.order {
            if k >= ord {
                return Err(AlgebraError::InsufficientTruncation { degree: k, order: ord });
            }
        }
        if k < self.low {
            return Ok(self.zero.clone());
        }
        Ok(self
            .coeffs
            .get((k - self.low) as usize)
            .cloned()
            .unwrap_or_else(|| self.zero.clone()))
    }

    /// Drops everything from degree `order` on.
    pub fn truncate(&self, order: i64) -> Self {
        let ord = self.order.map_or(order, |o| o.min(order));
        SeriesTrunc::new(self.var, self.low, self.coeffs.clone(), Some(ord), self.zero.clone())
    }

    fn check(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.var != other.var {
            return Err(AlgebraError::VariableMismatch(format!(
                "{} vs {}",
                self.var.symbol(),
                other.var.symbol()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let order = match (self.order, other.order) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let low = self.low.min(other.low);
        let high = self.high().unwrap_or(low).max(other.high().unwrap_or(low));
        let mut coeffs = Vec::new();
        for k in low..=high {
            let a = self.raw(k);
            let b = other.raw(k);
            coeffs.push(a.add_ref(&b));
        }
        Ok(SeriesTrunc::new(self.var, low, coeffs, order, self.zero.clone()))
    }

    fn raw(&self, k: i64) -> C {
        if k < self.low {
            return self.zero.clone();
        }
        self.coeffs
            .get((k - self.low) as usize)
            .cloned()
            .unwrap_or_else(|| self.zero.clone())
    }

    pub fn neg(&self) -> Self {
        SeriesTrunc {
            var: self.var,
            low: self.low,
            coeffs: self.coeffs.iter().map(C::neg_ref).collect(),
            order: self.order,
            zero: self.zero.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        SeriesTrunc::new(
            self.var,
            self.low,
            self.coeffs.iter().map(|a| a.mul_ref(c)).collect(),
            self.order,
            self.zero.clone(),
        )
    }

    pub fn scale_q(&self, c: &Rational) -> Self {
        SeriesTrunc::new(
            self.var,
            self.low,
            self.coeffs.iter().map(|a| a.scale_q(c)).collect(),
            self.order,
            self.zero.clone(),
        )
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        SeriesTrunc {
            var: self.var,
            low: self.low + k,
            coeffs: self.coeffs.clone(),
            order: self.order.map(|o| o + k),
            zero: self.zero.clone(),
        }
    }

    /// Product; the result is exact below `min(A + low_b, B + low_a)`.
    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let exact_zero = |s: &Self| s.is_zero() && s.order.is_none();
        if exact_zero(self) || exact_zero(other) {
            return Ok(SeriesTrunc::zero(self.var, self.zero.clone()));
        }
        let order = match (self.order, other.order) {
            (None, None) => None,
            (Some(a), None) => Some(a + other.low),
            (None, Some(b)) => Some(b + self.low),
            (Some(a), Some(b)) => Some((a + other.low).min(b + self.low)),
        };
        if self.is_zero() || other.is_zero() {
            return Ok(SeriesTrunc::new(self.var, 0, Vec::new(), order, self.zero.clone()));
        }
        let low = self.low + other.low;
        let mut len = self.coeffs.len() + other.coeffs.len() - 1;
        if let Some(o) = order {
            len = len.min((o - low).max(0) as usize);
        }
        let mut coeffs = vec![self.zero.clone(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_coeff() || i >= len {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                coeffs[i + j] = coeffs[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Ok(SeriesTrunc::new(self.var, low, coeffs, order, self.zero.clone()))
    }

    pub fn pow(&self, k: u32) -> Result<Self, AlgebraError> {
        let mut acc = SeriesTrunc::constant(self.var, self.zero.one_like());
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Multiplicative inverse of a series whose lowest coefficient is a
    /// unit. A series known below `A` with lowest degree `v` has an inverse
    /// known below `A - 2v`.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let a0 = self.coeffs.first().ok_or(AlgebraError::NotInvertible)?;
        let inv0 = a0.inv_ref().ok_or(AlgebraError::NotInvertible)?;
        let v = self.low;
        let (order, len) = match self.order {
            Some(o) => (Some(o - 2 * v), (o - v).max(0) as usize),
            None if self.coeffs.len() == 1 => (None, 1),
            // an exact polynomial with several terms has an infinite inverse
            None => return Err(AlgebraError::NotInvertible),
        };
        let mut b: Vec<C> = Vec::with_capacity(len);
        for k in 0..len {
            if k == 0 {
                b.push(inv0.clone());
                continue;
            }
            let mut acc = self.zero.clone();
            for j in 1..=k {
                if let Some(a) = self.coeffs.get(j) {
                    acc = acc.add_ref(&a.mul_ref(&b[k - j]));
                }
            }
            b.push(acc.mul_ref(&inv0).neg_ref());
        }
        Ok(SeriesTrunc::new(self.var, -v, b, order, self.zero.clone()))
    }

    /// Coefficients with their degrees.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero_coeff())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    /// Substitutes `x = u(z)` where `u` is a rational series of valuation 1.
    /// Negative powers go through the inverse of `u`.
    pub fn compose(&self, u: &SeriesTrunc<Rational>) -> Result<SeriesTrunc<C>, AlgebraError> {
        let mut acc = SeriesTrunc::new(u.var, 0, Vec::new(), None, self.zero.clone());
        if self.is_zero() {
            return Ok(acc.truncate(self.order.unwrap_or(i64::MAX)));
        }
        let inv = if self.low < 0 { Some(u.inverse()?) } else { None };
        let high = self.high().expect("nonzero");
        for k in self.low..=high {
            let c = self.raw(k);
            if c.is_zero_coeff() {
                continue;
            }
            let p = if k >= 0 {
                u.pow(k as u32)?
            } else {
                inv.as_ref().expect("negative degree").pow((-k) as u32)?
            };
            let lifted = lift(&p, &c);
            acc = acc.add(&lifted)?;
        }
        if let Some(o) = self.order {
            // the tail from degree `o` on is unknown; its image starts at
            // degree `o` times the valuation of u, which is 1
            acc = acc.truncate(o);
        }
        Ok(acc)
    }

    /// Renders as `c0*x^-2 + c1*x^-1 + ... + O(x^N)`.
    pub fn render(&self, f: impl Fn(&C) -> String) -> String {
        let x = self.var.symbol();
        let mut parts: Vec<String> = self
            .terms()
            .map(|(k, c)| match k {
                0 => f(c),
                1 => format!("({})*{x}", f(c)),
                _ => format!("({})*{x}^{k}", f(c)),
            })
            .collect();
        if let Some(o) = self.order {
            parts.push(format!("O({x}^{o})"));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// Turns a rational series into a `C` series scaled by `c`.
fn lift<C: Coefficient>(p: &SeriesTrunc<Rational>, c: &C) -> SeriesTrunc<C> {
    let coeffs = p.coeffs.iter().map(|r| c.scale_q(r)).collect();
    SeriesTrunc::new(p.var, p.low, coeffs, p.order, c.zero_like())
}

impl SeriesTrunc<Rational> {
    /// `Σ c_k x^k` from integer coefficients starting at degree 0, exact.
    pub fn from_rationals(var: SeriesVar, coeffs: Vec<Rational>) -> Self {
        SeriesTrunc::polynomial(var, 0, coeffs, Rational::zero())
    }

    pub fn one(var: SeriesVar) -> Self {
        SeriesTrunc::constant(var, Rational::one())
    }
}

impl SeriesTrunc<CoeffFrac> {
    pub fn one_frac(var: SeriesVar) -> Self {
        SeriesTrunc::constant(var, CoeffFrac::one())
    }
}

impl<C: Coefficient + fmt::Display> fmt::Debug for SeriesTrunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|c| c.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::super::qpoly::{q, qq};
    use super::*;

    fn exp_neg(order: i64) -> SeriesTrunc<Rational> {
        // e^{-h} = Σ (-1)^k h^k / k!
        let mut coeffs = Vec::new();
        let mut fact = Rational::one();
        for k in 0..order {
            if k > 0 {
                fact *= q(k);
            }
            let sign = if k % 2 == 0 { q(1) } else { q(-1) };
            coeffs.push(sign / &fact);
        }
        SeriesTrunc::new(SeriesVar::H, 0, coeffs, Some(order), Rational::zero())
    }

    #[test]
    fn inverse_of_exponential() {
        let e = exp_neg(6);
        let inv = e.inverse().unwrap();
        assert_eq!(inv.coeff(3).unwrap(), qq(1, 6));
        let prod = e.mul(&inv).unwrap();
        assert_eq!(prod.order(), Some(6));
        for k in 1..6 {
            assert!(prod.coeff(k).unwrap().is_zero());
        }
        assert!(prod.coeff(6).is_err());
    }

    #[test]
    fn orders_follow_valuation() {
        // h + O(h^4), inverted: h^{-1} + O(h^2)
        let s = SeriesTrunc::new(SeriesVar::H, 1, vec![q(1), q(3)], Some(4), q(0));
        let inv = s.inverse().unwrap();
        assert_eq!(inv.low(), -1);
        assert_eq!(inv.order(), Some(2));
        assert_eq!(inv.coeff(0).unwrap(), q(-3));
        assert_eq!(inv.coeff(1).unwrap(), q(9));
    }

    #[test]
    fn exact_polynomials_stay_exact() {
        let a = SeriesTrunc::from_rationals(SeriesVar::U, vec![q(1), q(1)]);
        let b = a.pow(3).unwrap();
        assert_eq!(b.order(), None);
        assert_eq!(b.coeff(2).unwrap(), q(3));
        assert_eq!(b.coeff(10).unwrap(), q(0));
    }
}
