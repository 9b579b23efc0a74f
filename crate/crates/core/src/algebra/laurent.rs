//! Lattice-graded Laurent polynomials `Σ c_m T^m` over ℚ(δ).

use std::collections::BTreeMap;
use std::fmt;

use super::character::Character;
use super::coeff::{CoeffFrac, GenusVar};
use super::qpoly::Rational;
use super::AlgebraError;

/// A finite sum of monomials `T^m` with nonzero [`CoeffFrac`] coefficients.
///
/// Terms are kept in a `BTreeMap` under the graded-lex order of
/// [`Character`], which makes equality and printing canonical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<Character, CoeffFrac>,
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> Self {
        LaurentPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        LaurentPoly::constant(rank, CoeffFrac::one())
    }

    pub fn constant(rank: usize, c: CoeffFrac) -> Self {
        LaurentPoly::term(Character::zero(rank), c)
    }

    /// The single term `c T^m`.
    pub fn term(m: Character, c: CoeffFrac) -> Self {
        let rank = m.rank();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { rank, terms }
    }

    /// The monomial `T^m`.
    pub fn monomial(m: Character) -> Self {
        LaurentPoly::term(m, CoeffFrac::one())
    }

    /// `1 - T^w`.
    pub fn one_minus(w: &Character) -> Self {
        let mut p = LaurentPoly::one(w.rank());
        p.add_term(w.clone(), CoeffFrac::int(-1));
        p
    }

    pub fn from_terms(
        rank: usize,
        terms: impl IntoIterator<Item = (Character, CoeffFrac)>,
    ) -> Result<Self, AlgebraError> {
        let mut p = LaurentPoly::zero(rank);
        for (m, c) in terms {
            if m.rank() != rank {
                return Err(AlgebraError::RankMismatch {
                    left: rank,
                    right: m.rank(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Character, &CoeffFrac)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Character) -> CoeffFrac {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The constant coefficient, if the polynomial has no other terms.
    pub fn as_constant(&self) -> Option<CoeffFrac> {
        match self.terms.len() {
            0 => Some(CoeffFrac::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_zero().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub(crate) fn add_term(&mut self, m: Character, c: CoeffFrac) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check_rank(&self, other: &LaurentPoly) -> Result<(), AlgebraError> {
        if self.rank != other.rank {
            return Err(AlgebraError::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly, AlgebraError> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &LaurentPoly) -> Result<LaurentPoly, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly, AlgebraError> {
        self.check_rank(other)?;
        let mut out = LaurentPoly::zero(self.rank);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.add(m2), c1.mul(c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &CoeffFrac) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.rank);
        }
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect(),
        }
    }

    pub fn scale_rational(&self, c: &Rational) -> LaurentPoly {
        self.scale(&CoeffFrac::rational(c.clone()))
    }

    /// Multiplies by the monomial `T^m`.
    pub fn shift(&self, m: &Character) -> LaurentPoly {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.add(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one(self.rank);
        for _ in 0..k {
            acc = acc.mul(self).expect("same rank");
        }
        acc
    }

    /// Applies a map to every coefficient, dropping terms that become zero.
    pub fn map_coeffs<E>(&self, mut f: impl FnMut(&CoeffFrac) -> Result<CoeffFrac, E>) -> Result<LaurentPoly, E> {
        let mut out = LaurentPoly::zero(self.rank);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Exact division by `1 - T^w`, or `None` when it does not divide.
    ///
    /// Exponents are grouped into lines `m + ℤw`; along each line the
    /// polynomial is univariate in `X = T^w`, divisible by `1 - X` iff its
    /// coefficients sum to zero, and the quotient is the running sum.
    pub fn div_one_minus(&self, w: &Character) -> Option<LaurentPoly> {
        let (pivot, step) = w.pivot()?;
        let mut lines: BTreeMap<Character, BTreeMap<i64, CoeffFrac>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let r = m.coords()[pivot].rem_euclid(step.abs());
            let k = (m.coords()[pivot] - r) / step;
            let base = m.sub(&w.scale(k));
            lines.entry(base).or_default().insert(k, c.clone());
        }
        let mut out = LaurentPoly::zero(self.rank);
        for (base, line) in lines {
            let lo = *line.keys().next().expect("nonempty line");
            let hi = *line.keys().next_back().expect("nonempty line");
            let mut running = CoeffFrac::zero();
            for k in lo..=hi {
                if let Some(c) = line.get(&k) {
                    running = running.add(c);
                }
                if k < hi {
                    out.add_term(base.add(&w.scale(k)), running.clone());
                }
            }
            if !running.is_zero() {
                return None;
            }
        }
        Some(out)
    }

    /// Renders with monomials `T^[a,b]` in graded-lex order.
    pub fn render(&self, var: GenusVar) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (m, c) in &self.terms {
            let mut coeff = c.render(var);
            let mut negative = false;
            if !c.is_compound(var) && coeff.starts_with('-') {
                negative = true;
                coeff.remove(0);
            }
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let paren = if c.is_compound(var) {
                format!("({coeff})")
            } else {
                coeff.clone()
            };
            if m.is_zero() {
                out.push_str(&paren);
            } else if coeff == "1" {
                out.push_str(&format!("T^{}", m.render()));
            } else {
                out.push_str(&format!("{paren}*T^{}", m.render()));
            }
        }
        out
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(GenusVar::Delta))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(GenusVar::Delta))
    }
}
