//! Rewriting a class as `P(S, δ) / Π S_{w_i}^{e_i}` over a chosen alphabet.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{Character, ClassFraction, Rational};

use super::spoly::{SMonomial, SPolynomial, SVariableSet};
use super::BasisError;

/// `numerator / Π S_i^{denominator[i]}`, checked against the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rewritten {
    pub numerator: SPolynomial,
    pub denominator: Vec<u32>,
    /// Whether mapping back to T-variables reproduced the input exactly.
    pub exact: bool,
}

impl Rewritten {
    pub fn to_class(&self, vars: &SVariableSet) -> Result<ClassFraction, BasisError> {
        // S_w = -(1 - T^w)
        let mut num = self.numerator.to_laurent(vars)?;
        let mut den = Vec::new();
        for (e, w) in self.denominator.iter().zip(vars.weights()) {
            for _ in 0..*e {
                num = num.neg();
                den.push(w.clone());
            }
        }
        Ok(ClassFraction::new(num, den)?)
    }

    pub fn render_denominator(&self, vars: &SVariableSet) -> String {
        let m = SMonomial {
            s: self.denominator.clone(),
            d: 0,
        };
        let s = m.render(vars);
        if s.is_empty() {
            "1".into()
        } else {
            s
        }
    }

    /// `(P)/(D)`, or just `P` for an empty denominator.
    pub fn render(&self, vars: &SVariableSet) -> String {
        let num = self.numerator.render(vars);
        if self.denominator.iter().all(|&e| e == 0) {
            num
        } else {
            format!("({num})/({})", self.render_denominator(vars))
        }
    }
}

/// Writes characters as nonnegative combinations of an alphabet, picking
/// the lexicographically largest coefficient vector.
pub struct Representer {
    letters: Vec<Character>,
    grading: Vec<i64>,
    memo: HashMap<(usize, Character), Option<Vec<u32>>>,
}

impl Representer {
    pub fn new(letters: &[Character]) -> Result<Self, BasisError> {
        let grading = positive_grading(letters).ok_or(BasisError::NoGrading)?;
        Ok(Representer {
            letters: letters.to_vec(),
            grading,
            memo: HashMap::new(),
        })
    }

    pub fn represent(&mut self, m: &Character) -> Result<Vec<u32>, BasisError> {
        self.search(0, m).ok_or_else(|| BasisError::Unrepresentable(m.render()))
    }

    fn search(&mut self, i: usize, m: &Character) -> Option<Vec<u32>> {
        let n = self.letters.len();
        if m.is_zero() {
            return Some(vec![0; n - i]);
        }
        if i == n {
            return None;
        }
        let key = (i, m.clone());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let g = m.dot(&self.grading);
        let mut found = None;
        if g > 0 {
            let w = self.letters[i].clone();
            let max = g / w.dot(&self.grading);
            for k in (0..=max).rev() {
                if let Some(mut rest) = self.search(i + 1, &m.sub(&w.scale(k))) {
                    rest.insert(0, k as u32);
                    found = Some(rest);
                    break;
                }
            }
        }
        self.memo.insert(key, found.clone());
        found
    }
}

/// An integer vector pairing positively with every letter, found by a
/// small exhaustive search.
fn positive_grading(letters: &[Character]) -> Option<Vec<i64>> {
    let r = letters.first()?.rank();
    for bound in 1..=8i64 {
        let mut g = vec![-bound; r];
        loop {
            if letters.iter().all(|w| w.dot(&g) > 0) {
                return Some(g);
            }
            let mut j = 0;
            loop {
                if j == r {
                    break;
                }
                if g[j] < bound {
                    g[j] += 1;
                    break;
                }
                g[j] = -bound;
                j += 1;
            }
            if j == r {
                break;
            }
        }
    }
    None
}

/// `Π (1 + S_i)^{c_i}` expanded.
pub(crate) fn expand_exponential(c: &[u32], n: usize) -> SPolynomial {
    let mut acc = SPolynomial::one(n);
    for (i, &k) in c.iter().enumerate() {
        if k > 0 {
            let f = SPolynomial::one(n)
                .add(&SPolynomial::var(n, i))
                .expect("same variables");
            acc = acc.mul(&f.pow(k)).expect("same variables");
        }
    }
    acc
}

/// The terms of `Π (1 + S_i)^{c_i}` as exponent vectors with binomial
/// coefficients.
fn binomial_terms(c: &[u32]) -> Vec<(Vec<u32>, BigInt)> {
    let mut out = vec![(Vec::with_capacity(c.len()), BigInt::one())];
    for &k in c {
        let mut next = Vec::with_capacity(out.len() * (k as usize + 1));
        let mut binom = BigInt::one();
        for j in 0..=k {
            for (s, b) in &out {
                let mut s = s.clone();
                s.push(j);
                next.push((s, b * &binom));
            }
            binom = binom * (k - j) / (j + 1);
        }
        out = next;
    }
    out
}

/// Rewrites `c` over the alphabet `vars`.
///
/// A denominator factor `1 - T^w` becomes `-S_w` when `w` is a letter and
/// `T^w S_{-w}` when `-w` is. Every numerator exponent, after that shift,
/// must be a nonnegative combination of letters.
pub fn rewrite_in_s(c: &ClassFraction, vars: &SVariableSet) -> Result<Rewritten, BasisError> {
    if c.rank() != vars.rank() {
        return Err(BasisError::InvalidArgument(format!(
            "class of rank {} with an alphabet of rank {}",
            c.rank(),
            vars.rank()
        )));
    }
    let n = vars.len();
    let mut denominator = vec![0u32; n];
    let mut sign = Rational::one();
    let mut shift = Character::zero(c.rank());
    for w in c.denominator() {
        if let Some(i) = vars.index_of(w) {
            denominator[i] += 1;
            sign = -sign;
        } else if let Some(i) = vars.index_of(&w.neg()) {
            denominator[i] += 1;
            shift = shift.sub(w);
        } else {
            return Err(BasisError::MissingDenominator(w.render()));
        }
    }
    let mut rep = Representer::new(vars.weights())?;
    let mut acc: HashMap<SMonomial, Rational> = HashMap::new();
    for (m, coeff) in c.numerator().terms() {
        let p = coeff
            .as_delta_poly()
            .ok_or_else(|| BasisError::NotPolynomial(coeff.render(crate::algebra::GenusVar::Delta)))?;
        let cvec = rep.represent(&m.add(&shift))?;
        let signed: Vec<(u32, Rational)> = p
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| (k as u32, &sign * x))
            .collect();
        for (s, b) in binomial_terms(&cvec) {
            for (k, x) in &signed {
                let key = SMonomial { s: s.clone(), d: *k };
                *acc.entry(key).or_insert_with(Rational::zero) += x.clone() * b.clone();
            }
        }
    }
    let numerator = SPolynomial::from_map(n, acc);
    // P(T) must equal ±T^shift · N
    let back = numerator.to_laurent(vars)?;
    let exact = back.len() == c.numerator().len()
        && c.numerator().terms().all(|(m, x)| {
            let y = back.coeff(&m.add(&shift));
            match (x.as_delta_poly(), y.as_delta_poly()) {
                (Some(x), Some(y)) => *y == x.scale(&sign),
                _ => false,
            }
        });
    if !exact {
        return Err(BasisError::InvalidArgument("rewriting did not round-trip".into()));
    }
    let out = Rewritten {
        numerator,
        denominator,
        exact,
    };
    Ok(out)
}
