//! Expansion of a class in the equivariant cohomology variables:
//! `T^w = exp(-Σ w_i t_i)`, truncated by total degree.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{q, Character, ClassFraction, CoeffFrac, GenusVar, Rational};

use super::BasisError;

/// A polynomial in `t_1, …, t_r` with `ℚ(δ)` coefficients, known through
/// total degree `order`.
#[derive(Clone, PartialEq, Eq)]
pub struct TSeries {
    rank: usize,
    order: u32,
    terms: BTreeMap<Vec<u32>, CoeffFrac>,
}

impl TSeries {
    fn zero(rank: usize, order: u32) -> Self {
        TSeries {
            rank,
            order,
            terms: BTreeMap::new(),
        }
    }

    fn constant(rank: usize, order: u32, c: CoeffFrac) -> Self {
        let mut s = Self::zero(rank, order);
        s.add_term(vec![0; rank], c);
        s
    }

    /// `Σ c_i t_i`.
    fn linear(rank: usize, order: u32, c: &[i64]) -> Self {
        let mut s = Self::zero(rank, order);
        for (i, &x) in c.iter().enumerate() {
            let mut e = vec![0; rank];
            e[i] = 1;
            s.add_term(e, CoeffFrac::int(x));
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &CoeffFrac)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> CoeffFrac {
        self.terms.get(exps).cloned().unwrap_or_else(CoeffFrac::zero)
    }

    /// The homogeneous part of degree `k`.
    pub fn component(&self, k: u32) -> TSeries {
        TSeries {
            rank: self.rank,
            order: self.order,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == k)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    fn add_term(&mut self, e: Vec<u32>, c: CoeffFrac) {
        if c.is_zero() || e.iter().sum::<u32>() > self.order {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(CoeffFrac::zero);
        *slot = slot.add(&c);
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    fn add(&self, other: &TSeries) -> TSeries {
        let mut out = self.clone();
        out.order = self.order.min(other.order);
        out.terms.retain(|e, _| e.iter().sum::<u32>() <= out.order);
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    fn scale(&self, c: &CoeffFrac) -> TSeries {
        let mut out = Self::zero(self.rank, self.order);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x.mul(c));
        }
        out
    }

    fn mul(&self, other: &TSeries) -> TSeries {
        let mut out = Self::zero(self.rank, self.order.min(other.order));
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(e, x.mul(y));
            }
        }
        out
    }

    /// `Σ_k coeffs[k] · x^k` with `x = self`, which has no constant term.
    fn compose_into(&self, coeffs: &[Rational]) -> TSeries {
        let mut out = Self::zero(self.rank, self.order);
        let mut power = Self::constant(self.rank, self.order, CoeffFrac::one());
        for c in coeffs {
            out = out.add(&power.scale(&CoeffFrac::rational(c.clone())));
            power = power.mul(self);
        }
        out
    }

    /// Exact division by the linear form `Σ c_i t_i`, lowering the order by
    /// one. `None` if the form does not divide.
    fn div_linear(&self, c: &[i64]) -> Option<TSeries> {
        let j = c.iter().position(|&x| x != 0)?;
        let lead = CoeffFrac::int(c[j]);
        let key = |e: &Vec<u32>| {
            let mut k = vec![e[j]];
            k.extend(e.iter().enumerate().filter(|(i, _)| *i != j).map(|(_, x)| *x));
            k
        };
        let mut rest = self.clone();
        rest.order = u32::MAX;
        let mut quot = Self::zero(self.rank, self.order.saturating_sub(1));
        quot.order = u32::MAX;
        while let Some((e, x)) = rest
            .terms
            .iter()
            .max_by_key(|(e, _)| key(e))
            .map(|(e, x)| (e.clone(), x.clone()))
        {
            if e[j] == 0 {
                return None;
            }
            let mut qe = e.clone();
            qe[j] -= 1;
            let qc = x.div(&lead).ok()?;
            for (i, &ci) in c.iter().enumerate() {
                if ci != 0 {
                    let mut me = qe.clone();
                    me[i] += 1;
                    rest.add_term(me, qc.mul(&CoeffFrac::int(ci)).neg());
                }
            }
            quot.add_term(qe, qc);
        }
        quot.order = self.order.saturating_sub(1);
        Some(quot)
    }

    /// `t1^2*t2 + (-1/2 + d)*t1`, terms by increasing degree.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return format!("0 + O(t^{})", self.order + 1);
        }
        let mut items: Vec<(&Vec<u32>, &CoeffFrac)> = self.terms.iter().collect();
        items.sort_by_key(|(e, _)| (e.iter().sum::<u32>(), std::cmp::Reverse((*e).clone())));
        let mut parts = Vec::new();
        for (e, c) in items {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("t{}", i + 1)
                    } else {
                        format!("t{}^{k}", i + 1)
                    }
                })
                .collect();
            let coeff = c.render(GenusVar::Delta);
            let coeff = if coeff.contains([' ', '/']) {
                format!("({coeff})")
            } else {
                coeff
            };
            if mono.is_empty() {
                parts.push(coeff);
            } else if c.is_one() {
                parts.push(mono.join("*"));
            } else {
                parts.push(format!("{coeff}*{}", mono.join("*")));
            }
        }
        format!("{} + O(t^{})", parts.join(" + "), self.order + 1)
    }
}

impl std::fmt::Debug for TSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

/// `exp(x)` or related coefficient lists up to degree `n`.
fn exp_coeffs(n: u32) -> Vec<Rational> {
    let mut out = vec![Rational::one()];
    let mut fact = Rational::one();
    for k in 1..=n {
        fact *= q(i64::from(k));
        out.push(Rational::one() / &fact);
    }
    out
}

/// Coefficients of `x / (1 - e^{-x})` up to degree `n`.
fn todd_coeffs(n: u32) -> Vec<Rational> {
    // u(x) = (1 - e^{-x})/x = Σ (-1)^k x^k/(k+1)!
    let e = exp_coeffs(n + 1);
    let u: Vec<Rational> = (0..=n as usize)
        .map(|k| {
            if k % 2 == 0 {
                e[k + 1].clone()
            } else {
                -e[k + 1].clone()
            }
        })
        .collect();
    let mut inv = vec![Rational::one()];
    for k in 1..=n as usize {
        let mut s = Rational::zero();
        for j in 1..=k {
            s += &u[j] * &inv[k - j];
        }
        inv.push(-s);
    }
    inv
}

/// Expands `c` through total degree `order` in `t`.
///
/// Each denominator factor `1 - e^{-w·t}` is split as `(w·t) · u(w·t)`; the
/// numerator must be divisible by every linear form `w·t`, otherwise the
/// class has a pole at `t = 0`.
pub fn cohomology_limit(c: &ClassFraction, order: u32) -> Result<TSeries, BasisError> {
    if order < 1 {
        return Err(BasisError::InvalidArgument(
            "truncation order must be at least 1".into(),
        ));
    }
    let rank = c.rank();
    let k = c.denominator().len() as u32;
    let top = order + k;
    let exps = exp_coeffs(top);
    let mut num = TSeries::zero(rank, top);
    for (m, coeff) in c.numerator().terms() {
        let lin = TSeries::linear(rank, top, m.neg().coords());
        num = num.add(&lin.compose_into(&exps).scale(coeff));
    }
    for w in c.denominator() {
        num = num
            .div_linear(w.coords())
            .ok_or_else(|| BasisError::Pole(c.render(GenusVar::Delta)))?;
    }
    let todd = todd_coeffs(order);
    let mut out = num;
    for w in c.denominator() {
        let lin = TSeries::linear(rank, order, w.coords());
        out = out.mul(&lin.compose_into(&todd));
    }
    out.order = order;
    out.terms.retain(|e, _| e.iter().sum::<u32>() <= order);
    Ok(out)
}

/// `exp(-w·t)` itself, for tests and examples.
pub fn character_series(w: &Character, order: u32) -> TSeries {
    TSeries::linear(w.rank(), order, w.neg().coords()).compose_into(&exp_coeffs(order))
}
