//! Class fractions `N / Π (1 - T^w)` with a factored denominator.

use std::collections::BTreeMap;
use std::fmt;

use super::character::Character;
use super::coeff::{CoeffFrac, GenusVar};
use super::laurent::LaurentPoly;
use super::qpoly::Rational;
use super::AlgebraError;

/// A K-normalized local class: a Laurent polynomial numerator over a
/// product of factors `1 - T^w`.
///
/// Canonical form: every denominator character is lex-positive (a
/// lex-negative factor is flipped with `1/(1 - T^w) = -T^{-w}/(1 - T^{-w})`),
/// the factor list is sorted, and every factor that divides the numerator
/// exactly has been cancelled. Two fractions compare equal when they agree
/// after cross-multiplication, so equality does not depend on which
/// representative the cancellation happened to reach.
#[derive(Clone)]
pub struct ClassFraction {
    num: LaurentPoly,
    den: Vec<Character>,
}

impl ClassFraction {
    pub fn zero(rank: usize) -> Self {
        ClassFraction {
            num: LaurentPoly::zero(rank),
            den: Vec::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        ClassFraction::from_laurent(LaurentPoly::one(rank))
    }

    pub fn constant(rank: usize, c: CoeffFrac) -> Self {
        ClassFraction::from_laurent(LaurentPoly::constant(rank, c))
    }

    pub fn from_laurent(num: LaurentPoly) -> Self {
        ClassFraction { num, den: Vec::new() }
    }

    /// The monomial `T^m`.
    pub fn monomial(m: Character) -> Self {
        ClassFraction::from_laurent(LaurentPoly::monomial(m))
    }

    /// `num / Π (1 - T^w)` over the listed characters, canonicalized.
    pub fn new(num: LaurentPoly, den: Vec<Character>) -> Result<Self, AlgebraError> {
        let rank = num.rank();
        for w in &den {
            if w.rank() != rank {
                return Err(AlgebraError::RankMismatch {
                    left: rank,
                    right: w.rank(),
                });
            }
            if w.is_zero() {
                return Err(AlgebraError::ZeroCharacter);
            }
        }
        Ok(ClassFraction::canonical(num, den))
    }

    /// `1 / (1 - T^w)`.
    pub fn geometric(w: &Character) -> Result<Self, AlgebraError> {
        ClassFraction::new(LaurentPoly::one(w.rank()), vec![w.clone()])
    }

    /// `S_w = T^w - 1`.
    pub fn s_var(w: &Character) -> Self {
        ClassFraction::from_laurent(LaurentPoly::one_minus(w).neg())
    }

    /// `1 / S_w = -1 / (1 - T^w)`.
    pub fn inv_s_var(w: &Character) -> Result<Self, AlgebraError> {
        ClassFraction::new(LaurentPoly::one(w.rank()).neg(), vec![w.clone()])
    }

    fn canonical(mut num: LaurentPoly, den: Vec<Character>) -> Self {
        let rank = num.rank();
        if num.is_zero() {
            return ClassFraction::zero(rank);
        }
        let mut oriented = Vec::with_capacity(den.len());
        for w in den {
            if w.is_lex_positive() {
                oriented.push(w);
            } else {
                let pos = w.neg();
                num = num.shift(&pos).neg();
                oriented.push(pos);
            }
        }
        oriented.sort();
        let mut kept = Vec::with_capacity(oriented.len());
        for w in oriented {
            match num.div_one_minus(&w) {
                Some(qt) => num = qt,
                None => kept.push(w),
            }
        }
        // a later cancellation can make an earlier kept factor divide
        loop {
            let mut changed = false;
            let mut i = 0;
            while i < kept.len() {
                if let Some(qt) = num.div_one_minus(&kept[i]) {
                    num = qt;
                    kept.remove(i);
                    changed = true;
                } else {
                    i += 1;
                }
            }
            if !changed {
                break;
            }
        }
        ClassFraction { num, den: kept }
    }

    pub fn rank(&self) -> usize {
        self.num.rank()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    /// Sorted denominator characters, repeated according to multiplicity.
    pub fn denominator(&self) -> &[Character] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value as a T-free coefficient, if it is one.
    pub fn as_constant(&self) -> Option<CoeffFrac> {
        if self.den.is_empty() {
            self.num.as_constant()
        } else {
            None
        }
    }

    fn check_rank(&self, other: &ClassFraction) -> Result<(), AlgebraError> {
        if self.rank() != other.rank() {
            return Err(AlgebraError::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(())
    }

    /// The numerator once the fraction is written over `target`.
    ///
    /// Returns `None` if the fraction cannot be written with that
    /// denominator, i.e. the result would not be a Laurent polynomial.
    pub fn numerator_over(&self, target: &[Character]) -> Option<LaurentPoly> {
        let target = ClassFraction::oriented_target(target, self.rank())?;
        let mut num = self.num.clone();
        let (extra, missing) = multiset_diff(&target.1, &self.den);
        for w in &extra {
            num = num.mul(&LaurentPoly::one_minus(w)).ok()?;
        }
        for w in &missing {
            num = num.div_one_minus(w)?;
        }
        // undo the orientation flips of the target
        num = num.mul(&target.0).ok()?;
        Some(num)
    }

    /// Orients a target denominator; returns the numerator correction that
    /// converts a numerator over the oriented factors back to the original.
    fn oriented_target(target: &[Character], rank: usize) -> Option<(LaurentPoly, Vec<Character>)> {
        let mut corr = LaurentPoly::one(rank);
        let mut out = Vec::new();
        for w in target {
            if w.is_zero() || w.rank() != rank {
                return None;
            }
            if w.is_lex_positive() {
                out.push(w.clone());
            } else {
                // 1/(1 - T^{-v}) = -T^v/(1 - T^v): N/(1-T^v) = (-T^{-v} N)/(1-T^{-v})
                let v = w.neg();
                corr = corr.shift(&v.neg()).neg();
                out.push(v);
            }
        }
        out.sort();
        Some((corr, out))
    }

    pub fn checked_add(&self, other: &ClassFraction) -> Result<ClassFraction, AlgebraError> {
        self.check_rank(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let common = multiset_union(&self.den, &other.den);
        let a = self.num_times_missing(&common);
        let b = other.num_times_missing(&common);
        Ok(ClassFraction::canonical(a.add(&b)?, common))
    }

    fn num_times_missing(&self, common: &[Character]) -> LaurentPoly {
        let (extra, _) = multiset_diff(common, &self.den);
        let mut num = self.num.clone();
        for w in &extra {
            num = num.mul(&LaurentPoly::one_minus(w)).expect("same rank");
        }
        num
    }

    pub fn checked_sub(&self, other: &ClassFraction) -> Result<ClassFraction, AlgebraError> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &ClassFraction) -> Result<ClassFraction, AlgebraError> {
        self.check_rank(other)?;
        let num = self.num.mul(&other.num)?;
        let mut den = self.den.clone();
        den.extend(other.den.iter().cloned());
        Ok(ClassFraction::canonical(num, den))
    }

    pub fn neg(&self) -> ClassFraction {
        ClassFraction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, c: &CoeffFrac) -> ClassFraction {
        if c.is_zero() {
            return ClassFraction::zero(self.rank());
        }
        ClassFraction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn scale_rational(&self, c: &Rational) -> ClassFraction {
        self.scale(&CoeffFrac::rational(c.clone()))
    }

    pub fn pow(&self, k: u32) -> ClassFraction {
        let mut acc = ClassFraction::one(self.rank());
        for _ in 0..k {
            acc = acc.checked_mul(self).expect("same rank");
        }
        acc
    }

    /// Sums a list of classes of the given rank.
    pub fn sum<'a>(
        rank: usize,
        items: impl IntoIterator<Item = &'a ClassFraction>,
    ) -> Result<ClassFraction, AlgebraError> {
        let mut acc = ClassFraction::zero(rank);
        for c in items {
            acc = acc.checked_add(c)?;
        }
        Ok(acc)
    }

    /// Applies a coefficient map and re-canonicalizes.
    pub fn map_coeffs(
        &self,
        f: impl FnMut(&CoeffFrac) -> Result<CoeffFrac, AlgebraError>,
    ) -> Result<ClassFraction, AlgebraError> {
        let num = self.num.map_coeffs(f)?;
        Ok(ClassFraction::canonical(num, self.den.clone()))
    }

    /// Specializes `y` to a rational value.
    pub fn substitute_y(&self, value: &Rational) -> Result<ClassFraction, AlgebraError> {
        self.map_coeffs(|c| c.eval_y(value).map(CoeffFrac::rational))
    }

    /// Specializes `δ` to a rational value.
    pub fn substitute_delta(&self, value: &Rational) -> Result<ClassFraction, AlgebraError> {
        self.map_coeffs(|c| c.eval_delta(value).map(CoeffFrac::rational))
    }

    /// Maps each character through an integer linear map given by the
    /// images of the standard basis vectors.
    pub fn map_characters(&self, images: &[Character]) -> Result<ClassFraction, AlgebraError> {
        let rank = images.first().map(Character::rank).unwrap_or(0);
        if images.len() != self.rank() {
            return Err(AlgebraError::RankMismatch {
                left: self.rank(),
                right: images.len(),
            });
        }
        let apply = |m: &Character| -> Character {
            let mut out = Character::zero(rank);
            for (c, img) in m.coords().iter().zip(images) {
                out = out.add(&img.scale(*c));
            }
            out
        };
        let mut num = LaurentPoly::zero(rank);
        for (m, c) in self.num.terms() {
            num.add_term(apply(m), c.clone());
        }
        let den = self.den.iter().map(apply).collect();
        ClassFraction::new(num, den)
    }

    /// Power-series expansion in the direction of a grading `g`, keeping
    /// monomials of grade at most `max_grade`.
    ///
    /// Each factor is expanded as a geometric series in whichever of
    /// `T^w`, `T^{-w}` has positive grade. Fails if some factor has grade 0.
    pub fn expand_graded(&self, g: &[i64], max_grade: i64) -> Result<BTreeMap<Character, CoeffFrac>, AlgebraError> {
        let mut cur: BTreeMap<Character, CoeffFrac> = BTreeMap::new();
        for (m, c) in self.num.terms() {
            cur.insert(m.clone(), c.clone());
        }
        for w in &self.den {
            let gw = w.dot(g);
            if gw == 0 {
                return Err(AlgebraError::ZeroCharacter);
            }
            let (step, sign_shift) = if gw > 0 {
                (w.clone(), None)
            } else {
                (w.neg(), Some(w.neg()))
            };
            if let Some(v) = sign_shift {
                cur = cur.into_iter().map(|(m, c)| (m.add(&v), c.neg())).collect();
            }
            let gs = step.dot(g);
            let mut next: BTreeMap<Character, CoeffFrac> = BTreeMap::new();
            for (m, c) in &cur {
                let mut k = 0i64;
                let mut e = m.clone();
                while m.dot(g) + k * gs <= max_grade {
                    let slot = next.entry(e.clone()).or_default();
                    *slot = slot.add(c);
                    e = e.add(&step);
                    k += 1;
                }
            }
            cur = next.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        }
        cur.retain(|m, c| m.dot(g) <= max_grade && !c.is_zero());
        Ok(cur)
    }

    /// Renders as `(num)/((1 - T^[1,0])^2*(1 - T^[0,2]))`.
    pub fn render(&self, var: GenusVar) -> String {
        let num = self.num.render(var);
        if self.den.is_empty() {
            return num;
        }
        let mut groups: Vec<(Character, usize)> = Vec::new();
        for w in &self.den {
            match groups.last_mut() {
                Some((v, k)) if v == w => *k += 1,
                _ => groups.push((w.clone(), 1)),
            }
        }
        let parts: Vec<String> = groups
            .iter()
            .map(|(w, k)| {
                if *k == 1 {
                    format!("(1 - T^{})", w.render())
                } else {
                    format!("(1 - T^{})^{k}", w.render())
                }
            })
            .collect();
        let den = if parts.len() == 1 {
            parts[0].clone()
        } else {
            format!("({})", parts.join("*"))
        };
        let simple = self.num.len() == 1 && !num.contains(' ') && !num.starts_with('-') && !num.starts_with('(');
        if simple {
            format!("{num}/{den}")
        } else {
            format!("({num})/{den}")
        }
    }
}

/// `a ∖ b` and `b ∖ a` as multisets of sorted character lists.
fn multiset_diff(a: &[Character], b: &[Character]) -> (Vec<Character>, Vec<Character>) {
    let mut count: BTreeMap<&Character, i64> = BTreeMap::new();
    for w in a {
        *count.entry(w).or_default() += 1;
    }
    for w in b {
        *count.entry(w).or_default() -= 1;
    }
    let mut only_a = Vec::new();
    let mut only_b = Vec::new();
    for (w, k) in count {
        for _ in 0..k.max(0) {
            only_a.push(w.clone());
        }
        for _ in 0..(-k).max(0) {
            only_b.push(w.clone());
        }
    }
    (only_a, only_b)
}

fn multiset_union(a: &[Character], b: &[Character]) -> Vec<Character> {
    let mut count: BTreeMap<&Character, usize> = BTreeMap::new();
    for w in a {
        *count.entry(w).or_default() += 1;
    }
    let mut cb: BTreeMap<&Character, usize> = BTreeMap::new();
    for w in b {
        *cb.entry(w).or_default() += 1;
    }
    for (w, k) in cb {
        let e = count.entry(w).or_default();
        *e = (*e).max(k);
    }
    let mut out = Vec::new();
    for (w, k) in count {
        for _ in 0..k {
            out.push(w.clone());
        }
    }
    out
}

impl PartialEq for ClassFraction {
    fn eq(&self, other: &Self) -> bool {
        if self.rank() != other.rank() {
            return false;
        }
        if self.den == other.den {
            return self.num == other.num;
        }
        let (extra_a, extra_b) = multiset_diff(&self.den, &other.den);
        let mut lhs = self.num.clone();
        for w in &extra_b {
            lhs = lhs.mul(&LaurentPoly::one_minus(w)).expect("same rank");
        }
        let mut rhs = other.num.clone();
        for w in &extra_a {
            rhs = rhs.mul(&LaurentPoly::one_minus(w)).expect("same rank");
        }
        lhs == rhs
    }
}

impl Eq for ClassFraction {}

impl fmt::Debug for ClassFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(GenusVar::Delta))
    }
}

impl fmt::Display for ClassFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(GenusVar::Delta))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl std::ops::$tr<&ClassFraction> for &ClassFraction {
            type Output = ClassFraction;
            /// Panics on a rank mismatch; use the `checked_` form otherwise.
            fn $m(self, rhs: &ClassFraction) -> ClassFraction {
                self.$checked(rhs).expect("rank mismatch")
            }
        }
        impl std::ops::$tr for ClassFraction {
            type Output = ClassFraction;
            fn $m(self, rhs: ClassFraction) -> ClassFraction {
                self.$checked(&rhs).expect("rank mismatch")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &ClassFraction {
    type Output = ClassFraction;
    fn neg(self) -> ClassFraction {
        ClassFraction::neg(self)
    }
}

impl std::ops::Neg for ClassFraction {
    type Output = ClassFraction;
    fn neg(self) -> ClassFraction {
        ClassFraction::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::super::qpoly::q;
    use super::*;

    fn ch(v: &[i64]) -> Character {
        Character::from(v)
    }

    /// `(1 + y T^w) / (1 - T^w)`
    fn line(w: &[i64]) -> ClassFraction {
        let w = ch(w);
        let mut num = LaurentPoly::one(w.rank());
        num.add_term(w.clone(), CoeffFrac::y());
        ClassFraction::new(num, vec![w]).unwrap()
    }

    #[test]
    fn partial_fraction_identity() {
        let a = ClassFraction::geometric(&ch(&[1])).unwrap();
        let b = ClassFraction::geometric(&ch(&[-1])).unwrap();
        assert_eq!(&a + &b, ClassFraction::one(1));
        assert!((&a + &b).as_constant().unwrap().is_one());
    }

    #[test]
    fn y_specializations_of_a_line() {
        let l = line(&[1]);
        assert_eq!(l.substitute_y(&q(-1)).unwrap(), ClassFraction::one(1));
        assert_eq!(
            l.substitute_y(&q(0)).unwrap(),
            ClassFraction::geometric(&ch(&[1])).unwrap()
        );
    }

    #[test]
    fn p1_sum_is_one_minus_y() {
        let s = &line(&[1]) + &line(&[-1]);
        let c = s.as_constant().unwrap();
        assert_eq!(c.to_y_poly().unwrap(), super::super::qpoly::QPoly::from_ints(&[1, -1]));
    }

    #[test]
    fn canonical_cancels_and_orients() {
        // (1 - T^2) / ((1 - T)(1 - T^-1)) = (1 + T) / (1 - T^-1) = -T(1+T)/(1 - T)
        let num = LaurentPoly::one_minus(&ch(&[2]));
        let c = ClassFraction::new(num, vec![ch(&[1]), ch(&[-1])]).unwrap();
        assert!(c.denominator().iter().all(Character::is_lex_positive));
        let expect = ClassFraction::new(
            LaurentPoly::from_terms(1, [(ch(&[1]), CoeffFrac::int(-1)), (ch(&[2]), CoeffFrac::int(-1))]).unwrap(),
            vec![ch(&[1])],
        )
        .unwrap();
        assert_eq!(c, expect);
        assert_eq!(c.denominator(), &[ch(&[1])]);
    }

    #[test]
    fn numerator_over_target() {
        let l = line(&[1, 0]);
        let n = l.numerator_over(&[ch(&[1, 0]), ch(&[0, 1])]).unwrap();
        let back = ClassFraction::new(n, vec![ch(&[1, 0]), ch(&[0, 1])]).unwrap();
        assert_eq!(back, l);
        let flipped = l.numerator_over(&[ch(&[-1, 0])]).unwrap();
        assert_eq!(ClassFraction::new(flipped, vec![ch(&[-1, 0])]).unwrap(), l);
        assert!(l.numerator_over(&[]).is_none());
    }

    #[test]
    fn graded_expansion_of_geometric_series() {
        let g = ClassFraction::geometric(&ch(&[-1])).unwrap();
        // 1/(1 - T^-1) = -T/(1 - T) = -T - T^2 - ...
        let e = g.expand_graded(&[1], 3).unwrap();
        assert_eq!(e.len(), 3);
        assert_eq!(e[&ch(&[2])], CoeffFrac::int(-1));
    }

    #[test]
    fn render_grammar() {
        let l = line(&[1, 0]).checked_mul(&line(&[1, 0])).unwrap();
        assert_eq!(l.render(GenusVar::Y), "(1 + 2*y*T^[1,0] + y^2*T^[2,0])/(1 - T^[1,0])^2");
        let g = ClassFraction::geometric(&ch(&[0, 2])).unwrap();
        assert_eq!(g.render(GenusVar::Delta), "1/(1 - T^[0,2])");
    }
}
