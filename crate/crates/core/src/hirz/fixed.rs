//! Smooth fixed points and the localization sum for χ_y.

use crate::algebra::{q, Character, ClassFraction, CoeffFrac, LaurentPoly, QPoly};

use super::HirzError;

/// An isolated fixed point with the weights of its tangent space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointData {
    pub label: String,
    pub tangent_weights: Vec<Character>,
}

impl FixedPointData {
    pub fn new(label: impl Into<String>, tangent_weights: Vec<Character>) -> Self {
        FixedPointData {
            label: label.into(),
            tangent_weights,
        }
    }
}

/// `(1 + y T^w) / (1 - T^w)`.
pub(crate) fn line_class(w: &Character) -> Result<ClassFraction, HirzError> {
    if w.is_zero() {
        return Err(HirzError::ZeroWeight);
    }
    let num = LaurentPoly::one(w.rank()).add(&LaurentPoly::term(w.clone(), CoeffFrac::y()))?;
    Ok(ClassFraction::new(num, vec![w.clone()])?)
}

/// `(1 + y) T^w / (1 - T^w) = -δ T^w / (1 - T^w)`.
pub(crate) fn punctured_line_class(w: &Character) -> Result<ClassFraction, HirzError> {
    if w.is_zero() {
        return Err(HirzError::ZeroWeight);
    }
    let num = LaurentPoly::term(w.clone(), CoeffFrac::delta().neg());
    Ok(ClassFraction::new(num, vec![w.clone()])?)
}

/// `Π (1 + y T^{w_i}) / (1 - T^{w_i})` over the tangent weights. A point
/// with no weights needs a rank, so the empty product is taken in `rank`.
pub fn smooth_local_class(p: &FixedPointData, rank: usize) -> Result<ClassFraction, HirzError> {
    let mut acc = ClassFraction::one(rank);
    for w in &p.tangent_weights {
        acc = acc.checked_mul(&line_class(w)?)?;
    }
    Ok(acc)
}

/// Sums local contributions and returns the result as a polynomial in `y`.
///
/// Fails if the sum still depends on `T` or has a non-polynomial
/// coefficient; either signals an inconsistent fixed-point dataset.
pub fn chi_from_local(contribs: &[ClassFraction]) -> Result<QPoly, HirzError> {
    let Some(first) = contribs.first() else {
        return Ok(QPoly::zero());
    };
    let total = ClassFraction::sum(first.rank(), contribs)?;
    let c = total
        .as_constant()
        .ok_or_else(|| HirzError::NotTorusFree(total.render(crate::algebra::GenusVar::Y)))?;
    c.to_y_poly()
        .ok_or_else(|| HirzError::NotPolynomial(c.render(crate::algebra::GenusVar::Y)))
}

/// The numerator `N` with `N / Π(1 - T^{w_i}) = χ − Σ known`.
///
/// `chi_target` is a polynomial in `y`; the torus rank is read from the
/// known contributions or the denominator weights.
pub fn solve_singular_contribution(
    chi_target: &QPoly,
    known: &[ClassFraction],
    denominator: &[Character],
) -> Result<LaurentPoly, HirzError> {
    let rank = known
        .first()
        .map(ClassFraction::rank)
        .or_else(|| denominator.first().map(Character::rank))
        .ok_or_else(|| HirzError::InvalidArgument("cannot infer the torus rank".into()))?;
    if denominator.iter().any(Character::is_zero) {
        return Err(HirzError::ZeroWeight);
    }
    let target = ClassFraction::constant(rank, CoeffFrac::from_y_poly(chi_target));
    let rest = target.checked_sub(&ClassFraction::sum(rank, known)?)?;
    rest.numerator_over(denominator)
        .ok_or_else(|| HirzError::InexactDivision(rest.render(crate::algebra::GenusVar::Y)))
}

/// `Σ a_i (-y)^i` for a variety paved by `a_i` cells of dimension `i`.
pub fn cell_polynomial(cells: &[u64]) -> QPoly {
    let minus_y = QPoly::from_ints(&[0, -1]);
    weighted_counts(cells, &minus_y)
}

/// `Σ b_i (-(1 + y))^i` for a toric variety with `b_i` orbits of
/// dimension `i`.
pub fn orbit_polynomial(orbits: &[u64]) -> QPoly {
    let minus_one_plus_y = QPoly::from_ints(&[-1, -1]);
    weighted_counts(orbits, &minus_one_plus_y)
}

fn weighted_counts(counts: &[u64], x: &QPoly) -> QPoly {
    let mut acc = QPoly::zero();
    for (i, &n) in counts.iter().enumerate() {
        let n = i64::try_from(n).expect("count fits in i64");
        acc = acc.add(&x.pow(i as u32).scale(&q(n)));
    }
    acc
}
