//! Residues at `h = 0` of Laurent expansions in `U = e^{-h} - 1`.

use num_traits::{One, Zero};

use super::character::Character;
use super::class::ClassFraction;
use super::qpoly::{q, Rational};
use super::series::{Coefficient, SeriesTrunc, SeriesVar};
use super::AlgebraError;

/// `U(h) = e^{-h} - 1 = -h + h^2/2 - h^3/6 + ...`, exact below degree `order`.
pub fn u_of_h(order: i64) -> SeriesTrunc<Rational> {
    let mut coeffs = vec![Rational::zero()];
    let mut fact = Rational::one();
    for k in 1..order.max(1) {
        fact *= q(k);
        let sign = if k % 2 == 0 { q(1) } else { q(-1) };
        coeffs.push(sign / &fact);
    }
    SeriesTrunc::new(SeriesVar::H, 0, coeffs, Some(order), Rational::zero())
}

/// `Res_{h=0} f(U(h))` with the substitution carried to order `n + 1`,
/// where `U^{-n}` is the deepest pole of `f`.
pub fn residue<C: Coefficient>(f: &SeriesTrunc<C>) -> Result<C, AlgebraError> {
    let n = (-f.low()).max(0);
    residue_with_order(f, n + 1)
}

/// `Res_{h=0} f(U(h))` using `U(h)` known below degree `order`.
///
/// Only the polar part of `f` contributes; each `U^{-m}` is expanded as a
/// Laurent series in `h` and its `h^{-1}` coefficient read off. When
/// `order` is too small for that coefficient to be determined the call
/// fails with [`AlgebraError::InsufficientTruncation`].
pub fn residue_with_order<C: Coefficient>(f: &SeriesTrunc<C>, order: i64) -> Result<C, AlgebraError> {
    if f.var() != SeriesVar::U {
        return Err(AlgebraError::VariableMismatch(format!(
            "expected a series in U, got {}",
            f.var().symbol()
        )));
    }
    let zero = f.coeff(f.low().min(-1))?.zero_like();
    let mut acc = zero.clone();
    if f.low() >= 0 {
        return Ok(acc);
    }
    // the polar part must be known exactly
    f.coeff(-1)?;
    let u_inv = u_of_h(order).inverse()?;
    let mut power = SeriesTrunc::<Rational>::one(SeriesVar::H);
    for m in 1..=(-f.low()) {
        power = power.mul(&u_inv)?;
        let c = f.coeff(-m)?;
        if c.is_zero_coeff() {
            continue;
        }
        let r = power.coeff(-1)?;
        acc = acc.add_ref(&c.scale_q(&r));
    }
    Ok(acc)
}

/// The polar part in `U` of `(1+U)^{k+1} / (U^n (S - U))`, with `S`
/// realized as `T^s - 1` for an extra torus character `s`.
///
/// Uses `1/(S - U) = Σ_i U^i / S^{i+1}`; only the terms with a pole at
/// `U = 0` are kept, so the series is valid below degree 0.
pub fn shifted_pole_series(n: u32, k: u32, s: &Character) -> Result<SeriesTrunc<ClassFraction>, AlgebraError> {
    let rank = s.rank();
    let inv_s = ClassFraction::inv_s_var(s)?;
    let n = n as i64;
    let binom = binomials(k + 1);
    let mut coeffs = Vec::new();
    for deg in -n..0 {
        // U^deg collects (1+U)^{k+1} term U^a times U^i / S^{i+1} with a + i - n = deg
        let mut c = ClassFraction::zero(rank);
        for (a, b) in binom.iter().enumerate() {
            let i = deg + n - a as i64;
            if i < 0 {
                continue;
            }
            c = &c + &inv_s.pow(i as u32 + 1).scale_rational(b);
        }
        coeffs.push(c);
    }
    Ok(SeriesTrunc::new(
        SeriesVar::U,
        -n,
        coeffs,
        Some(0),
        ClassFraction::zero(rank),
    ))
}

fn binomials(m: u32) -> Vec<Rational> {
    let mut row = vec![q(1)];
    for _ in 0..m {
        let mut next = vec![q(1)];
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(q(1));
        row = next;
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u_poly(low: i64, coeffs: &[i64]) -> SeriesTrunc<Rational> {
        SeriesTrunc::polynomial(
            SeriesVar::U,
            low,
            coeffs.iter().map(|&c| q(c)).collect(),
            Rational::zero(),
        )
    }

    #[test]
    fn pure_poles() {
        for n in 1..=6 {
            let mut coeffs = vec![0; n as usize];
            coeffs[0] = 1;
            let r = residue(&u_poly(-n, &coeffs)).unwrap();
            assert_eq!(r, if n % 2 == 0 { q(1) } else { q(-1) });
        }
    }

    #[test]
    fn regular_series_has_no_residue() {
        assert_eq!(residue(&u_poly(0, &[1, 2, 1])).unwrap(), q(0));
    }

    #[test]
    fn too_short_substitution_is_reported() {
        let f = u_poly(-3, &[1]);
        let err = residue_with_order(&f, 2).unwrap_err();
        assert!(matches!(err, AlgebraError::InsufficientTruncation { .. }));
        assert!(residue_with_order(&f, 4).is_ok());
    }
}
