//! Affine cones over projective hypersurfaces with the diagonal `ℂ*`
//! action, through residues at `h = 0` with `U = e^{-h} - 1`.

use std::fmt;

use crate::algebra::{
    q, residue, Character, ClassFraction, CoeffFrac, GenusVar, LaurentPoly, QPoly, SeriesTrunc, SeriesVar,
};

use super::fixed::line_class;
use super::HirzError;

/// A polynomial `f(U)` over `ℚ(δ)` known modulo `U^n`, where
/// `td_y(Y ↪ ℙ^{n-1}) = h^n f(U) / U^n`.
#[derive(Clone, PartialEq, Eq)]
pub struct UPoly {
    coeffs: Vec<CoeffFrac>,
    modulus: usize,
}

impl UPoly {
    /// Coefficients of `U^0, U^1, …`; fails unless the degree is below
    /// `modulus`.
    pub fn new(mut coeffs: Vec<CoeffFrac>, modulus: usize) -> Result<Self, HirzError> {
        while coeffs.last().is_some_and(CoeffFrac::is_zero) {
            coeffs.pop();
        }
        if coeffs.len() > modulus {
            return Err(HirzError::DegreeTooHigh {
                degree: coeffs.len() - 1,
                n: modulus,
            });
        }
        Ok(UPoly { coeffs, modulus })
    }

    pub fn coeffs(&self) -> &[CoeffFrac] {
        &self.coeffs
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Specializes `y`, keeping the modulus.
    pub fn substitute_y(&self, value: &crate::algebra::Rational) -> Result<UPoly, HirzError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.eval_y(value).map(CoeffFrac::rational))
            .collect::<Result<Vec<_>, _>>()?;
        UPoly::new(coeffs, self.modulus)
    }

    /// `f(S)` with `S = T^w - 1`.
    pub fn at_s(&self, w: &Character) -> ClassFraction {
        let s = ClassFraction::s_var(w);
        let mut acc = ClassFraction::zero(w.rank());
        let mut power = ClassFraction::one(w.rank());
        for c in &self.coeffs {
            acc = &acc + &power.scale(c);
            power = &power * &s;
        }
        acc
    }

    /// Renders as `-3*d*U - 3*d*U^2 mod U^3`.
    pub fn render(&self, var: GenusVar) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let u = match i {
                0 => String::new(),
                1 => "U".to_string(),
                _ => format!("U^{i}"),
            };
            let (negative, body) = if c.is_compound(var) {
                (false, format!("({})", c.render(var)))
            } else {
                let r = c.render(var);
                match r.strip_prefix('-') {
                    Some(rest) => (true, rest.to_string()),
                    None => (false, r),
                }
            };
            let term = match (body.as_str(), u.is_empty()) {
                (_, true) => body,
                ("1", false) => u,
                (_, false) => format!("{body}*{u}"),
            };
            match (out.is_empty(), negative) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        format!("{out} mod U^{}", self.modulus)
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(GenusVar::Delta))
    }
}

fn series(coeffs: Vec<CoeffFrac>, order: usize) -> SeriesTrunc<CoeffFrac> {
    SeriesTrunc::new(SeriesVar::U, 0, coeffs, Some(order as i64), CoeffFrac::zero())
}

fn binomial_row(d: u32) -> Vec<CoeffFrac> {
    let mut row = vec![CoeffFrac::one()];
    let mut c = q(1);
    for j in 1..=d {
        c = c * q(i64::from(d - j + 1)) / q(i64::from(j));
        row.push(CoeffFrac::rational(c.clone()));
    }
    row
}

fn into_upoly(s: &SeriesTrunc<CoeffFrac>, n: usize) -> Result<UPoly, HirzError> {
    let coeffs = (0..n as i64).map(|k| s.coeff(k)).collect::<Result<Vec<_>, _>>()?;
    UPoly::new(coeffs, n)
}

/// `(1 + y(1+U))^n / (1 + y)`, the common factor of `td_y(ℙ^{n-1})`.
fn projective_factor(n: usize) -> Result<SeriesTrunc<CoeffFrac>, HirzError> {
    let y = CoeffFrac::y();
    let one_plus_y = CoeffFrac::delta().neg();
    let a = series(vec![one_plus_y.clone(), y], n);
    let inv = series(vec![one_plus_y], n).inverse()?;
    Ok(a.pow(n as u32)?.mul(&inv)?)
}

fn sign(n: usize) -> CoeffFrac {
    if n.is_multiple_of(2) {
        CoeffFrac::one()
    } else {
        CoeffFrac::int(-1)
    }
}

/// `f` for a smooth hypersurface of degree `d` in `ℙ^{n-1}`:
/// `(-1)^n (1+y(1+U))^n (1-(1+U)^d) / ((1+y)(1+y(1+U)^d)) mod U^n`.
pub fn hypersurface_f(n: usize, d: u32) -> Result<UPoly, HirzError> {
    if n == 0 {
        return Err(HirzError::InvalidArgument("n must be positive".into()));
    }
    let row = binomial_row(d);
    let mut one_minus: Vec<CoeffFrac> = row.iter().map(CoeffFrac::neg).collect();
    one_minus[0] = one_minus[0].add(&CoeffFrac::one());
    let y = CoeffFrac::y();
    let mut den: Vec<CoeffFrac> = row.iter().map(|c| c.mul(&y)).collect();
    den[0] = den[0].add(&CoeffFrac::one());
    let num = projective_factor(n)?.mul(&series(one_minus, n))?;
    let f = num.mul(&series(den, n).inverse()?)?.scale(&sign(n));
    let f = into_upoly(&f, n)?;
    for c in f.coeffs() {
        if !c.is_polynomial() {
            return Err(HirzError::NotPolynomial(c.render(GenusVar::Delta)));
        }
    }
    Ok(f)
}

/// `f` for `ℙ^{n-1}` itself: `(-1)^n (1+y(1+U))^n / (1+y) mod U^n`.
pub fn full_space_f(n: usize) -> Result<UPoly, HirzError> {
    if n == 0 {
        return Err(HirzError::InvalidArgument("n must be positive".into()));
    }
    into_upoly(&projective_factor(n)?.scale(&sign(n)), n)
}

fn check_degree(f: &UPoly, n: usize) -> Result<(), HirzError> {
    match f.degree() {
        Some(k) if k >= n => Err(HirzError::DegreeTooHigh { degree: k, n }),
        _ => Ok(()),
    }
}

/// `χ_y(Y) = Res_{h=0} f(U)/U^n`, as a polynomial in `y`.
pub fn chi_of_projective_class(f: &UPoly, n: usize) -> Result<QPoly, HirzError> {
    check_degree(f, n)?;
    if f.is_zero() {
        return Ok(QPoly::zero());
    }
    let s = SeriesTrunc::polynomial(SeriesVar::U, -(n as i64), f.coeffs().to_vec(), CoeffFrac::zero());
    let r = residue(&s)?;
    r.to_y_poly()
        .ok_or_else(|| HirzError::NotPolynomial(r.render(GenusVar::Y)))
}

/// Which piece of `ℂ^n` the cone class describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConeRegion {
    /// The cone with its vertex removed.
    Punctured,
    /// The closed cone.
    Closed,
    /// `ℂ^n` minus the closed cone.
    Complement,
}

/// K-normalized class of the cone over `Y ⊂ ℙ^{n-1}` for the diagonal
/// action of weight `t`: `δ(χ_y(Y) − f(S)/S^n)` without the vertex, plus 1
/// with it, and `((δ+S+δS)/S)^n` minus the closed cone for the complement.
pub fn cone_class(f: &UPoly, n: usize, chi: &QPoly, region: ConeRegion) -> Result<ClassFraction, HirzError> {
    check_degree(f, n)?;
    let t = Character::from([1]);
    let inv_s = ClassFraction::inv_s_var(&t)?;
    let chi = ClassFraction::constant(1, CoeffFrac::from_y_poly(chi));
    let polar = f.at_s(&t).checked_mul(&inv_s.pow(n as u32))?;
    let punctured = chi.checked_sub(&polar)?.scale(&CoeffFrac::delta());
    let class = match region {
        ConeRegion::Punctured => punctured,
        ConeRegion::Closed => punctured.checked_add(&ClassFraction::one(1))?,
        ConeRegion::Complement => {
            let space = line_class(&t)?.pow(n as u32);
            space.checked_sub(&punctured)?.checked_sub(&ClassFraction::one(1))?
        }
    };
    for (_, c) in class.numerator().terms() {
        if !c.is_polynomial() {
            return Err(HirzError::NotPolynomial(c.render(GenusVar::Delta)));
        }
    }
    Ok(class)
}

/// Classes of the quadric cone `Q_n ⊂ ℂ^n` and of its complement from the
/// two-step recursion
/// `Q_n = δS(2+S)(δ+S+δS)^{n-2}/S^n + (1+δ) Q_{n-2}` and
/// `C_n = δ²(1+S)²(δ+S+δS)^{n-2}/S^n + (1+δ) C_{n-2}`,
/// starting from the point `Q_1 = 1` and the pair of lines `Q_2`.
pub fn quadric_recursion(n: usize) -> Result<(ClassFraction, ClassFraction), HirzError> {
    if n == 0 {
        return Err(HirzError::InvalidArgument("n must be positive".into()));
    }
    let t = Character::from([1]);
    let s = ClassFraction::s_var(&t);
    let inv_s = ClassFraction::inv_s_var(&t)?;
    let delta = CoeffFrac::delta();
    let one = ClassFraction::one(1);
    let one_plus_s = &one + &s;
    let line = line_class(&t)?;
    // δ(1+S)/S, the punctured line
    let punctured = one_plus_s.checked_mul(&inv_s)?.scale(&delta);
    let (mut q_prev, mut c_prev, start) = if n % 2 == 1 {
        (one.clone(), punctured.clone(), 1)
    } else {
        let pair = line.scale(&CoeffFrac::int(2)).checked_sub(&one)?;
        (pair, punctured.pow(2), 2)
    };
    let one_plus_delta = CoeffFrac::one().add(&delta);
    let mut m = start;
    while m < n {
        m += 2;
        let base = line.pow(m as u32 - 2).checked_mul(&inv_s.pow(2))?;
        let two_plus_s = &ClassFraction::constant(1, CoeffFrac::int(2)) + &s;
        let q_step = base.checked_mul(&s)?.checked_mul(&two_plus_s)?.scale(&delta);
        let c_step = base.checked_mul(&one_plus_s.pow(2))?.scale(&delta.pow(2));
        q_prev = q_step.checked_add(&q_prev.scale(&one_plus_delta))?;
        c_prev = c_step.checked_add(&c_prev.scale(&one_plus_delta))?;
    }
    Ok((q_prev, c_prev))
}

/// The `y = 0` class of a closed cone next to `td(ℂ^n) ch(O_X) / eu`.
#[derive(Clone, Debug)]
pub struct BfmWitness {
    pub td0: ClassFraction,
    pub structure_sheaf: ClassFraction,
    pub equal: bool,
}

/// Compares `td_0` of the cone over a smooth degree `d` hypersurface in
/// `ℙ^{n-1}` with `(1 - T^d)/(1 - T)^n`.
pub fn bfm_cone_check(n: usize, d: u32) -> Result<BfmWitness, HirzError> {
    let f = hypersurface_f(n, d)?;
    let chi = chi_of_projective_class(&f, n)?;
    let td0 = cone_class(&f, n, &chi, ConeRegion::Closed)?.substitute_y(&q(0))?;
    let t = Character::from([1]);
    let num = LaurentPoly::one_minus(&t.scale(i64::from(d)));
    let structure_sheaf = ClassFraction::new(num, vec![t; n])?;
    let equal = td0 == structure_sheaf;
    Ok(BfmWitness {
        td0,
        structure_sheaf,
        equal,
    })
}
