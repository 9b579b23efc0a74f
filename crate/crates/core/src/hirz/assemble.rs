//! Pushforward along a resolution: after K-normalization the class of
//! the image is the sum of the classes of the source charts.

use crate::algebra::{q, Character, ClassFraction, LaurentPoly};

use super::fixed::{line_class, punctured_line_class};
use super::HirzError;

/// A one-dimensional building block of a chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    /// `ℂ` with weight `w`: `(1 + yT^w)/(1 - T^w)`.
    Full(Character),
    /// `ℂ*` with weight `w`: `(1 + y)T^w/(1 - T^w)`.
    Punctured(Character),
    /// Any explicit class.
    Custom(ClassFraction),
}

impl Factor {
    pub fn class(&self) -> Result<ClassFraction, HirzError> {
        match self {
            Factor::Full(w) => line_class(w),
            Factor::Punctured(w) => punctured_line_class(w),
            Factor::Custom(c) => Ok(c.clone()),
        }
    }

    fn rank(&self) -> usize {
        match self {
            Factor::Full(w) | Factor::Punctured(w) => w.rank(),
            Factor::Custom(c) => c.rank(),
        }
    }
}

/// `sign · multiplicity · Π factors`; an empty product is a fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartTerm {
    pub sign: i8,
    pub multiplicity: u32,
    pub factors: Vec<Factor>,
}

impl ChartTerm {
    pub fn new(factors: Vec<Factor>) -> Self {
        ChartTerm {
            sign: 1,
            multiplicity: 1,
            factors,
        }
    }

    pub fn times(mut self, sign: i8, multiplicity: u32) -> Self {
        self.sign = sign;
        self.multiplicity = multiplicity;
        self
    }
}

/// Sums the chart terms in torus rank `rank`.
pub fn assemble(rank: usize, terms: &[ChartTerm]) -> Result<ClassFraction, HirzError> {
    let mut acc = ClassFraction::zero(rank);
    for t in terms {
        if t.sign != 1 && t.sign != -1 {
            return Err(HirzError::InvalidArgument(format!("sign {} is not ±1", t.sign)));
        }
        let mut prod = ClassFraction::one(rank);
        for f in &t.factors {
            if f.rank() != rank {
                return Err(crate::algebra::AlgebraError::RankMismatch {
                    left: rank,
                    right: f.rank(),
                }
                .into());
            }
            prod = prod.checked_mul(&f.class()?)?;
        }
        let c = i64::from(t.sign) * i64::from(t.multiplicity);
        acc = acc.checked_add(&prod.scale_rational(&q(c)))?;
    }
    Ok(acc)
}

/// The `y = 0` class of the cusp `x² = y^{2n+1}` through its
/// normalization, next to the structure sheaf class.
#[derive(Clone, Debug)]
pub struct CuspWitness {
    pub actual: ClassFraction,
    pub naive: ClassFraction,
    pub differ: bool,
}

/// `1/(1 - T)` against `(1 - T^{2(2n+1)}) / ((1 - T^{2n+1})(1 - T^2))`.
pub fn cusp_comparison(n: u32) -> Result<CuspWitness, HirzError> {
    if n == 0 {
        return Err(HirzError::InvalidArgument("n must be positive".into()));
    }
    let t = Character::from([1]);
    let actual = assemble(1, &[ChartTerm::new(vec![Factor::Full(t.clone())])])?.substitute_y(&q(0))?;
    let a = i64::from(2 * n + 1);
    let naive = ClassFraction::new(LaurentPoly::one_minus(&t.scale(2 * a)), vec![t.scale(a), t.scale(2)])?;
    let differ = actual != naive;
    Ok(CuspWitness { actual, naive, differ })
}
