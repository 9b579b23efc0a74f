//! Local classes of a simple normal crossing divisor `x_1 ⋯ x_k = 0` in
//! `ℂ^n` and its strata.

use crate::algebra::{Character, ClassFraction, CoeffFrac, LaurentPoly};

use super::fixed::{line_class, punctured_line_class};
use super::HirzError;

/// Which constructible piece of `(ℂ^n, D)` to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SncVariant {
    /// The whole space: `Π (δ + S_i + δS_i)/S_i`.
    Space,
    /// The complement `ℂ^n ∖ D`: `δ^k Π_{i≤k} (1+S_i)/S_i · Π_{j>k} (δ+S_j+δS_j)/S_j`.
    Complement,
    /// The logarithmic part: `δ^k Π_{i≤k} 1/S_i · Π_{j>k} (δ+S_j+δS_j)/S_j`.
    Log,
    /// The deepest stratum `D_1 ∩ ⋯ ∩ D_k`: `Π_{j>k} (δ+S_j+δS_j)/S_j`.
    Divisor,
}

/// `δ / S_w = -δ / (1 - T^w)`.
fn log_factor(w: &Character) -> Result<ClassFraction, HirzError> {
    if w.is_zero() {
        return Err(HirzError::ZeroWeight);
    }
    let num = LaurentPoly::constant(w.rank(), CoeffFrac::delta().neg());
    Ok(ClassFraction::new(num, vec![w.clone()])?)
}

fn check(n: usize, k: usize, weights: &[Character]) -> Result<usize, HirzError> {
    if k > n {
        return Err(HirzError::KOutOfRange { n, k });
    }
    if weights.len() != n {
        return Err(HirzError::WeightCount {
            expected: n,
            got: weights.len(),
        });
    }
    if weights.iter().any(Character::is_zero) {
        return Err(HirzError::ZeroWeight);
    }
    let rank = weights
        .first()
        .map(Character::rank)
        .ok_or_else(|| HirzError::InvalidArgument("n must be positive".into()))?;
    Ok(rank)
}

/// K-normalized class of a piece of the SNC pair with the first `k`
/// coordinates cutting out the divisor.
pub fn snc_local_class(
    n: usize,
    k: usize,
    weights: &[Character],
    variant: SncVariant,
) -> Result<ClassFraction, HirzError> {
    let rank = check(n, k, weights)?;
    let mut acc = ClassFraction::one(rank);
    for (i, w) in weights.iter().enumerate() {
        let factor = if i >= k || variant == SncVariant::Space {
            line_class(w)?
        } else {
            match variant {
                SncVariant::Complement => punctured_line_class(w)?,
                SncVariant::Log => log_factor(w)?,
                SncVariant::Divisor => continue,
                SncVariant::Space => unreachable!(),
            }
        };
        acc = acc.checked_mul(&factor)?;
    }
    Ok(acc)
}

/// Both sides of the decomposition of the complement class into
/// log-stratum classes, `Σ_{I ⊆ {1..k}} δ^{|I|} · [log class of D_I]`.
#[derive(Clone, Debug)]
pub struct SncWitness {
    pub complement: ClassFraction,
    pub decomposition: ClassFraction,
    pub holds: bool,
}

pub fn snc_t1_identity(n: usize, k: usize, weights: &[Character]) -> Result<SncWitness, HirzError> {
    let rank = check(n, k, weights)?;
    let complement = snc_local_class(n, k, weights, SncVariant::Complement)?;
    let mut tail = ClassFraction::one(rank);
    for w in &weights[k..] {
        tail = tail.checked_mul(&line_class(w)?)?;
    }
    let delta = CoeffFrac::delta();
    let mut decomposition = ClassFraction::zero(rank);
    for mask in 0u32..(1 << k) {
        let mut term = tail.scale(&delta.pow(mask.count_ones()));
        for (i, w) in weights[..k].iter().enumerate() {
            if mask & (1 << i) == 0 {
                term = term.checked_mul(&log_factor(w)?)?;
            }
        }
        decomposition = decomposition.checked_add(&term)?;
    }
    let holds = complement == decomposition;
    Ok(SncWitness {
        complement,
        decomposition,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GenusVar;

    #[test]
    fn one_dimensional_pieces() {
        let w: Vec<Character> = vec![[1].into()];
        let c = snc_local_class(1, 1, &w, SncVariant::Complement).unwrap();
        assert_eq!(c.render(GenusVar::Delta), "(-d*T^[1])/(1 - T^[1])");
        let d = snc_local_class(1, 1, &w, SncVariant::Divisor).unwrap();
        assert_eq!(d, ClassFraction::one(1));
        let s = snc_local_class(1, 0, &w, SncVariant::Space).unwrap();
        assert_eq!(s.render(GenusVar::Y), "(1 + y*T^[1])/(1 - T^[1])");
    }

    #[test]
    fn rejects_bad_input() {
        let w: Vec<Character> = vec![[1].into()];
        assert_eq!(
            snc_local_class(1, 2, &w, SncVariant::Log).unwrap_err(),
            HirzError::KOutOfRange { n: 1, k: 2 }
        );
        assert_eq!(
            snc_local_class(1, 0, &[[0].into()], SncVariant::Space).unwrap_err(),
            HirzError::ZeroWeight
        );
    }

    #[test]
    fn t1_in_dimension_one() {
        let w = snc_t1_identity(1, 1, &[[1].into()]).unwrap();
        assert!(w.holds);
    }
}
