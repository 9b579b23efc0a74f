//! The lattice-point summation for the open orbit of a simplicial affine
//! toric variety, written directly over an alphabet of semigroup
//! generators.

use crate::algebra::{Character, ClassFraction, CoeffFrac};
use crate::lattice::{ambient_rays, box_points, semigroup_generators, Cone, LatticeBasis, Side};

use super::rewrite::{expand_exponential, Representer};
use super::spoly::{SPolynomial, SVariableSet};
use super::BasisError;

/// `δ^n · numerator / Π_{rays} S_w`; the numerator includes the `δ^n`.
#[derive(Clone, Debug)]
pub struct TorsimpExpansion {
    pub alphabet: SVariableSet,
    pub numerator: SPolynomial,
    pub denominator: Vec<u32>,
}

/// `(-δ)^n Σ_{m ∈ int σ∨} T^m`, the class of the open orbit.
pub fn open_orbit_class(cone: &Cone, lattice: &LatticeBasis) -> Result<ClassFraction, BasisError> {
    let dual = if cone.side() == Side::Dual {
        cone.clone()
    } else {
        cone.dual()
    };
    let gf = crate::lattice::interior_gen_function(&dual, lattice)?;
    Ok(gf.scale(&CoeffFrac::delta().neg().pow(dual.dim() as u32)))
}

/// The default alphabet: rays of `σ∨` first, then the remaining
/// irreducible elements of `σ∨ ∩ M'`.
pub fn generator_alphabet(cone: &Cone, lattice: &LatticeBasis) -> Result<SVariableSet, BasisError> {
    let dual = if cone.side() == Side::Dual {
        cone.clone()
    } else {
        cone.dual()
    };
    let mut letters = ambient_rays(&dual, lattice);
    for g in semigroup_generators(&dual) {
        let c = lattice.embed(&g);
        if !letters.contains(&c) {
            letters.push(c);
        }
    }
    SVariableSet::new(letters)
}

/// Expands the open-orbit class of a simplicial cone as
/// `δ^n Σ_{w ∈ A_0} Π (1 + S_{g})^{c_g} / Π S_{w_i}`, where `A_0` holds the
/// lattice points `Σ λ_i w_i` with `λ_i ∈ (0,1]` and each is written over
/// `alphabet` (default: [`generator_alphabet`]). The rays of `σ∨` must be
/// letters.
pub fn torsimp_expansion(
    cone: &Cone,
    lattice: &LatticeBasis,
    alphabet: Option<&SVariableSet>,
) -> Result<TorsimpExpansion, BasisError> {
    let dual = if cone.side() == Side::Dual {
        cone.clone()
    } else {
        cone.dual()
    };
    if !dual.is_simplicial() {
        return Err(BasisError::InvalidArgument("cone is not simplicial".into()));
    }
    let alphabet = match alphabet {
        Some(a) => a.clone(),
        None => generator_alphabet(&dual, lattice)?,
    };
    let n = alphabet.len();
    let rays: Vec<Character> = ambient_rays(&dual, lattice);
    let mut denominator = vec![0u32; n];
    for r in &rays {
        let i = alphabet
            .index_of(r)
            .ok_or_else(|| BasisError::MissingDenominator(r.render()))?;
        denominator[i] += 1;
    }
    let mut rep = Representer::new(alphabet.weights())?;
    let mut sum = SPolynomial::zero(n);
    for w in box_points(&rays, lattice)?.points {
        sum.add_assign(&expand_exponential(&rep.represent(&w)?, n))?;
    }
    let numerator = SPolynomial::delta(n).pow(rays.len() as u32).mul(&sum)?;
    Ok(TorsimpExpansion {
        alphabet,
        numerator,
        denominator,
    })
}
