//! Local classes of affine toric germs as face sums of interior lattice
//! point generating functions.

use crate::algebra::{q, ClassFraction, CoeffFrac};
use crate::lattice::{closed_gen_function, face_interior_gf, Cone, LatticeBasis, LatticeError, Side};

use super::HirzError;

fn dual_side(cone: &Cone, lattice: &LatticeBasis) -> Result<Cone, HirzError> {
    if cone.dim() != lattice.dim() {
        return Err(LatticeError::Dimension(format!(
            "cone of dimension {} in a lattice of rank {}",
            cone.dim(),
            lattice.dim()
        ))
        .into());
    }
    Ok(match cone.side() {
        Side::Dual => cone.clone(),
        Side::Primal => cone.dual(),
    })
}

/// `Σ_{F ⪯ σ∨} (−δ)^{dim F} Σ_{m ∈ relint F ∩ M'} T^m`.
///
/// The cone may be given on either side, in the intrinsic coordinates of
/// `lattice` (see [`crate::lattice::primal_cone_in`] and
/// [`crate::lattice::dual_cone_in`]). The face `F` of `σ∨` is `σ∨ ∩ τ⊥`
/// for the complementary face `τ` of `σ`; the origin contributes 1.
pub fn toric_local_class(cone: &Cone, lattice: &LatticeBasis) -> Result<ClassFraction, HirzError> {
    let dual = dual_side(cone, lattice)?;
    let minus_delta = CoeffFrac::delta().neg();
    let mut acc = ClassFraction::zero(lattice.ambient_rank());
    for face in dual.faces() {
        let gf = face_interior_gf(&dual, &face, lattice);
        acc = acc.checked_add(&gf.scale(&minus_delta.pow(face.dim as u32)))?;
    }
    Ok(acc)
}

/// A specialization of a toric class next to the value it should have.
#[derive(Clone, Debug)]
pub struct ToricWitness {
    pub specialized: ClassFraction,
    pub expected: ClassFraction,
    pub holds: bool,
}

/// At `y = 0` the class is the generating function of all lattice points
/// of `σ∨`, boundary included.
pub fn toric_y0_check(cone: &Cone, lattice: &LatticeBasis) -> Result<ToricWitness, HirzError> {
    let dual = dual_side(cone, lattice)?;
    let specialized = toric_local_class(&dual, lattice)?.substitute_y(&q(0))?;
    let expected = closed_gen_function(&dual, lattice)?;
    let holds = specialized == expected;
    Ok(ToricWitness {
        specialized,
        expected,
        holds,
    })
}

/// At `δ = 0` only the origin face survives and the class is 1.
pub fn toric_delta0_check(cone: &Cone, lattice: &LatticeBasis) -> Result<ToricWitness, HirzError> {
    let specialized = toric_local_class(cone, lattice)?.substitute_delta(&q(0))?;
    let expected = ClassFraction::one(lattice.ambient_rank());
    let holds = specialized == expected;
    Ok(ToricWitness {
        specialized,
        expected,
        holds,
    })
}
