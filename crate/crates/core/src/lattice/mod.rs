//! Rational polyhedral cones in a lattice: duals, faces, fundamental
//! parallelepipeds and generating functions of lattice points.

mod basis;
mod cone;
mod genfun;
pub(crate) mod intmat;

pub use basis::LatticeBasis;
pub use cone::{Cone, Face, Facet, Side, MAX_DIM};
pub use genfun::{
    box_points, closed_gen_function, face_as_cone, face_interior_gf, full_cone_gf, half_open_pieces,
    interior_gen_function, semigroup_generators, triangulate, BoxPoints, HalfOpenPiece, Region,
};

use thiserror::Error;

use crate::algebra::Character;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("a lattice needs at least one nonzero generator")]
    EmptyBasis,
    #[error("a cone needs at least one ray")]
    EmptyCone,
    #[error("zero vector given as a ray")]
    ZeroRay,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("cone dimension {0} is outside the supported range 1..=4")]
    UnsupportedDimension(usize),
    #[error("the rays do not span the ambient space")]
    NotFullDimensional,
    #[error("the cone contains a line")]
    NotPointed,
    #[error("the rays are linearly dependent")]
    DependentRays,
    #[error("{0} is not in the lattice")]
    NotInLattice(String),
    #[error("expected a cone on the dual (character) side")]
    WrongSide,
}

/// The dual-side cone spanned by characters of `M'`, in intrinsic
/// coordinates.
pub fn dual_cone_in(lattice: &LatticeBasis, rays: &[Character]) -> Result<Cone, LatticeError> {
    let coords = rays
        .iter()
        .map(|r| {
            lattice
                .coords_of(r)
                .ok_or_else(|| LatticeError::NotInLattice(r.render()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Cone::new(coords, Side::Dual)
}

/// The primal cone spanned by cocharacters `v ∈ ℤ^r`, in the coordinates
/// of `N'` dual to the intrinsic basis of `M'`.
pub fn primal_cone_in(lattice: &LatticeBasis, rays: &[Vec<i64>]) -> Result<Cone, LatticeError> {
    let coords = rays
        .iter()
        .map(|v| lattice.pair_cocharacter(v))
        .collect::<Result<Vec<_>, _>>()?;
    Cone::new(coords, Side::Primal)
}

/// The dual cone. Its rays live in the dual lattice with respect to the
/// standard pairing of intrinsic coordinates.
pub fn dual_cone(cone: &Cone) -> Cone {
    cone.dual()
}

/// Rays of a dual-side cone as characters of the ambient torus.
pub fn ambient_rays(cone: &Cone, lattice: &LatticeBasis) -> Vec<Character> {
    cone.rays().iter().map(|r| lattice.embed(r)).collect()
}
