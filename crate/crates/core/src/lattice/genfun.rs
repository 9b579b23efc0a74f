//! Triangulations, half-open decompositions, fundamental parallelepipeds
//! and lattice-point generating functions of cones.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::algebra::{q, Character, ClassFraction, LaurentPoly, Rational};

use super::basis::LatticeBasis;
use super::cone::{facet_normals, Cone, Face, Side};
use super::intmat::{dot, hnf, integer_kernel, pivot_columns, rank, solve_combination};
use super::LatticeError;

/// Whether a decomposition should cover the closed cone or its interior.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    Interior,
    Closed,
}

/// A simplicial piece of a cone with some facets removed. `open[i]` says
/// whether the facet opposite the `i`-th ray is excluded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfOpenPiece {
    pub rays: Vec<usize>,
    pub open: Vec<bool>,
}

/// Lattice points of a fundamental parallelepiped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxPoints {
    pub points: Vec<Character>,
}

/// Triangulates a full-dimensional cone without new rays by pulling the
/// rays in order: the first ray is joined to a triangulation of every
/// facet not containing it.
pub fn triangulate(cone: &Cone) -> Vec<Vec<usize>> {
    let idx: Vec<usize> = (0..cone.rays().len()).collect();
    let mut out = pull(&idx, cone.rays());
    for s in out.iter_mut() {
        s.sort_unstable();
    }
    out.sort();
    out
}

fn pull(idx: &[usize], rays: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let vs: Vec<Vec<i64>> = idx.iter().map(|&i| rays[i].clone()).collect();
    let k = rank(&vs);
    if idx.len() == k {
        return vec![idx.to_vec()];
    }
    let cols = pivot_columns(&vs);
    let proj: Vec<Vec<i64>> = vs.iter().map(|v| cols.iter().map(|&c| v[c]).collect()).collect();
    let normals = facet_normals(&proj, k).expect("faces of a pointed cone are pointed");
    let apex = 0;
    let mut out = Vec::new();
    for n in normals {
        let on: Vec<usize> = (0..idx.len()).filter(|&j| dot(&n, &proj[j]) == 0).collect();
        if on.contains(&apex) {
            continue;
        }
        let sub: Vec<usize> = on.iter().map(|&j| idx[j]).collect();
        for mut s in pull(&sub, rays) {
            s.push(idx[apex]);
            out.push(s);
        }
    }
    out
}

/// Barycentric coordinates of `v` in the basis `rays`.
fn barycentric(rays: &[Vec<i64>], v: &[i64]) -> Vec<Rational> {
    solve_combination(rays, v).expect("simplicial piece spans")
}

/// A point of the interior of the cone that lies on no hyperplane spanned
/// by a facet of any piece: `Σ b^i r_i` for the first base `b` that works.
/// Only finitely many bases can fail since the rays span.
fn generic_point(cone: &Cone, pieces: &[Vec<usize>]) -> Vec<i64> {
    let rays = cone.rays();
    for base in 2i64.. {
        let mut qv = vec![0i64; cone.dim()];
        let mut w = 1i64;
        for r in rays {
            for (x, &c) in qv.iter_mut().zip(r) {
                *x += w * c;
            }
            w *= base;
        }
        let ok = pieces.iter().all(|p| {
            let rs: Vec<Vec<i64>> = p.iter().map(|&i| rays[i].clone()).collect();
            barycentric(&rs, &qv).iter().all(|l| !l.is_zero())
        });
        if ok {
            return qv;
        }
    }
    unreachable!()
}

/// Half-open decomposition of the closed cone or of its interior.
///
/// With a generic interior point `q`, a point `x` belongs to the piece
/// containing `x + εq` (closed cone) or `x - εq` (interior). For a piece
/// this excludes the facets where `q` lies on the negative side,
/// respectively on the positive side.
pub fn half_open_pieces(cone: &Cone, region: Region) -> Vec<HalfOpenPiece> {
    let tri = triangulate(cone);
    let qv = generic_point(cone, &tri);
    tri.into_iter()
        .map(|p| {
            let rs: Vec<Vec<i64>> = p.iter().map(|&i| cone.rays()[i].clone()).collect();
            let lam = barycentric(&rs, &qv);
            let open = lam
                .iter()
                .map(|l| match region {
                    Region::Closed => l.is_negative(),
                    Region::Interior => l.is_positive(),
                })
                .collect();
            HalfOpenPiece { rays: p, open }
        })
        .collect()
}

/// Lattice points `Σ λ_i w_i` with `λ_i ∈ (0,1]` where `open[i]` and
/// `λ_i ∈ [0,1)` otherwise, for independent `w_i` spanning `ℤ^k`
/// rationally.
pub(crate) fn parallelepiped(rays: &[Vec<i64>], open: &[bool]) -> Vec<Vec<i64>> {
    let k = rays.len();
    let h = hnf(rays);
    // 0 ≤ x_j < h_jj enumerates ℤ^k modulo the ray lattice
    let diag: Vec<i64> = (0..k).map(|j| h[j][j]).collect();
    let mut out = Vec::new();
    let mut x = vec![0i64; k];
    loop {
        let lam = barycentric(rays, &x);
        let mut p = x.clone();
        for (i, l) in lam.iter().enumerate() {
            let target = if open[i] {
                // shift into (0, 1]
                let c = l.ceil();
                l - c + q(1)
            } else {
                l - l.floor()
            };
            let shift = l - &target;
            let s = i64::try_from(shift.to_integer()).expect("small shift");
            for (pj, &wj) in p.iter_mut().zip(&rays[i]) {
                *pj -= s * wj;
            }
        }
        out.push(p);
        let mut j = 0;
        loop {
            if j == k {
                out.sort_by(|a, b| Character::from(a.clone()).cmp(&Character::from(b.clone())));
                return out;
            }
            x[j] += 1;
            if x[j] < diag[j] {
                break;
            }
            x[j] = 0;
            j += 1;
        }
    }
}

/// Generating function of a half-open simplicial piece, in `ℤ^k`.
fn piece_gf(cone: &Cone, piece: &HalfOpenPiece) -> ClassFraction {
    let rays: Vec<Vec<i64>> = piece.rays.iter().map(|&i| cone.rays()[i].clone()).collect();
    let k = cone.dim();
    let mut num = LaurentPoly::zero(k);
    for p in parallelepiped(&rays, &piece.open) {
        num = num.add(&LaurentPoly::monomial(Character::from(p))).expect("same rank");
    }
    let den = rays.into_iter().map(Character::from).collect();
    ClassFraction::new(num, den).expect("nonzero rays")
}

/// `Σ T^m` over the lattice points of the interior (or closed cone) of a
/// full-dimensional cone, in its own coordinates `ℤ^k`.
pub fn full_cone_gf(cone: &Cone, region: Region) -> ClassFraction {
    let mut acc = ClassFraction::zero(cone.dim());
    for piece in half_open_pieces(cone, region) {
        acc = &acc + &piece_gf(cone, &piece);
    }
    acc
}

/// A face of a cone in `ℤ^d` seen as a full-dimensional cone in the
/// saturated lattice `span(face) ∩ ℤ^d`. Returns the lattice basis
/// (as vectors of `ℤ^d`) and the cone in those coordinates; `None` for the
/// origin.
pub fn face_as_cone(cone: &Cone, face: &Face) -> Option<(Vec<Vec<i64>>, Cone)> {
    if face.dim == 0 {
        return None;
    }
    let d = cone.dim();
    let vs: Vec<Vec<i64>> = face.rays.iter().map(|&i| cone.rays()[i].clone()).collect();
    let normals = integer_kernel(&vs, d);
    let basis = if normals.is_empty() {
        (0..d).map(|i| (0..d).map(|j| i64::from(i == j)).collect()).collect()
    } else {
        integer_kernel(&normals, d)
    };
    let coords: Vec<Vec<i64>> = vs
        .iter()
        .map(|v| {
            solve_combination(&basis, v)
                .expect("ray in its span")
                .into_iter()
                .map(|c| i64::try_from(c.to_integer()).expect("integral coordinates"))
                .collect()
        })
        .collect();
    let sub = Cone::new(coords, cone.side()).expect("face of a pointed cone");
    Some((basis, sub))
}

/// Maps a class on `ℤ^k` to the ambient character lattice through the
/// images of the basis vectors.
fn push_to_ambient(c: &ClassFraction, local_basis: &[Vec<i64>], lattice: &LatticeBasis) -> ClassFraction {
    let images: Vec<Character> = local_basis.iter().map(|b| lattice.embed(b)).collect();
    c.map_characters(&images).expect("injective lattice map")
}

/// `Σ_{m ∈ relint(F) ∩ M'} T^m` for a face `F` of a dual-side cone, as a
/// class in the ambient character lattice. The origin face gives 1.
pub fn face_interior_gf(cone: &Cone, face: &Face, lattice: &LatticeBasis) -> ClassFraction {
    match face_as_cone(cone, face) {
        None => ClassFraction::one(lattice.ambient_rank()),
        Some((basis, sub)) => push_to_ambient(&full_cone_gf(&sub, Region::Interior), &basis, lattice),
    }
}

fn check_dual(cone: &Cone, lattice: &LatticeBasis) -> Result<(), LatticeError> {
    if cone.side() != Side::Dual {
        return Err(LatticeError::WrongSide);
    }
    if cone.dim() != lattice.dim() {
        return Err(LatticeError::Dimension(format!(
            "cone of dimension {} in a lattice of rank {}",
            cone.dim(),
            lattice.dim()
        )));
    }
    Ok(())
}

/// `Σ_{m ∈ int(σ∨) ∩ M'} T^m` for a dual-side cone given in the intrinsic
/// coordinates of `lattice`.
pub fn interior_gen_function(cone: &Cone, lattice: &LatticeBasis) -> Result<ClassFraction, LatticeError> {
    check_dual(cone, lattice)?;
    let id: Vec<Vec<i64>> = identity(cone.dim());
    Ok(push_to_ambient(&full_cone_gf(cone, Region::Interior), &id, lattice))
}

/// `Σ_{m ∈ σ∨ ∩ M'} T^m`, boundary included.
pub fn closed_gen_function(cone: &Cone, lattice: &LatticeBasis) -> Result<ClassFraction, LatticeError> {
    check_dual(cone, lattice)?;
    let id: Vec<Vec<i64>> = identity(cone.dim());
    Ok(push_to_ambient(&full_cone_gf(cone, Region::Closed), &id, lattice))
}

fn identity(d: usize) -> Vec<Vec<i64>> {
    (0..d).map(|i| (0..d).map(|j| i64::from(i == j)).collect()).collect()
}

/// Points of `M'` of the form `Σ λ_i w_i` with all `λ_i ∈ (0,1]`, for
/// linearly independent characters `w_i ∈ M'`.
pub fn box_points(rays: &[Character], lattice: &LatticeBasis) -> Result<BoxPoints, LatticeError> {
    if rays.is_empty() {
        return Ok(BoxPoints { points: vec![] });
    }
    let coords: Vec<Vec<i64>> = rays
        .iter()
        .map(|r| {
            lattice
                .coords_of(r)
                .ok_or_else(|| LatticeError::NotInLattice(r.render()))
        })
        .collect::<Result<_, _>>()?;
    if rank(&coords) < coords.len() {
        return Err(LatticeError::DependentRays);
    }
    let d = lattice.dim();
    let normals = integer_kernel(&coords, d);
    let basis = if normals.is_empty() {
        identity(d)
    } else {
        integer_kernel(&normals, d)
    };
    let local: Vec<Vec<i64>> = coords
        .iter()
        .map(|v| {
            solve_combination(&basis, v)
                .expect("in span")
                .into_iter()
                .map(|c| i64::try_from(c.to_integer()).expect("integral"))
                .collect()
        })
        .collect();
    let open = vec![true; local.len()];
    let mut points: Vec<Character> = parallelepiped(&local, &open)
        .into_iter()
        .map(|p| {
            let mut v = vec![0i64; d];
            for (c, b) in p.iter().zip(&basis) {
                for (x, bj) in v.iter_mut().zip(b) {
                    *x += c * bj;
                }
            }
            lattice.embed(&v)
        })
        .collect();
    points.sort();
    Ok(BoxPoints { points })
}

/// A generating set of the semigroup `σ∨ ∩ ℤ^d` (its irreducible
/// elements), from the rays and the parallelepiped points of a
/// triangulation.
pub fn semigroup_generators(cone: &Cone) -> Vec<Vec<i64>> {
    let mut cand: BTreeSet<Character> = cone.ray_characters().into_iter().collect();
    for piece in triangulate(cone) {
        let rs: Vec<Vec<i64>> = piece.iter().map(|&i| cone.rays()[i].clone()).collect();
        for p in parallelepiped(&rs, &vec![false; rs.len()]) {
            if p.iter().any(|&x| x != 0) {
                cand.insert(Character::from(p));
            }
        }
    }
    let cand: Vec<Character> = cand.into_iter().collect();
    cand.iter()
        .filter(|g| {
            !cand.iter().any(|h| {
                if h == *g {
                    return false;
                }
                let diff = g.sub(h);
                !diff.is_zero() && cone.contains(diff.coords())
            })
        })
        .map(|g| g.coords().to_vec())
        .collect()
}
