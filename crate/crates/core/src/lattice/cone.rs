//! Full-dimensional pointed rational cones, their facets, faces and duals.

use std::collections::BTreeSet;

use crate::algebra::Character;

use super::intmat::{dot, normal_of, primitive, rank};
use super::LatticeError;

/// Largest supported cone dimension.
pub const MAX_DIM: usize = 4;

/// Which lattice the rays of a cone live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// A cone σ in the cocharacter lattice `N'`.
    Primal,
    /// A cone σ∨ in the character lattice `M'`.
    Dual,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Primal => Side::Dual,
            Side::Dual => Side::Primal,
        }
    }
}

/// A facet: its inward primitive normal and the rays lying on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub rays: BTreeSet<usize>,
}

/// A face, recorded by the indices of the rays it contains.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    pub dim: usize,
    pub rays: Vec<usize>,
}

/// A pointed cone of full dimension `d` in `ℤ^d`, given by primitive ray
/// generators in graded-lex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    rays: Vec<Vec<i64>>,
    dim: usize,
    side: Side,
    facets: Vec<Facet>,
}

impl Cone {
    /// Builds the cone spanned by `rays`, dropping duplicates and
    /// generators that are not extreme.
    pub fn new(rays: Vec<Vec<i64>>, side: Side) -> Result<Self, LatticeError> {
        let dim = rays.first().map(Vec::len).ok_or(LatticeError::EmptyCone)?;
        if dim == 0 || dim > MAX_DIM {
            return Err(LatticeError::UnsupportedDimension(dim));
        }
        if rays.iter().any(|r| r.len() != dim) {
            return Err(LatticeError::Dimension("rays of different lengths".into()));
        }
        if rays.iter().any(|r| r.iter().all(|&x| x == 0)) {
            return Err(LatticeError::ZeroRay);
        }
        let mut rs: Vec<Character> = rays.iter().map(|r| Character::from(primitive(r))).collect();
        rs.sort();
        rs.dedup();
        let mut rays: Vec<Vec<i64>> = rs.into_iter().map(|c| c.coords().to_vec()).collect();
        if rank(&rays) < dim {
            return Err(LatticeError::NotFullDimensional);
        }
        loop {
            let normals = facet_normals(&rays, dim)?;
            let extreme: Vec<bool> = (0..rays.len())
                .map(|i| {
                    if dim == 1 {
                        return true;
                    }
                    let on: Vec<Vec<i64>> = normals.iter().filter(|n| dot(n, &rays[i]) == 0).cloned().collect();
                    rank(&on) == dim - 1
                })
                .collect();
            if extreme.iter().all(|&e| e) {
                let facets = normals
                    .into_iter()
                    .map(|n| {
                        let on = (0..rays.len()).filter(|&i| dot(&n, &rays[i]) == 0).collect();
                        Facet { normal: n, rays: on }
                    })
                    .collect();
                return Ok(Cone {
                    rays,
                    dim,
                    side,
                    facets,
                });
            }
            rays = rays
                .into_iter()
                .zip(extreme)
                .filter(|(_, e)| *e)
                .map(|(r, _)| r)
                .collect();
        }
    }

    /// The cone spanned by characters given in ambient coordinates.
    pub fn from_characters(rays: &[Character], side: Side) -> Result<Self, LatticeError> {
        Cone::new(rays.iter().map(|c| c.coords().to_vec()).collect(), side)
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn ray_characters(&self) -> Vec<Character> {
        self.rays.iter().map(|r| Character::from(r.clone())).collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn is_simplicial(&self) -> bool {
        self.rays.len() == self.dim
    }

    /// `⟨n, v⟩ ≥ 0` for every facet normal.
    pub fn contains(&self, v: &[i64]) -> bool {
        self.facets.iter().all(|f| dot(&f.normal, v) >= 0)
    }

    /// `⟨n, v⟩ > 0` for every facet normal.
    pub fn contains_in_interior(&self, v: &[i64]) -> bool {
        self.facets.iter().all(|f| dot(&f.normal, v) > 0)
    }

    /// The dual cone `{u : ⟨u, v⟩ ≥ 0 for all v ∈ σ}` in the dual lattice.
    pub fn dual(&self) -> Cone {
        let normals = self.facets.iter().map(|f| f.normal.clone()).collect();
        Cone::new(normals, self.side.flip()).expect("dual of a pointed full cone")
    }

    /// All faces, from the origin to the cone itself, ordered by
    /// dimension and then by ray indices.
    pub fn faces(&self) -> Vec<Face> {
        let mut sets: BTreeSet<Vec<usize>> = BTreeSet::new();
        sets.insert((0..self.rays.len()).collect());
        let mut frontier: Vec<Vec<usize>> = self.facets.iter().map(|f| f.rays.iter().copied().collect()).collect();
        while let Some(s) = frontier.pop() {
            if !sets.insert(s.clone()) {
                continue;
            }
            for f in &self.facets {
                let t: Vec<usize> = s.iter().copied().filter(|i| f.rays.contains(i)).collect();
                if !sets.contains(&t) {
                    frontier.push(t);
                }
            }
        }
        let mut faces: Vec<Face> = sets
            .into_iter()
            .map(|rays| {
                let vs: Vec<Vec<i64>> = rays.iter().map(|&i| self.rays[i].clone()).collect();
                Face { dim: rank(&vs), rays }
            })
            .collect();
        faces.sort();
        faces
    }

    /// Normals of the facets that contain a face; the face is cut out of
    /// the cone by these equations.
    pub fn face_normals(&self, face: &Face) -> Vec<Vec<i64>> {
        self.facets
            .iter()
            .filter(|f| face.rays.iter().all(|i| f.rays.contains(i)))
            .map(|f| f.normal.clone())
            .collect()
    }
}

/// Primitive inward normals of all facets, sorted; fails if not pointed.
pub(crate) fn facet_normals(rays: &[Vec<i64>], dim: usize) -> Result<Vec<Vec<i64>>, LatticeError> {
    let mut normals: BTreeSet<Character> = BTreeSet::new();
    if dim == 1 {
        let pos = rays.iter().any(|r| r[0] > 0);
        let neg = rays.iter().any(|r| r[0] < 0);
        if pos && neg {
            return Err(LatticeError::NotPointed);
        }
        return Ok(vec![vec![if pos { 1 } else { -1 }]]);
    }
    for subset in subsets(rays.len(), dim - 1) {
        let rows: Vec<Vec<i64>> = subset.iter().map(|&i| rays[i].clone()).collect();
        let n = primitive(&normal_of(&rows, dim));
        if n.iter().all(|&x| x == 0) {
            continue;
        }
        let vals: Vec<i64> = rays.iter().map(|r| dot(&n, r)).collect();
        if vals.iter().all(|&v| v >= 0) {
            normals.insert(Character::from(n));
        } else if vals.iter().all(|&v| v <= 0) {
            normals.insert(Character::from(n.iter().map(|x| -x).collect::<Vec<_>>()));
        }
    }
    let normals: Vec<Vec<i64>> = normals.into_iter().map(|c| c.coords().to_vec()).collect();
    if normals.is_empty() || rank(&normals) < dim {
        return Err(LatticeError::NotPointed);
    }
    Ok(normals)
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
