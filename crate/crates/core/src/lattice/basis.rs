//! Sublattices of the character lattice given by generators.

use crate::algebra::Character;

use super::intmat::{hnf, solve_combination};
use super::LatticeError;

/// The lattice `M' ⊆ ℤ^r` spanned by a list of characters.
///
/// Generators may be redundant (for example `3t₁, 3t₂, t₁+t₂`); the
/// lattice keeps a Hermite-form basis `b_1, …, b_d` and all cone
/// computations run in the intrinsic coordinates with respect to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    rank: usize,
    generators: Vec<Character>,
    basis: Vec<Vec<i64>>,
}

impl LatticeBasis {
    /// `ℤ^r` with the standard basis.
    pub fn standard(rank: usize) -> Self {
        let basis: Vec<Vec<i64>> = (0..rank).map(|i| Character::basis(rank, i).coords().to_vec()).collect();
        LatticeBasis {
            rank,
            generators: (0..rank).map(|i| Character::basis(rank, i)).collect(),
            basis,
        }
    }

    pub fn new(generators: Vec<Character>) -> Result<Self, LatticeError> {
        let rank = generators
            .first()
            .map(Character::rank)
            .ok_or(LatticeError::EmptyBasis)?;
        if generators.iter().any(|g| g.rank() != rank) {
            return Err(LatticeError::Dimension("generators of different lengths".into()));
        }
        let rows: Vec<Vec<i64>> = generators.iter().map(|g| g.coords().to_vec()).collect();
        let basis = hnf(&rows);
        if basis.is_empty() {
            return Err(LatticeError::EmptyBasis);
        }
        Ok(LatticeBasis {
            rank,
            generators,
            basis,
        })
    }

    /// Rank of the ambient character lattice.
    pub fn ambient_rank(&self) -> usize {
        self.rank
    }

    /// Rank `d` of the lattice itself.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn generators(&self) -> &[Character] {
        &self.generators
    }

    /// The Hermite-form basis.
    pub fn basis(&self) -> Vec<Character> {
        self.basis.iter().map(|b| Character::from(b.clone())).collect()
    }

    /// Intrinsic integer coordinates of `m`, or `None` if `m ∉ M'`.
    pub fn coords_of(&self, m: &Character) -> Option<Vec<i64>> {
        if m.rank() != self.rank {
            return None;
        }
        let x = solve_combination(&self.basis, m.coords())?;
        x.iter()
            .map(|c| c.is_integer().then(|| i64::try_from(c.to_integer()).ok()).flatten())
            .collect()
    }

    pub fn contains(&self, m: &Character) -> bool {
        self.coords_of(m).is_some()
    }

    /// `Σ x_i b_i`.
    pub fn embed(&self, x: &[i64]) -> Character {
        let mut out = vec![0i64; self.rank];
        for (c, b) in x.iter().zip(&self.basis) {
            for (o, bj) in out.iter_mut().zip(b) {
                *o += c * bj;
            }
        }
        Character::from(out)
    }

    /// Coordinates, in the dual basis of `N' = Hom(M', ℤ)`, of the
    /// cocharacter `v ∈ ℤ^r`: the pairings `⟨b_i, v⟩`.
    pub fn pair_cocharacter(&self, v: &[i64]) -> Result<Vec<i64>, LatticeError> {
        if v.len() != self.rank {
            return Err(LatticeError::Dimension(format!(
                "cocharacter of length {} in rank {}",
                v.len(),
                self.rank
            )));
        }
        Ok(self
            .basis
            .iter()
            .map(|b| b.iter().zip(v).map(|(x, y)| x * y).sum())
            .collect())
    }
}
