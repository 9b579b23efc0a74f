//! Characters of the torus `(ℂ*)^r`, encoded as integer vectors.

use std::cmp::Ordering;
use std::fmt;

/// An element of the character lattice `Hom(T, ℂ*) ≅ ℤ^r`.
///
/// Ordered graded-lexicographically: first by coordinate sum, then
/// coordinate by coordinate. This order fixes every printed term order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Character(Vec<i64>);

impl Character {
    pub fn new(coords: Vec<i64>) -> Self {
        Character(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Character(vec![0; rank])
    }

    /// The basis character `t_i` (zero-based index).
    pub fn basis(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Character(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Character) -> Character {
        debug_assert_eq!(self.rank(), other.rank());
        Character(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Character) -> Character {
        debug_assert_eq!(self.rank(), other.rank());
        Character(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Character {
        Character(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> Character {
        Character(self.0.iter().map(|a| a * k).collect())
    }

    pub fn dot(&self, v: &[i64]) -> i64 {
        self.0.iter().zip(v).map(|(a, b)| a * b).sum()
    }

    /// First nonzero coordinate is positive.
    pub fn is_lex_positive(&self) -> bool {
        self.0.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
    }

    /// Index and value of the first nonzero coordinate.
    pub(crate) fn pivot(&self) -> Option<(usize, i64)> {
        self.0.iter().copied().enumerate().find(|&(_, c)| c != 0)
    }

    /// Renders as `[a,b,c]`.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

impl From<Vec<i64>> for Character {
    fn from(v: Vec<i64>) -> Self {
        Character(v)
    }
}

impl From<&[i64]> for Character {
    fn from(v: &[i64]) -> Self {
        Character(v.to_vec())
    }
}

impl<const N: usize> From<[i64; N]> for Character {
    fn from(v: [i64; N]) -> Self {
        Character(v.to_vec())
    }
}

impl PartialOrd for Character {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Character {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
