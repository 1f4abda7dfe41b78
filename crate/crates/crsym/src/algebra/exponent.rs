//! Exponent vectors for multivariate monomials.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::Index;

/// Exponent vector of a monomial: one non-negative entry per variable slot.
///
/// The length is fixed by the ambient variable context. The derived ordering
/// is lexicographic; graded orders are assembled by the polynomial key types.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Exponent(pub Vec<u32>);

impl Exponent {
    pub fn new(entries: Vec<u32>) -> Self {
        Exponent(entries)
    }

    pub fn zeros(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    /// The standard basis vector `e_j` (0-indexed).
    pub fn unit(n: usize, j: usize) -> Self {
        let mut e = vec![0; n];
        e[j] = 1;
        Exponent(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total degree: the sum of the entries.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        debug_assert_eq!(self.len(), other.len());
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise subtraction; `None` if any entry would go negative.
    pub fn checked_sub(&self, other: &Exponent) -> Option<Exponent> {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Exponent)
    }

    /// Decrement slot `j`; `None` if it is already zero.
    pub fn step_down(&self, j: usize) -> Option<Exponent> {
        if self.0[j] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[j] -= 1;
        Some(Exponent(e))
    }

    pub fn step_up(&self, j: usize) -> Exponent {
        let mut e = self.0.clone();
        e[j] += 1;
        Exponent(e)
    }

    /// Apply a position permutation: entry `i` of the result is entry `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Exponent {
        Exponent(perm.iter().map(|&p| self.0[p]).collect())
    }

    pub fn iter(&self) -> std::slice::Iter<'_, u32> {
        self.0.iter()
    }
}

impl Index<usize> for Exponent {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// All exponent vectors of length `n` with the given total degree, in
/// lexicographically ascending order.
pub fn exponents_of_total(n: usize, total: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fill(&mut out, &mut cur, 0, total);
    out
}

fn fill(out: &mut Vec<Exponent>, cur: &mut Vec<u32>, pos: usize, remaining: u32) {
    if pos + 1 == cur.len() {
        cur[pos] = remaining;
        out.push(Exponent(cur.clone()));
        return;
    }
    for v in 0..=remaining {
        cur[pos] = v;
        fill(out, cur, pos + 1, remaining - v);
    }
    cur[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts_compositions() {
        assert_eq!(exponents_of_total(3, 0).len(), 1);
        assert_eq!(exponents_of_total(3, 1).len(), 3);
        assert_eq!(exponents_of_total(3, 4).len(), 15);
        // lex ascending
        let e = exponents_of_total(3, 2);
        assert_eq!(e[0], Exponent::new(vec![0, 0, 2]));
        assert_eq!(e[e.len() - 1], Exponent::new(vec![2, 0, 0]));
    }

    #[test]
    fn arithmetic() {
        let a = Exponent::new(vec![1, 2, 0]);
        let b = Exponent::new(vec![0, 1, 1]);
        assert_eq!(a.add(&b), Exponent::new(vec![1, 3, 1]));
        assert_eq!(a.checked_sub(&b), None);
        assert_eq!(a.step_down(2), None);
        assert_eq!(a.step_down(1), Some(Exponent::new(vec![1, 1, 0])));
        assert_eq!(a.total(), 3);
    }

    #[test]
    fn permutation_moves_entries() {
        let a = Exponent::new(vec![5, 7, 9]);
        assert_eq!(a.permute(&[2, 0, 1]), Exponent::new(vec![9, 5, 7]));
    }
}
