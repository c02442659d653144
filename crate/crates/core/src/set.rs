//! Subsets of the positive integers that admit a finite description: finite
//! sets and sets with a finite complement.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn sorted_positive(values: impl IntoIterator<Item = u64>) -> Result<Vec<u64>> {
    let set: BTreeSet<u64> = values.into_iter().collect();
    if set.contains(&0) {
        return Err(Error::NonPositiveValue(
            "0 is not a positive integer".into(),
        ));
    }
    Ok(set.into_iter().collect())
}

/// A finite subset of ℕ = {1, 2, …}, stored sorted and without repeats.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct FiniteSet {
    elems: Vec<u64>,
}

impl FiniteSet {
    pub fn empty() -> Self {
        FiniteSet { elems: Vec::new() }
    }

    pub fn new(elems: impl IntoIterator<Item = u64>) -> Result<Self> {
        Ok(FiniteSet {
            elems: sorted_positive(elems)?,
        })
    }

    pub(crate) fn from_sorted(elems: Vec<u64>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elems.first().is_none_or(|&x| x >= 1));
        FiniteSet { elems }
    }

    pub fn elems(&self) -> &[u64] {
        &self.elems
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.elems.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn max_elem(&self) -> Option<u64> {
        self.elems.last().copied()
    }

    pub fn contains(&self, n: u64) -> bool {
        self.elems.binary_search(&n).is_ok()
    }

    pub fn is_subset(&self, other: &FiniteSet) -> bool {
        self.elems.iter().all(|&x| other.contains(x))
    }

    pub fn union(&self, other: &FiniteSet) -> FiniteSet {
        let merged: BTreeSet<u64> = self.iter().chain(other.iter()).collect();
        FiniteSet::from_sorted(merged.into_iter().collect())
    }

    pub fn insert(&mut self, n: u64) {
        assert!(n >= 1, "finite sets hold positive integers only");
        if let Err(at) = self.elems.binary_search(&n) {
            self.elems.insert(at, n);
        }
    }
}

impl TryFrom<Vec<u64>> for FiniteSet {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        FiniteSet::new(v)
    }
}

impl From<FiniteSet> for Vec<u64> {
    fn from(s: FiniteSet) -> Self {
        s.elems
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.elems.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// A subset of ℕ whose complement (the *holes*) is finite.
///
/// Members are enumerated in increasing order by [`CofiniteSet::kth`], which
/// is total: every cofinite set is infinite.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CofiniteSet {
    holes: Vec<u64>,
}

impl CofiniteSet {
    /// All of ℕ.
    pub fn full() -> Self {
        CofiniteSet { holes: Vec::new() }
    }

    pub fn with_holes(holes: impl IntoIterator<Item = u64>) -> Result<Self> {
        Ok(CofiniteSet {
            holes: sorted_positive(holes)?,
        })
    }

    pub(crate) fn from_sorted_holes(holes: Vec<u64>) -> Self {
        debug_assert!(holes.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(holes.first().is_none_or(|&x| x >= 1));
        CofiniteSet { holes }
    }

    pub fn holes(&self) -> &[u64] {
        &self.holes
    }

    pub fn hole_set(&self) -> FiniteSet {
        FiniteSet::from_sorted(self.holes.clone())
    }

    pub fn hole_count(&self) -> usize {
        self.holes.len()
    }

    /// Largest hole, or 0 when the set is all of ℕ.
    pub fn max_hole(&self) -> u64 {
        self.holes.last().copied().unwrap_or(0)
    }

    pub fn contains(&self, n: u64) -> bool {
        n >= 1 && self.holes.binary_search(&n).is_err()
    }

    /// The `k`-th smallest member (1-based).
    pub fn kth(&self, k: u64) -> u64 {
        assert!(k >= 1, "members are indexed from 1");
        let mut candidate = k;
        for &h in &self.holes {
            if h <= candidate {
                candidate += 1;
            } else {
                break;
            }
        }
        candidate
    }

    /// Position of `n` in the increasing enumeration, if `n` is a member.
    pub fn rank(&self, n: u64) -> Option<u64> {
        if !self.contains(n) {
            return None;
        }
        let below = self.holes.partition_point(|&h| h < n) as u64;
        Some(n - below)
    }

    pub fn is_subset(&self, other: &CofiniteSet) -> bool {
        other
            .holes
            .iter()
            .all(|h| self.holes.binary_search(h).is_ok())
    }

    pub fn intersection(&self, other: &CofiniteSet) -> CofiniteSet {
        self.without(other.holes.iter().copied())
    }

    /// The set with the given points removed.
    pub fn without(&self, points: impl IntoIterator<Item = u64>) -> CofiniteSet {
        let merged: BTreeSet<u64> = self
            .holes
            .iter()
            .copied()
            .chain(points.into_iter().filter(|&p| p >= 1))
            .collect();
        CofiniteSet::from_sorted_holes(merged.into_iter().collect())
    }

    /// Members in increasing order; the iterator never ends.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        (1..).filter(move |&n| self.contains(n))
    }

    /// Members strictly below `bound`.
    pub fn members_below(&self, bound: u64) -> impl Iterator<Item = u64> + '_ {
        (1..bound).filter(move |&n| self.contains(n))
    }

    /// `self ∖ other`, which is finite because `other` is cofinite.
    pub fn difference(&self, other: &CofiniteSet) -> FiniteSet {
        FiniteSet::from_sorted(
            other
                .holes
                .iter()
                .copied()
                .filter(|&h| self.contains(h))
                .collect(),
        )
    }
}

impl fmt::Display for CofiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N\\{}", FiniteSet::from_sorted(self.holes.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kth_skips_holes() {
        let s = CofiniteSet::with_holes([1, 3, 4]).unwrap();
        let first: Vec<u64> = (1..=5).map(|k| s.kth(k)).collect();
        assert_eq!(first, vec![2, 5, 6, 7, 8]);
        assert_eq!(CofiniteSet::full().kth(9), 9);
    }

    #[test]
    fn rank_inverts_kth() {
        let s = CofiniteSet::with_holes([2, 7, 8, 20]).unwrap();
        for k in 1..60 {
            assert_eq!(s.rank(s.kth(k)), Some(k));
        }
        assert_eq!(s.rank(7), None);
    }

    #[test]
    fn subset_is_reverse_hole_containment() {
        let small = CofiniteSet::with_holes([1, 2]).unwrap();
        let big = CofiniteSet::with_holes([2]).unwrap();
        assert!(small.is_subset(&big));
        assert!(!big.is_subset(&small));
        assert_eq!(small.difference(&big), FiniteSet::empty());
        assert_eq!(big.difference(&small).elems(), &[1]);
    }

    #[test]
    fn zero_is_rejected() {
        assert!(matches!(
            FiniteSet::new([0, 1]),
            Err(Error::NonPositiveValue(_))
        ));
        assert!(CofiniteSet::with_holes([0]).is_err());
        assert!(!CofiniteSet::full().contains(0));
    }

    #[test]
    fn display() {
        let s = CofiniteSet::with_holes([3, 1]).unwrap();
        assert_eq!(s.to_string(), "N\\{1,3}");
        assert_eq!(FiniteSet::new([4, 2, 2]).unwrap().to_string(), "{2,4}");
    }
}
