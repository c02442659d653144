//! Finitely supported permutations of ℕ.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// Addition in ℤ/2.
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// A bijection of ℕ moving only finitely many points. Only moved points are
/// stored, so equality is structural.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FinPermutation {
    moved: BTreeMap<u64, u64>,
}

impl FinPermutation {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Builds a permutation from its graph on a finite set. Fixed points may
    /// be listed; they are dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u64)>) -> Result<Self> {
        let mut moved = BTreeMap::new();
        for (k, v) in pairs {
            if k == 0 || v == 0 {
                return Err(Error::NotAPermutation(format!("{k}->{v} leaves ℕ")));
            }
            if moved.insert(k, v).is_some_and(|old| old != v) {
                return Err(Error::NotAPermutation(format!("{k} has two images")));
            }
        }
        moved.retain(|k, v| k != v);
        let mut images: Vec<u64> = moved.values().copied().collect();
        images.sort_unstable();
        let keys: Vec<u64> = moved.keys().copied().collect();
        if images != keys {
            return Err(Error::NotAPermutation(
                "support is not mapped onto itself".into(),
            ));
        }
        Ok(FinPermutation { moved })
    }

    /// The transposition exchanging `a` and `b`.
    pub fn transposition(a: u64, b: u64) -> Self {
        assert!(a >= 1 && b >= 1);
        Self::from_pairs([(a, b), (b, a)]).expect("transposition")
    }

    pub fn apply(&self, n: u64) -> u64 {
        self.moved.get(&n).copied().unwrap_or(n)
    }

    /// Moved points with their images, in increasing order of the point.
    pub fn moved(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.moved.iter().map(|(&k, &v)| (k, v))
    }

    pub fn support(&self) -> impl Iterator<Item = u64> + '_ {
        self.moved.keys().copied()
    }

    pub fn support_len(&self) -> usize {
        self.moved.len()
    }

    /// Left-to-right product: `x(pq) = (xp)q`.
    pub fn compose(&self, other: &FinPermutation) -> FinPermutation {
        let points = self.moved.keys().chain(other.moved.keys()).copied();
        let moved = points
            .map(|x| (x, other.apply(self.apply(x))))
            .filter(|(x, y)| x != y)
            .collect();
        FinPermutation { moved }
    }

    pub fn inverse(&self) -> FinPermutation {
        FinPermutation {
            moved: self.moved.iter().map(|(&k, &v)| (v, k)).collect(),
        }
    }

    /// Non-trivial cycles, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<u64>> {
        let mut seen = std::collections::BTreeSet::new();
        let mut cycles = Vec::new();
        for &start in self.moved.keys() {
            if !seen.insert(start) {
                continue;
            }
            let mut cycle = vec![start];
            let mut x = self.apply(start);
            while x != start {
                seen.insert(x);
                cycle.push(x);
                x = self.apply(x);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// A k-cycle is a product of k − 1 transpositions.
    pub fn parity(&self) -> Parity {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for FinPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}
