//! Canonical encoding of co-finite almost monotone partial bijections of ℕ
//! and the semigroup operations on them.

use std::cmp::max;
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::CofiniteSet;

/// An injective partial selfmap of ℕ with cofinite domain and range that is
/// a translation `n ↦ n + shift` from `tail_start` onwards.
///
/// The encoding is canonical: `exceptions` lists, sorted by key, the graph of
/// the map strictly below `tail_start`, and `tail_start` is the least
/// threshold from which every integer lies in the domain and is moved by
/// `shift`. Two values are equal as maps iff they are equal as structs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawElement", into = "RawElement")]
pub struct PartialBijection {
    exceptions: Vec<(u64, u64)>,
    tail_start: u64,
    shift: i64,
}

/// Unvalidated wire form: `{"exceptions":[[k,v],…],"tail":N,"shift":d}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawElement {
    pub exceptions: Vec<(u64, u64)>,
    pub tail: u64,
    pub shift: i64,
}

impl TryFrom<RawElement> for PartialBijection {
    type Error = Error;

    fn try_from(raw: RawElement) -> Result<Self> {
        PartialBijection::canonicalize(&raw.exceptions, raw.tail, raw.shift)
    }
}

impl From<PartialBijection> for RawElement {
    fn from(a: PartialBijection) -> Self {
        RawElement {
            exceptions: a.exceptions,
            tail: a.tail_start,
            shift: a.shift,
        }
    }
}

impl PartialBijection {
    /// Builds the canonical representative of the map that sends each listed
    /// key to its value and every `n ≥ tail_start` to `n + shift`.
    ///
    /// Pairs at or beyond `tail_start` are accepted when they agree with the
    /// tail. The result has the least possible `tail_start`.
    pub fn canonicalize(pairs: &[(u64, u64)], tail_start: u64, shift: i64) -> Result<Self> {
        if tail_start == 0 {
            return Err(Error::NonPositiveValue(
                "tail start must be at least 1".into(),
            ));
        }
        let image_start = tail_start as i64 + shift;
        if image_start < 1 {
            return Err(Error::NonPositiveValue(format!(
                "tail {tail_start} shifted by {shift} leaves the positive integers"
            )));
        }
        let image_start = image_start as u64;

        let mut sorted = pairs.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut exceptions = Vec::with_capacity(sorted.len());
        for (i, &(k, v)) in sorted.iter().enumerate() {
            if k == 0 || v == 0 {
                return Err(Error::NonPositiveValue(format!("pair {k}->{v}")));
            }
            if i > 0 && sorted[i - 1].0 == k {
                return Err(Error::NotAFunction(format!(
                    "{k} is mapped to both {} and {v}",
                    sorted[i - 1].1
                )));
            }
            if k >= tail_start {
                if v as i64 != k as i64 + shift {
                    return Err(Error::NotAFunction(format!(
                        "{k}->{v} contradicts the tail, which sends {k} to {}",
                        k as i64 + shift
                    )));
                }
                continue;
            }
            if v >= image_start {
                return Err(Error::InjectivityViolation(format!(
                    "{k}->{v} collides with the tail image of {}",
                    v as i64 - shift
                )));
            }
            exceptions.push((k, v));
        }

        let mut values: Vec<u64> = exceptions.iter().map(|&(_, v)| v).collect();
        values.sort_unstable();
        if let Some(w) = values.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InjectivityViolation(format!(
                "{} is the image of two points",
                w[0]
            )));
        }

        Ok(Self::fold(exceptions, tail_start, shift))
    }

    /// Absorbs trailing pairs that continue the tail. Expects valid input.
    fn fold(mut exceptions: Vec<(u64, u64)>, mut tail_start: u64, shift: i64) -> Self {
        while let Some(&(k, v)) = exceptions.last() {
            if k + 1 == tail_start && v as i64 == k as i64 + shift {
                exceptions.pop();
                tail_start -= 1;
            } else {
                break;
            }
        }
        PartialBijection {
            exceptions,
            tail_start,
            shift,
        }
    }

    /// The identity map 𝕀.
    pub fn identity() -> Self {
        PartialBijection {
            exceptions: Vec::new(),
            tail_start: 1,
            shift: 0,
        }
    }

    /// π: n ↦ n + 1.
    pub fn pi() -> Self {
        PartialBijection {
            exceptions: Vec::new(),
            tail_start: 1,
            shift: 1,
        }
    }

    /// σ: n ↦ n − 1 for n > 1.
    pub fn sigma() -> Self {
        PartialBijection {
            exceptions: Vec::new(),
            tail_start: 2,
            shift: -1,
        }
    }

    /// Identity map restricted to `domain`.
    pub fn partial_identity(domain: &CofiniteSet) -> Self {
        let tail_start = domain.max_hole() + 1;
        let exceptions = domain.members_below(tail_start).map(|x| (x, x)).collect();
        Self::fold(exceptions, tail_start, 0)
    }

    /// The increasing bijection from `from` onto `onto`: the k-th member of
    /// `from` goes to the k-th member of `onto`.
    pub fn order_match(from: &CofiniteSet, onto: &CofiniteSet) -> Self {
        let a = from.hole_count() as i64;
        let b = onto.hole_count() as i64;
        let shift = b - a;
        let tail_start = max(
            from.max_hole() as i64 + 1,
            onto.max_hole() as i64 + 1 - shift,
        )
        .max(1) as u64;
        let exceptions = from
            .members_below(tail_start)
            .map(|x| {
                let k = from.rank(x).expect("member");
                (x, onto.kth(k))
            })
            .collect();
        Self::fold(exceptions, tail_start, shift)
    }

    /// Like [`order_match`](Self::order_match) on the unforced remainder, with
    /// the given pairs imposed. The pairs must form an injective map.
    pub fn order_match_with(
        forced: &[(u64, u64)],
        from: &CofiniteSet,
        onto: &CofiniteSet,
    ) -> Result<Self> {
        let rest = Self::order_match(
            &from.without(forced.iter().map(|&(k, _)| k)),
            &onto.without(forced.iter().map(|&(_, v)| v)),
        );
        rest.with_pairs(forced)
    }

    /// Adds pairs on points outside the domain, mapping to points outside
    /// the range. Fails if the result is not injective.
    pub fn with_pairs(&self, pairs: &[(u64, u64)]) -> Result<Self> {
        if let Some(&(k, _)) = pairs.iter().find(|&&(k, _)| self.apply(k).is_some()) {
            return Err(Error::NotAFunction(format!("{k} is already in the domain")));
        }
        let horizon = pairs
            .iter()
            .map(|&(k, _)| k + 1)
            .max()
            .unwrap_or(1)
            .max(self.tail_start);
        let mut graph = self.graph_below(horizon);
        graph.extend_from_slice(pairs);
        Self::canonicalize(&graph, horizon, self.shift)
    }

    pub fn exceptions(&self) -> &[(u64, u64)] {
        &self.exceptions
    }

    pub fn tail_start(&self) -> u64 {
        self.tail_start
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// First point of the tail image, `tail_start + shift`.
    pub fn image_start(&self) -> u64 {
        (self.tail_start as i64 + self.shift) as u64
    }

    pub fn apply(&self, n: u64) -> Option<u64> {
        if n == 0 {
            return None;
        }
        if n >= self.tail_start {
            return Some((n as i64 + self.shift) as u64);
        }
        self.exceptions
            .binary_search_by_key(&n, |&(k, _)| k)
            .ok()
            .map(|i| self.exceptions[i].1)
    }

    /// The graph of the map restricted to points below `bound`.
    pub fn graph_below(&self, bound: u64) -> Vec<(u64, u64)> {
        let mut graph: Vec<(u64, u64)> = self
            .exceptions
            .iter()
            .copied()
            .filter(|&(k, _)| k < bound)
            .collect();
        graph.extend((self.tail_start..bound).map(|n| (n, (n as i64 + self.shift) as u64)));
        graph
    }

    /// Left-to-right product: `x(αβ) = (xα)β`.
    pub fn compose(&self, other: &PartialBijection) -> PartialBijection {
        let pre_tail = max(self.tail_start as i64, other.tail_start as i64 - self.shift) as u64;
        let exceptions = self
            .graph_below(pre_tail)
            .into_iter()
            .filter_map(|(x, y)| other.apply(y).map(|z| (x, z)))
            .collect();
        let product = Self::fold(exceptions, pre_tail, self.shift + other.shift);
        debug_assert!(product.is_valid());
        product
    }

    pub fn invert(&self) -> PartialBijection {
        let mut exceptions: Vec<(u64, u64)> =
            self.exceptions.iter().map(|&(k, v)| (v, k)).collect();
        exceptions.sort_unstable();
        let inverse = Self::fold(exceptions, self.image_start(), -self.shift);
        debug_assert!(inverse.is_valid());
        inverse
    }

    /// `(threshold, offset)` with `(i)α = i + offset` for every
    /// `i ≥ threshold`; the threshold is the least one with that property
    /// holding on a full tail of the domain.
    pub fn eventual_shift(&self) -> (u64, i64) {
        (self.tail_start, self.shift)
    }

    pub fn dom(&self) -> CofiniteSet {
        let mut keys = self.exceptions.iter().map(|&(k, _)| k).peekable();
        let mut holes = Vec::new();
        for n in 1..self.tail_start {
            if keys.peek() == Some(&n) {
                keys.next();
            } else {
                holes.push(n);
            }
        }
        CofiniteSet::from_sorted_holes(holes)
    }

    pub fn ran(&self) -> CofiniteSet {
        let mut values: Vec<u64> = self.exceptions.iter().map(|&(_, v)| v).collect();
        values.sort_unstable();
        let mut values = values.into_iter().peekable();
        let mut holes = Vec::new();
        for n in 1..self.image_start() {
            if values.peek() == Some(&n) {
                values.next();
            } else {
                holes.push(n);
            }
        }
        CofiniteSet::from_sorted_holes(holes)
    }

    /// Idempotents are exactly the partial identities.
    pub fn is_idempotent(&self) -> bool {
        self.shift == 0 && self.exceptions.iter().all(|&(k, v)| k == v)
    }

    /// Membership in the submonoid of monotone elements.
    pub fn is_monotone_member(&self) -> bool {
        self.exceptions.windows(2).all(|w| w[0].1 < w[1].1)
            && self.exceptions.iter().all(|&(_, v)| v < self.image_start())
    }

    /// Units are the elements with full domain and full range.
    pub fn is_unit(&self) -> bool {
        self.shift == 0 && self.exceptions.len() as u64 + 1 == self.tail_start
    }

    /// Checks every canonical-form invariant.
    pub fn is_valid(&self) -> bool {
        match Self::canonicalize(&self.exceptions, self.tail_start, self.shift) {
            Ok(c) => c == *self,
            Err(_) => false,
        }
    }

    /// A bound beyond which two elements can no longer differ unless they
    /// already differ below it.
    pub fn horizon(&self) -> u64 {
        self.tail_start.max(self.image_start())
    }
}

impl Default for PartialBijection {
    fn default() -> Self {
        Self::identity()
    }
}

impl Mul for &PartialBijection {
    type Output = PartialBijection;

    fn mul(self, rhs: &PartialBijection) -> PartialBijection {
        self.compose(rhs)
    }
}

impl Mul for PartialBijection {
    type Output = PartialBijection;

    fn mul(self, rhs: PartialBijection) -> PartialBijection {
        self.compose(&rhs)
    }
}

impl fmt::Display for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (k, v)) in self.exceptions.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}->{v}")?;
        }
        let sign = if self.shift < 0 { '-' } else { '+' };
        write!(
            f,
            "|{}=>{sign}{}}}",
            self.tail_start,
            self.shift.unsigned_abs()
        )
    }
}
