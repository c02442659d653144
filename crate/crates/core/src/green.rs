//! Green's relations, the semilattice of idempotents and maximal subgroups.
//!
//! In this monoid the relations reduce to comparisons of domains and ranges:
//! α ℛ β iff dom α = dom β, α ℒ β iff ran α = ran β, and every pair of
//! elements is 𝒟-related. The witness constructions below all produce the
//! order-matching (monotone) representative.

use crate::element::PartialBijection;
use crate::error::{Error, Result};
use crate::perm::FinPermutation;
use crate::set::{CofiniteSet, FiniteSet};

pub fn is_r(a: &PartialBijection, b: &PartialBijection) -> bool {
    a.dom() == b.dom()
}

pub fn is_l(a: &PartialBijection, b: &PartialBijection) -> bool {
    a.ran() == b.ran()
}

pub fn is_h(a: &PartialBijection, b: &PartialBijection) -> bool {
    is_r(a, b) && is_l(a, b)
}

/// An element μ with α ℛ μ ℒ β.
pub fn d_witness(a: &PartialBijection, b: &PartialBijection) -> PartialBijection {
    PartialBijection::order_match(&a.dom(), &b.ran())
}

fn require_idempotent(e: &PartialBijection) -> Result<()> {
    if e.is_idempotent() {
        Ok(())
    } else {
        Err(Error::NotIdempotent(e.to_string()))
    }
}

/// Natural order on idempotents: ε ≤ ι iff dom ε ⊆ dom ι.
pub fn nat_leq(e: &PartialBijection, i: &PartialBijection) -> Result<bool> {
    require_idempotent(e)?;
    require_idempotent(i)?;
    Ok(e.dom().is_subset(&i.dom()))
}

pub fn meet(e: &PartialBijection, i: &PartialBijection) -> Result<PartialBijection> {
    require_idempotent(e)?;
    require_idempotent(i)?;
    Ok(e.compose(i))
}

/// ε ↦ ℕ ∖ dom ε.
pub fn to_finset(e: &PartialBijection) -> Result<FiniteSet> {
    require_idempotent(e)?;
    Ok(e.dom().hole_set())
}

/// The partial identity on ℕ ∖ F.
pub fn from_finset(f: &FiniteSet) -> PartialBijection {
    PartialBijection::partial_identity(&CofiniteSet::from_sorted_holes(f.elems().to_vec()))
}

/// α with αα⁻¹ = ε and α⁻¹α = ι.
pub fn connecting_element(e: &PartialBijection, i: &PartialBijection) -> Result<PartialBijection> {
    require_idempotent(e)?;
    require_idempotent(i)?;
    Ok(PartialBijection::order_match(&e.dom(), &i.dom()))
}

/// `(γ, δ)` with γαδ = β.
///
/// γ sends the k-th member of dom β to the k-th member of dom α; δ sends the
/// image under α of the k-th member of dom α to the image under β of the
/// k-th member of dom β.
pub fn simplicity_witness(
    a: &PartialBijection,
    b: &PartialBijection,
) -> (PartialBijection, PartialBijection) {
    let gamma = PartialBijection::order_match(&b.dom(), &a.dom());
    let delta = a.invert().compose(&gamma.invert()).compose(b);
    (gamma, delta)
}

/// The first `count` links of a descending ω-chain starting at ε; each step
/// drops the least member of the previous domain.
pub fn omega_chain(e: &PartialBijection, count: usize) -> Result<Vec<PartialBijection>> {
    require_idempotent(e)?;
    let mut chain = Vec::with_capacity(count);
    let mut holes = e.dom().hole_set();
    for step in 0..count {
        if step > 0 {
            let least = CofiniteSet::from_sorted_holes(holes.elems().to_vec()).kth(1);
            holes.insert(least);
        }
        chain.push(from_finset(&holes));
    }
    Ok(chain)
}

pub fn unit_to_perm(a: &PartialBijection) -> Result<FinPermutation> {
    if !a.is_unit() {
        return Err(Error::NotAUnit(a.to_string()));
    }
    FinPermutation::from_pairs(a.exceptions().iter().copied())
}

pub fn perm_to_unit(p: &FinPermutation) -> PartialBijection {
    let bound = p.support().last().map_or(1, |m| m + 1);
    let graph: Vec<(u64, u64)> = (1..bound).map(|x| (x, p.apply(x))).collect();
    PartialBijection::canonicalize(&graph, bound, 0).expect("permutations are units")
}

fn require_h_class(e: &PartialBijection, a: &PartialBijection) -> Result<CofiniteSet> {
    require_idempotent(e)?;
    let dom = e.dom();
    if a.dom() != dom || a.ran() != dom {
        return Err(Error::NotInHClass(e.to_string()));
    }
    Ok(dom)
}

/// Transports α from the maximal subgroup H(ε) to a permutation of ℕ by
/// re-indexing dom ε along its increasing enumeration.
pub fn h_class_iso(e: &PartialBijection, a: &PartialBijection) -> Result<FinPermutation> {
    let dom = require_h_class(e, a)?;
    // Beyond this point α is the identity on dom ε.
    let bound = a.tail_start();
    let pairs = dom.members_below(bound).map(|x| {
        let y = a.apply(x).expect("x is in dom α");
        (dom.rank(x).expect("member"), dom.rank(y).expect("member"))
    });
    FinPermutation::from_pairs(pairs)
}

/// Inverse of [`h_class_iso`].
pub fn h_class_element(e: &PartialBijection, p: &FinPermutation) -> Result<PartialBijection> {
    require_idempotent(e)?;
    let dom = e.dom();
    let pairs: Vec<(u64, u64)> = p.moved().map(|(i, j)| (dom.kth(i), dom.kth(j))).collect();
    let moved: Vec<u64> = pairs.iter().map(|&(x, _)| x).collect();
    let rest = e.compose(&PartialBijection::partial_identity(
        &CofiniteSet::full().without(moved),
    ));
    rest.with_pairs(&pairs)
}
