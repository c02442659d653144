//! Basic open sets of the two neighbourhood topologies.
//!
//! For a center α and a finite F ⊆ dom α:
//!
//! * kind `F`:  U_α(F) = {β : dom β = dom α, ran β = ran α, β = α on F}
//! * kind `WF`: U_α(F) = {β : dom β ⊆ dom α, β = α on F}
//!
//! Membership, emptiness of intersections and the refinements witnessing
//! continuity are all decided from finitely many constraints.

use std::fmt;
use std::str::FromStr;

use rand::seq::{index, SliceRandom};
use rand::Rng;

use crate::element::PartialBijection;
use crate::error::{Error, Result};
use crate::random::rng_from_seed;
use crate::set::FiniteSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    F,
    WF,
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "F" => Ok(Kind::F),
            "WF" => Ok(Kind::WF),
            _ => Err(Error::parse(0, format!("unknown neighbourhood kind `{s}`"))),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::F => "F",
            Kind::WF => "WF",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicNbhd {
    kind: Kind,
    center: PartialBijection,
    fixed: FiniteSet,
}

fn require_in_domain(a: &PartialBijection, f: &FiniteSet) -> Result<()> {
    match f.iter().find(|&x| a.apply(x).is_none()) {
        Some(x) => Err(Error::FixedSetOutsideDomain(format!(
            "{x} is not in the domain of {a}"
        ))),
        None => Ok(()),
    }
}

impl BasicNbhd {
    pub fn new(kind: Kind, center: PartialBijection, fixed: FiniteSet) -> Result<Self> {
        require_in_domain(&center, &fixed)?;
        Ok(BasicNbhd {
            kind,
            center,
            fixed,
        })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn center(&self) -> &PartialBijection {
        &self.center
    }

    pub fn fixed(&self) -> &FiniteSet {
        &self.fixed
    }

    fn agrees_on_fixed(&self, b: &PartialBijection) -> bool {
        self.fixed
            .iter()
            .all(|x| b.apply(x) == self.center.apply(x))
    }

    pub fn contains(&self, b: &PartialBijection) -> bool {
        let shape = match self.kind {
            Kind::F => b.dom() == self.center.dom() && b.ran() == self.center.ran(),
            Kind::WF => b.dom().is_subset(&self.center.dom()),
        };
        shape && self.agrees_on_fixed(b)
    }

    /// The graph of the center on the fixed set.
    fn forced(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.fixed.iter().map(|x| {
            (
                x,
                self.center
                    .apply(x)
                    .expect("fixed points lie in the domain"),
            )
        })
    }

    /// A member of `U ∩ V`, or `None` when the intersection is empty.
    pub fn intersection_witness(&self, other: &BasicNbhd) -> Result<Option<PartialBijection>> {
        if self.kind != other.kind {
            return Err(Error::KindMismatch);
        }
        let (a, b) = (&self.center, &other.center);
        if self.kind == Kind::F && (a.dom() != b.dom() || a.ran() != b.ran()) {
            return Ok(None);
        }
        if self.fixed.iter().any(|x| b.apply(x).is_none())
            || other.fixed.iter().any(|x| a.apply(x).is_none())
        {
            return Ok(None);
        }
        let mut forced: Vec<(u64, u64)> = self.forced().chain(other.forced()).collect();
        forced.sort_unstable();
        forced.dedup();
        let functional = forced.windows(2).all(|w| w[0].0 != w[1].0);
        let mut images: Vec<u64> = forced.iter().map(|&(_, v)| v).collect();
        images.sort_unstable();
        let injective = images.windows(2).all(|w| w[0] != w[1]);
        if !functional || !injective {
            return Ok(None);
        }
        let (from, onto) = match self.kind {
            Kind::F => (a.dom(), a.ran()),
            Kind::WF => {
                let common = a.dom().intersection(&b.dom());
                (common.clone(), common)
            }
        };
        let witness = PartialBijection::order_match_with(&forced, &from, &onto)?;
        debug_assert!(self.contains(&witness) && other.contains(&witness));
        Ok(Some(witness))
    }

    pub fn intersect_empty(&self, other: &BasicNbhd) -> Result<bool> {
        Ok(self.intersection_witness(other)?.is_none())
    }

    /// `U_{α⁻¹}((F)α)`, which contains the inverse of every member of a
    /// kind-`F` neighbourhood.
    pub fn inversion_image(&self) -> Result<BasicNbhd> {
        if self.kind != Kind::F {
            return Err(Error::KindMismatch);
        }
        let image = FiniteSet::new(self.forced().map(|(_, v)| v))?;
        BasicNbhd::new(Kind::F, self.center.invert(), image)
    }

    /// A pseudo-random member, deterministic per seed.
    pub fn random_member(&self, seed: u64) -> PartialBijection {
        self.sample_member(&mut rng_from_seed(seed))
    }

    /// Re-matches a finite window of the domain outside F. Kind `F` permutes
    /// the images of the window among themselves; kind `WF` may also send
    /// window points into holes of the range and drop window points from the
    /// domain.
    pub fn sample_member<R: Rng + ?Sized>(&self, rng: &mut R) -> PartialBijection {
        let a = &self.center;
        let bound = a.tail_start().max(self.fixed.max_elem().unwrap_or(0) + 1) + 3;
        let window: Vec<u64> = a
            .dom()
            .members_below(bound + 1)
            .filter(|&x| !self.fixed.contains(x))
            .collect();
        let mut pool: Vec<u64> = window
            .iter()
            .map(|&x| a.apply(x).expect("in domain"))
            .collect();
        let mut graph: Vec<(u64, u64)> = self.forced().collect();
        match self.kind {
            Kind::F => {
                pool.shuffle(rng);
                graph.extend(window.iter().copied().zip(pool));
            }
            Kind::WF => {
                pool.extend(a.ran().holes());
                let picks = index::sample(rng, pool.len(), window.len());
                for (x, i) in window.iter().copied().zip(picks) {
                    if rng.gen_ratio(2, 3) {
                        graph.push((x, pool[i]));
                    }
                }
            }
        }
        let member = PartialBijection::canonicalize(&graph, bound + 1, a.shift())
            .expect("window re-matching stays injective");
        debug_assert!(self.contains(&member));
        member
    }
}

impl fmt::Display for BasicNbhd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U[{}]_{}({})", self.kind, self.center, self.fixed)
    }
}

/// Fixed sets for the two factors of a product neighbourhood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductRefinement {
    pub left: FiniteSet,
    pub right: FiniteSet,
}

/// Fixed sets `(F₁, F₂)` with `U_α(F₁)·U_β(F₂) ⊆ U_{αβ}(F)`.
///
/// `F₂` always contains `(F)α`, and `F₁` contains `F`. Those alone do not
/// suffice: a member of `U_α(F)` may send a point of dom α into a hole of
/// dom β that α avoids (or the reverse), changing the domain of the
/// product. `F₁` therefore also pins the preimages under α of
/// `ran α ∖ dom β`, and for kind `F` the set `F₂` also pins
/// `dom β ∖ ran α`, so that the range of the product is preserved.
pub fn product_refinement(
    kind: Kind,
    a: &PartialBijection,
    b: &PartialBijection,
    f: &FiniteSet,
) -> Result<ProductRefinement> {
    let ab = a.compose(b);
    require_in_domain(&ab, f)?;
    let a_inv = a.invert();
    let pinned = a
        .ran()
        .difference(&b.dom())
        .iter()
        .map(|y| a_inv.apply(y).expect("y is in ran α"))
        .collect::<Vec<_>>();
    let left = f.union(&FiniteSet::new(pinned)?);
    let mut right = FiniteSet::new(f.iter().map(|x| a.apply(x).expect("F ⊆ dom αβ ⊆ dom α")))?;
    if kind == Kind::F {
        right = right.union(&b.dom().difference(&a.ran()));
    }
    Ok(ProductRefinement { left, right })
}

/// Fixed sets `(F_α, F_β)` with `U_α(F_α) ∩ U_β(F_β) = ∅`; least points are
/// chosen throughout.
pub fn separation_witness(
    kind: Kind,
    a: &PartialBijection,
    b: &PartialBijection,
) -> Result<(FiniteSet, FiniteSet)> {
    if a == b {
        return Err(Error::EqualElements);
    }
    let (da, db) = (a.dom(), b.dom());
    let single = |x: u64| FiniteSet::new([x]).expect("positive");
    let least_disagreement = || {
        let bound = a.horizon().max(b.horizon());
        (1..=bound)
            .find(|&x| da.contains(x) && a.apply(x) != b.apply(x))
            .expect("distinct elements with equal domains differ below the larger tail")
    };
    let pair = match kind {
        Kind::F if da != db || a.ran() != b.ran() => (FiniteSet::empty(), FiniteSet::empty()),
        _ if da == db => {
            let x = least_disagreement();
            (single(x), single(x))
        }
        Kind::F => unreachable!("kind F with distinct domains is handled above"),
        Kind::WF => {
            let alpha_only = da.difference(&db);
            let beta_only = db.difference(&da);
            match (alpha_only.elems().first(), beta_only.elems().first()) {
                // dom α ⊊ dom β
                (None, Some(&x)) => (single(da.kth(1)), single(x)),
                // dom β ⊊ dom α
                (Some(&x), None) => (single(x), single(db.kth(1))),
                // incomparable
                (Some(&y), Some(&x)) => (single(y), single(x)),
                (None, None) => unreachable!("domains differ"),
            }
        }
    };
    debug_assert!({
        let u = BasicNbhd::new(kind, a.clone(), pair.0.clone()).expect("fixed ⊆ dom");
        let v = BasicNbhd::new(kind, b.clone(), pair.1.clone()).expect("fixed ⊆ dom");
        u.intersect_empty(&v).expect("same kind")
    });
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::decode;

    fn el(s: &str) -> PartialBijection {
        decode(s).unwrap()
    }

    fn fs(xs: &[u64]) -> FiniteSet {
        FiniteSet::new(xs.iter().copied()).unwrap()
    }

    fn nbhd(kind: Kind, center: &str, fixed: &[u64]) -> BasicNbhd {
        BasicNbhd::new(kind, el(center), fs(fixed)).unwrap()
    }

    #[test]
    fn fixed_set_must_lie_in_domain() {
        assert!(matches!(
            BasicNbhd::new(Kind::F, PartialBijection::sigma(), fs(&[1])),
            Err(Error::FixedSetOutsideDomain(_))
        ));
    }

    #[test]
    fn contains_examples() {
        let u = nbhd(Kind::F, "I", &[1]);
        assert!(u.contains(&PartialBijection::identity()));
        assert!(u.contains(&el("{1->1,2->3,3->2|4=>+0}")));
        assert!(!u.contains(&el("{2->3,3->2|4=>+0}")));
        assert!(!u.contains(&el("{1->2,2->1|3=>+0}")));

        let qp = el("{|2=>+0}");
        assert!(nbhd(Kind::WF, "I", &[2]).contains(&qp));
        assert!(!nbhd(Kind::F, "I", &[2]).contains(&qp));
    }

    #[test]
    fn product_refinement_examples() {
        let (p, q) = (PartialBijection::pi(), PartialBijection::sigma());
        let r = product_refinement(Kind::F, &p, &q, &fs(&[1])).unwrap();
        assert_eq!(r.right, fs(&[2]));
        assert_eq!(r.left, fs(&[1]));
        let i = PartialBijection::identity();
        let r = product_refinement(Kind::F, &i, &i, &FiniteSet::empty()).unwrap();
        assert_eq!(
            r,
            ProductRefinement {
                left: FiniteSet::empty(),
                right: FiniteSet::empty()
            }
        );
        assert!(matches!(
            product_refinement(Kind::WF, &i, &q, &fs(&[1])),
            Err(Error::FixedSetOutsideDomain(_))
        ));
    }

    #[test]
    fn image_of_fixed_set_alone_is_not_enough() {
        // α = 𝕀, β = id on ℕ∖{1}, F = ∅: swapping 1 and 4 near 𝕀 moves the
        // hole of the product's domain from 1 to 4.
        let i = PartialBijection::identity();
        let qp = el("{|2=>+0}");
        let swap = el("{1->4,2->2,3->3,4->1|5=>+0}");
        for kind in [Kind::F, Kind::WF] {
            let target = BasicNbhd::new(kind, i.compose(&qp), FiniteSet::empty()).unwrap();
            assert!(BasicNbhd::new(kind, i.clone(), FiniteSet::empty())
                .unwrap()
                .contains(&swap));
            assert!(!target.contains(&swap.compose(&qp)));

            let r = product_refinement(kind, &i, &qp, &FiniteSet::empty()).unwrap();
            assert_eq!(r.left, fs(&[1]));
            assert!(!BasicNbhd::new(kind, i.clone(), r.left)
                .unwrap()
                .contains(&swap));
        }
    }

    #[test]
    fn range_pinning_for_kind_f() {
        // α = π misses 1 in its range; β = 𝕀 has 1 in its domain. A member of
        // U_𝕀 sending 1 elsewhere would change the range of the product.
        let p = PartialBijection::pi();
        let i = PartialBijection::identity();
        let r = product_refinement(Kind::F, &p, &i, &FiniteSet::empty()).unwrap();
        assert_eq!(r.right, fs(&[1]));
        let r = product_refinement(Kind::WF, &p, &i, &FiniteSet::empty()).unwrap();
        assert!(r.right.is_empty());
    }

    #[test]
    fn inversion_image_examples() {
        let u = nbhd(Kind::F, "I", &[1]);
        assert_eq!(u.inversion_image().unwrap(), u);
        let u = nbhd(Kind::F, "p", &[1]);
        assert_eq!(u.inversion_image().unwrap(), nbhd(Kind::F, "q", &[2]));
        assert!(nbhd(Kind::WF, "I", &[]).inversion_image().is_err());
    }

    #[test]
    fn intersect_examples() {
        let qp = "{|2=>+0}";
        assert!(nbhd(Kind::WF, "I", &[1])
            .intersect_empty(&nbhd(Kind::WF, qp, &[2]))
            .unwrap());
        let w = nbhd(Kind::WF, "I", &[2])
            .intersection_witness(&nbhd(Kind::WF, qp, &[3]))
            .unwrap()
            .unwrap();
        assert_eq!(w, el(qp));
        assert!(nbhd(Kind::F, "p", &[])
            .intersect_empty(&nbhd(Kind::F, "q", &[]))
            .unwrap());
        assert!(matches!(
            nbhd(Kind::F, "p", &[]).intersect_empty(&nbhd(Kind::WF, "q", &[])),
            Err(Error::KindMismatch)
        ));
    }

    #[test]
    fn intersect_detects_conflicting_forced_values() {
        let u = nbhd(Kind::F, "I", &[1]);
        let v = nbhd(Kind::F, "{1->2,2->1|3=>+0}", &[2]);
        // Forced 1->1 and 2->1 clash on the value 1.
        assert!(u.intersect_empty(&v).unwrap());
        let v = nbhd(Kind::F, "{1->2,2->1|3=>+0}", &[3]);
        assert!(!u.intersect_empty(&v).unwrap());
    }

    #[test]
    fn separation_examples() {
        let i = PartialBijection::identity();
        let swap = el("{1->2,2->1|3=>+0}");
        assert_eq!(
            separation_witness(Kind::WF, &i, &swap).unwrap(),
            (fs(&[1]), fs(&[1]))
        );
        let qp = el("{|2=>+0}");
        assert_eq!(
            separation_witness(Kind::WF, &i, &qp).unwrap(),
            (fs(&[1]), fs(&[2]))
        );
        assert_eq!(
            separation_witness(Kind::WF, &qp, &i).unwrap(),
            (fs(&[2]), fs(&[1]))
        );
        let (p, q) = (PartialBijection::pi(), PartialBijection::sigma());
        assert_eq!(
            separation_witness(Kind::F, &p, &q).unwrap(),
            (FiniteSet::empty(), FiniteSet::empty())
        );
        assert!(matches!(
            separation_witness(Kind::F, &p, &p),
            Err(Error::EqualElements)
        ));
        // Incomparable domains.
        let a = el("{|2=>+0}");
        let b = el("{1->1|3=>+0}");
        assert_eq!(
            separation_witness(Kind::WF, &a, &b).unwrap(),
            (fs(&[2]), fs(&[1]))
        );
    }

    #[test]
    fn members_are_members() {
        for kind in [Kind::F, Kind::WF] {
            let u = nbhd(kind, "{1->3,4->1|6=>-1}", &[4]);
            for seed in 0..100 {
                assert!(u.contains(&u.random_member(seed)));
            }
        }
        let u = nbhd(Kind::F, "I", &[1]);
        for seed in 0..50 {
            let m = u.random_member(seed);
            assert!(m.is_unit());
            assert_eq!(m.apply(1), Some(1));
        }
        let u = nbhd(Kind::WF, "I", &[]);
        assert!((0..50).map(|s| u.random_member(s)).any(|m| !m.is_unit()));
    }
}
