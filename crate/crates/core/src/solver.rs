//! Solution sets of the one-sided equations α·χ = β and χ·α = β.
//!
//! A solution of α·χ = β exists only when dom β ⊆ dom α. On the image
//! (dom β)α it is forced to agree with α⁻¹β; off ran α it may be extended by
//! any injection from a subset S of the finite set ℕ ∖ ran α into the finite
//! set ℕ ∖ ran β. Every candidate is re-checked by composition.

use crate::element::PartialBijection;
use crate::green;

/// Complete, duplicate-free solution set, sorted by encoded text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet {
    pub solutions: Vec<PartialBijection>,
    /// `(|ℕ ∖ ran α|, |ℕ ∖ ran β|)` for the right equation; for the left
    /// equation the same pair computed on the inverted problem.
    pub free_slots: (usize, usize),
}

impl SolutionSet {
    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    pub fn contains(&self, x: &PartialBijection) -> bool {
        self.solutions.contains(x)
    }

    fn sort(&mut self) {
        self.solutions.sort_by_cached_key(|s| s.to_string());
        self.solutions.dedup();
    }
}

/// Subsets of `items` of every size, by size and then lexicographically.
fn subsets_by_size(items: &[u64]) -> Vec<Vec<u64>> {
    fn choose(items: &[u64], k: usize, from: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in from..items.len() {
            cur.push(items[i]);
            choose(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for k in 0..=items.len() {
        choose(items, k, 0, &mut Vec::new(), &mut out);
    }
    out
}

/// Injections from a `len`-element sequence into `targets`, lexicographic.
fn injections(len: usize, targets: &[u64]) -> Vec<Vec<u64>> {
    fn go(
        len: usize,
        targets: &[u64],
        used: &mut Vec<bool>,
        cur: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for (i, &t) in targets.iter().enumerate() {
            if !used[i] {
                used[i] = true;
                cur.push(t);
                go(len, targets, used, cur, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(
        len,
        targets,
        &mut vec![false; targets.len()],
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// `{χ : α·χ = β}`.
pub fn solve_right(a: &PartialBijection, b: &PartialBijection) -> SolutionSet {
    let free_from: Vec<u64> = a.ran().holes().to_vec();
    let free_to: Vec<u64> = b.ran().holes().to_vec();
    let mut set = SolutionSet {
        solutions: Vec::new(),
        free_slots: (free_from.len(), free_to.len()),
    };
    if !b.dom().is_subset(&a.dom()) {
        return set;
    }
    let core = a.invert().compose(b);
    for slots in subsets_by_size(&free_from) {
        for images in injections(slots.len(), &free_to) {
            let pairs: Vec<(u64, u64)> = slots.iter().copied().zip(images).collect();
            let Ok(candidate) = core.with_pairs(&pairs) else {
                continue;
            };
            if a.compose(&candidate) == *b {
                set.solutions.push(candidate);
            }
        }
    }
    set.sort();
    set
}

/// `{χ : χ·α = β}`, via (χα)⁻¹ = α⁻¹χ⁻¹.
pub fn solve_left(a: &PartialBijection, b: &PartialBijection) -> SolutionSet {
    let dual = solve_right(&a.invert(), &b.invert());
    let mut set = SolutionSet {
        solutions: dual
            .solutions
            .iter()
            .map(PartialBijection::invert)
            .collect(),
        free_slots: dual.free_slots,
    };
    set.solutions.retain(|x| x.compose(a) == *b);
    set.sort();
    set
}

/// Number of injections from an `s`-subset of `a` slots into `b` targets,
/// summed over `s`: Σ C(a,s)·b!/(b−s)!.
pub fn count_partial_injections(a: usize, b: usize) -> u128 {
    let mut total: u128 = 0;
    let mut binom: u128 = 1; // C(a, s)
    let mut falling: u128 = 1; // b!/(b−s)!
    for s in 0..=a.min(b) {
        total += binom * falling;
        binom = binom * (a - s) as u128 / (s + 1) as u128;
        falling *= (b - s) as u128;
    }
    total
}

/// `|{χ : α·χ = β}|` without enumerating.
pub fn count_right(a: &PartialBijection, b: &PartialBijection) -> u128 {
    if !b.dom().is_subset(&a.dom()) {
        return 0;
    }
    count_partial_injections(a.ran().hole_count(), b.ran().hole_count())
}

/// `|{χ : χ·α = β}|` without enumerating.
pub fn count_left(a: &PartialBijection, b: &PartialBijection) -> u128 {
    count_right(&a.invert(), &b.invert())
}

/// Both one-sided solution sets for a pair, as in the finiteness property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FReport {
    pub right: SolutionSet,
    pub left: SolutionSet,
}

impl FReport {
    pub fn cardinalities(&self) -> (usize, usize) {
        (self.right.len(), self.left.len())
    }
}

pub fn check_f_property(a: &PartialBijection, b: &PartialBijection) -> FReport {
    FReport {
        right: solve_right(a, b),
        left: solve_left(a, b),
    }
}

/// A pair `(c, d)` with c·α·d = β, and whether that product was confirmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SWitness {
    pub c: PartialBijection,
    pub d: PartialBijection,
    pub verified: bool,
}

pub fn check_s_property(a: &PartialBijection, b: &PartialBijection) -> SWitness {
    let (c, d) = green::simplicity_witness(a, b);
    let verified = c.compose(a).compose(&d) == *b;
    SWitness { c, d, verified }
}
