//! Seeded generators and exhaustive enumeration of small elements.
//!
//! Distribution of [`sample_element`]: the tail start `N` is uniform on
//! `1..=max_position + 1` and the shift `d` uniform on the profile's range,
//! redrawn until `N + d` also lies in `1..=max_position + 1`. Then a number
//! `k` of mapped points below the tail is drawn uniformly up to the
//! exception bound, the `k` keys are drawn without replacement from
//! `1..N`, and their images without replacement from `1..N + d`. The result
//! is canonicalized, so keys and holes always stay within
//! `1..=max_position`.

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::element::PartialBijection;
use crate::green;
use crate::perm::FinPermutation;
use crate::set::FiniteSet;

pub type SeededRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Profile {
    /// Upper bound on the number of mapped points below the tail.
    pub max_exceptions: usize,
    /// Keys, exception values and holes all lie in `1..=max_position`.
    pub max_position: u64,
    pub min_shift: i64,
    pub max_shift: i64,
}

impl Profile {
    /// Keys, holes within `1..=positions`, `|shift| ≤ shift`.
    pub fn bounded(positions: u64, shift: i64) -> Self {
        Profile {
            max_exceptions: positions as usize,
            max_position: positions,
            min_shift: -shift,
            max_shift: shift,
        }
    }

    fn admits_some_shift(&self) -> bool {
        let top = self.max_position as i64 + 1;
        self.min_shift <= self.max_shift && self.max_shift >= -(top - 1) && self.min_shift < top
    }
}

impl Default for Profile {
    fn default() -> Self {
        Profile::bounded(8, 3)
    }
}

pub fn sample_element<R: Rng + ?Sized>(rng: &mut R, profile: &Profile) -> PartialBijection {
    assert!(
        profile.admits_some_shift(),
        "profile admits no element: {profile:?}"
    );
    let top = profile.max_position + 1;
    let (tail_start, shift) = loop {
        let n = rng.gen_range(1..=top);
        let d = rng.gen_range(profile.min_shift..=profile.max_shift);
        let image = n as i64 + d;
        if (1..=top as i64).contains(&image) {
            break (n, d);
        }
    };
    let below = tail_start - 1;
    let image_below = (tail_start as i64 + shift - 1) as u64;
    let k_max = profile
        .max_exceptions
        .min(below as usize)
        .min(image_below as usize);
    let k = rng.gen_range(0..=k_max);
    let mut keys: Vec<u64> = index::sample(rng, below as usize, k)
        .into_iter()
        .map(|i| i as u64 + 1)
        .collect();
    keys.sort_unstable();
    let values = index::sample(rng, image_below as usize, k)
        .into_iter()
        .map(|i| i as u64 + 1);
    let pairs: Vec<(u64, u64)> = keys.into_iter().zip(values).collect();
    PartialBijection::canonicalize(&pairs, tail_start, shift)
        .expect("generated pairs are injective")
}

/// Deterministic per seed.
pub fn random_element(seed: u64, profile: &Profile) -> PartialBijection {
    sample_element(&mut rng_from_seed(seed), profile)
}

/// A partial identity whose holes form a random subset of `1..=max_position`.
pub fn sample_idempotent<R: Rng + ?Sized>(rng: &mut R, max_position: u64) -> PartialBijection {
    let holes = (1..=max_position).filter(|_| rng.gen_bool(0.5));
    green::from_finset(&FiniteSet::new(holes).expect("positive"))
}

/// A uniformly random permutation of `1..=m` for `m` uniform on `0..=max_support`.
pub fn sample_permutation<R: Rng + ?Sized>(rng: &mut R, max_support: u64) -> FinPermutation {
    let m = rng.gen_range(0..=max_support);
    let mut images: Vec<u64> = (1..=m).collect();
    images.shuffle(rng);
    FinPermutation::from_pairs((1..=m).zip(images)).expect("shuffle is a bijection")
}

pub fn sample_unit<R: Rng + ?Sized>(rng: &mut R, max_support: u64) -> PartialBijection {
    green::perm_to_unit(&sample_permutation(rng, max_support))
}

/// A finite subset of `domain ∩ 1..=bound`, each point kept with probability ½.
pub fn sample_subset<R: Rng + ?Sized>(
    rng: &mut R,
    domain: &crate::set::CofiniteSet,
    bound: u64,
) -> FiniteSet {
    FiniteSet::new(
        domain
            .members_below(bound + 1)
            .filter(|_| rng.gen_bool(0.5)),
    )
    .expect("positive")
}

/// Every canonical element whose keys, exception values and holes lie in
/// `1..=max_position` and whose shift is at most `max_shift` in absolute value.
pub fn all_elements(max_position: u64, max_shift: i64) -> Vec<PartialBijection> {
    let top = max_position + 1;
    let mut out = Vec::new();
    for tail_start in 1..=top {
        for shift in -max_shift..=max_shift {
            let image = tail_start as i64 + shift;
            if !(1..=top as i64).contains(&image) {
                continue;
            }
            let keys_pool: Vec<u64> = (1..tail_start).collect();
            let values_pool: Vec<u64> = (1..image as u64).collect();
            for mask in 0u32..(1 << keys_pool.len()) {
                let keys: Vec<u64> = keys_pool
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &k)| k)
                    .collect();
                let mut images = Vec::new();
                partial_permutations(
                    &values_pool,
                    keys.len(),
                    &mut vec![false; values_pool.len()],
                    &mut Vec::new(),
                    &mut images,
                );
                for vals in images {
                    let pairs: Vec<(u64, u64)> = keys.iter().copied().zip(vals).collect();
                    let a = PartialBijection::canonicalize(&pairs, tail_start, shift)
                        .expect("enumerated pairs are injective");
                    // Skip encodings that fold to a smaller tail; they are
                    // enumerated under their canonical tail start.
                    if a.tail_start() == tail_start {
                        out.push(a);
                    }
                }
            }
        }
    }
    out
}

fn partial_permutations(
    pool: &[u64],
    len: usize,
    used: &mut Vec<bool>,
    cur: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if cur.len() == len {
        out.push(cur.clone());
        return;
    }
    for i in 0..pool.len() {
        if !used[i] {
            used[i] = true;
            cur.push(pool[i]);
            partial_permutations(pool, len, used, cur, out);
            cur.pop();
            used[i] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicyclic;
    use std::collections::HashSet;

    #[test]
    fn trivial_profile_gives_identity() {
        let p = Profile {
            max_exceptions: 0,
            max_position: 0,
            min_shift: 0,
            max_shift: 0,
        };
        for seed in 0..20 {
            assert_eq!(random_element(seed, &p), PartialBijection::identity());
        }
    }

    #[test]
    fn no_exceptions_gives_bicyclic_elements() {
        let p = Profile {
            max_exceptions: 0,
            max_position: 6,
            min_shift: -3,
            max_shift: 3,
        };
        for seed in 0..200 {
            let a = random_element(seed, &p);
            assert!(bicyclic::recognize(&a).is_some(), "{a}");
        }
    }

    #[test]
    fn samples_are_canonical_and_in_profile() {
        let p = Profile::bounded(8, 3);
        let mut rng = rng_from_seed(7);
        for _ in 0..2000 {
            let a = sample_element(&mut rng, &p);
            assert!(a.is_valid());
            assert!(a.tail_start() <= 9 && a.image_start() <= 9);
            assert!(a.shift().abs() <= 3);
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let p = Profile::default();
        assert_eq!(random_element(42, &p), random_element(42, &p));
    }

    #[test]
    fn enumeration_is_duplicate_free_and_canonical() {
        let all = all_elements(3, 1);
        let distinct: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), all.len());
        assert!(all.iter().all(PartialBijection::is_valid));
        assert!(all.contains(&PartialBijection::identity()));
        assert!(all.contains(&PartialBijection::pi()));
        assert!(all.contains(&PartialBijection::sigma()));
    }

    #[test]
    fn enumeration_covers_samples() {
        let all: HashSet<_> = all_elements(4, 2).into_iter().collect();
        let p = Profile::bounded(4, 2);
        let mut rng = rng_from_seed(3);
        for _ in 0..500 {
            assert!(all.contains(&sample_element(&mut rng, &p)));
        }
    }
}
