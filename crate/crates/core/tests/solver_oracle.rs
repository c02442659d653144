//! The solver against brute-force search over a bounded universe.

use std::collections::{BTreeMap, BTreeSet};

use cofinite::random::{all_elements, rng_from_seed, sample_element, Profile};
use cofinite::solver::{count_left, count_right, solve_left, solve_right};
use cofinite::PartialBijection;
use rand::Rng;

fn universe() -> Vec<PartialBijection> {
    all_elements(4, 2)
}

fn encoded(xs: impl IntoIterator<Item = PartialBijection>) -> BTreeSet<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}

#[test]
fn universe_has_expected_shape() {
    let u = universe();
    assert!(u.len() > 300 && u.len() < 10_000, "{}", u.len());
    assert!(u.iter().all(PartialBijection::is_valid));
}

#[test]
fn solve_right_matches_brute_force() {
    let u = universe();
    let members: BTreeSet<String> = encoded(u.iter().cloned());
    for a in u.iter() {
        let mut by_product: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
        for x in &u {
            by_product
                .entry(a.compose(x).to_string())
                .or_default()
                .insert(x.to_string());
        }
        for (b, brute) in by_product {
            let b = cofinite::codec::decode(&b).unwrap();
            let solved = solve_right(a, &b);
            let in_universe: BTreeSet<String> = encoded(solved.solutions.iter().cloned())
                .into_iter()
                .filter(|s| members.contains(s))
                .collect();
            assert_eq!(in_universe, brute, "α = {a}, β = {b}");
            assert_eq!(count_right(a, &b), solved.len() as u128);
            for x in &solved.solutions {
                assert_eq!(&a.compose(x), &b);
            }
        }
    }
}

#[test]
fn solve_left_matches_brute_force() {
    let u = universe();
    let members: BTreeSet<String> = encoded(u.iter().cloned());
    for a in u.iter() {
        let mut by_product: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
        for x in &u {
            by_product
                .entry(x.compose(a).to_string())
                .or_default()
                .insert(x.to_string());
        }
        for (b, brute) in by_product {
            let b = cofinite::codec::decode(&b).unwrap();
            let solved = solve_left(a, &b);
            let in_universe: BTreeSet<String> = encoded(solved.solutions.iter().cloned())
                .into_iter()
                .filter(|s| members.contains(s))
                .collect();
            assert_eq!(in_universe, brute, "α = {a}, β = {b}");
            assert_eq!(count_left(a, &b), solved.len() as u128);
        }
    }
}

#[test]
fn empty_when_domain_not_contained() {
    let u = universe();
    let mut rng = rng_from_seed(11);
    let mut checked = 0;
    while checked < 200 {
        let a = &u[rng.gen_range(0..u.len())];
        let b = &u[rng.gen_range(0..u.len())];
        if b.dom().is_subset(&a.dom()) {
            continue;
        }
        assert!(solve_right(a, b).is_empty());
        assert!(u.iter().all(|x| a.compose(x) != *b));
        checked += 1;
    }
}

#[test]
fn duality() {
    let p = Profile::bounded(6, 2);
    let mut rng = rng_from_seed(5);
    for _ in 0..300 {
        let a = sample_element(&mut rng, &p);
        let x = sample_element(&mut rng, &p);
        let b = x.compose(&a);
        let left = solve_left(&a, &b);
        let mut dual: Vec<PartialBijection> = solve_right(&a.invert(), &b.invert())
            .solutions
            .iter()
            .map(PartialBijection::invert)
            .collect();
        dual.sort_by_key(|s| s.to_string());
        assert_eq!(left.solutions, dual);
        assert!(left.contains(&x));
    }
}

#[test]
fn solvers_match_search_on_sampled_larger_universe() {
    use std::collections::{HashMap, HashSet};

    let u = all_elements(5, 2);
    let members: HashSet<&PartialBijection> = u.iter().collect();
    let mut rng = rng_from_seed(23);
    for _ in 0..40 {
        let a = &u[rng.gen_range(0..u.len())];
        let mut right: HashMap<PartialBijection, HashSet<&PartialBijection>> = HashMap::new();
        let mut left: HashMap<PartialBijection, HashSet<&PartialBijection>> = HashMap::new();
        for x in &u {
            right.entry(a.compose(x)).or_default().insert(x);
            left.entry(x.compose(a)).or_default().insert(x);
        }
        for (b, brute) in right {
            let solved = solve_right(a, &b);
            let found: HashSet<&PartialBijection> = solved
                .solutions
                .iter()
                .filter(|s| members.contains(s))
                .collect();
            assert_eq!(found, brute, "α = {a}, β = {b}");
        }
        for (b, brute) in left {
            let solved = solve_left(a, &b);
            let found: HashSet<&PartialBijection> = solved
                .solutions
                .iter()
                .filter(|s| members.contains(s))
                .collect();
            assert_eq!(found, brute, "α = {a}, β = {b}");
        }
    }
}
