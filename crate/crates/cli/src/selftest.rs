//! Seeded self-test harness.
//!
//! Every suite draws its own generator from the seed and the suite's
//! position, so reports are reproducible and independent of suite order.

use std::fmt;

use cofinite::random::{
    rng_from_seed, sample_element, sample_idempotent, sample_permutation, Profile, SeededRng,
};
use cofinite::set::FiniteSet;
use cofinite::solver::{count_right, solve_left, solve_right};
use cofinite::topology::{product_refinement, separation_witness};
use cofinite::{bicyclic, codec, green, BasicNbhd, BicyclicWord, Kind, PartialBijection};
use rand::Rng;

use crate::expr::eval_expr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checks: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub seed: u64,
    pub iterations: usize,
    pub suites: Vec<SuiteResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn failed_suites(&self) -> impl Iterator<Item = &SuiteResult> {
        self.suites.iter().filter(|s| !s.passed())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "selftest seed={} iterations={}",
            self.seed, self.iterations
        )?;
        for s in &self.suites {
            let status = if s.passed() { "PASS" } else { "FAIL" };
            write!(
                f,
                "{status} {:<28} checks={} failures={}",
                s.name, s.checks, s.failures
            )?;
            if let Some(msg) = &s.first_failure {
                write!(f, "  first: {msg}")?;
            }
            writeln!(f)?;
        }
        let failed = self.failed_suites().count();
        if failed == 0 {
            write!(f, "all {} suites passed", self.suites.len())
        } else {
            write!(f, "{failed} of {} suites failed", self.suites.len())
        }
    }
}

struct Suite {
    result: SuiteResult,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite {
            result: SuiteResult {
                name,
                checks: 0,
                failures: 0,
                first_failure: None,
            },
        }
    }

    fn check(&mut self, ok: bool, context: impl FnOnce() -> String) {
        self.result.checks += 1;
        if !ok {
            self.result.failures += 1;
            if self.result.first_failure.is_none() {
                self.result.first_failure = Some(context());
            }
        }
    }
}

type SuiteFn = fn(&mut Suite, &mut SeededRng, usize);

const SUITES: &[(&str, SuiteFn)] = &[
    ("inverse semigroup laws", laws),
    ("idempotents", idempotents),
    ("natural order", natural_order),
    ("finite-set anti-isomorphism", finsets),
    ("omega chains", omega_chains),
    ("connecting elements", connecting),
    ("simplicity witness", simplicity),
    ("R, L, H relations", relations),
    ("D witness", d_witness),
    ("equation solving", solving),
    ("units and permutations", units),
    ("eventual shift", eventual_shift),
    ("projection idempotent", projection),
    ("bicyclic embedding", bicyclic_embedding),
    ("neighbourhood calculus", neighbourhoods),
    ("continuity of products", products),
    ("separation", separation),
    ("codec and expressions", codec_round_trip),
];

/// Runs every suite. `iterations` must be at least 1.
pub fn run_selftest(seed: u64, iterations: usize) -> Report {
    assert!(iterations >= 1, "at least one iteration is required");
    let suites = SUITES
        .iter()
        .enumerate()
        .map(|(i, &(name, run))| {
            let mut rng = rng_from_seed(seed ^ (i as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15));
            let mut suite = Suite::new(name);
            run(&mut suite, &mut rng, iterations);
            suite.result
        })
        .collect();
    Report {
        seed,
        iterations,
        suites,
    }
}

fn element(rng: &mut SeededRng) -> PartialBijection {
    sample_element(rng, &Profile::default())
}

fn idempotent(rng: &mut SeededRng) -> PartialBijection {
    sample_idempotent(rng, 8)
}

fn laws(s: &mut Suite, rng: &mut SeededRng, n: usize) {
    for _ in 0..n {
        let (a, b, c) = (element(rng), element(rng), element(rng));
        s.check(
            a.compose(&b).compose(&c) == a.compose(&b.compose(&c)),
            || format!("associativity fails for {a}, {b}, {c}"),
        );
        s.check(a.compose(&a.invert()).compose(&a) == a, || {
            format!("aa'a != a for {a}")
        });
        s.check(
            a.compose(&b).invert() == b.invert().compose(&a.invert()),
            || format!("(ab)' != b'a' for {a}, {b}"),
        );
        let (e, i) = (idempotent(rng), idempotent(rng));
        s.check(e.compose(&i) == i.compose(&e), || {
            format!("{e} and {i} do not commute")
        });
    }
}

fn idempotents(s: &mut Suite, rng: &mut SeededRng, n: usize) {
    for k in 0..n {
        let a = if k % 2 == 0 {
            element(rng)
        } else {
            idempotent(rng)
        };
        s.check(a.is_idempotent() == (a.compose(&a) == a), || {
            format!("predicate wrong on {a}")
        });
    }
}

fn natural_order(s: &mut Suite, rng: &mut SeededRng, n: usize) {
    for _ in 0..n {
        let (e, i) = (idempotent(rng), idempotent(rng));
        let leq = green::nat_leq(&e, &i).expect("idempotents");
        s.check(leq == (e.compose(&i) == e), || {
            format!("order disagrees on {e}, {i}")
        });
    }
}

fn finsets(s: &mut Suite, rng: &mut SeededRng, n: usize) {
    for _ in 0..n {
        let (e, i) = (idempotent(rng), idempotent(rng));
        let fe = green::to_finset(&e).expect("idempotent");
        let fi = green::to_finset(&i).expect("idempotent");
        s.check(green::from_finset(&fe) == e, || {
            format!("round trip fails on {e}")
        });
        let m = green::meet(&e, &i).expect("idempotents");
        s.check(
            green::to_finset(&m).expect("idempotent") == fe.union(&fi),
            || format!("meet of {e}, {i} is not the union"),
        );
        let leq = green::nat_leq(&e, &i).expect("idempotents");
        s.check(leq == fi.is_subset(&fe), || {
            format!("order not reversed on {e}, {i}")
        });
    }
}

fn omega_chains(s: &mut Suite, rng: &mut SeededRng, n: usize) {
    for k in 0..n {
        let start = if k == 0 {
            PartialBijection::identity()
        } else {
            idempotent(rng)
        };
        let chain = green::omega_chain(&start, 20).expect("idempotent");
        let base = green::to_finset(&start).expect("idempotent").len();
        for (j, link) in chain.iter().enumerate() {
            let corank = green::to_finset(link).expect("idempotent").len();
            s.check(corank == base + j, || {
                format!("co-rank {corank} at step {j} from {start}")
            });
        }
        for w in chain.windows(2) {
            let strict = green::nat_leq(&w[1], &w[0]).expect("idempotents") && w[0] != w[1];
            s.check(strict, || {
                format!("{} is not strictly below {}", w[1], w[0])
            });
        }
    }
}

fn connecting(s: &mut Suite, rng: &mut SeededRng, n: usize) {
    for _ in 0..n {
        let (e, i) = (idempotent(rng), idempotent(rng));
        let a = green::connecting_element(&e, &i).expect("idempotents");
        s.check(
            a.compose(&a.invert()) == e && a.invert().compose(&a) == i,
            || format!("{a} does not connect {e} to {i}"),
        );
        s.check(a.is_monotone_member(), || format!("{a} is not monotone"));
    }
}

fn simplicity(s: &mut Suite, rng: &mut SeededRng, n: usize) {
    for _ in 0..n {
        let (a, b) = (element(rng), element(rng));
        let (g, d) = green::simplicity_witness(&a, &b);
        s.check(g.compose(&a).compose(&d) == b, || {
            format!("witness fails for {a}, {b}")
        });
    }
}

fn relations(s: &mut Suite, rng: &mut SeededRng, n: usize) {
    for _ in 0..n {
        let a = element(rng);
        // Pair with an element sharing a domain or range often enough to
        // exercise both outcomes.
        let b = match rng.gen_range(0..3) {
            0 => element(rng),
            1 => a.compose(&sample_permutation_unit(rng)),
            _ => sample_permutation_unit(rng).compose(&a),
        };
        let r = a.compose(&a.invert()) == b.compose(&b.invert());
        let l = a.invert().compose(&a) == b.invert().compose(&b);
        s.check(green::is_r(&a, &b) == r, || format!("R wrong on {a}, {b}"));
        s.check(green::is_l(&a, &b) == l, || format!("L wrong on {a}, {b}"));
        s.check(green::is_h(&a, &b) == (r && l), || {
            format!("H wrong on {a}, {b}")
        });
    }
}

fn sample_permutation_unit(rng: &mut SeededRng) -> PartialBijection {
    green::perm_to_unit(&sample_permutation(rng, 8))
}

fn d_witness(s: &mut Suite, rng: &mut SeededRng, n: usize) {
    for _ in 0..n {
        let (a, b) = (element(rng), element(rng));
        let w = green::d_witness(&a, &b);
        s.check(green::is_r(&a, &w) && green::is_l(&w, &b), || {
            format!("{w} does not link {a} and {b}")
        });
    }
}

fn solving(s: &mut Suite, rng: &mut SeededRng, n: usize) {
    let profile = Profile::bounded(5, 2);
    for _ in 0..n {
        let a = sample_element(rng, &profile);
        let x = sample_element(rng, &profile);
        let right = a.compose(&x);
        let solved = solve_right(&a, &right);
        s.check(solved.contains(&x), || {
            format!("{x} missing from solutions of {a}·χ = {right}")
        });
        s.check(
            solved.solutions.iter().all(|y| a.compose(y) == right),
            || format!("unsound solution of {a}·χ = {right}"),
        );
        s.check(count_right(&a, &right) == solved.len() as u128, || {
            format!("count disagrees for {a}·χ = {right}")
        });
        let left = x.compose(&a);
        let solved = solve_left(&a, &left);
        s.check(solved.contains(&x), || {
            format!("{x} missing from solutions of χ·{a} = {left}")
        });
        s.check(
            solved.solutions.iter().all(|y| y.compose(&a) == left),
            || format!("unsound solution of χ·{a} = {left}"),
        );
    }
}

fn units(s: &mut Suite, rng: &mut SeededRng, n: usize) {
    for _ in 0..n {
        let p = sample_permutation(rng, 9);
        let q = sample_permutation(rng, 9);
        let u = green::perm_to_unit(&p);
        s.check(green::unit_to_perm(&u).ok() == Some(p.clone()), || {
            format!("round trip fails on {p}")
        });
        let pq = p.compose(&q);
        s.check(pq.parity() == p.parity().combine(q.parity()), || {
            format!("parity not multiplicative on {p}, {q}")
        });
        s.check(
            green::perm_to_unit(&pq) == u.compose(&green::perm_to_unit(&q)),
            || format!("unit product disagrees on {p}, {q}"),
        );
        let e = idempotent(rng);
        let h = green::h_class_element(&e, &p).expect("idempotent");
        s.check(green::h_class_iso(&e, &h).ok() == Some(p.clone()), || {
            format!("subgroup transport fails on {p} at {e}")
        });
    }
}

fn eventual_shift(s: &mut Suite, rng: &mut SeededRng, n: usize) {
    for _ in 0..n {
        let a = element(rng);
        let (t, d) = a.eventual_shift();
        let tail_ok = (t..t + 50).all(|i| a.apply(i) == Some((i as i64 + d) as u64));
        s.check(tail_ok, || format!("{a} leaves its shift after {t}"));
        if t > 1 {
            s.check(a.apply(t - 1) != Some((t as i64 - 1 + d) as u64), || {
                format!("threshold {t} of {a} is not minimal")
            });
        }
    }
}

fn projection(s: &mut Suite, rng: &mut SeededRng, n: usize) {
    for _ in 0..n {
        let g = element(rng);
        let e = bicyclic::projection_idempotent(&g);
        s.check(
            e.is_idempotent() && bicyclic::recognize(&e).is_some(),
            || format!("projection of {g} is not a bicyclic idempotent"),
        );
        s.check(
            bicyclic::recognize(&g.compose(&e)).is_some()
                && bicyclic::recognize(&e.compose(&g)).is_some(),
            || format!("products of {g} with {e} are not bicyclic"),
        );
        let i = idempotent(rng);
        let e0 = bicyclic::projection_idempotent(&i);
        s.check(i.compose(&e0) == e0 && e0.compose(&i) == e0, || {
            format!("{e0} is not absorbed by {i}")
        });
    }
}

fn bicyclic_embedding(s: &mut Suite, rng: &mut SeededRng, n: usize) {
    let pq = PartialBijection::pi().compose(&PartialBijection::sigma());
    s.check(pq == PartialBijection::identity(), || format!("pq = {pq}"));
    for _ in 0..n {
        let u = BicyclicWord::new(rng.gen_range(0..=10), rng.gen_range(0..=10));
        let v = BicyclicWord::new(rng.gen_range(0..=10), rng.gen_range(0..=10));
        s.check(
            bicyclic::embed(u * v) == bicyclic::embed(u).compose(&bicyclic::embed(v)),
            || format!("embedding not multiplicative on {u}, {v}"),
        );
        s.check(bicyclic::recognize(&bicyclic::embed(u)) == Some(u), || {
            format!("recognition fails on {u}")
        });
    }
}

fn fixed_subset(rng: &mut SeededRng, a: &PartialBijection) -> FiniteSet {
    cofinite::random::sample_subset(rng, &a.dom(), a.horizon() + 2)
}

fn kind(rng: &mut SeededRng) -> Kind {
    if rng.gen_bool(0.5) {
        Kind::F
    } else {
        Kind::WF
    }
}

fn neighbourhoods(s: &mut Suite, rng: &mut SeededRng, n: usize) {
    for _ in 0..n {
        let a = element(rng);
        let k = kind(rng);
        let f = fixed_subset(rng, &a);
        let u = BasicNbhd::new(k, a.clone(), f.clone()).expect("fixed ⊆ dom");
        s.check(u.contains(&a), || {
            format!("{a} not in its own {k} neighbourhood")
        });

        let bigger = f.union(&fixed_subset(rng, &a));
        let v = BasicNbhd::new(k, a.clone(), bigger).expect("fixed ⊆ dom");
        let m = v.sample_member(rng);
        s.check(u.contains(&m), || {
            format!("{m} breaks monotonicity around {a}")
        });

        let m = u.sample_member(rng);
        s.check(u.contains(&m), || {
            format!("sampled {m} outside {k} neighbourhood of {a}")
        });
        if k == Kind::F {
            s.check(green::is_h(&m, &a), || format!("{m} not H-related to {a}"));
            let inv = u.inversion_image().expect("kind F");
            s.check(inv.contains(&m.invert()), || {
                format!("inverse of {m} escapes")
            });
        }
    }
}

fn products(s: &mut Suite, rng: &mut SeededRng, n: usize) {
    for _ in 0..n {
        let (a, b) = (element(rng), element(rng));
        let k = kind(rng);
        let ab = a.compose(&b);
        let f = fixed_subset(rng, &ab);
        let target = BasicNbhd::new(k, ab.clone(), f.clone()).expect("fixed ⊆ dom");
        let refine = product_refinement(k, &a, &b, &f).expect("fixed ⊆ dom");
        let ua = BasicNbhd::new(k, a.clone(), refine.left).expect("fixed ⊆ dom");
        let ub = BasicNbhd::new(k, b.clone(), refine.right).expect("fixed ⊆ dom");
        for _ in 0..4 {
            let (x, y) = (ua.sample_member(rng), ub.sample_member(rng));
            let xy = x.compose(&y);
            s.check(target.contains(&xy), || {
                format!("{x}·{y} escapes {k} neighbourhood of {ab}")
            });
        }
    }
}

fn separation(s: &mut Suite, rng: &mut SeededRng, n: usize) {
    for _ in 0..n {
        let (a, b) = (element(rng), element(rng));
        if a == b {
            continue;
        }
        let k = kind(rng);
        let (fa, fb) = separation_witness(k, &a, &b).expect("distinct");
        let u = BasicNbhd::new(k, a.clone(), fa).expect("fixed ⊆ dom");
        let v = BasicNbhd::new(k, b.clone(), fb).expect("fixed ⊆ dom");
        s.check(u.intersect_empty(&v).expect("same kind"), || {
            format!("{k} neighbourhoods of {a} and {b} meet")
        });
        let (x, y) = (u.sample_member(rng), v.sample_member(rng));
        s.check(x != y && !v.contains(&x) && !u.contains(&y), || {
            format!("samples around {a} and {b} coincide")
        });
    }
}

fn codec_round_trip(s: &mut Suite, rng: &mut SeededRng, n: usize) {
    for _ in 0..n {
        let a = element(rng);
        let text = codec::encode(&a);
        s.check(codec::decode(&text).ok() == Some(a.clone()), || {
            format!("decode fails on {text}")
        });
        s.check(eval_expr(&text).ok() == Some(a.clone()), || {
            format!("eval fails on {text}")
        });
    }
    s.check(
        eval_expr("p * q").ok() == Some(PartialBijection::identity()),
        || "p * q is not the identity".to_string(),
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let report = run_selftest(1, 10);
        assert!(report.passed(), "{report}");
        assert_eq!(report.suites.len(), SUITES.len());
    }

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(
            run_selftest(7, 5).to_string(),
            run_selftest(7, 5).to_string()
        );
    }

    #[test]
    fn failures_name_the_suite() {
        let mut suite = Suite::new("demo");
        suite.check(true, || unreachable!());
        suite.check(false, || "boom".to_string());
        suite.check(false, || "second".to_string());
        let report = Report {
            seed: 0,
            iterations: 1,
            suites: vec![suite.result],
        };
        let text = report.to_string();
        assert!(text.contains("FAIL demo"));
        assert!(text.contains("first: boom"));
        assert!(text.ends_with("1 of 1 suites failed"));
    }

    #[test]
    #[should_panic]
    fn zero_iterations_rejected() {
        run_selftest(0, 0);
    }
}
