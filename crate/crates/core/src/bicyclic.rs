//! The bicyclic monoid ⟨p, q | pq = 1⟩ in normal form, and its copy inside
//! the partial bijections generated by π (p) and σ (q).

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::element::PartialBijection;

/// The word `q^a p^b`.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct BicyclicWord {
    pub a: u64,
    pub b: u64,
}

impl BicyclicWord {
    pub const IDENTITY: BicyclicWord = BicyclicWord { a: 0, b: 0 };
    pub const P: BicyclicWord = BicyclicWord { a: 0, b: 1 };
    pub const Q: BicyclicWord = BicyclicWord { a: 1, b: 0 };

    pub fn new(a: u64, b: u64) -> Self {
        BicyclicWord { a, b }
    }
}

/// `q^a p^b · q^c p^d`: the inner `p^b q^c` cancels `min(b, c)` times.
impl Mul for BicyclicWord {
    type Output = BicyclicWord;

    fn mul(self, other: BicyclicWord) -> BicyclicWord {
        let m = self.b.min(other.a);
        BicyclicWord {
            a: self.a + other.a - m,
            b: self.b + other.b - m,
        }
    }
}

impl fmt::Display for BicyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q^{} p^{}", self.a, self.b)
    }
}

/// `q^a p^b ↦` the map `n ↦ n − a + b` on `{a + 1, a + 2, …}`.
pub fn embed(w: BicyclicWord) -> PartialBijection {
    PartialBijection::canonicalize(&[], w.a + 1, w.b as i64 - w.a as i64)
        .expect("shift tails starting above a stay positive")
}

/// The word whose embedding is `x`, if `x` is a pure shift tail.
pub fn recognize(x: &PartialBijection) -> Option<BicyclicWord> {
    if !x.exceptions().is_empty() {
        return None;
    }
    Some(BicyclicWord {
        a: x.tail_start() - 1,
        b: x.image_start() - 1,
    })
}

/// The identity on `{m, m + 1, …}` with `m = max(tail_start, tail_start + shift)`.
/// Both `γ·ε` and `ε·γ` are then pure shift tails.
pub fn projection_idempotent(g: &PartialBijection) -> PartialBijection {
    let m = g.tail_start().max(g.image_start());
    embed(BicyclicWord::new(m - 1, m - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::decode;

    #[test]
    fn word_mul_examples() {
        assert_eq!(BicyclicWord::P * BicyclicWord::Q, BicyclicWord::IDENTITY);
        assert_eq!(BicyclicWord::Q * BicyclicWord::P, BicyclicWord::new(1, 1));
        let w = BicyclicWord::new(3, 5);
        assert_eq!(w * BicyclicWord::IDENTITY, w);
        assert_eq!(BicyclicWord::IDENTITY * w, w);
    }

    #[test]
    fn qp_matches_composition() {
        let qp = PartialBijection::sigma().compose(&PartialBijection::pi());
        assert_eq!(embed(BicyclicWord::new(1, 1)), qp);
    }

    #[test]
    fn embed_examples() {
        assert_eq!(embed(BicyclicWord::IDENTITY), PartialBijection::identity());
        assert_eq!(embed(BicyclicWord::Q), PartialBijection::sigma());
        assert_eq!(embed(BicyclicWord::P), PartialBijection::pi());
        let (p, q) = (PartialBijection::pi(), PartialBijection::sigma());
        assert_eq!(
            embed(BicyclicWord::new(2, 2)),
            q.compose(&q).compose(&p).compose(&p)
        );
        assert_eq!(embed(BicyclicWord::new(2, 2)).to_string(), "{|3=>+0}");
    }

    #[test]
    fn recognize_examples() {
        assert_eq!(
            recognize(&PartialBijection::identity()),
            Some(BicyclicWord::IDENTITY)
        );
        assert_eq!(recognize(&PartialBijection::pi()), Some(BicyclicWord::P));
        assert_eq!(recognize(&decode("{3->1|4=>+0}").unwrap()), None);
    }

    #[test]
    fn projection_examples() {
        let i = PartialBijection::identity();
        assert_eq!(projection_idempotent(&i), i);

        let g = decode("{3->1|4=>+0}").unwrap();
        let e = projection_idempotent(&g);
        assert_eq!(e.to_string(), "{|4=>+0}");
        assert_eq!(g.compose(&e), e);
        assert_eq!(e.compose(&g), e);

        let q = PartialBijection::sigma();
        let e = projection_idempotent(&q);
        assert_eq!(e, q.compose(&PartialBijection::pi()));
        assert_eq!(e.compose(&q), q);
        assert_eq!(q.compose(&e), embed(BicyclicWord::new(2, 1)));
    }
}
