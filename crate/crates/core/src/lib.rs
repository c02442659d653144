//! Exact arithmetic in the inverse monoid of injective partial selfmaps of
//! the positive integers that have cofinite domain and range and are
//! monotone off a finite set.
//!
//! Elements are stored in a canonical form (a finite list of exceptional
//! pairs followed by a shift tail `n ↦ n + d`), so every operation is exact
//! and equality is structural. Composition is left to right:
//! `x(αβ) = (xα)β`.

pub mod bicyclic;
pub mod codec;
pub mod element;
pub mod error;
pub mod green;
pub mod perm;
pub mod random;
pub mod set;
pub mod solver;
pub mod topology;

pub use bicyclic::BicyclicWord;
pub use element::{PartialBijection, RawElement};
pub use error::{Error, Result};
pub use perm::{FinPermutation, Parity};
pub use set::{CofiniteSet, FiniteSet};
pub use solver::SolutionSet;
pub use topology::{BasicNbhd, Kind};
