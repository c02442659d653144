//! Front end for the `cofinite` library: an expression evaluator over
//! element literals and a seeded self-test harness.

pub mod expr;
pub mod selftest;

pub use expr::{eval_expr, Expr};
pub use selftest::{run_selftest, Report, SuiteResult};
