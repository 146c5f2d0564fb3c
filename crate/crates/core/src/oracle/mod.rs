//! Independent oracles and the differential harness that runs them.
//!
//! Everything in this module exists to catch bugs in the main engine, so none
//! of it is allowed to *use* the main engine's arithmetic: the naive model
//! recomputes results from textbook definitions on a representation with no
//! invariants, and the threshold/division suites check defining properties by
//! brute-force enumeration over [`GridSpec`] families rather than trusting any
//! closed form.

mod diff;
mod grid;
mod naive;

pub use diff::{differential_check, DiffReport, Mismatch, SuiteResult, SUITES};
pub use grid::GridSpec;
pub use naive::{naive_add, naive_cmp, naive_mul, naive_pow, NaiveOrdinal};
