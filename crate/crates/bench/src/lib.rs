//! Shared fixtures for the ordcalc benchmarks.
//!
//! Each fixture is deterministic so that numbers are comparable between
//! runs: the grids are the frozen named grids from the core crate, and the
//! synthetic values are built by fixed recurrences. Benchmarks should
//! construct fixtures once, outside the measured closure.

use ordcalc_core::{GridSpec, NormalOrdinal};

/// Every value of the frozen countable grid, ascending.
pub fn countable_values() -> Vec<NormalOrdinal> {
    GridSpec::by_name("countable-v1")
        .expect("the countable grid is compiled in")
        .enumerate()
}

/// Every value of the frozen grid with uncountable atoms, ascending.
pub fn atom_values() -> Vec<NormalOrdinal> {
    GridSpec::by_name("atoms-v1")
        .expect("the atom grid is compiled in")
        .enumerate()
}

/// A value with `depth` nested exponent levels and noisy lower terms,
/// e.g. `tower(2) = w^(w^w + w*2 + 1) + w*3 + 2`. Exercises the deep
/// normalization paths that flat grid values never reach.
pub fn tower(depth: u32) -> NormalOrdinal {
    let mut value = NormalOrdinal::omega();
    for i in 0..u64::from(depth) {
        let scaled = &NormalOrdinal::omega() * &NormalOrdinal::nat(i + 2);
        let noise = &scaled + &NormalOrdinal::nat(i + 1);
        value = &NormalOrdinal::omega_power(&value) + &noise;
    }
    value
}

/// Index pairs `(lambda, xi)` covering the classification workload:
/// finite, countable, and uncountable left indices against targets spread
/// over three initial-ordinal scales.
pub fn operator_index_pairs() -> Vec<(NormalOrdinal, NormalOrdinal)> {
    let omega = NormalOrdinal::omega();
    let omega_1 = NormalOrdinal::initial(&NormalOrdinal::nat(1u32));
    let omega_omega = NormalOrdinal::initial(&omega);
    let omega_plus_one = &omega + &NormalOrdinal::one();

    let mut xis = Vec::new();
    for alpha in [&omega, &omega_1, &omega_omega] {
        for m in [&NormalOrdinal::one(), &omega, &omega_plus_one] {
            let scaled = alpha * m;
            for d in [&NormalOrdinal::zero(), &NormalOrdinal::one()] {
                xis.push(&scaled + d);
            }
        }
    }

    let mut pairs = Vec::new();
    for lambda in [&NormalOrdinal::one(), &omega, &omega_1] {
        for xi in &xis {
            pairs.push((lambda.clone(), xi.clone()));
        }
    }
    pairs
}
