//! Deterministic test grids of ordinals.
//!
//! A [`GridSpec`] describes a finite family of ordinals built in layers: the
//! layer-0 exponent pool is `{0, 1}` (plus any requested atoms), and each
//! further layer consists of every normal-form sum of at most `max_terms`
//! terms whose exponents are strictly decreasing values from the previous
//! layer and whose coefficients run over `1..=max_coeff`.  The empty sum (the
//! ordinal 0) is always included, so each layer contains the one before it and
//! the final layer is the whole grid.
//!
//! Enumeration is fully deterministic — the result is sorted ascending and
//! duplicate-free — so grids can be named, versioned, and referred to from
//! test transcripts.  The named grids here are frozen: changing their contents
//! would silently change what the differential suites cover, so any change
//! must come with a new version suffix.

use num_bigint::BigUint;
use std::collections::BTreeSet;

use crate::ordinal::{NormalOrdinal, Term};

/// A recipe for a finite, deterministic family of ordinals.
#[derive(Debug, Clone)]
pub struct GridSpec {
    /// Stable name used in reports and on the command line.
    pub name: String,
    /// How many sum-building layers to apply on top of the base pool.
    pub depth: u32,
    /// Largest coefficient attached to any term.
    pub max_coeff: u64,
    /// Largest number of terms in any generated sum.
    pub max_terms: usize,
    /// Extra values injected into the layer-0 exponent pool, for reaching
    /// uncountable territory.
    pub atoms: Vec<NormalOrdinal>,
}

impl GridSpec {
    /// Nine small ordinals up to `w*2 + 2`; enough to smoke-test plumbing.
    pub fn tiny_v1() -> Self {
        GridSpec {
            name: "tiny-v1".to_owned(),
            depth: 1,
            max_coeff: 2,
            max_terms: 2,
            atoms: Vec::new(),
        }
    }

    /// 1129 countable ordinals with exponents reaching `w*3 + 3`; the default
    /// workload for differential checks of the arithmetic.
    pub fn countable_v1() -> Self {
        GridSpec {
            name: "countable-v1".to_owned(),
            depth: 2,
            max_coeff: 3,
            max_terms: 2,
            atoms: Vec::new(),
        }
    }

    /// 2179 ordinals mixing countable values with the first uncountable
    /// initial ordinal and the first singular one.
    pub fn atoms_v1() -> Self {
        let omega_1 = NormalOrdinal::initial(&NormalOrdinal::one());
        let omega_omega = NormalOrdinal::initial(&NormalOrdinal::omega());
        GridSpec {
            name: "atoms-v1".to_owned(),
            depth: 2,
            max_coeff: 2,
            max_terms: 2,
            atoms: vec![omega_1, omega_omega],
        }
    }

    /// Looks up a named grid.
    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "tiny-v1" => Some(Self::tiny_v1()),
            "countable-v1" => Some(Self::countable_v1()),
            "atoms-v1" => Some(Self::atoms_v1()),
            _ => None,
        }
    }

    /// The names accepted by [`GridSpec::by_name`].
    pub fn known_names() -> &'static [&'static str] {
        &["tiny-v1", "countable-v1", "atoms-v1"]
    }

    /// Materializes the grid, sorted ascending with no duplicates.
    pub fn enumerate(&self) -> Vec<NormalOrdinal> {
        let mut pool: BTreeSet<NormalOrdinal> = BTreeSet::new();
        pool.insert(NormalOrdinal::zero());
        pool.insert(NormalOrdinal::one());
        pool.extend(self.atoms.iter().cloned());
        let mut layer: Vec<NormalOrdinal> = pool.into_iter().collect();
        for _ in 0..self.depth {
            layer = self.next_layer(&layer);
        }
        layer
    }

    /// All sums of at most `max_terms` strictly decreasing exponents drawn
    /// from `exponents`, with coefficients `1..=max_coeff`.
    fn next_layer(&self, exponents: &[NormalOrdinal]) -> Vec<NormalOrdinal> {
        // Walking the (ascending) exponent list from the top down yields the
        // strictly decreasing exponent sequences normal form requires.
        let descending: Vec<&NormalOrdinal> = exponents.iter().rev().collect();
        let mut out = BTreeSet::new();
        let mut terms: Vec<Term> = Vec::new();
        self.fill(&descending, 0, self.max_terms, &mut terms, &mut out);
        out.into_iter().collect()
    }

    fn fill(
        &self,
        descending: &[&NormalOrdinal],
        start: usize,
        budget: usize,
        terms: &mut Vec<Term>,
        out: &mut BTreeSet<NormalOrdinal>,
    ) {
        out.insert(NormalOrdinal::from_terms(terms.clone()));
        if budget == 0 {
            return;
        }
        for (offset, exponent) in descending[start..].iter().enumerate() {
            for coefficient in 1..=self.max_coeff {
                terms.push(Term {
                    exponent: (*exponent).clone(),
                    coefficient: BigUint::from(coefficient),
                });
                self.fill(descending, start + offset + 1, budget - 1, terms, out);
                terms.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_grid_is_exactly_the_nine_expected_values() {
        let got = GridSpec::tiny_v1().enumerate();
        let w = NormalOrdinal::omega();
        let expected = vec![
            NormalOrdinal::zero(),
            NormalOrdinal::one(),
            NormalOrdinal::nat(2u32),
            w.clone(),
            &w + &NormalOrdinal::one(),
            &w + &NormalOrdinal::nat(2u32),
            &w * &NormalOrdinal::nat(2u32),
            &(&w * &NormalOrdinal::nat(2u32)) + &NormalOrdinal::one(),
            &(&w * &NormalOrdinal::nat(2u32)) + &NormalOrdinal::nat(2u32),
        ];
        let mut expected = expected;
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn zero_depth_grid_is_just_zero_and_one_pool_collapsed() {
        let spec = GridSpec {
            name: "empty".to_owned(),
            depth: 0,
            max_coeff: 5,
            max_terms: 5,
            atoms: Vec::new(),
        };
        assert_eq!(
            spec.enumerate(),
            vec![NormalOrdinal::zero(), NormalOrdinal::one()]
        );
    }

    #[test]
    fn atom_pools_reach_uncountable_values() {
        let omega_1 = NormalOrdinal::initial(&NormalOrdinal::one());
        let spec = GridSpec {
            name: "probe".to_owned(),
            depth: 1,
            max_coeff: 1,
            max_terms: 2,
            atoms: vec![omega_1.clone()],
        };
        let got = spec.enumerate();
        assert!(got.contains(&omega_1));
        assert!(got.contains(&(&omega_1 + &NormalOrdinal::one())));
        assert!(got.contains(&(&omega_1 + &NormalOrdinal::omega())));
        assert!(got.iter().all(|x| got.iter().filter(|y| *y == x).count() == 1));
    }

    #[test]
    fn named_grids_have_their_frozen_sizes() {
        assert_eq!(GridSpec::tiny_v1().enumerate().len(), 9);
        assert_eq!(GridSpec::countable_v1().enumerate().len(), 1129);
        assert_eq!(GridSpec::atoms_v1().enumerate().len(), 2179);
        for name in GridSpec::known_names() {
            assert_eq!(GridSpec::by_name(name).unwrap().name, *name);
        }
        assert!(GridSpec::by_name("no-such-grid").is_none());
    }

    #[test]
    fn enumeration_is_sorted_and_deterministic() {
        let a = GridSpec::countable_v1().enumerate();
        let b = GridSpec::countable_v1().enumerate();
        assert_eq!(a, b);
        assert!(a.windows(2).all(|w| w[0] < w[1]));
    }
}
