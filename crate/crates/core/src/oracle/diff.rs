//! Differential harness: the engine versus its oracles.
//!
//! Three suites, each pitting the normal-form engine against an independent
//! source of truth on a named [`GridSpec`]:
//!
//! * `arith` — addition, multiplication, powers, and comparison on the
//!   countable part of the grid, checked term for term against the
//!   [naive model](super::naive).
//! * `power-threshold` — the closed-form threshold is checked against its
//!   *defining property* by enumeration: the returned value `t` must satisfy
//!   `t^w > x`, and every smaller grid value `g` must satisfy `g^w <= x`.
//! * `division` — every quotient/remainder pair is recomposed
//!   (`divisor * q + r` must equal the dividend, with `r < divisor`).
//!
//! A clean run returns a report with zero mismatches; any disagreement is
//! reported with its inputs and both sides' values, rendered as text for
//! humans and as JSON for tooling.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::DomainError;
use crate::ordinal::{power_threshold, NormalOrdinal};

use super::grid::GridSpec;
use super::naive::{naive_add, naive_cmp, naive_mul, naive_pow, NaiveOrdinal};

/// One disagreement between the engine and an oracle.
#[derive(Debug, Clone, Serialize)]
pub struct Mismatch {
    /// Which operation disagreed (`add`, `mul`, `pow`, `cmp`, `threshold`,
    /// `divide`).
    pub operation: String,
    /// The printed inputs, in argument order.
    pub inputs: Vec<String>,
    /// What the oracle says the answer is.
    pub expected: String,
    /// What the engine produced.
    pub actual: String,
}

/// The outcome of one suite on one grid.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    /// Suite name (`arith`, `power-threshold`, or `division`).
    pub suite: String,
    /// How many individual checks ran.
    pub checked: u64,
    /// Every disagreement found; empty on a clean run.
    pub mismatches: Vec<Mismatch>,
}

/// A full differential report: one entry per requested suite.
#[derive(Debug, Clone, Serialize)]
pub struct DiffReport {
    /// Name of the grid the suites ran on.
    pub grid_name: String,
    /// Suite outcomes, in the order requested.
    pub results: Vec<SuiteResult>,
}

impl DiffReport {
    /// Total number of disagreements across all suites.
    pub fn total_mismatches(&self) -> usize {
        self.results.iter().map(|r| r.mismatches.len()).sum()
    }

    /// Human-readable rendering, one line per suite plus one per mismatch.
    pub fn render_text(&self) -> String {
        let mut out = format!("grid {}\n", self.grid_name);
        for result in &self.results {
            out.push_str(&format!(
                "  {}: {} checks, {} mismatches\n",
                result.suite,
                result.checked,
                result.mismatches.len()
            ));
            for m in &result.mismatches {
                out.push_str(&format!(
                    "    {}({}): expected {}, got {}\n",
                    m.operation,
                    m.inputs.join(", "),
                    m.expected,
                    m.actual
                ));
            }
        }
        out
    }

    /// The report as a JSON document.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serialization cannot fail")
    }
}

/// The suite names accepted by [`differential_check`].
pub const SUITES: &[&str] = &["arith", "power-threshold", "division"];

/// Runs the requested suites on a grid and collects every disagreement.
///
/// Fails up front if a suite name is unknown; an empty `suites` slice is
/// shorthand for all of them.
pub fn differential_check(suites: &[&str], grid: &GridSpec) -> Result<DiffReport, DomainError> {
    let requested: Vec<&str> = if suites.is_empty() {
        SUITES.to_vec()
    } else {
        suites.to_vec()
    };
    for name in &requested {
        if !SUITES.contains(name) {
            return Err(DomainError::new(format!(
                "unknown suite '{name}' (expected one of: {})",
                SUITES.join(", ")
            )));
        }
    }
    let values = grid.enumerate();
    let results = requested
        .into_iter()
        .map(|name| match name {
            "arith" => arith_suite(&values),
            "power-threshold" => threshold_suite(&values),
            _ => division_suite(&values),
        })
        .collect();
    Ok(DiffReport {
        grid_name: grid.name.clone(),
        results,
    })
}

/// Compares one engine result against the naive model, recording any
/// disagreement.
fn record_value_check(
    operation: &str,
    inputs: [&NormalOrdinal; 2],
    expected: &NaiveOrdinal,
    actual: &NormalOrdinal,
    mismatches: &mut Vec<Mismatch>,
) {
    let engine =
        NaiveOrdinal::from_normal(actual).expect("engine results on countable inputs stay countable");
    if naive_cmp(expected, &engine) != Ordering::Equal {
        mismatches.push(Mismatch {
            operation: operation.to_owned(),
            inputs: inputs.iter().map(|x| x.to_string()).collect(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }
}

fn arith_suite(values: &[NormalOrdinal]) -> SuiteResult {
    let countable: Vec<(&NormalOrdinal, NaiveOrdinal)> = values
        .iter()
        .filter(|x| x.is_countable())
        .map(|x| {
            let naive = NaiveOrdinal::from_normal(x)
                .expect("countable values convert to the naive model");
            (x, naive)
        })
        .collect();
    let mut checked = 0u64;
    let mut mismatches = Vec::new();
    for (a, na) in &countable {
        for (b, nb) in &countable {
            record_value_check("add", [a, b], &naive_add(na, nb), &(*a + *b), &mut mismatches);
            record_value_check("mul", [a, b], &naive_mul(na, nb), &(*a * *b), &mut mismatches);
            checked += 2;
            if let Ok(expected) = naive_pow(na, nb) {
                record_value_check("pow", [a, b], &expected, &a.pow(b), &mut mismatches);
                checked += 1;
            }
            let naive_order = naive_cmp(na, nb);
            if naive_order != a.cmp(b) {
                mismatches.push(Mismatch {
                    operation: "cmp".to_owned(),
                    inputs: vec![a.to_string(), b.to_string()],
                    expected: format!("{naive_order:?}"),
                    actual: format!("{:?}", a.cmp(b)),
                });
            }
            checked += 1;
        }
    }
    SuiteResult {
        suite: "arith".to_owned(),
        checked,
        mismatches,
    }
}

fn threshold_suite(values: &[NormalOrdinal]) -> SuiteResult {
    let omega = NormalOrdinal::omega();
    // One `g^w` per grid value, shared across all the minimality scans.
    let omega_powers: Vec<(&NormalOrdinal, NormalOrdinal)> =
        values.iter().map(|g| (g, g.pow(&omega))).collect();
    let mut checked = 0u64;
    let mut mismatches = Vec::new();
    for x in values.iter().filter(|x| **x >= omega) {
        let threshold = match power_threshold(x) {
            Ok(t) => t,
            Err(e) => {
                mismatches.push(Mismatch {
                    operation: "threshold".to_owned(),
                    inputs: vec![x.to_string()],
                    expected: "a defined threshold".to_owned(),
                    actual: e.to_string(),
                });
                continue;
            }
        };
        checked += 1;
        if threshold.pow(&omega) <= *x {
            mismatches.push(Mismatch {
                operation: "threshold".to_owned(),
                inputs: vec![x.to_string()],
                expected: format!("a value whose w-th power exceeds {x}"),
                actual: threshold.to_string(),
            });
        }
        for (g, g_omega) in omega_powers.iter().filter(|(g, _)| **g < threshold) {
            checked += 1;
            if *g_omega > *x {
                mismatches.push(Mismatch {
                    operation: "threshold".to_owned(),
                    inputs: vec![x.to_string()],
                    expected: format!("no witness below the threshold, but {g}^w > {x}"),
                    actual: threshold.to_string(),
                });
            }
        }
    }
    SuiteResult {
        suite: "power-threshold".to_owned(),
        checked,
        mismatches,
    }
}

fn division_suite(values: &[NormalOrdinal]) -> SuiteResult {
    let mut checked = 0u64;
    let mut mismatches = Vec::new();
    for x in values {
        for divisor in values.iter().filter(|d| !d.is_zero()) {
            checked += 1;
            let (quotient, remainder) = match x.div_rem(divisor) {
                Ok(pair) => pair,
                Err(e) => {
                    mismatches.push(Mismatch {
                        operation: "divide".to_owned(),
                        inputs: vec![x.to_string(), divisor.to_string()],
                        expected: "a quotient and remainder".to_owned(),
                        actual: e.to_string(),
                    });
                    continue;
                }
            };
            let recomposed = &(divisor * &quotient) + &remainder;
            if recomposed != *x || remainder >= *divisor {
                mismatches.push(Mismatch {
                    operation: "divide".to_owned(),
                    inputs: vec![x.to_string(), divisor.to_string()],
                    expected: format!("{divisor}*q + r = {x} with r < {divisor}"),
                    actual: format!("q = {quotient}, r = {remainder}"),
                });
            }
        }
    }
    SuiteResult {
        suite: "division".to_owned(),
        checked,
        mismatches,
    }
}
