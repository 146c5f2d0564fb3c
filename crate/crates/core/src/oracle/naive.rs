//! A deliberately naive model of countable ordinal arithmetic.
//!
//! The main engine keeps ordinals in normal form at all times and implements
//! arithmetic by structural rules on that form.  If those rules are wrong, the
//! engine's own tests can be wrong in the same way.  This module is the
//! counterweight: an independent representation with **no invariants** (an
//! unsorted bag of `w^exponent * coefficient` terms) and arithmetic written
//! from the textbook definitions, sharing no code with the engine.  The
//! differential harness converts engine results into this representation and
//! compares values with [`naive_cmp`].
//!
//! The model is intentionally limited: it covers countable ordinals only
//! (conversion rejects uncountable atoms), and power computations give up with
//! a [`FragmentError`] rather than expand past a fixed term bound.  Slow is
//! fine here; independent is the point.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::FragmentError;
use crate::ordinal::NormalOrdinal;

/// Cap on the raw term count of intermediate power expansions.
const MAX_TERMS: usize = 1000;
/// Cap on how many successive multiplications a finite power may unroll into.
const MAX_ITER: u64 = 256;

/// A countable ordinal as an unsorted bag of `w^exponent * coefficient` terms.
///
/// Any vector denotes a value: the ordinal obtained by sorting the terms by
/// strictly decreasing exponent and merging duplicates.  Nothing is kept
/// sorted, merged, or nonzero, so constructing a `NaiveOrdinal` can never go
/// wrong in an interesting way — all the interpretation lives in [`naive_cmp`].
#[derive(Debug, Clone, Default)]
pub struct NaiveOrdinal(Vec<(NaiveOrdinal, BigUint)>);

impl NaiveOrdinal {
    /// The ordinal 0 (an empty bag).
    pub fn zero() -> Self {
        NaiveOrdinal(Vec::new())
    }

    /// A finite ordinal `n`, spelled `w^0 * n`.
    pub fn finite(n: u64) -> Self {
        if n == 0 {
            Self::zero()
        } else {
            NaiveOrdinal(vec![(Self::zero(), BigUint::from(n))])
        }
    }

    /// The first infinite ordinal, spelled `w^1 * 1`.
    pub fn omega() -> Self {
        NaiveOrdinal(vec![(Self::finite(1), BigUint::one())])
    }

    /// Converts an engine value by transcribing its terms, one for one.
    ///
    /// Values containing an uncountable atom are outside this model and are
    /// rejected rather than approximated.
    pub fn from_normal(x: &NormalOrdinal) -> Result<Self, FragmentError> {
        if x.atom_index().is_some() {
            return Err(FragmentError::new(
                "the naive model covers countable ordinals only",
            ));
        }
        let mut terms = Vec::new();
        for (exponent, coefficient) in x.to_terms() {
            terms.push((Self::from_normal(&exponent)?, coefficient));
        }
        Ok(NaiveOrdinal(terms))
    }
}

/// Canonicalizes a bag: recursively canonical exponents, sorted by strictly
/// decreasing exponent, duplicate exponents merged, zero coefficients dropped.
fn canon(x: &NaiveOrdinal) -> Vec<(NaiveOrdinal, BigUint)> {
    let mut terms: Vec<(NaiveOrdinal, BigUint)> = x
        .0
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| (NaiveOrdinal(canon(e)), c.clone()))
        .collect();
    terms.sort_by(|a, b| cmp_canon(&b.0 .0, &a.0 .0));
    let mut merged: Vec<(NaiveOrdinal, BigUint)> = Vec::new();
    for (exponent, coefficient) in terms {
        if let Some((last_exponent, last_coefficient)) = merged.last_mut() {
            if cmp_canon(&last_exponent.0, &exponent.0) == Ordering::Equal {
                *last_coefficient += coefficient;
                continue;
            }
        }
        merged.push((exponent, coefficient));
    }
    merged
}

/// Compares two canonical term lists: at the first differing position the
/// larger exponent (then the larger coefficient) wins; a proper prefix is
/// smaller.
fn cmp_canon(a: &[(NaiveOrdinal, BigUint)], b: &[(NaiveOrdinal, BigUint)]) -> Ordering {
    for ((ea, ca), (eb, cb)) in a.iter().zip(b.iter()) {
        match cmp_canon(&ea.0, &eb.0) {
            Ordering::Equal => {}
            unequal => return unequal,
        }
        match ca.cmp(cb) {
            Ordering::Equal => {}
            unequal => return unequal,
        }
    }
    a.len().cmp(&b.len())
}

/// Compares two bags as ordinals.
pub fn naive_cmp(a: &NaiveOrdinal, b: &NaiveOrdinal) -> Ordering {
    cmp_canon(&canon(a), &canon(b))
}

/// Ordinal addition: terms of `a` strictly below the leading exponent of `b`
/// are absorbed; everything else is thrown into one bag.
pub fn naive_add(a: &NaiveOrdinal, b: &NaiveOrdinal) -> NaiveOrdinal {
    let cb = canon(b);
    let Some((lead, _)) = cb.first() else {
        return NaiveOrdinal(canon(a));
    };
    let lead = lead.clone();
    let mut terms: Vec<(NaiveOrdinal, BigUint)> = canon(a)
        .into_iter()
        .filter(|(e, _)| cmp_canon(&e.0, &lead.0) != Ordering::Less)
        .collect();
    terms.extend(cb);
    NaiveOrdinal(terms)
}

/// Ordinal multiplication, distributing `a` over the terms of `b` from the
/// textbook rules: `a * w^f * d = w^(e1 + f) * d` for `f > 0` (where `e1` is
/// the leading exponent of `a`), and `a * d` scales the leading coefficient
/// and keeps the tail.
pub fn naive_mul(a: &NaiveOrdinal, b: &NaiveOrdinal) -> NaiveOrdinal {
    let ca = canon(a);
    let cb = canon(b);
    if ca.is_empty() || cb.is_empty() {
        return NaiveOrdinal::zero();
    }
    let (lead_exponent, lead_coefficient) = ca[0].clone();
    let mut acc = NaiveOrdinal::zero();
    for (f, d) in &cb {
        let contribution = if f.0.is_empty() {
            let mut terms = vec![(lead_exponent.clone(), lead_coefficient.clone() * d)];
            terms.extend_from_slice(&ca[1..]);
            NaiveOrdinal(terms)
        } else {
            NaiveOrdinal(vec![(naive_add(&lead_exponent, f), d.clone())])
        };
        acc = naive_add(&acc, &contribution);
    }
    acc
}

/// Ordinal exponentiation.
///
/// Finite exponents are unrolled into repeated multiplication; infinite
/// exponents use the textbook identities for `a^(w^f)` term by term.  Inputs
/// that would unroll past [`MAX_ITER`] steps or [`MAX_TERMS`] terms are
/// refused with a [`FragmentError`].
pub fn naive_pow(a: &NaiveOrdinal, b: &NaiveOrdinal) -> Result<NaiveOrdinal, FragmentError> {
    let ca = canon(a);
    let cb = canon(b);
    if cb.is_empty() {
        return Ok(NaiveOrdinal::finite(1));
    }
    if ca.is_empty() {
        return Ok(NaiveOrdinal::zero());
    }
    if finite_value(&ca).map_or(false, |c| c.is_one()) {
        return Ok(NaiveOrdinal::finite(1));
    }
    let mut result = NaiveOrdinal::finite(1);
    for (f, k) in &cb {
        let factor = if f.0.is_empty() {
            pow_iterated(&NaiveOrdinal(ca.clone()), k)?
        } else {
            pow_iterated(&pow_omega_power(&ca, f), k)?
        };
        result = naive_mul(&result, &factor);
    }
    Ok(result)
}

/// `base^k` for a natural number `k`, by literally multiplying `k` times.
fn pow_iterated(base: &NaiveOrdinal, k: &BigUint) -> Result<NaiveOrdinal, FragmentError> {
    let Some(k) = k.to_u64().filter(|k| *k <= MAX_ITER) else {
        return Err(FragmentError::new(
            "naive power would unroll past the iteration bound",
        ));
    };
    let mut result = NaiveOrdinal::finite(1);
    for _ in 0..k {
        result = naive_mul(&result, base);
        if result.0.len() > MAX_TERMS {
            return Err(FragmentError::new(
                "naive power expansion passed the term bound",
            ));
        }
    }
    Ok(result)
}

/// `a^(w^f)` for canonical nonzero `a` (not 0 or 1) and canonical `f >= 1`:
/// an infinite base gives `w^(e1 * w^f)`; a finite base gives `w^(w^(f-1))`
/// when `f` is finite and `w^(w^f)` when `f` is infinite.
fn pow_omega_power(ca: &[(NaiveOrdinal, BigUint)], f: &NaiveOrdinal) -> NaiveOrdinal {
    let one = BigUint::one();
    let omega_f = NaiveOrdinal(vec![(f.clone(), one.clone())]);
    if !ca[0].0 .0.is_empty() {
        let lead_exponent = &ca[0].0;
        return NaiveOrdinal(vec![(naive_mul(lead_exponent, &omega_f), one)]);
    }
    let inner = match finite_value(&canon(f)) {
        Some(m) => {
            let predecessor = m - 1u32;
            if predecessor.is_zero() {
                NaiveOrdinal::finite(1)
            } else {
                NaiveOrdinal(vec![(NaiveOrdinal(vec![(NaiveOrdinal::zero(), predecessor)]), one.clone())])
            }
        }
        None => omega_f,
    };
    NaiveOrdinal(vec![(inner, one)])
}

/// The value of a canonical term list if it is a natural number.
fn finite_value(canonical: &[(NaiveOrdinal, BigUint)]) -> Option<BigUint> {
    match canonical {
        [] => Some(BigUint::zero()),
        [(exponent, coefficient)] if exponent.0.is_empty() => Some(coefficient.clone()),
        _ => None,
    }
}

impl fmt::Display for NaiveOrdinal {
    /// A blunt canonical rendering (`w^(e)*c + ...`) for mismatch reports.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = canon(self);
        if terms.is_empty() {
            return f.write_str("0");
        }
        let rendered: Vec<String> = terms
            .iter()
            .map(|(exponent, coefficient)| {
                if exponent.0.is_empty() {
                    coefficient.to_string()
                } else {
                    format!("w^({exponent})*{coefficient}")
                }
            })
            .collect();
        f.write_str(&rendered.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq(a: &NaiveOrdinal, b: &NaiveOrdinal) -> bool {
        naive_cmp(a, b) == Ordering::Equal
    }

    #[test]
    fn addition_absorbs_and_merges() {
        let w = NaiveOrdinal::omega();
        let w_plus_1 = naive_add(&w, &NaiveOrdinal::finite(1));
        // (w + 1) + w = w * 2
        let sum = naive_add(&w_plus_1, &w);
        let w2 = naive_mul(&w, &NaiveOrdinal::finite(2));
        assert!(eq(&sum, &w2));
        // 1 + w = w
        assert!(eq(&naive_add(&NaiveOrdinal::finite(1), &w), &w));
        // adding zero changes nothing either way
        assert!(eq(&naive_add(&w_plus_1, &NaiveOrdinal::zero()), &w_plus_1));
        assert!(eq(&naive_add(&NaiveOrdinal::zero(), &w_plus_1), &w_plus_1));
    }

    #[test]
    fn multiplication_follows_the_textbook() {
        let w = NaiveOrdinal::omega();
        let w_plus_1 = naive_add(&w, &NaiveOrdinal::finite(1));
        // (w + 1) * w = w^2
        let square = naive_pow(&w, &NaiveOrdinal::finite(2)).unwrap();
        assert!(eq(&naive_mul(&w_plus_1, &w), &square));
        // (w*2 + 1)^2 = w^2*2 + w*2 + 1
        let w2_plus_1 = naive_add(&naive_mul(&w, &NaiveOrdinal::finite(2)), &NaiveOrdinal::finite(1));
        let squared = naive_pow(&w2_plus_1, &NaiveOrdinal::finite(2)).unwrap();
        let expected = naive_add(
            &naive_add(
                &naive_mul(&square, &NaiveOrdinal::finite(2)),
                &naive_mul(&w, &NaiveOrdinal::finite(2)),
            ),
            &NaiveOrdinal::finite(1),
        );
        assert!(eq(&squared, &expected));
        // 2 * w = w, and w * 2 is not w
        assert!(eq(&naive_mul(&NaiveOrdinal::finite(2), &w), &w));
        assert!(!eq(&naive_mul(&w, &NaiveOrdinal::finite(2)), &w));
    }

    #[test]
    fn powers_use_the_shift_rules() {
        let w = NaiveOrdinal::omega();
        let two = NaiveOrdinal::finite(2);
        // 2^w = w
        assert!(eq(&naive_pow(&two, &w).unwrap(), &w));
        // 2^(w^2) = w^w
        let w_squared = naive_pow(&w, &two).unwrap();
        let w_to_w = naive_pow(&w, &w).unwrap();
        assert!(eq(&naive_pow(&two, &w_squared).unwrap(), &w_to_w));
        // w^(w + 1) = w^w * w
        let exponent = naive_add(&w, &NaiveOrdinal::finite(1));
        assert!(eq(
            &naive_pow(&w, &exponent).unwrap(),
            &naive_mul(&w_to_w, &w)
        ));
        // (w + 1)^w = w^w
        let w_plus_1 = naive_add(&w, &NaiveOrdinal::finite(1));
        assert!(eq(&naive_pow(&w_plus_1, &w).unwrap(), &w_to_w));
    }

    #[test]
    fn expansion_bounds_are_enforced() {
        let two = NaiveOrdinal::finite(2);
        let huge = NaiveOrdinal::finite(100_000);
        assert!(naive_pow(&two, &huge).is_err());
    }

    #[test]
    fn conversion_rejects_uncountable_values() {
        let omega_1 = NormalOrdinal::initial(&NormalOrdinal::one());
        assert!(NaiveOrdinal::from_normal(&omega_1).is_err());
        let buried = NormalOrdinal::omega_power(&omega_1) + NormalOrdinal::nat(3u32);
        assert!(NaiveOrdinal::from_normal(&buried).is_err());
        let fine = NormalOrdinal::omega() * NormalOrdinal::nat(2u32) + NormalOrdinal::one();
        assert!(NaiveOrdinal::from_normal(&fine).is_ok());
    }
}
