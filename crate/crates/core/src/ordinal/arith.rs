//! Ordinal arithmetic on Cantor normal forms.
//!
//! Addition and multiplication are the usual (non-commutative) ordinal
//! operations, exposed through the `+` and `*` operators on references.
//! Exponentiation and left division are inherent methods, since their names
//! would otherwise collide with the numeric traits they do not quite satisfy
//! (`pow` is total here, `div_rem` returns a quotient/remainder *pair* for
//! the left-division identity `x = d*q + r`, `r < d`).
//!
//! All routines work on the expanded term view of the operands and feed their
//! result back through the canonicalizing constructor, so atoms (`w^{w_a} =
//! w_a`) never leak an un-collapsed spelling.

use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{NormalOrdinal, Term};
use crate::error::DomainError;

impl Add for &NormalOrdinal {
    type Output = NormalOrdinal;

    /// Ordinal addition: the left operand's terms below the right operand's
    /// leading exponent are absorbed (`1 + w = w`), equal exponents merge
    /// their coefficients, everything else concatenates.
    fn add(self, rhs: &NormalOrdinal) -> NormalOrdinal {
        let bt = rhs.expanded_terms();
        let Some(lead) = bt.first() else {
            return self.clone();
        };
        let at = self.expanded_terms();
        let mut out: Vec<Term> = Vec::with_capacity(at.len() + bt.len());
        let mut merged = lead.coefficient.clone();
        for t in at.iter() {
            match t.exponent.cmp(&lead.exponent) {
                std::cmp::Ordering::Greater => out.push(t.clone()),
                std::cmp::Ordering::Equal => {
                    merged += &t.coefficient;
                    break;
                }
                std::cmp::Ordering::Less => break,
            }
        }
        out.push(Term {
            exponent: lead.exponent.clone(),
            coefficient: merged,
        });
        out.extend(bt[1..].iter().cloned());
        NormalOrdinal::from_terms(out)
    }
}

impl Add for NormalOrdinal {
    type Output = NormalOrdinal;

    fn add(self, rhs: NormalOrdinal) -> NormalOrdinal {
        &self + &rhs
    }
}

impl Mul for &NormalOrdinal {
    type Output = NormalOrdinal;

    /// Ordinal multiplication, distributed over the right operand:
    /// `a * w^e = w^{a_1 + e}` for `e > 0` (only the leading exponent of `a`
    /// survives), while the finite part `d` of the right operand contributes
    /// `w^{a_1}*(c_1*d)` followed by the tail of `a`.
    fn mul(self, rhs: &NormalOrdinal) -> NormalOrdinal {
        if self.is_zero() || rhs.is_zero() {
            return NormalOrdinal::zero();
        }
        let at = self.expanded_terms();
        let a_lead = &at[0];
        let bt = rhs.expanded_terms();
        let mut out: Vec<Term> = Vec::with_capacity(bt.len() + at.len());
        for t in bt.iter() {
            if t.exponent.is_zero() {
                out.push(Term {
                    exponent: a_lead.exponent.clone(),
                    coefficient: &a_lead.coefficient * &t.coefficient,
                });
                out.extend(at[1..].iter().cloned());
            } else {
                out.push(Term {
                    exponent: &a_lead.exponent + &t.exponent,
                    coefficient: t.coefficient.clone(),
                });
            }
        }
        NormalOrdinal::from_terms(out)
    }
}

impl Mul for NormalOrdinal {
    type Output = NormalOrdinal;

    fn mul(self, rhs: NormalOrdinal) -> NormalOrdinal {
        &self * &rhs
    }
}

impl NormalOrdinal {
    /// Ordinal exponentiation `self^exponent`.
    ///
    /// Total on all ordinals. Finite towers (`2^3`) are plain integer powers;
    /// a transfinite exponent is split as `limit + n`, with the limit part
    /// handled by the closed forms `m^{w^e*c} = w^{w^{e'}*c}` (finite base
    /// `m >= 2`, `e'` the left predecessor of `e`) and `a^limit =
    /// w^{a_1*limit}` (infinite base with leading exponent `a_1`), and the
    /// finite part by repeated squaring.
    pub fn pow(&self, exponent: &NormalOrdinal) -> NormalOrdinal {
        if exponent.is_zero() {
            return NormalOrdinal::one();
        }
        if self.is_zero() {
            return NormalOrdinal::zero();
        }
        if self.as_nat().is_some_and(|n| n.is_one()) {
            return NormalOrdinal::one();
        }
        let et = exponent.expanded_terms();
        let split = et.iter().position(|t| t.exponent.is_zero());
        let (limit_terms, finite_part) = match split {
            Some(i) => (&et[..i], et[i].coefficient.clone()),
            None => (&et[..], BigUint::zero()),
        };
        if limit_terms.is_empty() {
            return self.pow_nat(&finite_part);
        }
        let limit_power = if let Some(m) = self.as_nat() {
            // m >= 2 here. Each limit term w^e*c contributes w^{e'}*c to the
            // result's exponent, where 1 + e' = e: for finite e that is
            // e - 1 (m^w = w eats one level), for infinite e it is e itself.
            debug_assert!(m >= BigUint::from(2u32));
            let deflated = limit_terms
                .iter()
                .map(|t| Term {
                    exponent: left_predecessor(&t.exponent),
                    coefficient: t.coefficient.clone(),
                })
                .collect();
            NormalOrdinal::omega_power(&NormalOrdinal::from_terms(deflated))
        } else {
            let a1 = self.leading_exponent().expect("infinite base").clone();
            let limit = NormalOrdinal::from_terms(limit_terms.to_vec());
            NormalOrdinal::omega_power(&(&a1 * &limit))
        };
        &limit_power * &self.pow_nat(&finite_part)
    }

    /// `self^n` for a natural exponent, by repeated squaring.
    fn pow_nat(&self, n: &BigUint) -> NormalOrdinal {
        if n.is_zero() {
            return NormalOrdinal::one();
        }
        if let Some(m) = self.as_nat() {
            return NormalOrdinal::nat(num_traits::Pow::pow(&m, n));
        }
        let mut acc = NormalOrdinal::one();
        for i in (0..n.bits()).rev() {
            acc = &acc * &acc;
            if n.bit(i) {
                acc = &acc * self;
            }
        }
        acc
    }

    /// Left division: the unique `(q, r)` with `self = divisor*q + r` and
    /// `r < divisor`. Fails only for a zero divisor.
    pub fn div_rem(&self, divisor: &NormalOrdinal) -> Result<(NormalOrdinal, NormalOrdinal), DomainError> {
        if divisor.is_zero() {
            return Err(DomainError::new("division by the zero ordinal"));
        }
        let dt = divisor.expanded_terms().into_owned();
        let d_lead = &dt[0];
        let mut q_terms: Vec<Term> = Vec::new();
        let mut r = self.clone();
        while r >= *divisor {
            let rt = r.expanded_terms().into_owned();
            let r_lead = &rt[0];
            let offset = left_subtract(&d_lead.exponent, &r_lead.exponent);
            if !offset.is_zero() {
                // divisor * w^offset * c reproduces r's leading term exactly,
                // so peel it off and keep dividing the tail.
                q_terms.push(Term {
                    exponent: offset,
                    coefficient: r_lead.coefficient.clone(),
                });
                r = NormalOrdinal::from_terms(rt[1..].to_vec());
            } else {
                // Leading exponents agree: the last quotient digit is the
                // largest finite v with divisor*v <= r. That is
                // floor(c/c_d), stepped down once when the division is exact
                // but the divisor's tail overshoots what remains of r.
                let (mut v, rem) = r_lead.coefficient.div_rem(&d_lead.coefficient);
                if rem.is_zero() {
                    let d_tail = NormalOrdinal::from_terms(dt[1..].to_vec());
                    let r_tail = NormalOrdinal::from_terms(rt[1..].to_vec());
                    if d_tail > r_tail {
                        v -= 1u32;
                    }
                }
                debug_assert!(!v.is_zero(), "loop guard guarantees divisor <= r");
                let consumed = divisor * &NormalOrdinal::nat(v.clone());
                r = left_subtract(&consumed, &r);
                q_terms.push(Term {
                    exponent: NormalOrdinal::zero(),
                    coefficient: v,
                });
                break;
            }
        }
        Ok((NormalOrdinal::from_terms(q_terms), r))
    }
}

/// The unique `g` with `base + g = total`, for `base <= total`.
///
/// Because representations are canonical, this is a prefix computation: skip
/// the common prefix of the two normal forms; the first difference either has
/// a larger exponent on the `total` side (then `g` is that whole suffix) or
/// the same exponent with a larger coefficient (then `g` starts with the
/// coefficient difference).
pub(crate) fn left_subtract(base: &NormalOrdinal, total: &NormalOrdinal) -> NormalOrdinal {
    debug_assert!(base <= total, "left_subtract requires base <= total");
    let bt = base.expanded_terms();
    let tt = total.expanded_terms();
    for (i, b) in bt.iter().enumerate() {
        let t = &tt[i];
        if b == t {
            continue;
        }
        if b.exponent == t.exponent {
            let mut out = vec![Term {
                exponent: t.exponent.clone(),
                coefficient: &t.coefficient - &b.coefficient,
            }];
            out.extend(tt[i + 1..].iter().cloned());
            return NormalOrdinal::from_terms(out);
        }
        return NormalOrdinal::from_terms(tt[i..].to_vec());
    }
    NormalOrdinal::from_terms(tt[bt.len()..].to_vec())
}

/// The left predecessor `e'` with `1 + e' = e`, for `e >= 1`: subtracts one
/// from a finite `e` and is the identity on infinite `e`.
fn left_predecessor(e: &NormalOrdinal) -> NormalOrdinal {
    match e.as_nat() {
        Some(n) => {
            debug_assert!(!n.is_zero());
            NormalOrdinal::nat(n - 1u32)
        }
        None => e.clone(),
    }
}

/// The least ordinal `g` with `g^w > xi`, defined for `xi >= w`.
///
/// Writing `xi = w^{e_1}*c_1 + ...` and `e_1 = w^{f_1}*d_1 + ...`, the answer
/// is `w^{w^{f_1}}`: anything smaller has `g^w <= w^{e_1} <= xi`, while
/// `(w^{w^{f_1}})^w = w^{w^{f_1}*w}` already exceeds every ordinal whose
/// leading exponent starts at `w^{f_1}`. Both rewrites collapse on atoms, so
/// uncountable initial ordinals are their own threshold.
pub fn power_threshold(xi: &NormalOrdinal) -> Result<NormalOrdinal, DomainError> {
    if xi < &NormalOrdinal::omega() {
        return Err(DomainError::new(
            "power threshold is defined for ordinals >= w",
        ));
    }
    let e1 = xi.leading_exponent().expect("xi >= w is nonzero");
    let f1 = e1.leading_exponent().expect("e1 >= 1 since xi is infinite");
    Ok(NormalOrdinal::omega_power(&NormalOrdinal::omega_power(f1)))
}
