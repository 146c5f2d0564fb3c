//! Ordinals in Cantor normal form, extended with uncountable initial-ordinal
//! atoms.
//!
//! Every ordinal handled by this crate is one of two shapes:
//!
//! * a finite sum `w^{e_1}*c_1 + ... + w^{e_k}*c_k` with strictly decreasing
//!   ordinal exponents `e_1 > ... > e_k` and positive integer coefficients —
//!   the classical Cantor normal form, with `k = 0` giving zero — or
//! * an *atom* `w_a`, the initial ordinal of the cardinal `aleph_a` for an
//!   index `a >= 1`, treated as an opaque base point.
//!
//! Uncountable initial ordinals are epsilon numbers (`w^{w_a} = w_a`), so the
//! one-term sum `w^{w_a}*1` would be a second spelling of the atom `w_a`.
//! The internal constructor collapses that spelling, which makes the
//! representation canonical: two ordinals are equal exactly when their
//! representations are structurally equal. That lets `PartialEq`, `Eq` and
//! `Hash` be derived, while `Ord` is implemented against the arithmetic
//! meaning of the normal form.
//!
//! Arithmetic (`+`, `*`, [`NormalOrdinal::pow`], [`NormalOrdinal::div_rem`])
//! lives in the `arith` submodule; cardinal invariants (cardinality,
//! cofinality, initial ordinals) live in `cardinal`.

mod arith;
mod cardinal;

pub use arith::power_threshold;
pub use cardinal::CardinalRank;

use std::borrow::Cow;
use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// One term `w^exponent * coefficient` of a Cantor normal form.
///
/// Invariant: `coefficient >= 1`. Zero is the empty sum, never a zero term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Term {
    pub(crate) exponent: NormalOrdinal,
    pub(crate) coefficient: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// The initial ordinal `w_a` of `aleph_a`, for an index `a >= 1`.
    /// (`w_0` is not an atom; it is the sum `w^1*1`.)
    Atom(Box<NormalOrdinal>),
    /// `w^{e_1}*c_1 + ... + w^{e_k}*c_k` with strictly decreasing exponents.
    /// The empty sum is zero. A sole term `w^{w_a}*1` is forbidden here; it
    /// must be represented as `Atom(a)`.
    Sum(Vec<Term>),
}

/// An ordinal in canonical form.
///
/// Construct values with [`NormalOrdinal::zero`], [`NormalOrdinal::nat`],
/// [`NormalOrdinal::omega`], [`NormalOrdinal::initial`] and
/// [`NormalOrdinal::omega_power`], or by parsing text, and combine them with
/// `&a + &b`, `&a * &b`, [`NormalOrdinal::pow`] and
/// [`NormalOrdinal::div_rem`]. Every operation returns a value that is again
/// in canonical form, so structural equality is ordinal equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalOrdinal(Repr);

impl NormalOrdinal {
    /// The ordinal `0` (the empty sum).
    pub fn zero() -> Self {
        NormalOrdinal(Repr::Sum(Vec::new()))
    }

    /// The ordinal `1`.
    pub fn one() -> Self {
        Self::nat(1u32)
    }

    /// A finite ordinal (natural number).
    pub fn nat(n: impl Into<BigUint>) -> Self {
        let n = n.into();
        if n.is_zero() {
            Self::zero()
        } else {
            NormalOrdinal(Repr::Sum(vec![Term {
                exponent: Self::zero(),
                coefficient: n,
            }]))
        }
    }

    /// The first infinite ordinal `w`.
    pub fn omega() -> Self {
        NormalOrdinal(Repr::Sum(vec![Term {
            exponent: Self::one(),
            coefficient: BigUint::one(),
        }]))
    }

    /// The initial ordinal `w_index` of the cardinal `aleph_index`.
    ///
    /// `initial(0)` is `w` itself; any larger index produces an uncountable
    /// atom. Indices may themselves be transfinite (`w_[w]`, `w_[w_1]`, ...).
    pub fn initial(index: &NormalOrdinal) -> Self {
        if index.is_zero() {
            Self::omega()
        } else {
            NormalOrdinal(Repr::Atom(Box::new(index.clone())))
        }
    }

    /// `w^exponent`, collapsed when the exponent is an uncountable initial
    /// ordinal (those are epsilon numbers, so `w^{w_a} = w_a`).
    pub fn omega_power(exponent: &NormalOrdinal) -> Self {
        Self::from_terms(vec![Term {
            exponent: exponent.clone(),
            coefficient: BigUint::one(),
        }])
    }

    /// Build an ordinal from a ready-made normal form. Callers must supply
    /// strictly decreasing exponents and positive coefficients; this applies
    /// the epsilon-number collapse so the result is canonical.
    pub(crate) fn from_terms(terms: Vec<Term>) -> Self {
        debug_assert!(
            terms.iter().all(|t| !t.coefficient.is_zero()),
            "normal form contains a zero coefficient"
        );
        debug_assert!(
            terms.windows(2).all(|w| w[0].exponent > w[1].exponent),
            "normal form exponents are not strictly decreasing"
        );
        if terms.len() == 1
            && terms[0].coefficient.is_one()
            && matches!(terms[0].exponent.0, Repr::Atom(_))
        {
            return terms.into_iter().next().expect("length checked").exponent;
        }
        NormalOrdinal(Repr::Sum(terms))
    }

    /// View of the normal form as a term slice; atoms expand to their
    /// one-term spelling `w^{w_a}*1` on the fly.
    pub(crate) fn expanded_terms(&self) -> Cow<'_, [Term]> {
        match &self.0 {
            Repr::Sum(ts) => Cow::Borrowed(ts.as_slice()),
            Repr::Atom(_) => Cow::Owned(vec![Term {
                exponent: self.clone(),
                coefficient: BigUint::one(),
            }]),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.0, Repr::Sum(ts) if ts.is_empty())
    }

    /// `true` for natural numbers, including zero.
    pub fn is_finite(&self) -> bool {
        match &self.0 {
            Repr::Atom(_) => false,
            Repr::Sum(ts) => ts.iter().all(|t| t.exponent.is_zero()),
        }
    }

    /// The value as a natural number, when finite.
    pub fn as_nat(&self) -> Option<BigUint> {
        match &self.0 {
            Repr::Atom(_) => None,
            Repr::Sum(ts) => match ts.as_slice() {
                [] => Some(BigUint::zero()),
                [t] if t.exponent.is_zero() => Some(t.coefficient.clone()),
                _ => None,
            },
        }
    }

    /// `true` when the ordinal has an immediate predecessor.
    pub fn is_successor(&self) -> bool {
        matches!(&self.0, Repr::Sum(ts) if ts.last().is_some_and(|t| t.exponent.is_zero()))
    }

    /// `true` for nonzero ordinals with no immediate predecessor.
    pub fn is_limit(&self) -> bool {
        !self.is_zero() && !self.is_successor()
    }

    /// `true` when no uncountable atom occurs anywhere in the normal form.
    pub fn is_countable(&self) -> bool {
        match &self.0 {
            Repr::Atom(_) => false,
            Repr::Sum(ts) => ts.iter().all(|t| t.exponent.is_countable()),
        }
    }

    /// The exponent of the leading term, i.e. the `e_1` in
    /// `w^{e_1}*c_1 + ...`; `None` for zero. An atom is its own leading
    /// exponent (`w_a = w^{w_a}`).
    pub fn leading_exponent(&self) -> Option<&NormalOrdinal> {
        match &self.0 {
            Repr::Atom(_) => Some(self),
            Repr::Sum(ts) => ts.first().map(|t| &t.exponent),
        }
    }

    /// The coefficient of the leading term; `None` for zero.
    pub fn leading_coefficient(&self) -> Option<BigUint> {
        match &self.0 {
            Repr::Atom(_) => Some(BigUint::one()),
            Repr::Sum(ts) => ts.first().map(|t| t.coefficient.clone()),
        }
    }

    /// For an atom `w_a`, the index `a`; `None` otherwise.
    pub fn atom_index(&self) -> Option<&NormalOrdinal> {
        match &self.0 {
            Repr::Atom(a) => Some(a),
            Repr::Sum(_) => None,
        }
    }

    /// The Cantor normal form as `(exponent, coefficient)` pairs with
    /// exponents strictly decreasing. Zero yields the empty list; an atom
    /// `w_a` yields the single pair `(w_a, 1)`.
    pub fn to_terms(&self) -> Vec<(NormalOrdinal, BigUint)> {
        self.expanded_terms()
            .iter()
            .map(|t| (t.exponent.clone(), t.coefficient.clone()))
            .collect()
    }
}

impl Ord for NormalOrdinal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Atom(a), Repr::Atom(b)) => a.cmp(b),
            (Repr::Sum(xs), Repr::Sum(ys)) => cmp_terms(xs, ys),
            (Repr::Atom(_), Repr::Sum(ys)) => cmp_atom_sum(self, ys),
            (Repr::Sum(xs), Repr::Atom(_)) => cmp_atom_sum(other, xs).reverse(),
        }
    }
}

impl PartialOrd for NormalOrdinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Compare two normal forms term by term. The leading term dominates the
/// whole tail (`tail < w^{e_1}`), so the first difference — in exponent,
/// then coefficient — decides; a strict prefix is the smaller ordinal.
fn cmp_terms(xs: &[Term], ys: &[Term]) -> Ordering {
    for (x, y) in xs.iter().zip(ys) {
        match x.exponent.cmp(&y.exponent) {
            Ordering::Equal => {}
            ord => return ord,
        }
        match x.coefficient.cmp(&y.coefficient) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    xs.len().cmp(&ys.len())
}

/// Compare an atom `w_a` with a sum. Since `w_a = w^{w_a}`, it suffices to
/// compare `w_a` against the sum's leading exponent; on a tie the sum must
/// properly extend `w^{w_a}*1` (that exact spelling is collapsed away), so
/// the atom is smaller.
fn cmp_atom_sum(atom: &NormalOrdinal, ys: &[Term]) -> Ordering {
    match ys.first() {
        None => Ordering::Greater,
        Some(lead) => match atom.cmp(&lead.exponent) {
            Ordering::Equal => Ordering::Less,
            ord => ord,
        },
    }
}
