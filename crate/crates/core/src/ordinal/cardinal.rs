//! Cardinal invariants of ordinals: cardinality, initial ordinals,
//! cofinality and regularity.

use std::fmt;

use num_bigint::BigUint;

use super::{NormalOrdinal, Repr};
use crate::error::DomainError;

/// The cardinality of an ordinal: either a natural number or an aleph,
/// identified by its index (`Aleph(0)` is `aleph_0`, countably infinite).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CardinalRank {
    Finite(BigUint),
    Aleph(NormalOrdinal),
}

impl CardinalRank {
    pub fn is_finite(&self) -> bool {
        matches!(self, CardinalRank::Finite(_))
    }

    pub fn is_countable(&self) -> bool {
        match self {
            CardinalRank::Finite(_) => true,
            CardinalRank::Aleph(a) => a.is_zero(),
        }
    }
}

impl fmt::Display for CardinalRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CardinalRank::Finite(n) => write!(f, "{n}"),
            CardinalRank::Aleph(a) => match a.as_nat() {
                Some(n) => write!(f, "aleph_{n}"),
                None => write!(f, "aleph_[{a}]"),
            },
        }
    }
}

impl NormalOrdinal {
    /// The cardinality of this ordinal.
    pub fn cardinality(&self) -> CardinalRank {
        match self.as_nat() {
            Some(n) => CardinalRank::Finite(n),
            None => CardinalRank::Aleph(aleph_rank(self)),
        }
    }

    /// The classification-side initial ordinal: `1` for every finite ordinal
    /// (zero included — the "finite index" convention used throughout the
    /// space classifiers, where all finite index sets behave alike), and for
    /// infinite ordinals the least ordinal of the same cardinality (`w` for
    /// countable ones, the atom `w_a` for cardinality `aleph_a`).
    pub fn initial_ordinal(&self) -> NormalOrdinal {
        match self.cardinality() {
            CardinalRank::Finite(_) => NormalOrdinal::one(),
            CardinalRank::Aleph(a) => NormalOrdinal::initial(&a),
        }
    }

    /// The cofinality: `0` for zero, `1` for successors, and for limits the
    /// least order type of an unbounded subset.
    pub fn cofinality(&self) -> NormalOrdinal {
        if self.is_zero() {
            return NormalOrdinal::zero();
        }
        if self.is_successor() {
            return NormalOrdinal::one();
        }
        match &self.0 {
            // w_a: regular (cf = self) at successor indices; at a limit
            // index the sequence w_b (b -> a) is cofinal, so cf(w_a) = cf(a).
            Repr::Atom(a) => {
                if a.is_successor() {
                    self.clone()
                } else {
                    a.cofinality()
                }
            }
            // A limit sum is cofinal in its last term w^e*c, whose
            // cofinality is that of w^e: w when e is a successor
            // (w^{d+1} = w^d * w), cf(e) when e is a limit.
            Repr::Sum(ts) => {
                let e = &ts.last().expect("nonzero by the checks above").exponent;
                if e.is_successor() {
                    NormalOrdinal::omega()
                } else {
                    e.cofinality()
                }
            }
        }
    }

    /// Whether this ordinal is a regular cardinal's initial ordinal, i.e.
    /// infinite, initial, and equal to its own cofinality. Finite ordinals
    /// are outside the domain.
    pub fn is_regular(&self) -> Result<bool, DomainError> {
        if self.is_finite() {
            return Err(DomainError::new(
                "regularity is defined for infinite ordinals",
            ));
        }
        Ok(self.initial_ordinal() == *self && self.cofinality() == *self)
    }
}

/// The index `r` with `|xi| = aleph_r`, for infinite `xi`.
///
/// An atom carries its index directly (`|w_a| = aleph_a`). For a sum,
/// coefficients are finite and `|w^e| = max(aleph_0, |e|)`, so the rank is
/// the largest rank among the infinite exponents, or `0` when every exponent
/// is countable all the way down.
fn aleph_rank(xi: &NormalOrdinal) -> NormalOrdinal {
    match &xi.0 {
        Repr::Atom(a) => (**a).clone(),
        Repr::Sum(ts) => ts
            .iter()
            .filter(|t| !t.exponent.is_finite())
            .map(|t| aleph_rank(&t.exponent))
            .max()
            .unwrap_or_else(NormalOrdinal::zero),
    }
}
