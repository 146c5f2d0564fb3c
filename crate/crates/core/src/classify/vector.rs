//! Classification of the vector-valued spaces `C(xi, X)`.
//!
//! The coefficient space enters only through its [`XDescriptor`] flags. The
//! branch structure mirrors the scalar case; the differences are confined to
//! the window `[alpha, alpha^2)` for a regular uncountable `alpha`, where
//! the spaces decompose as `c_0`-sums over their quotients and the
//! descriptor decides whether a single copy absorbs countably many, and to
//! the countable regime, where a `c_0`-absorbing coefficient space merges
//! the below-`w^w` classes with the finite ones (invisible here, since
//! finite indices are out of scope, but load-bearing for the
//! compact-operator route that instantiates these descriptors).

use crate::classify::{Outcome, Verdict, XDescriptor};
use crate::error::DomainError;
use crate::ordinal::{power_threshold, CardinalRank, NormalOrdinal};

const CIT_VEC_CARD: &str =
    "isomorphic vector-valued function spaces have index intervals of equal cardinality";
const CIT_VEC_POWER: &str = "with a coefficient space not absorbing its own c_0-sum, the omega-power criterion governs: isomorphic exactly when the larger index is below the omega-th power of the smaller";
const CIT_VEC_THRESHOLD: &str = "with a coefficient space absorbing its own c_0-sum, infinite countable indices classify by their power class (the least g with g^w above the index)";
const CIT_VEC_SPLIT: &str = "over a regular uncountable initial ordinal alpha, an index below alpha^2 is never isomorphic to one at or beyond alpha^2";
const CIT_VEC_C0SUM: &str = "inside the window each space is a c_0-sum of copies indexed by its quotient; countable sums compare by the c_0-sum rule for the coefficient space";
const CIT_VEC_QUOT: &str = "inside the window each space is a c_0-sum of copies indexed by its quotient; the sums compare by the cardinality of their index sets";
const REASON_VEC_FINITE: &str = "finite index sets are classified by dimension: C(xi, X) with finite xi is a finite direct sum of copies of X; this classifier handles xi, eta >= w";
const REASON_DESCRIPTOR: &str = "the coefficient-space descriptor must certify square isomorphism and membership in the admissible class (square_iso and in_admissible_class)";

/// Whether `c_0(J, X)` and `c_0(I, X)` are isomorphic for index sets of
/// countable cardinalities `m = |J|`, `n = |I|`.
///
/// Requires a square-isomorphic `X`. Equal cardinalities always agree; two
/// distinct finite nonzero sizes are absorbed by squaring; the empty sum is
/// the null space and matches nothing else; and a finite-versus-countable
/// split is decided by whether `X` absorbs its own `c_0`-sum.
pub fn c0_sum_iso(
    m: &CardinalRank,
    n: &CardinalRank,
    x: &XDescriptor,
) -> Result<bool, DomainError> {
    if !x.square_iso {
        return Err(DomainError::new(
            "c_0-sum comparison requires a square-isomorphic coefficient space",
        ));
    }
    if !m.is_countable() || !n.is_countable() {
        return Err(DomainError::new(
            "c_0-sum comparison is defined for countable index cardinalities",
        ));
    }
    if m == n {
        return Ok(true);
    }
    let zero = CardinalRank::Finite(0u32.into());
    if *m == zero || *n == zero {
        return Ok(false);
    }
    if m.is_finite() && n.is_finite() {
        return Ok(true);
    }
    Ok(x.c0_self_iso)
}

/// Decide whether `C(xi, X)` and `C(eta, X)` are isomorphic, for a
/// coefficient space described by `x`.
pub fn iso_vector(
    xi: &NormalOrdinal,
    eta: &NormalOrdinal,
    x: &XDescriptor,
) -> Result<Verdict, DomainError> {
    if xi.is_zero() || eta.is_zero() {
        return Err(DomainError::new("space index must be at least 1"));
    }
    if !(x.square_iso && x.in_admissible_class) {
        return Ok(Verdict::out_of_scope(REASON_DESCRIPTOR));
    }
    if xi.is_finite() || eta.is_finite() {
        return Ok(Verdict::out_of_scope(REASON_VEC_FINITE));
    }
    let (lo, hi) = if xi <= eta { (xi, eta) } else { (eta, xi) };
    if lo.cardinality() != hi.cardinality() {
        return Ok(Verdict::new(Outcome::NotIsomorphic)
            .push("vector.cardinality-mismatch", CIT_VEC_CARD));
    }
    let alpha = lo.initial_ordinal();
    let regular = alpha.is_regular().expect("alpha is infinite");
    if alpha == NormalOrdinal::omega() && x.c0_self_iso {
        let outcome = if power_threshold(lo).expect("lo >= w")
            == power_threshold(hi).expect("hi >= w")
        {
            Outcome::Isomorphic
        } else {
            Outcome::NotIsomorphic
        };
        return Ok(Verdict::new(outcome).push("vector.threshold-class", CIT_VEC_THRESHOLD));
    }
    let square = &alpha * &alpha;
    if alpha == NormalOrdinal::omega() || !regular || *lo >= square {
        let outcome = if *hi < lo.pow(&NormalOrdinal::omega()) {
            Outcome::Isomorphic
        } else {
            Outcome::NotIsomorphic
        };
        return Ok(Verdict::new(outcome).push("vector.power-criterion", CIT_VEC_POWER));
    }
    if *hi >= square {
        return Ok(Verdict::new(Outcome::NotIsomorphic).push("vector.window-split", CIT_VEC_SPLIT));
    }
    let (lo_q, _) = lo.div_rem(&alpha).expect("alpha is nonzero");
    let (hi_q, _) = hi.div_rem(&alpha).expect("alpha is nonzero");
    let lo_card = lo_q.cardinality();
    let hi_card = hi_q.cardinality();
    match (lo_card.is_countable(), hi_card.is_countable()) {
        (true, true) => {
            let iso = c0_sum_iso(&lo_card, &hi_card, x)?;
            let outcome = if iso {
                Outcome::Isomorphic
            } else {
                Outcome::NotIsomorphic
            };
            Ok(Verdict::new(outcome).push("vector.c0-sum", CIT_VEC_C0SUM))
        }
        (false, false) => {
            let outcome = if lo_card == hi_card {
                Outcome::Isomorphic
            } else {
                Outcome::NotIsomorphic
            };
            Ok(Verdict::new(outcome).push("vector.quotient-cardinality", CIT_VEC_QUOT))
        }
        _ => Ok(Verdict::new(Outcome::NotIsomorphic)
            .push("vector.quotient-cardinality", CIT_VEC_QUOT)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(k: u64) -> NormalOrdinal {
        NormalOrdinal::nat(k)
    }

    fn w() -> NormalOrdinal {
        NormalOrdinal::omega()
    }

    fn w1() -> NormalOrdinal {
        NormalOrdinal::initial(&n(1))
    }

    fn lp() -> XDescriptor {
        XDescriptor::lp()
    }

    fn absorbing() -> XDescriptor {
        XDescriptor::k_factor(false)
    }

    fn outcome(xi: &NormalOrdinal, eta: &NormalOrdinal, x: &XDescriptor) -> Outcome {
        iso_vector(xi, eta, x).unwrap().outcome
    }

    #[test]
    fn c0_sum_rules() {
        let fin = |k: u32| CardinalRank::Finite(k.into());
        let aleph0 = CardinalRank::Aleph(NormalOrdinal::zero());
        assert!(c0_sum_iso(&fin(2), &fin(5), &lp()).unwrap());
        assert!(c0_sum_iso(&aleph0, &aleph0, &lp()).unwrap());
        assert!(!c0_sum_iso(&fin(1), &aleph0, &lp()).unwrap());
        assert!(c0_sum_iso(&fin(1), &aleph0, &absorbing()).unwrap());
        assert!(!c0_sum_iso(&fin(0), &fin(3), &lp()).unwrap());
        let aleph1 = CardinalRank::Aleph(n(1));
        assert!(c0_sum_iso(&aleph1, &aleph0, &lp()).is_err());
        let no_square = XDescriptor {
            square_iso: false,
            ..lp()
        };
        assert!(c0_sum_iso(&fin(2), &fin(2), &no_square).is_err());
    }

    #[test]
    fn window_decided_by_descriptor() {
        assert_eq!(outcome(&w1(), &(&w1() * &n(2)), &lp()), Outcome::Isomorphic);
        assert_eq!(
            outcome(&w1(), &(&w1() * &w()), &lp()),
            Outcome::NotIsomorphic
        );
        assert_eq!(
            outcome(&w1(), &(&w1() * &w()), &absorbing()),
            Outcome::Isomorphic
        );
        // uncountable quotients compare by cardinality
        let w2 = NormalOrdinal::initial(&n(2));
        assert_eq!(
            outcome(&(&w2 * &w()), &(&w2 * &w1()), &lp()),
            Outcome::NotIsomorphic
        );
        assert_eq!(
            outcome(&(&w2 * &w1()), &(&w2 * &(&w1() + &n(4))), &lp()),
            Outcome::Isomorphic
        );
    }

    #[test]
    fn beyond_square_splits() {
        let eta = &(&w1() * &w1()) * &w();
        assert_eq!(outcome(&w1(), &eta, &lp()), Outcome::NotIsomorphic);
        assert_eq!(outcome(&w1(), &eta, &absorbing()), Outcome::NotIsomorphic);
    }

    #[test]
    fn singular_and_countable_power_rules() {
        let w_omega = NormalOrdinal::initial(&w());
        assert_eq!(
            outcome(&w_omega, &(&w_omega * &w()), &lp()),
            Outcome::Isomorphic
        );
        assert_eq!(outcome(&w(), &NormalOrdinal::omega_power(&n(3)), &lp()), Outcome::Isomorphic);
        assert_eq!(
            outcome(&w(), &NormalOrdinal::omega_power(&w()), &lp()),
            Outcome::NotIsomorphic
        );
        // the absorbing variant agrees on the countable domain
        assert_eq!(
            outcome(&w(), &NormalOrdinal::omega_power(&n(3)), &absorbing()),
            Outcome::Isomorphic
        );
        assert_eq!(
            outcome(&w(), &NormalOrdinal::omega_power(&w()), &absorbing()),
            Outcome::NotIsomorphic
        );
    }

    #[test]
    fn descriptor_and_domain_guards() {
        let bad = XDescriptor {
            in_admissible_class: false,
            ..lp()
        };
        let v = iso_vector(&w(), &w(), &bad).unwrap();
        assert_eq!(v.outcome, Outcome::OutOfScope);
        assert!(iso_vector(&NormalOrdinal::zero(), &w(), &lp()).is_err());
        let v = iso_vector(&n(2), &w(), &lp()).unwrap();
        assert_eq!(v.outcome, Outcome::OutOfScope);
    }
}
