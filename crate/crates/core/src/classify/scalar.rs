//! Classification of the scalar-valued spaces `C(xi)`.

use crate::classify::{Outcome, Verdict};
use crate::error::DomainError;
use crate::ordinal::NormalOrdinal;

pub(crate) const CIT_POWER: &str = "the omega-power criterion: with xi <= eta, C(xi) and C(eta) are isomorphic exactly when eta < xi^w (Bessaga-Pelczynski classes in the countable case, extended over singular and power-dominated initial segments)";
pub(crate) const CIT_CARD: &str =
    "isomorphic continuous-function spaces have index intervals of equal cardinality";
pub(crate) const CIT_SPLIT: &str = "over a regular uncountable initial ordinal alpha, an index below alpha^2 is never isomorphic to one at or beyond alpha^2";
pub(crate) const CIT_QUOT: &str = "within [alpha, alpha^2) for a regular uncountable alpha, spaces classify by the cardinality of the quotient of the index by alpha";
pub(crate) const REASON_FINITE: &str = "finite index sets are classified by dimension: C(xi) and C(eta) with finite xi, eta are isomorphic exactly when xi = eta; this classifier handles xi, eta >= w";

/// Decide whether `C(xi)` and `C(eta)` are isomorphic.
///
/// Always decides for `xi, eta >= w`; finite indices are out of scope (the
/// finite-dimensional comparison is by dimension and needs no machinery);
/// zero indices denote no space at all and are a domain error.
pub fn iso_scalar(xi: &NormalOrdinal, eta: &NormalOrdinal) -> Result<Verdict, DomainError> {
    if xi.is_zero() || eta.is_zero() {
        return Err(DomainError::new("space index must be at least 1"));
    }
    if xi.is_finite() || eta.is_finite() {
        return Ok(Verdict::out_of_scope(REASON_FINITE));
    }
    let (lo, hi) = if xi <= eta { (xi, eta) } else { (eta, xi) };
    if lo.cardinality() != hi.cardinality() {
        return Ok(Verdict::new(Outcome::NotIsomorphic)
            .push("scalar.cardinality-mismatch", CIT_CARD));
    }
    let alpha = lo.initial_ordinal();
    let square = &alpha * &alpha;
    let regular = alpha.is_regular().expect("alpha is infinite");
    if alpha == NormalOrdinal::omega() || !regular || *lo >= square {
        let outcome = if *hi < lo.pow(&NormalOrdinal::omega()) {
            Outcome::Isomorphic
        } else {
            Outcome::NotIsomorphic
        };
        return Ok(Verdict::new(outcome).push("scalar.power-criterion", CIT_POWER));
    }
    if *hi >= square {
        return Ok(Verdict::new(Outcome::NotIsomorphic).push("scalar.window-split", CIT_SPLIT));
    }
    let (lo_q, _) = lo.div_rem(&alpha).expect("alpha is nonzero");
    let (hi_q, _) = hi.div_rem(&alpha).expect("alpha is nonzero");
    let outcome = if lo_q.cardinality() == hi_q.cardinality() {
        Outcome::Isomorphic
    } else {
        Outcome::NotIsomorphic
    };
    Ok(Verdict::new(outcome).push("scalar.quotient-cardinality", CIT_QUOT))
}
