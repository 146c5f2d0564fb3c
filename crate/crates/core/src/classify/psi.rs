//! The canonical second index of a compact-operator space.
//!
//! For every in-scope `K(C(lambda, l_p), C(xi, l_q))` there is a canonical
//! isomorphic representative `K(C(lambda0, l_p), C(psi, l_q))` with
//! `lambda0 = initial_ordinal(lambda)` and `psi = canonical_index(lambda,
//! xi)`. The index is computed by a five-way case split on the initial
//! ordinal `xi_0` of `|xi|` and on whether `lambda` is finite; the window
//! `xi_0 <= xi <= xi_0^2` for a regular uncountable `xi_0` is where the two
//! [`PsiMode`] variants differ (countable quotients collapse in repaired
//! mode; literal mode keeps quotients strictly above `w`).

use crate::classify::{AxiomContext, CanonicalPair, PsiMode, TraceEntry};
use crate::ordinal::{power_threshold, NormalOrdinal};

const CIT_FINITE: &str =
    "a finite second index collapses to 1: finitely many coordinates are absorbed by the operator space itself";
const CIT_SMALL_COUNTABLE: &str =
    "for finite lambda and xi below w^w, the compact-operator identification K(l_p, X) = K(l_p, c_0(X)) collapses the second index to 1";
const CIT_COUNTABLE_BASE: &str =
    "for targets of countable cardinality the canonical index is the least g with g^w above xi (the power-class representative)";
const CIT_COUNTABLE_BASE_GAP: &str =
    "finite lambda with a countable target at or above w^w reduces to the scalar power classes, so the canonical index is the least g with g^w above xi";
const CIT_SINGULAR_BASE: &str =
    "over a singular initial ordinal the classification degenerates to the power criterion, so the canonical index is the least g with g^w above xi";
const CIT_BEYOND_SQUARE: &str =
    "beyond the square of a regular uncountable initial ordinal, the canonical index is the larger of that square and the least g with g^w above xi";
const CIT_WINDOW_FINITE: &str =
    "inside the window up to the square, a finite quotient is absorbed: C(xi) and C(xi_0) coincide up to isomorphism";
const CIT_WINDOW_INFINITE: &str =
    "inside the window up to the square, an infinite quotient contributes its own initial ordinal as a factor";
const CIT_WINDOW_COUNTABLE_COLLAPSE: &str =
    "for finite lambda every countable quotient collapses (the c_0-sum of countably many copies is absorbed through K(l_p, X) = K(l_p, c_0(X)))";
const CIT_WINDOW_LITERAL: &str =
    "literal window threshold: quotients strictly above w contribute their initial ordinal, quotients up to w collapse";

/// The canonical second index; total on all ordinals.
pub fn canonical_index(
    lambda: &NormalOrdinal,
    xi: &NormalOrdinal,
    ctx: &AxiomContext,
) -> NormalOrdinal {
    canonical_index_traced(lambda, xi, ctx).0
}

/// The canonical pair `(lambda0, psi)` of a compact-operator space.
pub fn canonical_pair(
    lambda: &NormalOrdinal,
    xi: &NormalOrdinal,
    ctx: &AxiomContext,
) -> CanonicalPair {
    CanonicalPair {
        lambda0: lambda.initial_ordinal(),
        psi: canonical_index(lambda, xi, ctx),
    }
}

/// As [`canonical_index`], also reporting which case fired.
pub(crate) fn canonical_index_traced(
    lambda: &NormalOrdinal,
    xi: &NormalOrdinal,
    ctx: &AxiomContext,
) -> (NormalOrdinal, TraceEntry) {
    let lambda_finite = lambda.is_finite();
    if xi.is_finite() {
        return (
            NormalOrdinal::one(),
            TraceEntry::new("psi.finite-target", CIT_FINITE),
        );
    }
    let w_to_w = NormalOrdinal::omega_power(&NormalOrdinal::omega());
    if lambda_finite && *xi < w_to_w {
        return (
            NormalOrdinal::one(),
            TraceEntry::new("psi.small-countable", CIT_SMALL_COUNTABLE),
        );
    }
    let xi0 = xi.initial_ordinal();
    if xi0 == NormalOrdinal::omega() {
        let g = power_threshold(xi).expect("xi is infinite");
        let entry = if lambda_finite {
            TraceEntry::new("psi.countable-base-gap", CIT_COUNTABLE_BASE_GAP)
        } else {
            TraceEntry::new("psi.countable-base", CIT_COUNTABLE_BASE)
        };
        return (g, entry);
    }
    if !xi0.is_regular().expect("xi0 is infinite") {
        let g = power_threshold(xi).expect("xi is infinite");
        return (g, TraceEntry::new("psi.singular-base", CIT_SINGULAR_BASE));
    }
    // xi0 is uncountable and regular from here on.
    let square = &xi0 * &xi0;
    if *xi > square {
        let g = power_threshold(xi).expect("xi is infinite");
        let value = if g > square { g } else { square };
        return (
            value,
            TraceEntry::new("psi.beyond-square", CIT_BEYOND_SQUARE),
        );
    }
    let (quotient, _) = xi.div_rem(&xi0).expect("xi0 is nonzero");
    if !lambda_finite {
        if quotient.is_finite() {
            (
                xi0,
                TraceEntry::new("psi.window-finite-quotient", CIT_WINDOW_FINITE),
            )
        } else {
            (
                &xi0 * &quotient.initial_ordinal(),
                TraceEntry::new("psi.window-infinite-quotient", CIT_WINDOW_INFINITE),
            )
        }
    } else {
        match ctx.psi_mode {
            PsiMode::Repaired => {
                if quotient.is_countable() {
                    (
                        xi0,
                        TraceEntry::new(
                            "psi.window-countable-quotient",
                            CIT_WINDOW_COUNTABLE_COLLAPSE,
                        ),
                    )
                } else {
                    (
                        &xi0 * &quotient.initial_ordinal(),
                        TraceEntry::new("psi.window-uncountable-quotient", CIT_WINDOW_INFINITE),
                    )
                }
            }
            PsiMode::Literal => {
                if quotient > NormalOrdinal::omega() {
                    (
                        &xi0 * &quotient.initial_ordinal(),
                        TraceEntry::new("psi.window-literal-large", CIT_WINDOW_LITERAL),
                    )
                } else {
                    (
                        xi0,
                        TraceEntry::new("psi.window-literal-small", CIT_WINDOW_LITERAL),
                    )
                }
            }
        }
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

    fn ctx() -> AxiomContext {
        AxiomContext::default()
    }

    fn literal() -> AxiomContext {
        AxiomContext {
            psi_mode: PsiMode::Literal,
            ..AxiomContext::default()
        }
    }

    #[test]
    fn window_cases_over_w1() {
        assert_eq!(canonical_index(&w(), &w1(), &ctx()), w1());
        let xi = &(&w1() * &w()) + &n(5);
        assert_eq!(canonical_index(&w(), &xi, &ctx()), &w1() * &w());
        assert_eq!(canonical_index(&n(2), &(&w1() * &w()), &ctx()), w1());
    }

    #[test]
    fn countable_base_uses_power_threshold() {
        let xi = &(&NormalOrdinal::omega_power(&w()) * &n(3)) + &NormalOrdinal::omega_power(&n(2));
        assert_eq!(
            canonical_index(&w(), &xi, &ctx()),
            NormalOrdinal::omega_power(&w())
        );
        // the gap regime: finite lambda, countable xi at or above w^w
        assert_eq!(
            canonical_index(&n(1), &xi, &ctx()),
            NormalOrdinal::omega_power(&w())
        );
        // small countable targets collapse to 1 for finite lambda only
        assert_eq!(canonical_index(&n(1), &w(), &ctx()), n(1));
        assert_eq!(canonical_index(&w(), &w(), &ctx()), w());
    }

    #[test]
    fn beyond_square_takes_max() {
        let xi = &(&w1() * &w1()) * &w();
        assert_eq!(canonical_index(&w(), &xi, &ctx()), &w1() * &w1());
        // far beyond the square the power threshold dominates
        let far = w1().pow(&w());
        assert_eq!(canonical_index(&w(), &far, &ctx()), far);
    }

    #[test]
    fn singular_base() {
        let w_omega = NormalOrdinal::initial(&w());
        assert_eq!(canonical_index(&w(), &w_omega, &ctx()), w_omega);
        let xi = &w_omega * &n(7);
        assert_eq!(canonical_index(&w(), &xi, &ctx()), w_omega);
    }

    #[test]
    fn finite_targets_collapse() {
        assert_eq!(canonical_index(&w(), &n(5), &ctx()), n(1));
        assert_eq!(canonical_index(&n(3), &n(0), &ctx()), n(1));
        assert_eq!(canonical_index(&n(2), &NormalOrdinal::omega_power(&n(3)), &ctx()), n(1));
    }

    #[test]
    fn repaired_vs_literal_window() {
        let xi_succ = &w1() * &(&w() + &n(1));
        let xi_lim = &w1() * &w();
        // repaired mode collapses both countable quotients
        assert_eq!(canonical_index(&n(1), &xi_succ, &ctx()), w1());
        assert_eq!(canonical_index(&n(1), &xi_lim, &ctx()), w1());
        // literal mode keeps the strictly-above-w quotient
        assert_eq!(canonical_index(&n(1), &xi_succ, &literal()), &w1() * &w());
        assert_eq!(canonical_index(&n(1), &xi_lim, &literal()), w1());
        // infinite lambda is unaffected by the mode
        assert_eq!(canonical_index(&w(), &xi_succ, &literal()), &w1() * &w());
        assert_eq!(canonical_index(&w(), &xi_succ, &ctx()), &w1() * &w());
    }

    #[test]
    fn canonical_pairs() {
        let p = canonical_pair(&NormalOrdinal::omega_power(&n(2)), &NormalOrdinal::omega_power(&w()), &ctx());
        assert_eq!(p.lambda0, w());
        assert_eq!(p.psi, NormalOrdinal::omega_power(&w()));
        let p = canonical_pair(&n(5), &(&w1() * &w()), &ctx());
        assert_eq!(p.lambda0, n(1));
        assert_eq!(p.psi, w1());
        let p = canonical_pair(&w1(), &w(), &ctx());
        assert_eq!(p.lambda0, w1());
        assert_eq!(p.psi, w());
    }
}
