//! Classification of the compact-operator spaces
//! `K(C(lambda, l_p), C(xi, l_q))` with `1 < p <= q < infinity`.
//!
//! Two independent decision paths are provided. [`iso_k`] reduces each
//! operand to its canonical pair `(lambda0, psi)` and compares the pairs —
//! the route through the canonical-index machinery of
//! [`canonical_index`](crate::classify::canonical_index). [`iso_k_abstract`]
//! never computes a canonical index: it decides through the sufficiency
//! criteria for the target spaces (scalar isomorphism, or a shared
//! uncountable regular multiple) together with the unconditional
//! separations. The two paths must agree wherever both are defined; the
//! test suite checks this exhaustively on a grid, and the divergence of the
//! literal canonical-index variant (see
//! [`PsiMode`](crate::classify::PsiMode)) is visible precisely as a
//! disagreement between them.
//!
//! Negative answers that consume the "no real-valued measurable cardinal
//! below `|lambda|`" assumption carry an [`AxiomTag`] and are downgraded to
//! [`Outcome::Undecided`] when the context declines the assumption. The
//! separations by left initial ordinal and by target finiteness are
//! unconditional and never tagged.

use num_rational::Ratio;

use crate::classify::psi::canonical_index_traced;
use crate::classify::{
    iso_scalar, validate_exponent, AxiomContext, AxiomTag, CanonicalPair, Outcome, TraceEntry,
    Verdict,
};
use crate::error::DomainError;
use crate::ordinal::NormalOrdinal;

const CIT_K_LEFT: &str = "isomorphic compact-operator spaces have left factors with the same initial ordinal; a mismatch separates them unconditionally";
const CIT_K_MISMATCH: &str = "over a shared left initial ordinal, isomorphism forces equal canonical indices; distinct indices separate the spaces";
const CIT_K_MATCH: &str = "both spaces are isomorphic to the compact operators determined by the shared canonical pair, hence to each other";
const CIT_RVM: &str = "the separation by canonical index consumes the no-real-valued-measurable assumption, which this context declines";
const CIT_KABS_MIXED: &str = "a finite left index has initial ordinal 1, an infinite one at least w; the left factors separate the spaces unconditionally";
const CIT_KABS_CARD: &str =
    "infinite left indices of isomorphic operator spaces share a cardinality (equivalently, an initial ordinal)";
const CIT_KABS_FIN_COLLAPSE: &str = "a finite target index gives a finite sum of copies of l_q, which the operator space absorbs; both sides reduce to the same space over matched left factors";
const CIT_KABS_FIN_MISMATCH: &str = "with an infinite left index, the finite-target operator space is not isomorphic to any infinite-target one; the separation is unconditional";
const CIT_KABS_SCALAR: &str = "isomorphic scalar function spaces on the target intervals transfer to the l_q-valued targets and hence to the operator spaces, over matched left factors";
const CIT_KABS_MULTIPLE: &str = "both targets are scalar-isomorphic to finite multiples of the same uncountable regular initial ordinal, and the operator space absorbs finite multiplicities of its target";
const CIT_KABS_MULTIPLE_W: &str = "over a finite left index the operator space absorbs even countably infinite multiplicities of its target; both targets are scalar-isomorphic to countable multiples of the same uncountable regular initial ordinal";
const CIT_KABS_NO_ROUTE: &str = "neither sufficiency route applies (scalar isomorphism, shared regular multiple); the routes are exhaustive for the classified fragment, so the spaces are not isomorphic";
const CIT_KABS_PROMOTE: &str = "over a finite left index, every finite target yields the same operator space as target w; finite targets are promoted before classification";
pub(crate) const REASON_PQ: &str = "the supported regime is 1 < p <= q < infinity; queries with p > q are outside the classified fragment";

fn validate_query(
    lambda: &NormalOrdinal,
    xi: &NormalOrdinal,
    mu: &NormalOrdinal,
    eta: &NormalOrdinal,
    p: Ratio<u64>,
    q: Ratio<u64>,
) -> Result<(), DomainError> {
    validate_exponent("p", p)?;
    validate_exponent("q", q)?;
    if lambda.is_zero() || xi.is_zero() || mu.is_zero() || eta.is_zero() {
        return Err(DomainError::new("space indices must be at least 1"));
    }
    Ok(())
}

/// Record consumption of the no-real-valued-measurable assumption on a
/// negative verdict, downgrading it when the context declines the grant.
fn consume_rvm(
    mut v: Verdict,
    lambda: &NormalOrdinal,
    ctx: &AxiomContext,
    undecided_case: &str,
) -> Verdict {
    v.assumptions.push(AxiomTag::NoRvmBelow(lambda.cardinality()));
    if !ctx.assume_no_rvm {
        v.outcome = Outcome::Undecided;
        v = v.push(undecided_case, CIT_RVM);
    }
    v
}

/// Decide whether `K(C(lambda, l_p), C(xi, l_q))` and
/// `K(C(mu, l_p), C(eta, l_q))` are isomorphic, by comparison of canonical
/// pairs.
///
/// The verdict's `canonical` field always carries both pairs, and the first
/// two trace entries record how each canonical index was derived. Queries
/// with `p > q` are [`Outcome::OutOfScope`] (still with canonical pairs);
/// exponents outside `(1, infinity)` and zero indices are domain errors.
pub fn iso_k(
    lambda: &NormalOrdinal,
    xi: &NormalOrdinal,
    mu: &NormalOrdinal,
    eta: &NormalOrdinal,
    p: Ratio<u64>,
    q: Ratio<u64>,
    ctx: &AxiomContext,
) -> Result<Verdict, DomainError> {
    validate_query(lambda, xi, mu, eta, p, q)?;
    let (psi_l, trace_l) = canonical_index_traced(lambda, xi, ctx);
    let (psi_r, trace_r) = canonical_index_traced(mu, eta, ctx);
    let lambda0 = lambda.initial_ordinal();
    let mu0 = mu.initial_ordinal();
    let pairs = (
        CanonicalPair {
            lambda0: lambda0.clone(),
            psi: psi_l.clone(),
        },
        CanonicalPair {
            lambda0: mu0.clone(),
            psi: psi_r.clone(),
        },
    );

    if p > q {
        let mut v = Verdict::new(Outcome::OutOfScope);
        v.trace.push(trace_l);
        v.trace.push(trace_r);
        v.reason = Some(REASON_PQ.to_string());
        v = v.push("out-of-scope", REASON_PQ);
        v.canonical = Some(pairs);
        return Ok(v);
    }

    let mut v;
    if lambda0 != mu0 {
        v = Verdict::new(Outcome::NotIsomorphic);
        v.trace.push(trace_l);
        v.trace.push(trace_r);
        v = v.push("k.left-index-mismatch", CIT_K_LEFT);
    } else if psi_l != psi_r {
        v = Verdict::new(Outcome::NotIsomorphic);
        v.trace.push(trace_l);
        v.trace.push(trace_r);
        v = v.push("k.canonical-index-mismatch", CIT_K_MISMATCH);
        let conditional = !lambda.is_finite()
            && !mu.is_finite()
            && !xi.is_finite()
            && !eta.is_finite();
        if conditional {
            v = consume_rvm(v, lambda, ctx, "k.rvm-undecided");
        }
    } else {
        v = Verdict::new(Outcome::Isomorphic);
        v.trace.push(trace_l);
        v.trace.push(trace_r);
        v = v.push("k.canonical-pair-match", CIT_K_MATCH);
    }
    v.canonical = Some(pairs);
    Ok(v)
}

/// The bound on the multiplicity admitted by the regular-multiple route:
/// finite multiples for infinite left indices, countable ones for finite
/// left indices.
#[derive(Clone, Copy, PartialEq, Eq)]
enum MultipleBound {
    Finite,
    Countable,
}

/// Whether both targets are scalar-isomorphic to admissible multiples of
/// one shared uncountable regular initial ordinal.
fn regular_multiple_route(
    xi: &NormalOrdinal,
    eta: &NormalOrdinal,
    bound: MultipleBound,
) -> Result<bool, DomainError> {
    let alpha = xi.initial_ordinal();
    if alpha.is_countable() {
        return Ok(false);
    }
    if !alpha.is_regular().expect("alpha is infinite") {
        return Ok(false);
    }
    if eta.initial_ordinal() != alpha {
        return Ok(false);
    }
    let square = &alpha * &alpha;
    if *xi >= square || *eta >= square {
        return Ok(false);
    }
    let (qx, _) = xi.div_rem(&alpha).expect("alpha is nonzero");
    let (qe, _) = eta.div_rem(&alpha).expect("alpha is nonzero");
    let admissible = |m: &NormalOrdinal| {
        !m.is_zero()
            && match bound {
                MultipleBound::Finite => m.is_finite(),
                MultipleBound::Countable => m.is_countable(),
            }
    };
    if !admissible(&qx) || !admissible(&qe) {
        return Ok(false);
    }
    let cap = |m: &NormalOrdinal| {
        if m.is_finite() {
            m.clone()
        } else {
            NormalOrdinal::omega()
        }
    };
    let xi_rep = &alpha * &cap(&qx);
    let eta_rep = &alpha * &cap(&qe);
    Ok(iso_scalar(xi, &xi_rep)?.outcome == Outcome::Isomorphic
        && iso_scalar(eta, &eta_rep)?.outcome == Outcome::Isomorphic)
}

/// Decide the same question as [`iso_k`] without computing canonical
/// indices: an independent path through the sufficiency criteria for the
/// targets and the unconditional separations.
///
/// The `canonical` field is never populated here. Divergence from
/// [`iso_k`] under the default canonical-index variant is a bug; under the
/// literal variant it is the documented discrepancy.
pub fn iso_k_abstract(
    lambda: &NormalOrdinal,
    xi: &NormalOrdinal,
    mu: &NormalOrdinal,
    eta: &NormalOrdinal,
    p: Ratio<u64>,
    q: Ratio<u64>,
    ctx: &AxiomContext,
) -> Result<Verdict, DomainError> {
    validate_query(lambda, xi, mu, eta, p, q)?;
    if p > q {
        return Ok(Verdict::out_of_scope(REASON_PQ));
    }

    match (lambda.is_finite(), mu.is_finite()) {
        (true, false) | (false, true) => Ok(Verdict::new(Outcome::NotIsomorphic)
            .push("kabs.mixed-index-finiteness", CIT_KABS_MIXED)),
        (false, false) => {
            if lambda.cardinality() != mu.cardinality() {
                return Ok(Verdict::new(Outcome::NotIsomorphic)
                    .push("kabs.index-cardinality-mismatch", CIT_KABS_CARD));
            }
            match (xi.is_finite(), eta.is_finite()) {
                (true, true) => Ok(Verdict::new(Outcome::Isomorphic)
                    .push("kabs.finite-target-collapse", CIT_KABS_FIN_COLLAPSE)),
                (true, false) | (false, true) => Ok(Verdict::new(Outcome::NotIsomorphic)
                    .push("kabs.target-finiteness-mismatch", CIT_KABS_FIN_MISMATCH)),
                (false, false) => {
                    if iso_scalar(xi, eta)?.outcome == Outcome::Isomorphic {
                        return Ok(Verdict::new(Outcome::Isomorphic)
                            .push("kabs.scalar-route", CIT_KABS_SCALAR));
                    }
                    if regular_multiple_route(xi, eta, MultipleBound::Finite)? {
                        return Ok(Verdict::new(Outcome::Isomorphic)
                            .push("kabs.regular-multiple-route", CIT_KABS_MULTIPLE));
                    }
                    let v = Verdict::new(Outcome::NotIsomorphic)
                        .push("kabs.no-route", CIT_KABS_NO_ROUTE);
                    Ok(consume_rvm(v, lambda, ctx, "kabs.rvm-undecided"))
                }
            }
        }
        (true, true) => {
            let mut promoted = Vec::new();
            let promote = |x: &NormalOrdinal, tag: &mut Vec<TraceEntry>| {
                if x.is_finite() {
                    tag.push(TraceEntry::new("kabs.promoted-finite-target", CIT_KABS_PROMOTE));
                    NormalOrdinal::omega()
                } else {
                    x.clone()
                }
            };
            let xi2 = promote(xi, &mut promoted);
            let eta2 = promote(eta, &mut promoted);
            promoted.truncate(1);
            let with_trace = |mut v: Verdict| {
                let mut trace = promoted.clone();
                trace.append(&mut v.trace);
                v.trace = trace;
                v
            };
            if iso_scalar(&xi2, &eta2)?.outcome == Outcome::Isomorphic {
                return Ok(with_trace(
                    Verdict::new(Outcome::Isomorphic).push("kabs.scalar-route", CIT_KABS_SCALAR),
                ));
            }
            if regular_multiple_route(&xi2, &eta2, MultipleBound::Countable)? {
                return Ok(with_trace(
                    Verdict::new(Outcome::Isomorphic)
                        .push("kabs.regular-countable-multiple-route", CIT_KABS_MULTIPLE_W),
                ));
            }
            Ok(with_trace(
                Verdict::new(Outcome::NotIsomorphic).push("kabs.no-route", CIT_KABS_NO_ROUTE),
            ))
        }
    }
}
