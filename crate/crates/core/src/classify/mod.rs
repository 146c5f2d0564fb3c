//! Decision procedures for isomorphic classification of the supported
//! Banach-space families.
//!
//! Three families are classified, each by its own entry point:
//!
//! * `C(xi)` — scalar-valued continuous functions on the ordinal interval
//!   `[1, xi]` ([`iso_scalar`]);
//! * `C(xi, X)` — vector-valued variants, where the coefficient space is
//!   described abstractly by an [`XDescriptor`] ([`iso_vector`]);
//! * `K(C(lambda, l_p), C(xi, l_q))` — compact operators between two such
//!   spaces with `1 < p <= q < infinity` ([`iso_k`], and the independent
//!   route [`iso_k_abstract`] used to cross-check it).
//!
//! Every verdict carries a trace of the case analysis that produced it and
//! an explicit list of set-theoretic assumptions consumed, so that answers
//! which are only as strong as "there is no real-valued measurable cardinal
//! below the index density" are visibly weaker than unconditional ones.

mod kspace;
mod psi;
mod scalar;
mod vector;

pub use kspace::{iso_k, iso_k_abstract};
pub use psi::{canonical_index, canonical_pair};
pub use scalar::iso_scalar;
pub use vector::{c0_sum_iso, iso_vector};

use std::fmt;

use num_rational::Ratio;

use crate::error::DomainError;
use crate::ordinal::{CardinalRank, NormalOrdinal};

/// A Banach-space expression, as parsed from the surface syntax.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpaceExpr {
    /// `C(xi)` — scalar-valued.
    ScalarC(NormalOrdinal),
    /// `C(xi, l_p)` — l_p-valued.
    VectorC(NormalOrdinal, Ratio<u64>),
    /// `K(C(lambda, l_p), C(xi, l_q))` — compact operators.
    KSpace {
        lambda: NormalOrdinal,
        p: Ratio<u64>,
        xi: NormalOrdinal,
        q: Ratio<u64>,
    },
}

/// Abstract description of a coefficient space `X`, reduced to the four
/// flags the classification actually consumes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct XDescriptor {
    /// `X` is isomorphic to its own square `X (+) X`.
    pub square_iso: bool,
    /// `X` is isomorphic to `c_0(X)`, the sup-normed space of null
    /// `X`-valued sequences.
    pub c0_self_iso: bool,
    /// `X` contains no isomorphic copy of an uncountable `c_0(Gamma)` and
    /// has the Mazur property — the class over which the vector-valued
    /// classification is established.
    pub in_admissible_class: bool,
    /// The dual of `X` has the approximation property (certification flag
    /// for the compact-operator identifications; not consulted by the
    /// decision logic).
    pub dual_has_ap: bool,
}

impl XDescriptor {
    /// The descriptor of `l_p` for `1 < p < infinity`.
    pub fn lp() -> Self {
        XDescriptor {
            square_iso: true,
            c0_self_iso: false,
            in_admissible_class: true,
            dual_has_ap: true,
        }
    }

    /// The descriptor the compact-operator classifier instantiates for its
    /// left factor `C(lambda, l_p)` viewed as a coefficient space: a finite
    /// `lambda` gives `l_p` itself (which absorbs `c_0`-sums through the
    /// compact-operator identification `K(l_p, X) = K(l_p, c_0(X))`), while
    /// an infinite `lambda` does not.
    pub fn k_factor(lambda_infinite: bool) -> Self {
        XDescriptor {
            square_iso: true,
            c0_self_iso: !lambda_infinite,
            in_admissible_class: true,
            dual_has_ap: true,
        }
    }
}

/// Outcome of a classification query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Isomorphic,
    NotIsomorphic,
    /// A negative answer whose proof consumes an assumption the caller has
    /// declined (see [`AxiomContext::assume_no_rvm`]).
    Undecided,
    /// The query is meaningful but outside the decidable fragment.
    OutOfScope,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Outcome::Isomorphic => "Isomorphic",
            Outcome::NotIsomorphic => "NotIsomorphic",
            Outcome::Undecided => "Undecided",
            Outcome::OutOfScope => "OutOfScope",
        };
        f.write_str(s)
    }
}

/// One fired case of the decision procedure: a stable machine-readable
/// label plus a human-readable justification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub case: String,
    pub citation: String,
}

impl TraceEntry {
    pub(crate) fn new(case: &str, citation: &str) -> Self {
        TraceEntry {
            case: case.to_string(),
            citation: citation.to_string(),
        }
    }
}

/// A set-theoretic assumption consumed by a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomTag {
    /// "There is no real-valued measurable cardinal `<=` the given rank."
    /// Consumed by the necessity direction of the compact-operator
    /// criterion, whose proof needs the density of the left factor to lie
    /// below the least real-valued measurable cardinal.
    NoRvmBelow(CardinalRank),
}

impl fmt::Display for AxiomTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomTag::NoRvmBelow(rank) => write!(f, "no-rvm-below({rank})"),
        }
    }
}

/// The canonical representative `(lambda0, psi)` of a compact-operator
/// space: every `K(C(lambda, l_p), C(xi, l_q))` in scope is isomorphic to
/// `K(C(lambda0, l_p), C(psi, l_q))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalPair {
    /// `1` for finite `lambda`, otherwise the initial ordinal of `|lambda|`.
    pub lambda0: NormalOrdinal,
    /// The canonical second index (exposed as `psi` in the wire format).
    pub psi: NormalOrdinal,
}

/// Which variant of the canonical-index window rule to apply for finite
/// left indices; see [`canonical_index`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PsiMode {
    /// Collapse every countable quotient (the mode coherent with the
    /// c_0-sum collapse and the independent route; the default).
    #[default]
    Repaired,
    /// Keep the literal threshold "quotient > w", preserving a documented
    /// discrepancy; see the mode comparison in the project README.
    Literal,
}

impl fmt::Display for PsiMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PsiMode::Repaired => f.write_str("repaired"),
            PsiMode::Literal => f.write_str("literal"),
        }
    }
}

/// Immutable per-query context: which assumptions the caller grants and
/// which canonical-index variant to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxiomContext {
    /// Grant "no real-valued measurable cardinal below the relevant
    /// density". When `false`, negative verdicts that consume this
    /// assumption are downgraded to [`Outcome::Undecided`].
    pub assume_no_rvm: bool,
    pub psi_mode: PsiMode,
}

impl Default for AxiomContext {
    fn default() -> Self {
        AxiomContext {
            assume_no_rvm: true,
            psi_mode: PsiMode::default(),
        }
    }
}

/// The result of a classification query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    /// Fired cases, in firing order. For compact-operator queries the first
    /// two entries are the canonical-index derivations of the left and
    /// right operands, in that order.
    pub trace: Vec<TraceEntry>,
    pub assumptions: Vec<AxiomTag>,
    /// Canonical representatives of the two operands, populated for
    /// compact-operator queries decided through the canonical route.
    pub canonical: Option<(CanonicalPair, CanonicalPair)>,
    /// Populated when `outcome` is [`Outcome::OutOfScope`].
    pub reason: Option<String>,
}

impl Verdict {
    pub(crate) fn new(outcome: Outcome) -> Self {
        Verdict {
            outcome,
            trace: Vec::new(),
            assumptions: Vec::new(),
            canonical: None,
            reason: None,
        }
    }

    pub(crate) fn push(mut self, case: &str, citation: &str) -> Self {
        self.trace.push(TraceEntry::new(case, citation));
        self
    }

    pub(crate) fn out_of_scope(reason: &str) -> Self {
        let mut v = Verdict::new(Outcome::OutOfScope);
        v.reason = Some(reason.to_string());
        v.trace.push(TraceEntry::new("out-of-scope", reason));
        v
    }
}

/// Validate an `l_p` exponent: the supported regime is `1 < p < infinity`.
pub(crate) fn validate_exponent(name: &str, p: Ratio<u64>) -> Result<(), DomainError> {
    if p.denom() == &0 {
        return Err(DomainError::new(format!(
            "exponent {name} has a zero denominator"
        )));
    }
    if p <= Ratio::from_integer(1) {
        return Err(DomainError::new(format!(
            "exponent {name} must exceed 1 (got {p})"
        )));
    }
    Ok(())
}

/// Classify a pair of space expressions, dispatching on their shapes.
///
/// The two operands must have the same shape — and, for vector-valued and
/// compact-operator queries, the same exponents — for any of the underlying
/// theorems to apply; mismatches return [`Outcome::OutOfScope`].
pub fn classify_pair(
    a: &SpaceExpr,
    b: &SpaceExpr,
    ctx: &AxiomContext,
) -> Result<Verdict, DomainError> {
    match (a, b) {
        (SpaceExpr::ScalarC(xi), SpaceExpr::ScalarC(eta)) => iso_scalar(xi, eta),
        (SpaceExpr::VectorC(xi, p), SpaceExpr::VectorC(eta, p2)) => {
            validate_exponent("p", *p)?;
            validate_exponent("p", *p2)?;
            if p != p2 {
                return Ok(Verdict::out_of_scope(
                    "vector-valued comparison requires the same coefficient space l_p on both sides",
                ));
            }
            iso_vector(xi, eta, &XDescriptor::lp())
        }
        (
            SpaceExpr::KSpace {
                lambda,
                p,
                xi,
                q,
            },
            SpaceExpr::KSpace {
                lambda: mu,
                p: p2,
                xi: eta,
                q: q2,
            },
        ) => {
            validate_exponent("p", *p)?;
            validate_exponent("q", *q)?;
            validate_exponent("p", *p2)?;
            validate_exponent("q", *q2)?;
            if p == p2 && q == q2 {
                return iso_k(lambda, xi, mu, eta, *p, *q, ctx);
            }
            // With different exponent pairs no comparison theorem applies;
            // name the sharper reason when a side also breaks the regime.
            if p > q || p2 > q2 {
                return Ok(Verdict::out_of_scope(kspace::REASON_PQ));
            }
            Ok(Verdict::out_of_scope(
                "compact-operator comparison requires matching exponent pairs (p, q) on both sides",
            ))
        }
        _ => Ok(Verdict::out_of_scope(
            "space shapes differ; this classifier compares like with like (C with C, C(.,l_p) with C(.,l_p), K with K)",
        )),
    }
}
