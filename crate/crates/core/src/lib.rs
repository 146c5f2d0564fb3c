//! Symbolic ordinal arithmetic and isomorphism classification for spaces of
//! continuous functions.
//!
//! The crate has three layers:
//!
//! * [`ordinal`] — exact arithmetic on ordinals kept permanently in normal
//!   form ([`NormalOrdinal`]): sums of `w^exponent * coefficient` terms with
//!   strictly decreasing exponents, extended with atoms for the uncountable
//!   initial ordinals (`w_1`, `w_2`, `w_[w]`, ...).  Addition, multiplication,
//!   exponentiation, comparison, division with remainder, and the cardinal
//!   invariants (cardinality, cofinality, regularity) are all total symbolic
//!   computations — no approximation, no floating point, no depth limits
//!   beyond available memory.
//! * [`classify`] — decision procedures for isomorphism questions about
//!   function spaces indexed by ordinals: the scalar case ([`iso_scalar`]),
//!   the vector-valued case ([`iso_vector`]), and compact-operator spaces
//!   between vector-valued function spaces ([`iso_k`], [`iso_k_abstract`]).
//!   Verdicts carry a trace of the criteria applied, the canonical invariant
//!   pair that justifies them, and an explicit tag whenever a conclusion
//!   leans on a set-theoretic assumption beyond ZFC.
//! * [`text`] + [`oracle`] — a parser/printer pair for a small expression
//!   grammar (round-trip stable, used by the CLI), a deterministic JSON
//!   rendering of verdicts, and an independent naive arithmetic model with a
//!   differential harness for catching engine bugs.
//!
//! # Example
//!
//! ```
//! use ordcalc_core::{parse_normal, NormalOrdinal};
//!
//! let x = parse_normal("w*2 + 1").unwrap();
//! let y = parse_normal("w^2").unwrap();
//! // Ordinal arithmetic is not commutative: (w*2 + 1) + w^2 = w^2.
//! assert_eq!(&x + &y, y);
//! assert_eq!((&y + &x).to_string(), "w^2 + w*2 + 1");
//!
//! // 2^w = w, computed symbolically.
//! let two = NormalOrdinal::nat(2u32);
//! assert_eq!(two.pow(&NormalOrdinal::omega()), NormalOrdinal::omega());
//! ```
//!
//! # Classification example
//!
//! ```
//! use ordcalc_core::{classify_pair, parse_space, AxiomContext, Outcome};
//!
//! let left = parse_space("K(C(w,l_2), C(w^2,l_2))").unwrap();
//! let right = parse_space("K(C(w^2,l_2), C(w^3,l_2))").unwrap();
//! let verdict = classify_pair(&left, &right, &AxiomContext::default()).unwrap();
//! assert_eq!(verdict.outcome, Outcome::Isomorphic);
//! ```

pub mod classify;
pub mod error;
mod expr;
pub mod oracle;
pub mod ordinal;
pub mod text;

pub use classify::{
    c0_sum_iso, canonical_index, canonical_pair, classify_pair, iso_k, iso_k_abstract, iso_scalar,
    iso_vector, AxiomContext, AxiomTag, CanonicalPair, Outcome, PsiMode, SpaceExpr, TraceEntry,
    Verdict, XDescriptor,
};
pub use error::{DomainError, FragmentError, ParseError, SourceSpan, SpaceParseError};
pub use expr::OrdinalExpr;
pub use oracle::{differential_check, DiffReport, GridSpec, NaiveOrdinal};
pub use ordinal::{power_threshold, CardinalRank, NormalOrdinal};
pub use text::{format_ordinal, parse_normal, parse_ordinal, parse_space, verdict_to_json, PrintStyle};
