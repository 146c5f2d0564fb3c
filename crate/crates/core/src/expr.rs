//! Unevaluated ordinal expressions.
//!
//! The parser produces an [`OrdinalExpr`] tree mirroring the surface syntax;
//! [`OrdinalExpr::normalize`] evaluates it to a canonical [`NormalOrdinal`].
//! Property tests also use the tree as a generator shape, exercising the
//! arithmetic through random expressions instead of hand-picked values.

use num_bigint::BigUint;

use crate::ordinal::NormalOrdinal;

/// An ordinal-valued expression, prior to normalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrdinalExpr {
    /// A natural-number literal.
    Nat(BigUint),
    /// The first infinite ordinal `w`.
    Omega,
    /// The initial ordinal `w_index` (index `0` yields `w` itself).
    Initial(Box<OrdinalExpr>),
    Add(Box<OrdinalExpr>, Box<OrdinalExpr>),
    Mul(Box<OrdinalExpr>, Box<OrdinalExpr>),
    Pow(Box<OrdinalExpr>, Box<OrdinalExpr>),
}

impl OrdinalExpr {
    /// Evaluate to canonical form.
    pub fn normalize(&self) -> NormalOrdinal {
        match self {
            OrdinalExpr::Nat(n) => NormalOrdinal::nat(n.clone()),
            OrdinalExpr::Omega => NormalOrdinal::omega(),
            OrdinalExpr::Initial(ix) => NormalOrdinal::initial(&ix.normalize()),
            OrdinalExpr::Add(a, b) => &a.normalize() + &b.normalize(),
            OrdinalExpr::Mul(a, b) => &a.normalize() * &b.normalize(),
            OrdinalExpr::Pow(a, b) => a.normalize().pow(&b.normalize()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_nested_expressions() {
        // (w + 1) * w = w^2
        let e = OrdinalExpr::Mul(
            Box::new(OrdinalExpr::Add(
                Box::new(OrdinalExpr::Omega),
                Box::new(OrdinalExpr::Nat(1u32.into())),
            )),
            Box::new(OrdinalExpr::Omega),
        );
        assert_eq!(
            e.normalize(),
            NormalOrdinal::omega_power(&NormalOrdinal::nat(2u32))
        );
    }

    #[test]
    fn initial_of_zero_is_omega() {
        let e = OrdinalExpr::Initial(Box::new(OrdinalExpr::Nat(0u32.into())));
        assert_eq!(e.normalize(), NormalOrdinal::omega());
    }
}
