//! Rendering of normal forms to text.
//!
//! Every ordinal prints in a *factored* product form that the parser
//! accepts back unchanged: a power `w^e` is split along the normal-form
//! terms of `e` into a product of simple powers, so `w^(w*2+3)` renders as
//! `(w^w)^2*w^3` rather than with a parenthesized sum in the exponent.
//! Initial-ordinal atoms render as `w_1`, `w_2`, ... for finite indices
//! and `w_[expr]` for infinite ones. The ASCII style is the default and is
//! what [`std::fmt::Display`] produces; the Unicode style substitutes
//! `ω`, `·`, and subscript digits.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::ordinal::NormalOrdinal;

/// Output alphabet for [`format_ordinal`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PrintStyle {
    /// `w`, `w_1`, `*`, `+` — the round-trip alphabet of the parser.
    #[default]
    Ascii,
    /// `ω`, `ω₁`, `·`, `+` — for human-facing output only; the parser does
    /// not read this alphabet back.
    Unicode,
}

impl PrintStyle {
    fn omega(self) -> &'static str {
        match self {
            PrintStyle::Ascii => "w",
            PrintStyle::Unicode => "\u{3c9}",
        }
    }

    fn times(self) -> &'static str {
        match self {
            PrintStyle::Ascii => "*",
            PrintStyle::Unicode => "\u{b7}",
        }
    }
}

/// Render an ordinal in the requested style.
pub fn format_ordinal(x: &NormalOrdinal, style: PrintStyle) -> String {
    let terms = x.expanded_terms();
    if terms.is_empty() {
        return "0".to_string();
    }
    terms
        .iter()
        .map(|t| term_str(&t.exponent, &t.coefficient, style))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Render one normal-form term `w^e * c`.
fn term_str(e: &NormalOrdinal, c: &BigUint, style: PrintStyle) -> String {
    if e.is_zero() {
        return c.to_string();
    }
    let mut s = power_product(e, style);
    if !c.is_one() {
        s.push_str(style.times());
        s.push_str(&c.to_string());
    }
    s
}

/// Render `w^e` as a product with one factor per normal-form term of `e`:
/// `w^(w^f * k)` is `(w^(w^f))^k`.
fn power_product(e: &NormalOrdinal, style: PrintStyle) -> String {
    e.expanded_terms()
        .iter()
        .map(|t| power_factor(&t.exponent, &t.coefficient, style))
        .collect::<Vec<_>>()
        .join(style.times())
}

/// Render `(w^(w^f))^k`.
fn power_factor(f: &NormalOrdinal, k: &BigUint, style: PrintStyle) -> String {
    let atomic = f.is_zero() || f.atom_index().is_some();
    let base = power_base(f, style);
    if k.is_one() {
        base
    } else if atomic {
        format!("{base}^{k}")
    } else {
        format!("({base})^{k}")
    }
}

/// Render `w^(w^f)`: `w` itself for `f = 0`, an initial-ordinal atom when
/// `w^f` collapses to one, and `w^<operand>` otherwise.
fn power_base(f: &NormalOrdinal, style: PrintStyle) -> String {
    if f.is_zero() {
        return style.omega().to_string();
    }
    if let Some(a) = f.atom_index() {
        return atom_str(a, style);
    }
    let inner = power_product(f, style);
    let safe = !inner.contains(style.times()) && !inner.starts_with('(');
    if safe {
        format!("{}^{inner}", style.omega())
    } else {
        format!("{}^({inner})", style.omega())
    }
}

/// Render the initial-ordinal atom with the given index.
fn atom_str(index: &NormalOrdinal, style: PrintStyle) -> String {
    match (index.as_nat(), style) {
        (Some(n), PrintStyle::Ascii) => format!("w_{n}"),
        (Some(n), PrintStyle::Unicode) => {
            let mut s = style.omega().to_string();
            for d in n.to_string().chars() {
                s.push(char::from_u32(0x2080 + d as u32 - '0' as u32).expect("digit subscript"));
            }
            s
        }
        (None, _) => format!(
            "{}_[{}]",
            style.omega(),
            format_ordinal(index, style)
        ),
    }
}

impl fmt::Display for NormalOrdinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_ordinal(self, PrintStyle::Ascii))
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

    fn wp(e: &NormalOrdinal) -> NormalOrdinal {
        NormalOrdinal::omega_power(e)
    }

    #[test]
    fn ascii_forms() {
        assert_eq!(NormalOrdinal::zero().to_string(), "0");
        assert_eq!(n(42).to_string(), "42");
        assert_eq!(w().to_string(), "w");
        assert_eq!((&(&wp(&n(2)) * &n(4)) + &n(1)).to_string(), "w^2*4 + 1");
        assert_eq!((&(&wp(&w()) * &n(2)) + &w()).to_string(), "w^w*2 + w");
        assert_eq!(w1().to_string(), "w_1");
        assert_eq!((&w1() * &n(3)).to_string(), "w_1*3");
        assert_eq!((&w1() * &w()).to_string(), "w_1*w");
        assert_eq!((&(&w1() * &w1()) * &w()).to_string(), "w_1^2*w");
        assert_eq!(wp(&(&(&w() * &n(2)) + &n(3))).to_string(), "(w^w)^2*w^3");
        assert_eq!(w1().pow(&w()).to_string(), "w^(w_1*w)");
        assert_eq!(wp(&wp(&n(2))).to_string(), "w^w^2");
        assert_eq!(wp(&(&w() + &n(3))).to_string(), "w^w*w^3");
        assert_eq!(NormalOrdinal::initial(&w()).to_string(), "w_[w]");
        assert_eq!(NormalOrdinal::initial(&w1()).to_string(), "w_[w_1]");
        assert_eq!(
            (&(&w1() + &wp(&n(3))) + &n(5)).to_string(),
            "w_1 + w^3 + 5"
        );
    }

    #[test]
    fn unicode_forms() {
        let u = |x: &NormalOrdinal| format_ordinal(x, PrintStyle::Unicode);
        assert_eq!(u(&n(7)), "7");
        assert_eq!(u(&w()), "\u{3c9}");
        assert_eq!(u(&(&wp(&n(2)) * &n(4))), "\u{3c9}^2\u{b7}4");
        assert_eq!(u(&w1()), "\u{3c9}\u{2081}");
        assert_eq!(u(&NormalOrdinal::initial(&n(12))), "\u{3c9}\u{2081}\u{2082}");
        assert_eq!(u(&(&w1() * &w())), "\u{3c9}\u{2081}\u{b7}\u{3c9}");
        assert_eq!(u(&NormalOrdinal::initial(&w())), "\u{3c9}_[\u{3c9}]");
    }
}
