//! Recursive-descent parsers for ordinal expressions and space expressions.
//!
//! Ordinal grammar (whitespace-insensitive between tokens):
//!
//! ```text
//! ordinal := sum
//! sum     := prod ("+" prod)*
//! prod    := pow ("*" pow)*
//! pow     := atom ("^" pow)?              -- right-associative
//! atom    := NAT | "w" | "w_" NAT | "w_" "[" ordinal "]" | "(" ordinal ")"
//! ```
//!
//! Space grammar:
//!
//! ```text
//! space    := "C" "(" ordinal ")"
//!           | "C" "(" ordinal "," lp ")"
//!           | "K" "(" cspace "," cspace ")"
//! cspace   := "C" "(" ordinal "," lp ")"
//! lp       := "l_" rational
//! rational := NAT | NAT "/" NAT | NAT "." NAT
//! ```
//!
//! A decimal `a.b` means `(a*10^d + b) / 10^d` with `d` the written digit
//! count of `b`, so `l_2.50` and `l_5/2` denote the same exponent. Zero
//! denominators and exponents `<= 1` are rejected at parse time as domain
//! errors carrying the offending span.

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use crate::classify::SpaceExpr;
use crate::error::{ParseError, SourceSpan, SpaceParseError};
use crate::expr::OrdinalExpr;
use crate::ordinal::NormalOrdinal;
use crate::text::lex::{lex, TokKind, Token};

/// Parse an ordinal expression, requiring the whole input to be consumed.
pub fn parse_ordinal(input: &str) -> Result<OrdinalExpr, ParseError> {
    let mut p = Parser::new(input)?;
    let e = p.sum()?;
    p.expect_end()?;
    Ok(e)
}

/// Parse and normalize in one step.
pub fn parse_normal(input: &str) -> Result<NormalOrdinal, ParseError> {
    Ok(parse_ordinal(input)?.normalize())
}

/// Parse a space expression such as `C(w^w)`, `C(w_1, l_2)`, or
/// `K(C(w,l_2), C(w^2,l_3))`.
pub fn parse_space(input: &str) -> Result<SpaceExpr, SpaceParseError> {
    let mut p = Parser::new(input)?;
    let s = p.space()?;
    p.expect_end().map_err(SpaceParseError::from)?;
    Ok(s)
}

struct Parser<'a> {
    input: &'a str,
    toks: Vec<Token>,
    pos: usize,
}

fn describe(kind: &TokKind) -> String {
    match kind {
        TokKind::Nat(_) => "number".to_string(),
        TokKind::W => "'w'".to_string(),
        TokKind::WSub => "'w_'".to_string(),
        TokKind::LSub => "'l_'".to_string(),
        TokKind::C => "'C'".to_string(),
        TokKind::K => "'K'".to_string(),
        TokKind::LParen => "'('".to_string(),
        TokKind::RParen => "')'".to_string(),
        TokKind::LBracket => "'['".to_string(),
        TokKind::RBracket => "']'".to_string(),
        TokKind::Plus => "'+'".to_string(),
        TokKind::Star => "'*'".to_string(),
        TokKind::Caret => "'^'".to_string(),
        TokKind::Comma => "','".to_string(),
        TokKind::Slash => "'/'".to_string(),
        TokKind::Dot => "'.'".to_string(),
    }
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Result<Self, ParseError> {
        Ok(Parser {
            input,
            toks: lex(input)?,
            pos: 0,
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    /// Build "expected ..., found ..." at the current position, with the
    /// acceptable-token list sorted for deterministic messages.
    fn err_here(&self, expected: &[&str]) -> ParseError {
        let mut exp = expected.to_vec();
        exp.sort_unstable();
        exp.dedup();
        let list = exp.join(", ");
        match self.peek() {
            Some(t) => ParseError {
                span: t.span,
                message: format!("expected one of {list}; found {}", describe(&t.kind)),
            },
            None => ParseError {
                span: SourceSpan::at(self.input.len()),
                message: format!("expected one of {list}; found end of input"),
            },
        }
    }

    fn eat(&mut self, kind: TokKind) -> bool {
        if self.peek().is_some_and(|t| t.kind == kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, kind: TokKind, expected: &[&str]) -> Result<Token, ParseError> {
        match self.peek() {
            Some(t) if t.kind == kind => {
                let t = t.clone();
                self.pos += 1;
                Ok(t)
            }
            _ => Err(self.err_here(expected)),
        }
    }

    fn expect_nat(&mut self) -> Result<(BigUint, SourceSpan), ParseError> {
        match self.peek() {
            Some(Token {
                kind: TokKind::Nat(n),
                span,
            }) => {
                let out = (n.clone(), *span);
                self.pos += 1;
                Ok(out)
            }
            _ => Err(self.err_here(&["number"])),
        }
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        if self.peek().is_some() {
            Err(self.err_here(&["'*'", "'+'", "end of input"]))
        } else {
            Ok(())
        }
    }

    fn sum(&mut self) -> Result<OrdinalExpr, ParseError> {
        let mut e = self.prod()?;
        while self.eat(TokKind::Plus) {
            let r = self.prod()?;
            e = OrdinalExpr::Add(Box::new(e), Box::new(r));
        }
        Ok(e)
    }

    fn prod(&mut self) -> Result<OrdinalExpr, ParseError> {
        let mut e = self.pow()?;
        while self.eat(TokKind::Star) {
            let r = self.pow()?;
            e = OrdinalExpr::Mul(Box::new(e), Box::new(r));
        }
        Ok(e)
    }

    fn pow(&mut self) -> Result<OrdinalExpr, ParseError> {
        let b = self.atom()?;
        if self.eat(TokKind::Caret) {
            let e = self.pow()?;
            Ok(OrdinalExpr::Pow(Box::new(b), Box::new(e)))
        } else {
            Ok(b)
        }
    }

    fn atom(&mut self) -> Result<OrdinalExpr, ParseError> {
        const EXPECTED: &[&str] = &["'('", "'w'", "'w_'", "number"];
        let Some(t) = self.peek() else {
            return Err(self.err_here(EXPECTED));
        };
        match &t.kind {
            TokKind::Nat(n) => {
                let n = n.clone();
                self.pos += 1;
                Ok(OrdinalExpr::Nat(n))
            }
            TokKind::W => {
                self.pos += 1;
                Ok(OrdinalExpr::Omega)
            }
            TokKind::WSub => {
                self.pos += 1;
                match self.peek().map(|t| &t.kind) {
                    Some(TokKind::Nat(_)) => {
                        let (n, _) = self.expect_nat()?;
                        Ok(OrdinalExpr::Initial(Box::new(OrdinalExpr::Nat(n))))
                    }
                    Some(TokKind::LBracket) => {
                        self.pos += 1;
                        let e = self.sum()?;
                        self.expect(TokKind::RBracket, &["']'", "'*'", "'+'"])?;
                        Ok(OrdinalExpr::Initial(Box::new(e)))
                    }
                    _ => Err(self.err_here(&["'['", "number"])),
                }
            }
            TokKind::LParen => {
                self.pos += 1;
                let e = self.sum()?;
                self.expect(TokKind::RParen, &["')'", "'*'", "'+'"])?;
                Ok(e)
            }
            _ => Err(self.err_here(EXPECTED)),
        }
    }

    fn space(&mut self) -> Result<SpaceExpr, SpaceParseError> {
        match self.peek().map(|t| &t.kind) {
            Some(TokKind::C) => {
                self.pos += 1;
                self.expect(TokKind::LParen, &["'('"])?;
                let xi = self.sum()?;
                if self.eat(TokKind::Comma) {
                    let p = self.lp()?;
                    self.expect(TokKind::RParen, &["')'"])?;
                    Ok(SpaceExpr::VectorC(xi.normalize(), p))
                } else {
                    self.expect(TokKind::RParen, &["')'", "'*'", "'+'", "','"])?;
                    Ok(SpaceExpr::ScalarC(xi.normalize()))
                }
            }
            Some(TokKind::K) => {
                self.pos += 1;
                self.expect(TokKind::LParen, &["'('"])?;
                let (lambda, p) = self.cspace()?;
                self.expect(TokKind::Comma, &["','"])?;
                let (xi, q) = self.cspace()?;
                self.expect(TokKind::RParen, &["')'"])?;
                Ok(SpaceExpr::KSpace { lambda, p, xi, q })
            }
            _ => Err(self.err_here(&["'C'", "'K'"]).into()),
        }
    }

    fn cspace(&mut self) -> Result<(NormalOrdinal, Ratio<u64>), SpaceParseError> {
        self.expect(TokKind::C, &["'C'"])?;
        self.expect(TokKind::LParen, &["'('"])?;
        let xi = self.sum()?;
        self.expect(TokKind::Comma, &["','", "'*'", "'+'"])?;
        let p = self.lp()?;
        self.expect(TokKind::RParen, &["')'"])?;
        Ok((xi.normalize(), p))
    }

    /// Parse an `l_p` exponent and validate its domain (`1 < p`, finite).
    fn lp(&mut self) -> Result<Ratio<u64>, SpaceParseError> {
        self.expect(TokKind::LSub, &["'l_'"])?;
        let (a, a_span) = self.expect_nat()?;
        let (ratio, span) = if self.eat(TokKind::Slash) {
            let (b, b_span) = self.expect_nat()?;
            let span = SourceSpan::new(a_span.start, b_span.end);
            if b.is_zero() {
                return Err(SpaceParseError::Domain {
                    span,
                    message: "exponent has a zero denominator".to_string(),
                });
            }
            let (a, b) = to_u64_pair(&a, &b, span)?;
            (Ratio::new(a, b), span)
        } else if self.eat(TokKind::Dot) {
            let (b, b_span) = self.expect_nat()?;
            let span = SourceSpan::new(a_span.start, b_span.end);
            let digits = (b_span.end - b_span.start) as u32;
            let (a, b) = to_u64_pair(&a, &b, span)?;
            let scale = 10u64
                .checked_pow(digits)
                .ok_or_else(|| out_of_range(span))?;
            let numer = a
                .checked_mul(scale)
                .and_then(|x| x.checked_add(b))
                .ok_or_else(|| out_of_range(span))?;
            (Ratio::new(numer, scale), span)
        } else {
            let (a, _) = to_u64_pair(&a, &BigUint::from(1u32), a_span)?;
            (Ratio::from_integer(a), a_span)
        };
        if ratio <= Ratio::from_integer(1) {
            return Err(SpaceParseError::Domain {
                span,
                message: format!("exponent must exceed 1 (got {ratio})"),
            });
        }
        Ok(ratio)
    }
}

fn out_of_range(span: SourceSpan) -> SpaceParseError {
    SpaceParseError::Domain {
        span,
        message: "exponent out of range".to_string(),
    }
}

fn to_u64_pair(
    a: &BigUint,
    b: &BigUint,
    span: SourceSpan,
) -> Result<(u64, u64), SpaceParseError> {
    match (a.to_u64(), b.to_u64()) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(out_of_range(span)),
    }
}
