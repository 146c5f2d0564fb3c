//! Tokenizer shared by the ordinal and space grammars.
//!
//! Whitespace separates tokens and is otherwise ignored. `w_` and `l_`
//! are single tokens (maximal munch: a `w` immediately followed by `_` is
//! always the subscript form), so `w_1` lexes as `w_` `1` while `w _1`
//! fails on the stray underscore.

use num_bigint::BigUint;

use crate::error::{ParseError, SourceSpan};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum TokKind {
    Nat(BigUint),
    /// `w`
    W,
    /// `w_`
    WSub,
    /// `l_`
    LSub,
    C,
    K,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Plus,
    Star,
    Caret,
    Comma,
    Slash,
    Dot,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Token {
    pub(crate) kind: TokKind,
    pub(crate) span: SourceSpan,
}

pub(crate) fn lex(input: &str) -> Result<Vec<Token>, ParseError> {
    let mut toks = Vec::new();
    let mut it = input.char_indices().peekable();
    while let Some(&(i, ch)) = it.peek() {
        let single = |kind: TokKind| Token {
            kind,
            span: SourceSpan::new(i, i + ch.len_utf8()),
        };
        match ch {
            c if c.is_whitespace() => {
                it.next();
            }
            '0'..='9' => {
                let mut end = i;
                let mut digits = String::new();
                while let Some(&(j, d)) = it.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        end = j + 1;
                        it.next();
                    } else {
                        break;
                    }
                }
                let n: BigUint = digits.parse().expect("ascii digits");
                toks.push(Token {
                    kind: TokKind::Nat(n),
                    span: SourceSpan::new(i, end),
                });
            }
            'w' => {
                it.next();
                if let Some(&(_, '_')) = it.peek() {
                    it.next();
                    toks.push(Token {
                        kind: TokKind::WSub,
                        span: SourceSpan::new(i, i + 2),
                    });
                } else {
                    toks.push(single(TokKind::W));
                }
            }
            'l' => {
                it.next();
                if let Some(&(_, '_')) = it.peek() {
                    it.next();
                    toks.push(Token {
                        kind: TokKind::LSub,
                        span: SourceSpan::new(i, i + 2),
                    });
                } else {
                    return Err(ParseError {
                        span: SourceSpan::new(i, i + 1),
                        message: "expected '_' after 'l' (as in l_2)".to_string(),
                    });
                }
            }
            'C' => {
                it.next();
                toks.push(single(TokKind::C));
            }
            'K' => {
                it.next();
                toks.push(single(TokKind::K));
            }
            '(' => {
                it.next();
                toks.push(single(TokKind::LParen));
            }
            ')' => {
                it.next();
                toks.push(single(TokKind::RParen));
            }
            '[' => {
                it.next();
                toks.push(single(TokKind::LBracket));
            }
            ']' => {
                it.next();
                toks.push(single(TokKind::RBracket));
            }
            '+' => {
                it.next();
                toks.push(single(TokKind::Plus));
            }
            '*' => {
                it.next();
                toks.push(single(TokKind::Star));
            }
            '^' => {
                it.next();
                toks.push(single(TokKind::Caret));
            }
            ',' => {
                it.next();
                toks.push(single(TokKind::Comma));
            }
            '/' => {
                it.next();
                toks.push(single(TokKind::Slash));
            }
            '.' => {
                it.next();
                toks.push(single(TokKind::Dot));
            }
            other => {
                return Err(ParseError {
                    span: SourceSpan::new(i, i + other.len_utf8()),
                    message: format!("unexpected character '{other}'"),
                });
            }
        }
    }
    Ok(toks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_and_spans() {
        let toks = lex("w_12 + w*3").unwrap();
        let kinds: Vec<_> = toks.iter().map(|t| t.kind.clone()).collect();
        assert_eq!(
            kinds,
            vec![
                TokKind::WSub,
                TokKind::Nat(12u32.into()),
                TokKind::Plus,
                TokKind::W,
                TokKind::Star,
                TokKind::Nat(3u32.into()),
            ]
        );
        assert_eq!(toks[0].span, SourceSpan::new(0, 2));
        assert_eq!(toks[1].span, SourceSpan::new(2, 4));
        assert_eq!(toks[5].span, SourceSpan::new(9, 10));
    }

    #[test]
    fn rejects_strays() {
        let e = lex("w @").unwrap_err();
        assert_eq!(e.span, SourceSpan::new(2, 3));
        assert!(e.message.contains('@'));
        let e = lex("l2").unwrap_err();
        assert_eq!(e.span, SourceSpan::new(0, 1));
        let e = lex("w _1").unwrap_err();
        assert_eq!(e.span, SourceSpan::new(2, 3));
    }
}
