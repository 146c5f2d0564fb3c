//! Error types shared across the engine.
//!
//! Two families of failure exist: *domain errors*, where an input is outside
//! the mathematical domain of an operation (division by zero, a Banach space
//! built over the zero ordinal, an exponent `p <= 1`), and *fragment errors*,
//! where an input is perfectly meaningful but falls outside the fragment this
//! engine can decide symbolically (for example a naive-oracle power tower that
//! would exceed the configured expansion bound).

use std::fmt;

use thiserror::Error;

/// A byte-offset range into a source string, used by parse errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SourceSpan {
    /// Byte offset of the first offending byte.
    pub start: usize,
    /// Byte offset one past the last offending byte.
    pub end: usize,
}

impl SourceSpan {
    pub fn new(start: usize, end: usize) -> Self {
        SourceSpan { start, end }
    }

    /// A zero-width span pointing at a single position (e.g. unexpected EOF).
    pub fn at(pos: usize) -> Self {
        SourceSpan { start: pos, end: pos }
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.end > self.start {
            write!(f, "{}..{}", self.start, self.end)
        } else {
            write!(f, "{}", self.start)
        }
    }
}

/// Failure to turn a source string into an ordinal term.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at {span}: {message}")]
pub struct ParseError {
    pub span: SourceSpan,
    /// Human-readable description, including the sorted set of token kinds
    /// that would have been accepted at this position.
    pub message: String,
}

/// Failure to parse a space expression such as `C(w^w)` or `K(C(w,l_2), C(w^w,l_3))`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceParseError {
    /// The text is not well formed.
    #[error(transparent)]
    Syntax(#[from] ParseError),
    /// The text is well formed but describes a space outside the domain
    /// (e.g. an `l_p` index with `p <= 1`).
    #[error("domain error at {span}: {message}")]
    Domain { span: SourceSpan, message: String },
}

/// An input that is outside the mathematical domain of the requested operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("domain error: {0}")]
pub struct DomainError(pub String);

impl DomainError {
    pub fn new(msg: impl Into<String>) -> Self {
        DomainError(msg.into())
    }
}

/// An input that the engine cannot handle within its decidable fragment,
/// as opposed to one that is mathematically ill-posed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("outside supported fragment: {0}")]
pub struct FragmentError(pub String);

impl FragmentError {
    pub fn new(msg: impl Into<String>) -> Self {
        FragmentError(msg.into())
    }
}
