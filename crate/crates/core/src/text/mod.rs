//! Text frontend: tokenizing, parsing, printing, and JSON serialization.
//!
//! The ASCII surface syntax round-trips: for every normal form `x`,
//! `parse_normal(&x.to_string()) == x`. See [`parse`](self::parse_ordinal)
//! for the grammar and [`PrintStyle`] for the output alphabets.

mod json;
mod lex;
mod parse;
mod print;

pub use json::verdict_to_json;
pub use parse::{parse_normal, parse_ordinal, parse_space};
pub use print::{format_ordinal, PrintStyle};
