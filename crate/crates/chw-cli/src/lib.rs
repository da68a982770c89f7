//! Command line front end for exact computations in combinatorial
//! Hantzsche-Wendt groups: word and automorphism-word parsers, pretty
//! printing, and command dispatch.

pub mod commands;
pub mod parse;

pub use commands::{CliError, SuiteChoice};
pub use parse::{parse_auto_word, parse_element, parse_word, ParseError};
