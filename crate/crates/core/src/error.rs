//! Error type shared across the crate.

use std::fmt;

use thiserror::Error;

/// Line/column position inside a source file, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: u32,
    pub column: u32,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

/// A syntax error, with the offending token and the set of tokens that
/// would have been accepted in its place.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: Pos,
    pub found: String,
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: found {}, expected ", self.pos, self.found)?;
        for (i, e) in self.expected.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at {0}")]
    Parse(ParseError),

    #[error("unknown name `{name}`: {context}")]
    UnknownName { name: String, context: String },

    #[error("duplicate name `{0}`")]
    DuplicateName(String),

    #[error("system declares no sentences")]
    EmptySystem,

    #[error("sentence `{0}` referenced bare; sentences are referenced through T, F or U")]
    BareSentenceReference(String),

    #[error("enumeration needs {space} valuations, over the limit of {limit}")]
    EnumerationLimitExceeded { space: u128, limit: u64 },

    #[error("classical closure requires a fixed point")]
    NotAFixedPoint,
}

pub type Result<T> = std::result::Result<T, Error>;
