use thiserror::Error;

use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unbalanced parentheses at position {pos}")]
    UnbalancedParentheses { pos: usize },
    #[error("illegal character {found:?} at position {pos}")]
    IllegalCharacter { pos: usize, found: char },
    #[error("path dips below the axis at position {pos}")]
    NegativePrefix { pos: usize },
    #[error("path ends at height {height}, not on the axis")]
    NotClosed { height: i64 },
    #[error("malformed run {token:?} at position {pos}")]
    InvalidRun { pos: usize, token: String },
    #[error("the bijection needs a tree with at least one edge")]
    EmptyTree,
    #[error("up/down weight product changed: expected {expected}, got {found}")]
    ProductMismatch { expected: Poly, found: Poly },
}

impl Error {
    /// Variant name, e.g. `NegativePrefix`.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::UnbalancedParentheses { .. } => "UnbalancedParentheses",
            Error::IllegalCharacter { .. } => "IllegalCharacter",
            Error::NegativePrefix { .. } => "NegativePrefix",
            Error::NotClosed { .. } => "NotClosed",
            Error::InvalidRun { .. } => "InvalidRun",
            Error::EmptyTree => "EmptyTree",
            Error::ProductMismatch { .. } => "ProductMismatch",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
