use thiserror::Error;

use crate::MultiIndex;

/// Errors raised by the algebraic and evaluation routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("order must be at least 1")]
    ZeroOrder,

    #[error("multi-index {0} is not populated")]
    NotPopulated(MultiIndex),

    #[error("query at order {requested} exceeds truncation order {available}")]
    Truncation { requested: usize, available: usize },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid aromatic tree: {0}")]
    InvalidAromatic(String),

    #[error("invalid Butcher tableau: {0}")]
    InvalidTableau(String),
}

pub type Result<T> = std::result::Result<T, Error>;
