use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("generator index {index} out of range for a {m}-dimensional space")]
    IndexOutOfRange { index: usize, m: usize },

    #[error("quadratic form matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("pole at t = {at} in the coefficient of blade {blade}")]
    Pole { blade: String, at: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("inconsistent structure constants: {0}")]
    Inconsistent(String),

    #[error("algebra tensor is not unital: {0}")]
    NonUnital(String),

    #[error("weight {0} is not dominant integral")]
    NotDominant(String),

    #[error("multiset is not a nonnegative combination of irreducible characters: {0}")]
    NotACharacter(String),

    #[error("element is not in the span: {0}")]
    NotInSpan(String),

    #[error("parse error: {0}")]
    Parse(String),
}
