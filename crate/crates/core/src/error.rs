use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the knot-invariant routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("0/0 is not a projective point")]
    ZeroOverZero,

    #[error("matrix determinant {0} is not +1 or -1")]
    NotUnimodular(BigInt),

    #[error("quotient at position {position} is zero; only the first quotient may be zero")]
    InteriorZero { position: usize },

    #[error("{0} is not a canonical Schubert fraction")]
    NonCanonical(String),

    #[error("quotient {value} at position {position} is not a nonzero even integer")]
    NotEven { position: usize, value: BigInt },

    #[error("notation evaluates to 0, which is not a rational link")]
    ZeroLink,

    #[error("the link has two components; {0} is only defined for knots")]
    TwoComponentLink(&'static str),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
