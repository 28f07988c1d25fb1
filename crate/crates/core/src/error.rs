use thiserror::Error;

use crate::ideal::ExponentVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,

    #[error("operation is undefined for the unit ideal")]
    UnitIdeal,

    #[error("J is not contained in I: generator {0} of J is not a member of I")]
    NotContained(ExponentVector),

    #[error("I = J, the quotient is the zero module")]
    EmptyModule,

    #[error("g = {g} does not dominate generator {generator}")]
    InadmissibleG {
        g: ExponentVector,
        generator: ExponentVector,
    },

    #[error("slice degree {degree} outside [{min}, {max}]")]
    SliceOutOfRange { degree: u32, min: u32, max: u32 },

    #[error("variable index {index} out of range for {n} variables")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("ideal is not of Borel type")]
    NotBorelType,

    #[error("ideal is not a monomial complete intersection")]
    NotCompleteIntersection,

    #[error("interval bottom {bottom} is not below top {top}")]
    IncomparableInterval {
        bottom: ExponentVector,
        top: ExponentVector,
    },

    #[error("{0} is not a point of the characteristic poset")]
    NotAPoint(ExponentVector),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid decomposition: {point} is covered by {count} Stanley spaces")]
    InvalidDecomposition { point: ExponentVector, count: usize },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("thread pool: {0}")]
    ThreadPool(String),
}

pub type Result<T> = std::result::Result<T, Error>;
