use thiserror::Error;

use crate::partitions::Partition;
use crate::symfunc::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("expected a homogeneous symmetric function, found degrees {degrees:?}")]
    Inhomogeneous { degrees: Vec<usize> },

    #[error("plethysm into a function with a nonzero constant term is undefined")]
    ConstantTermInPlethysm,

    #[error("partition sizes differ: |{lambda}| != |{mu}|")]
    SizeMismatch { lambda: Partition, mu: Partition },

    #[error("not a virtual character: coefficient of s{partition} is {coeff}")]
    NotVirtualCharacter { partition: Partition, coeff: Rational },

    #[error("degree-one term {0} is not an invertible multiple of p_1")]
    NonInvertibleLinearTerm(String),

    #[error("degree {degree} exceeds series cap {cap}")]
    CapExceeded { degree: usize, cap: usize },

    #[error("degree-one term must equal p_1 for this construction")]
    LinearTermNotP1,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed wire data: {0}")]
    Wire(String),
}
