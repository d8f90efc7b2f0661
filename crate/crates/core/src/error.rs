use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("operands live over different variable tables")]
    VarTableMismatch,
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("prime {0} divides a coefficient denominator, resample")]
    BadPrime(u64),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("no assignment for occurring variable `{0}`")]
    MissingAssignment(String),
    #[error("size {size} out of range 1..={max}")]
    OutOfRange { size: usize, max: usize },
    #[error("expected constant entries, found a polynomial of degree {0}")]
    NonConstantEntry(u32),
    #[error("generators are not homogeneous")]
    Inhomogeneous,
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("spans live in different ambient spaces or over different fields")]
    AmbientMismatch,
    #[error("matrix is singular")]
    Singular,
    #[error("ideal has no nonzero generator")]
    ZeroIdeal,
    #[error("polynomial involves variables other than `{0}`")]
    NotUnivariate(String),
    #[error("constant monomial has no shape")]
    ConstantMonomial,
    #[error("partition has {cols} columns, at most {max} allowed")]
    TooManyColumns { cols: u32, max: u32 },
    #[error("invalid partition {0:?}: parts must be positive and non-increasing")]
    InvalidPartition(Vec<u32>),
    #[error("matrix entries are not distinct indeterminates")]
    NotGeneric,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
