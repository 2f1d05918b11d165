use thiserror::Error;

/// Errors raised by the symbolic and finite-field layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("invalid variable set: {0}")]
    InvalidVariables(String),

    #[error("a binomial needs two distinct monomials")]
    DegenerateBinomial,

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("column {index} out of range for a matrix with {cols} columns")]
    ColumnOutOfRange { index: usize, cols: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid curve exponents: {0}")]
    InvalidCurve(String),

    #[error("exponent `{name}` would be negative ({value})")]
    NegativeExponent { name: String, value: String },

    #[error("matrix is not simple: {0}")]
    NotSimple(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("unsupported field: {0}")]
    UnsupportedField(String),

    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("no monic irreducible polynomial of degree {degree} over F_{p}")]
    NoIrreducible { p: u64, degree: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
