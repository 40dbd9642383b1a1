use thiserror::Error;

/// Errors shared by every layer of the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field cardinality {p}^{degree} exceeds 2^31")]
    TooLarge { p: u64, degree: u32 },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("generated closure exceeds the order cap {0}")]
    ClosureTooLarge(usize),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("matrices do not define a representation: {0}")]
    NotARepresentation(String),
    #[error("generator image is singular")]
    SingularMatrix,
    #[error("modules have different owners")]
    OwnerMismatch,
    #[error("dimension {0} exceeds the cap {1}")]
    DimensionCap(usize, usize),
    #[error("module is not semisimple")]
    NotSemisimple,
    #[error("module is not simple")]
    NotSimple,
    #[error("structure constants are not associative: {0}")]
    NotAssociative(String),
    #[error("algebra has no two-sided unit")]
    NoUnit,
    #[error("module is not a module for the named subgroup")]
    SubgroupMismatch,
    #[error("meataxe gave up after {0} attempts without a certificate")]
    MeataxeStalled(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error at {path}: {message}")]
    Validation { path: String, message: String },
    #[error("expectation mismatch: {0}")]
    ExpectationMismatch(String),
}

impl Error {
    pub fn validation(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation {
            path: path.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
