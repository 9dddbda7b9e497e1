use alloc::string::String;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("invalid root lattice {family}{rank}")]
    InvalidRootLattice { family: char, rank: usize },
    #[error("label {label} out of range for {lattice}")]
    LabelOutOfRange { lattice: String, label: usize },
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid glue code: {0}")]
    InvalidGlueCode(String),
    #[error("quadratic form is not definite")]
    NotDefinite,
    #[error("not a root system: {0}")]
    NotRootSystem(String),
    #[error("embedding is not valid: {0}")]
    InvalidEmbedding(String),
    #[error("embedding is not primitive")]
    NotPrimitive,
    #[error("vectors are linearly dependent")]
    Dependent,
    #[error("invalid component pair ({i}, {j}) for fiber {fiber}")]
    InvalidComponent { fiber: String, i: usize, j: usize },
    #[error("missing data: {0}")]
    MissingData(String),
    #[error("non-integral solution: {0}")]
    NonIntegral(String),
    #[error("no valid coset representative: {0}")]
    NoRepresentative(String),
    #[error("point is not on the curve: {0}")]
    NotOnCurve(String),
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("singular curve (discriminant vanishes identically)")]
    SingularCurve,
    #[error("generated subgroup has more than {0} elements")]
    SubgroupTooLarge(usize),
    #[error("invalid place: {0}")]
    InvalidPlace(String),
}

pub type Result<T> = core::result::Result<T, Error>;
