use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed rational `{0}`")]
    Rational(String),
    #[error("malformed variable `{0}` (expected z<i> or w<i>)")]
    Variable(String),
    #[error("malformed sign pattern `{0}`")]
    Sign(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("gram matrix must be a non-empty square matrix")]
    NotSquare,

    #[error("gram matrix is not symmetric")]
    NotSymmetric,

    #[error("gram matrix is singular")]
    SingularGram,

    #[error("not a derangement: {0}")]
    InvalidDerangement(String),

    #[error("not a diagram: {0}")]
    InvalidDiagram(String),

    #[error("operation undefined for n = {0} (needs n >= 2)")]
    TooFewPairs(usize),

    #[error("pole at evaluation point: {left} = {right}")]
    Pole { left: String, right: String },

    #[error("variable {0} has no value or is missing from the expansion domain")]
    MissingVariable(String),

    #[error("mode algebra recursion exceeded depth {0}")]
    DepthExceeded(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
