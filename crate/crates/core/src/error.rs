use thiserror::Error;

/// Errors raised by the exact linear-algebra core and the helm-graph builders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HelmError {
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("n = {0} is too small (need n >= {1})")]
    NTooSmall(i64, i64),
    #[error("n = {0} is not odd")]
    NotOdd(i64),
    #[error("n = {0} is not even")]
    NotEven(i64),
    #[error("k = {0} is too small (need k >= 1)")]
    KTooSmall(i64),
    #[error("circulant first row is empty")]
    EmptySpec,
    #[error("circulant specs have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("vector is not symmetric in its trailing coordinates")]
    NotDelta,
    #[error("generator is not of the form (a, b, 0, ..., 0, b)")]
    BadPattern,
    #[error("the all-ones vector is not in the range of D")]
    ENotInRange,
    #[error("invalid decomposition: {0}")]
    DecompositionInvalid(String),
    #[error("identity violated: {0}")]
    IdentityViolated(String),
}

pub type Result<T, E = HelmError> = std::result::Result<T, E>;
