use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("variable count mismatch: {0} vs {1}")]
    NvarsMismatch(usize, usize),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },

    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("polynomial is not divisible by the divisor")]
    NotDivisible,

    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,

    #[error("division by zero")]
    DivisionByZero,

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("constant polynomial is not allowed here")]
    ConstantPolynomial,

    #[error("leading coefficient must be positive")]
    NonPositiveLeading,

    #[error("malformed interval: {0}")]
    MalformedInterval(String),

    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),

    #[error("matrix is not square or sizes disagree: {0}")]
    Shape(String),

    #[error("matrix is not positive definite")]
    NotPositiveDefinite,

    #[error("polynomial vanishes at the reference direction (h(e) = 0)")]
    VanishesAtDirection,

    #[error("polynomial restricted to the line is not real-rooted")]
    NotRealRooted,

    #[error("every entry of f is divisible by h")]
    DivisibilityPrecondition,

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("cofactor vector g is not constant")]
    NonConstantCofactor,

    #[error("no feasible point found within tolerance after {iterations} iterations (not a proof of infeasibility)")]
    InfeasibleAtTolerance { iterations: usize },

    #[error("rationalization failed at the {0} stage")]
    RationalizationFailed(RationalizationStage),

    #[error("cone dimension {0} exceeds the supported bound of 12")]
    DimensionBound(usize),

    #[error("no certificate found: {0} (not a refutation)")]
    NotFound(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("json error: {0}")]
    Json(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RationalizationStage {
    Rounding,
    Projection,
    Definiteness,
}

impl std::fmt::Display for RationalizationStage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Rounding => "rounding",
            Self::Projection => "projection",
            Self::Definiteness => "definiteness",
        })
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
