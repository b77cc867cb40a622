use thiserror::Error;

/// Errors raised by the algebraic layer (everything below the unit language).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: String, found: String },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
    #[error("value {0} is not strictly positive")]
    NonPositive(String),

    #[error("space mismatch: {left} vs {right}")]
    SpaceMismatch { left: String, right: String },
    #[error("scalar {0} is not strictly positive")]
    NonPositiveScalar(String),
    #[error("coordinate index {index} out of range for semi-dimension {sdim}")]
    IndexOutOfRange { index: usize, sdim: usize },
    #[error("negative coordinate {0} in a semi-vector")]
    NegativeCoordinate(String),
    #[error("space {0} is not complete and has no zero element")]
    NoZero(String),
    #[error("space {0} is already complete")]
    AlreadyComplete(String),
    #[error("invalid semi-linear map: {0}")]
    InvalidMap(String),

    #[error("base mismatch: {left} vs {right}")]
    BaseMismatch { left: String, right: String },
    #[error("rational map of degree 0 is not invertible")]
    NotInvertible,

    #[error("fractional power {exponent} of a negative coefficient")]
    FractionalPowerOfNegative { exponent: String },
    #[error("zero coefficient raised to non-positive power {exponent}")]
    ZeroToNonpositivePower { exponent: String },
    #[error("coefficient exp({0}) is outside the floating-point range")]
    CoefficientOutOfRange(String),
    #[error("scales do not form a scale basis (determinant 0)")]
    SingularBasis,
    #[error("name {0} is already defined")]
    DuplicateName(String),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: String, right: String },
}

pub type Result<T> = std::result::Result<T, Error>;
