use thiserror::Error;

/// Errors raised by field construction, character evaluation and counting.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error("field of size {size} exceeds the size cap {cap}")]
    FieldTooLarge { size: u128, cap: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("discrete logarithm of zero")]
    LogOfZero,
    #[error("character order {m} does not divide {group_order}")]
    OrderDoesNotDivide { m: u64, group_order: u64 },
    #[error("element is not in the subfield F_q")]
    NotInSubfield,
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("operation needs exp/log tables, but the context was built without them")]
    TablesRequired,
    #[error("curve is degenerate (a = 0)")]
    DegenerateCurve,
    #[error("wrong degree: expected d = {expected}, got {got}")]
    WrongDegree { expected: u64, got: u64 },
    #[error("closed form did not produce a rational integer: {0}")]
    NonIntegerResult(String),
    #[error("floating-point evaluation {value} is not within 0.25 of an integer")]
    NumericallyUnstable { value: f64 },
    #[error("unsupported hypotheses: {0}")]
    UnsupportedHypotheses(String),
    #[error("the extension degree n must be odd")]
    EvenExtensionDegree,
}

pub type Result<T> = std::result::Result<T, Error>;
