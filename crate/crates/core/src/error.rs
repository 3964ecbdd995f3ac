use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),
    #[error("invalid strict partition {0:?}: parts must be positive and strictly decreasing")]
    NotStrict(Vec<u32>),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("{0} does not divide {1}")]
    NotDivisible(String, String),
    #[error("shift t^{shift} is too small to clear t^-{needed}")]
    InsufficientShift { shift: u32, needed: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("weight {0:?} is not a partition")]
    WeightNotPartition(Vec<u32>),
    #[error("need at least {needed} variables, got {got}")]
    TooFewVariables { needed: usize, got: usize },
    #[error("unknown basis `{0}`")]
    UnknownBasis(String),
    #[error("singular linear system")]
    Singular,
    #[error("not an element of the Q-function subring: leading term at {0:?}")]
    NotInGamma(Vec<u32>),
    #[error("expected a polynomial, got {0}")]
    NotPolynomial(String),
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
