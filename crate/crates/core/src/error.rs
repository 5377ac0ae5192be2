use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("constant term {0} is not a unit")]
    NonUnitConstant(String),
    #[error("leading coefficient {0} is not an invertible monomial")]
    NonInvertibleLeading(String),
    #[error("coefficient index {index} exceeds truncation order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("cannot raise truncation order from {from} to {to}")]
    OrderPromotion { from: usize, to: usize },
    #[error("{value} is not divisible by {divisor}")]
    InexactDivision { value: String, divisor: String },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("statistic undefined for the empty partition")]
    EmptyPartition,
    #[error("partition has {found} lower-Durfee squares, need at least {needed}")]
    TooFewSquares { found: usize, needed: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("routes disagree at n = {n}: {detail}")]
    RouteMismatch { n: usize, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
