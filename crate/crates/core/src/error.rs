use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("set does not contain 0")]
    MissingZero,
    #[error("empty set")]
    EmptySet,
    #[error("malformed set literal `{0}`: expected `{{0,...}}`")]
    Syntax(String),
    #[error("invalid element `{0}`: expected a nonnegative integer")]
    InvalidElement(String),
    #[error("element exceeds the 64-bit unsigned range")]
    Overflow,
    #[error("dilation factor must be positive")]
    ZeroDilation,
    #[error("invalid rational `{0}`")]
    InvalidRational(String),
    #[error("search budget of {limit} nodes exceeded")]
    BudgetExceeded { limit: u64 },
    #[error("set with maximum {max} is beyond exhaustive search range")]
    TooLarge { max: u64 },
    #[error("oracle input cap exceeded: max element {max} > {cap}")]
    OracleCap { max: u64, cap: u64 },
    #[error("precondition failed: {0}")]
    PreconditionFailed(Precondition),
    #[error(
        "invalid n-sequence at index {index}: n_{index} = {value} but at least {min} is required"
    )]
    InvalidSequence { index: usize, value: u64, min: u64 },
}

/// The specific hypothesis a construction or verifier refused to run without.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Precondition {
    XRelativelyCancellative,
    YRelativelyCancellative,
    GcdBound { gcd: u64, bound: u64 },
    ShiftBound { n: u64, bound: u64 },
    GeneratorTooSmall(u64),
    IntervalStart(u64),
    ElasticityBelowOne,
}

impl fmt::Display for Precondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Precondition::XRelativelyCancellative => write!(f, "X is not relatively cancellative"),
            Precondition::YRelativelyCancellative => write!(f, "Y is not relatively cancellative"),
            Precondition::GcdBound { gcd, bound } => {
                write!(f, "gcd(Y) = {gcd} is not greater than 2*max(X) = {bound}")
            }
            Precondition::ShiftBound { n, bound } => {
                write!(f, "n = {n} is not greater than 2*max(X) = {bound}")
            }
            Precondition::GeneratorTooSmall(n) => write!(f, "generator {n} is smaller than 3"),
            Precondition::IntervalStart(k) => write!(f, "interval start {k} is smaller than 2"),
            Precondition::ElasticityBelowOne => write!(f, "elasticity must be at least 1"),
        }
    }
}
