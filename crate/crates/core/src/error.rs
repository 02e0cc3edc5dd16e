use num_bigint::BigUint;
use thiserror::Error;

/// Errors produced by field construction, linear algebra, code constructors
/// and the analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field size {0} is not a prime")]
    NotPrime(u32),

    #[error("field of order {0} is too large to represent")]
    FieldTooLarge(u64),

    #[error("modulus must be monic of degree {expected}, got coefficients {got:?}")]
    BadModulus { expected: usize, got: Vec<u32> },

    #[error("modulus {0:?} is reducible")]
    ReducibleModulus(Vec<u32>),

    #[error("element {value} is not in a field of order {order}")]
    NotAnElement { value: u32, order: u32 },

    #[error("basis elements are linearly dependent over the base field")]
    SingularBasis,

    #[error("ambient dimensions differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),

    #[error("dimension mismatch: {0}")]
    Shape(String),

    #[error("enumeration needs {required} items but the budget is {cap}")]
    BudgetExceeded { required: BigUint, cap: u64 },

    #[error("{0} violated")]
    InvalidParameters(String),

    #[error("trivial code: {0}")]
    TrivialCode(String),

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("code is not self-dual")]
    NotSelfDual,

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
