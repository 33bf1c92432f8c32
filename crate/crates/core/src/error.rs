use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic {0} is even; only odd primes are supported")]
    EvenCharacteristic(u64),
    #[error("{0} is not an odd prime power")]
    NotOddPrimePower(u64),
    #[error("field size {0} exceeds the supported bound 2^31")]
    FieldTooLarge(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("element code {code} out of range for a field of size {q}")]
    ElementOutOfRange { code: u64, q: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{m} does not divide q - 1 = {q_minus_1}")]
    NotDivisor { m: u64, q_minus_1: u64 },
    #[error("F_{r} is not a subfield of F_{q}")]
    NotSubfield { r: u64, q: u64 },
    #[error("evaluation points are not pairwise distinct (index {0} repeats an earlier point)")]
    RepeatedPoint(usize),
    #[error("index {index} out of range for {len} points")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("at least {needed} points required, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("{0}")]
    InvalidCode(String),
    #[error("message has length {got}, expected {expected}")]
    MessageLength { got: usize, expected: usize },
    #[error("exhaustive search over {q}^{k} messages exceeds the limit {limit}")]
    SearchTooLarge { q: u64, k: usize, limit: u64 },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("self-duality criterion failed at point index {index}")]
    CriterionFailed { index: usize },
}
