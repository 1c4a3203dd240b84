// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NotPrime(u32),
    #[error("invalid field modulus: {0}")]
    InvalidModulus(String),
    #[error("modulus {0:?} is reducible over GF({1})")]
    ReducibleModulus(Vec<u32>, u32),
    #[error("field order {order} exceeds the table bound {bound}")]
    FieldTooLarge { order: u64, bound: u64 },
    #[error("element {0} is not a primitive element")]
    NotPrimitive(String),
    #[error("invalid field element: {0}")]
    InvalidElement(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("operands belong to different skew polynomial rings")]
    RingMismatch,
    #[error("frobenius power {power} out of range for extension degree {degree}")]
    InvalidAutomorphism { power: u32, degree: u32 },
    #[error("operation requires the squaring Frobenius over characteristic 2")]
    NotSquaringFrobenius,
    #[error("length {length} is not divisible by the automorphism order {order}")]
    LengthNotMultipleOfOrder { length: usize, order: u32 },
    #[error("generator does not right-divide X^{n} - 1 (remainder {remainder})")]
    NotRightDivisor { n: usize, remainder: String },
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("search space of {required} exceeds the budget {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("decoder setting violated: {0}")]
    DecoderSetting(String),
    #[error("key equation failure: {0}")]
    KeyEquation(String),
    #[error("error locator failure: {0}")]
    Locator(String),
    #[error("uncorrectable word: {0}")]
    Uncorrectable(String),
    #[error("{0} candidate errors produce codewords")]
    AmbiguousDecoding(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
