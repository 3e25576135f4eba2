//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point {point} is out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("point {point} appears more than once")]
    RepeatedPoint { point: usize },

    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),

    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error("malformed rational: {0:?}")]
    MalformedRational(String),

    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("group closure exceeded the cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },

    #[error("subgroup enumeration is capped at order {cap}, group has order {order}")]
    SubgroupCapExceeded { cap: usize, order: usize },

    #[error("separation program with {vars} variables exceeds the cap of {cap}")]
    LpCapExceeded { vars: usize, cap: usize },

    #[error("not a subgroup")]
    NotSubgroup,
}

impl Error {
    /// True for the errors that mean "input too large for the configured
    /// caps" rather than "input malformed".
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(
            self,
            Error::ClosureCapExceeded { .. }
                | Error::SubgroupCapExceeded { .. }
                | Error::LpCapExceeded { .. }
        )
    }
}
