use alloc::string::String;

use crate::profile::Mode;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EstimateError {
    #[error("degree arithmetic overflowed the i64 range")]
    Overflow,
    #[error("minimum of an empty list")]
    EmptyMinimum,
    #[error("negative infinity is not a degree")]
    NegativeInfinity,
    #[error("not a degree (expected an integer or `inf`)")]
    BadDegree,
    #[error("cube dimension must be at least 1")]
    ZeroDimension,
    #[error("dimension {dim} is out of range for this operation (need {min}..)")]
    DimensionTooSmall { dim: u32, min: u32 },
    #[error("missing degree for the {0}-subcubes")]
    MissingDegree(u32),
    #[error("unexpected degree for the {0}-subcubes")]
    ExtraDegree(u32),
    #[error("integer partitions need d >= 1")]
    BadPartitionSize,
    #[error("expected a {expected} profile, got a {found} one")]
    WrongMode { expected: Mode, found: Mode },
    #[error("profiles have different dimensions ({0} vs {1})")]
    DimensionMismatch(u32, u32),
    #[error("profile is outside the supported shape: {0}")]
    UnsupportedShape(String),
    #[error("suspension exponent must be at least 1")]
    ZeroExponent,
    #[error("iteration bound must be at least 1")]
    ZeroIterations,
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("internal cross-check failed: {0}")]
    CrossCheck(String),
}
