//! Extended-integer degrees: `ℤ ∪ {∞}` with min-plus arithmetic.
//!
//! A [`Degree`] measures how connected a map is, or how cartesian/cocartesian
//! a cube is. Finite arithmetic is checked; `∞` absorbs addition and is the
//! top of the order. There is deliberately no `-∞`.

use core::fmt;
use core::str::FromStr;

use crate::error::EstimateError;

/// An element of `ℤ ∪ {∞}`.
///
/// The derived order puts every finite value below [`Degree::Infinite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    Finite(i64),
    Infinite,
}

pub use Degree::Infinite as INF;

impl Degree {
    pub const ZERO: Degree = Degree::Finite(0);

    pub const fn new(value: i64) -> Self {
        Degree::Finite(value)
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Degree::Infinite)
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::Finite(v) => Some(v),
            Degree::Infinite => None,
        }
    }

    /// Checked sum; `∞` absorbs.
    pub fn checked_add(self, rhs: Degree) -> Result<Degree, EstimateError> {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => a
                .checked_add(b)
                .map(Degree::Finite)
                .ok_or(EstimateError::Overflow),
            _ => Ok(Degree::Infinite),
        }
    }

    /// Shift by a finite offset (positive or negative). `∞` stays `∞`.
    pub fn shift(self, by: i64) -> Result<Degree, EstimateError> {
        self.checked_add(Degree::Finite(by))
    }

    /// `m · self`, the `m`-fold sum. The empty sum (`m = 0`) is `0`.
    pub fn scale(self, m: u32) -> Result<Degree, EstimateError> {
        match self {
            _ if m == 0 => Ok(Degree::ZERO),
            Degree::Finite(v) => v
                .checked_mul(i64::from(m))
                .map(Degree::Finite)
                .ok_or(EstimateError::Overflow),
            Degree::Infinite => Ok(Degree::Infinite),
        }
    }

    /// Shift down by an unsigned amount.
    pub fn lower(self, by: u32) -> Result<Degree, EstimateError> {
        self.shift(-i64::from(by))
    }

    /// Shift up by an unsigned amount.
    pub fn raise(self, by: u32) -> Result<Degree, EstimateError> {
        self.shift(i64::from(by))
    }
}

impl From<i64> for Degree {
    fn from(v: i64) -> Self {
        Degree::Finite(v)
    }
}

/// `a + b`, exact for finite values, `∞` if either side is `∞`.
pub fn deg_add(a: Degree, b: Degree) -> Result<Degree, EstimateError> {
    a.checked_add(b)
}

/// Sum of a list of degrees. The empty sum is `0`.
pub fn deg_sum<I>(values: I) -> Result<Degree, EstimateError>
where
    I: IntoIterator<Item = Degree>,
{
    values
        .into_iter()
        .try_fold(Degree::ZERO, |acc, d| acc.checked_add(d))
}

/// Least element of a nonempty list.
pub fn deg_min(values: &[Degree]) -> Result<Degree, EstimateError> {
    values
        .iter()
        .copied()
        .min()
        .ok_or(EstimateError::EmptyMinimum)
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Finite(v) => write!(f, "{v}"),
            Degree::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Degree {
    type Err = EstimateError;

    /// Accepts a decimal integer (optionally signed) or `inf`. `-inf` is
    /// rejected: no rule produces a negative infinity.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        match t {
            "inf" | "∞" | "+inf" => Ok(Degree::Infinite),
            "-inf" | "-∞" => Err(EstimateError::NegativeInfinity),
            _ => t
                .parse::<i64>()
                .map(Degree::Finite)
                .map_err(|_| EstimateError::BadDegree),
        }
    }
}

#[cfg(feature = "serde")]
mod serde_impl {
    use super::Degree;
    use alloc::string::{String, ToString};
    use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

    // Degrees travel as strings ("3", "inf") so `∞` has a portable encoding.
    impl Serialize for Degree {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            s.serialize_str(&self.to_string())
        }
    }

    impl<'de> Deserialize<'de> for Degree {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            let s = String::deserialize(d)?;
            s.parse().map_err(de::Error::custom)
        }
    }
}
