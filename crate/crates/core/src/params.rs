use core::fmt;
use core::str::FromStr;

use crate::degree::Degree;
use crate::error::EstimateError;

/// The suspension exponent `r` of `Ω̃ʳΣ̃ʳ`: a positive integer, or `∞` for
/// the stabilization adjunction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Exponent {
    Finite(u32),
    Stable,
}

impl Exponent {
    pub const ONE: Exponent = Exponent::Finite(1);

    pub fn finite(r: u32) -> Result<Self, EstimateError> {
        if r == 0 {
            Err(EstimateError::ZeroExponent)
        } else {
            Ok(Exponent::Finite(r))
        }
    }

    pub fn is_stable(self) -> bool {
        matches!(self, Exponent::Stable)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(r) => write!(f, "{r}"),
            Exponent::Stable => f.write_str("inf"),
        }
    }
}

impl FromStr for Exponent {
    type Err = EstimateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "∞" => Ok(Exponent::Stable),
            t => {
                let r = t
                    .parse::<u32>()
                    .map_err(|_| EstimateError::Parameter(alloc::format!("bad exponent `{t}`")))?;
                Exponent::finite(r)
            }
        }
    }
}

#[cfg(feature = "serde")]
mod serde_impl {
    use super::Exponent;
    use alloc::string::{String, ToString};
    use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

    impl Serialize for Exponent {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            s.serialize_str(&self.to_string())
        }
    }

    impl<'de> Deserialize<'de> for Exponent {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            String::deserialize(d)?.parse().map_err(de::Error::custom)
        }
    }
}

/// The parameters the verifiers range over: relative connectivity `k_rel`
/// of the input ("k-connected rel. Z"), suspension exponent `r`, and a
/// tower/excisive index `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ParameterSet {
    pub k_rel: Degree,
    pub r: Exponent,
    pub n: u32,
}

impl ParameterSet {
    pub fn new(k_rel: Degree, r: Exponent, n: u32) -> Result<Self, EstimateError> {
        if k_rel < Degree::ZERO {
            return Err(EstimateError::Parameter(alloc::format!(
                "k_rel must be >= 0, got {k_rel}"
            )));
        }
        if r == Exponent::Finite(0) {
            return Err(EstimateError::ZeroExponent);
        }
        Ok(ParameterSet { k_rel, r, n })
    }
}
