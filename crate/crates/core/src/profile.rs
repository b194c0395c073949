//! Uniform-by-dimension estimate records for cubes.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::degree::Degree;
use crate::error::EstimateError;

/// Which kind of estimate the `d ≥ 2` entries of a [`Profile`] carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Mode {
    Cartesian,
    Cocartesian,
}

impl Mode {
    /// Keyword used by the script language and the compact display.
    pub fn keyword(self) -> &'static str {
        match self {
            Mode::Cartesian => "cart",
            Mode::Cocartesian => "cocart",
        }
    }

    pub fn dual(self) -> Mode {
        match self {
            Mode::Cartesian => Mode::Cocartesian,
            Mode::Cocartesian => Mode::Cartesian,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Cartesian => "cartesian",
            Mode::Cocartesian => "cocartesian",
        })
    }
}

/// Estimates for an `n`-cube, uniform over subcubes of each dimension:
/// every 1-subcube is `conn1`-connected, and every `d`-subcube
/// (`2 ≤ d ≤ n`) is `degree(d)`-cartesian or -cocartesian according to
/// `mode`.
///
/// Values are lower bounds, stored as the bound itself. Profiles are
/// immutable; every transform builds a new one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(try_from = "repr::ProfileRepr", into = "repr::ProfileRepr")
)]
pub struct Profile {
    dim: u32,
    conn1: Degree,
    mode: Mode,
    // entry i holds the (i + 2)-subcube degree
    degrees: Vec<Degree>,
}

impl Profile {
    /// `degrees[i]` is the estimate for the `(i + 2)`-subcubes, so exactly
    /// `dim - 1` entries are required.
    pub fn new(
        dim: u32,
        conn1: Degree,
        mode: Mode,
        degrees: Vec<Degree>,
    ) -> Result<Self, EstimateError> {
        if dim == 0 {
            return Err(EstimateError::ZeroDimension);
        }
        let want = (dim - 1) as usize;
        if degrees.len() < want {
            return Err(EstimateError::MissingDegree(degrees.len() as u32 + 2));
        }
        if degrees.len() > want {
            return Err(EstimateError::ExtraDegree(dim + 1));
        }
        Ok(Profile {
            dim,
            conn1,
            mode,
            degrees,
        })
    }

    /// Builds a profile from an explicit dimension map, which must have
    /// exactly the keys `2..=dim`.
    pub fn from_map(
        dim: u32,
        conn1: Degree,
        mode: Mode,
        map: &BTreeMap<u32, Degree>,
    ) -> Result<Self, EstimateError> {
        if dim == 0 {
            return Err(EstimateError::ZeroDimension);
        }
        if let Some(&bad) = map.keys().find(|&&d| d < 2 || d > dim) {
            return Err(EstimateError::ExtraDegree(bad));
        }
        let degrees = (2..=dim)
            .map(|d| map.get(&d).copied().ok_or(EstimateError::MissingDegree(d)))
            .collect::<Result<Vec<_>, _>>()?;
        Profile::new(dim, conn1, mode, degrees)
    }

    /// A profile whose `d`-subcube degree is `f(d)`.
    pub fn from_fn<F>(dim: u32, conn1: Degree, mode: Mode, f: F) -> Result<Self, EstimateError>
    where
        F: FnMut(u32) -> Degree,
    {
        Profile::new(dim, conn1, mode, (2..=dim).map(f).collect())
    }

    /// Strongly `∞`-cocartesian cube with `conn1`-connected edges.
    pub fn strongly_cocartesian(dim: u32, conn1: Degree) -> Result<Self, EstimateError> {
        Profile::from_fn(dim, conn1, Mode::Cocartesian, |_| Degree::Infinite)
    }

    /// The `(id + 1)`-cartesian shape: `d`-subcubes are `(d + 1)`-cartesian,
    /// edges 2-connected.
    pub fn id_plus_one(dim: u32) -> Result<Self, EstimateError> {
        Profile::from_fn(dim, Degree::Finite(2), Mode::Cartesian, |d| {
            Degree::Finite(i64::from(d) + 1)
        })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn conn1(&self) -> Degree {
        self.conn1
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Degrees for dimensions `2..=dim`, in order.
    pub fn degrees(&self) -> &[Degree] {
        &self.degrees
    }

    /// The estimate for `d`-subcubes: `conn1` at `d = 1`, otherwise the
    /// mode-tagged entry.
    pub fn degree(&self, d: u32) -> Option<Degree> {
        match d {
            0 => None,
            1 => Some(self.conn1),
            d if d <= self.dim => Some(self.degrees[(d - 2) as usize]),
            _ => None,
        }
    }

    /// The estimate of the whole cube. For a 1-cube this is the map's
    /// connectivity.
    pub fn full_cube_degree(&self) -> Degree {
        self.degree(self.dim).expect("dim >= 1")
    }

    /// Degrees keyed by dimension.
    pub fn degree_map(&self) -> BTreeMap<u32, Degree> {
        (2..).zip(self.degrees.iter().copied()).collect()
    }

    /// Whether this profile may be fed to an operation expecting `mode`.
    /// A 1-cube carries no tagged degrees, so it is accepted either way.
    pub fn accepts(&self, mode: Mode) -> bool {
        self.dim == 1 || self.mode == mode
    }

    pub(crate) fn require(&self, mode: Mode) -> Result<(), EstimateError> {
        if self.accepts(mode) {
            Ok(())
        } else {
            Err(EstimateError::WrongMode {
                expected: mode,
                found: self.mode,
            })
        }
    }
}

/// Compact form `cart(1; 2, 3)`: mode, then `conn1`, then the degrees for
/// `d = 2..=dim`.
impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}", self.mode.keyword(), self.conn1)?;
        for (i, d) in self.degrees.iter().enumerate() {
            let sep = if i == 0 { "; " } else { ", " };
            write!(f, "{sep}{d}")?;
        }
        f.write_str(")")
    }
}

#[cfg(feature = "serde")]
mod repr {
    use super::*;

    #[derive(serde::Serialize, serde::Deserialize)]
    pub struct ProfileRepr {
        pub dim: u32,
        pub conn1: Degree,
        pub mode: Mode,
        pub degrees: BTreeMap<u32, Degree>,
    }

    impl From<Profile> for ProfileRepr {
        fn from(p: Profile) -> Self {
            ProfileRepr {
                dim: p.dim,
                conn1: p.conn1,
                mode: p.mode,
                degrees: p.degree_map(),
            }
        }
    }

    impl TryFrom<ProfileRepr> for Profile {
        type Error = EstimateError;

        fn try_from(r: ProfileRepr) -> Result<Self, Self::Error> {
            Profile::from_map(r.dim, r.conn1, r.mode, &r.degrees)
        }
    }
}
