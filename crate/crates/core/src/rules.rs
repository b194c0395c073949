//! Inference rules over degrees.
//!
//! Each rule computes a lower bound and reports the candidate terms it
//! minimized over, so a derivation can print the same `min(...)` lists a
//! hand computation would. Rules trust their inputs: side conditions of the
//! underlying theorems (for instance that a cube is *strongly* cocartesian)
//! are not visible at profile level and are not checked.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::degree::{deg_min, deg_sum, Degree};
use crate::error::EstimateError;
use crate::partition::{consecutive_blocks, integer_partitions};
use crate::profile::{Mode, Profile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Rule {
    HbmCartesian,
    DualHbmCocartesian,
    StableCartFromCocart,
    StableCocartFromCart,
    FrSquareFromLegs,
    FrSourceFromTotal,
    FrTotalFromFaces,
    FrParallelMap,
    ComposeConnectivity,
    ObjectToMapConnectivity,
    FiberTransfer,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::HbmCartesian => "hbm_cartesian",
            Rule::DualHbmCocartesian => "dual_hbm_cocartesian",
            Rule::StableCartFromCocart => "stable_cart_from_cocart",
            Rule::StableCocartFromCart => "stable_cocart_from_cart",
            Rule::FrSquareFromLegs => "fr_square_from_legs",
            Rule::FrSourceFromTotal => "fr_source_from_total",
            Rule::FrTotalFromFaces => "fr_total_from_faces",
            Rule::FrParallelMap => "fr_parallel_map",
            Rule::ComposeConnectivity => "compose_connectivity",
            Rule::ObjectToMapConnectivity => "object_to_map_connectivity",
            Rule::FiberTransfer => "fiber_transfer",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One term of a minimum.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Term {
    /// `offset + Σ c(s)` over the blocks of an integer partition; `blocks`
    /// are the block sizes and `summands` the per-block degrees.
    Partition {
        blocks: Vec<u32>,
        offset: i64,
        summands: Vec<Degree>,
    },
    /// A named quantity, e.g. the target face of a face transfer.
    Labeled { label: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Candidate {
    pub term: Term,
    pub value: Degree,
}

impl Candidate {
    pub fn labeled(label: impl Into<String>, value: Degree) -> Self {
        Candidate {
            term: Term::Labeled {
                label: label.into(),
            },
            value,
        }
    }

    /// Block sizes, empty for labeled terms.
    pub fn blocks(&self) -> &[u32] {
        match &self.term {
            Term::Partition { blocks, .. } => blocks,
            Term::Labeled { .. } => &[],
        }
    }
}

/// Renders `k{1,2}+k{3} = -2+inf+2`; see [`RuleOutcome::lines`] for the
/// form with the dimension prefix.
impl fmt::Display for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.term {
            Term::Labeled { label } => write!(f, "{label} = {}", self.value),
            Term::Partition {
                blocks,
                offset,
                summands,
            } => {
                for (j, block) in consecutive_blocks(blocks).into_iter().enumerate() {
                    if j > 0 {
                        f.write_str("+")?;
                    }
                    f.write_str("k{")?;
                    for (i, e) in block.iter().enumerate() {
                        if i > 0 {
                            f.write_str(",")?;
                        }
                        write!(f, "{e}")?;
                    }
                    f.write_str("}")?;
                }
                write!(f, " = {offset}")?;
                for s in summands {
                    match s {
                        Degree::Finite(v) if *v < 0 => write!(f, "{v}")?,
                        _ => write!(f, "+{s}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

/// A single rule application: the candidates considered and the chosen
/// minimum.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RuleOutcome {
    pub rule: Rule,
    pub dim: u32,
    pub candidates: Vec<Candidate>,
    pub result: Degree,
}

impl RuleOutcome {
    /// Result is the minimum of the candidate values.
    pub fn from_candidates(
        rule: Rule,
        dim: u32,
        candidates: Vec<Candidate>,
    ) -> Result<Self, EstimateError> {
        let values: Vec<Degree> = candidates.iter().map(|c| c.value).collect();
        let result = deg_min(&values)?;
        Ok(RuleOutcome {
            rule,
            dim,
            candidates,
            result,
        })
    }

    /// One display line per candidate, with the dimension prefix the
    /// partition rules are usually written with: `1-3+k{1,2}+k{3} = -2+4+2`
    /// for Blakers-Massey, `3-1+k{1,2,3} = 2+3` for its dual.
    pub fn lines(&self) -> Vec<String> {
        let d = i64::from(self.dim);
        self.candidates
            .iter()
            .map(|c| match (&c.term, self.rule) {
                (Term::Partition { offset, .. }, Rule::HbmCartesian) => {
                    format!("{}-{}+{}", offset + d, d, c)
                }
                (Term::Partition { offset, .. }, Rule::DualHbmCocartesian) => {
                    format!("{}-{}+{}", d, d - offset, c)
                }
                _ => format!("{c}"),
            })
            .collect()
    }

    fn single(rule: Rule, dim: u32, label: impl Into<String>, value: Degree) -> Self {
        RuleOutcome {
            rule,
            dim,
            candidates: alloc::vec![Candidate::labeled(label, value)],
            result: value,
        }
    }
}

/// The additive constants of the partition rules and the stable shift.
///
/// [`Rules::STANDARD`] is the calculus; other values exist so that a
/// deliberately broken rule set can be injected to exercise failure paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rules {
    /// Blakers-Massey: `hbm_offset - d + Σ`.
    pub hbm_offset: i64,
    /// Dual Blakers-Massey: `d + dual_offset + Σ`.
    pub dual_offset: i64,
    /// Stable cubes: `cart = cocart - d + stable_offset`.
    pub stable_offset: i64,
}

impl Default for Rules {
    fn default() -> Self {
        Rules::STANDARD
    }
}

impl Rules {
    pub const STANDARD: Rules = Rules {
        hbm_offset: 1,
        dual_offset: -1,
        stable_offset: 1,
    };

    /// Cartesian-ness of a `d`-cube from its 1-face connectivity and the
    /// cocartesian degrees of its faces:
    /// `min over partitions P of d of (1 - d + Σ_{s∈P} c(s))`,
    /// `c(1) = conn1`, `c(s) = cocart[s]`.
    pub fn hbm_cartesian(
        &self,
        d: u32,
        conn1: Degree,
        cocart: &[Degree],
    ) -> Result<RuleOutcome, EstimateError> {
        let offset = self.hbm_offset - i64::from(d);
        partition_minimum(Rule::HbmCartesian, d, offset, conn1, cocart)
    }

    /// Cocartesian-ness from cartesian face data:
    /// `min over P of (d - 1 + Σ c(s))`.
    pub fn dual_hbm_cocartesian(
        &self,
        d: u32,
        conn1: Degree,
        cart: &[Degree],
    ) -> Result<RuleOutcome, EstimateError> {
        let offset = i64::from(d) + self.dual_offset;
        partition_minimum(Rule::DualHbmCocartesian, d, offset, conn1, cart)
    }

    /// A `k`-cocartesian `d`-cube of spectra is `(k - d + 1)`-cartesian.
    pub fn stable_cart_from_cocart(&self, d: u32, k: Degree) -> Result<RuleOutcome, EstimateError> {
        if d < 1 {
            return Err(EstimateError::DimensionTooSmall { dim: d, min: 1 });
        }
        let v = k.shift(self.stable_offset - i64::from(d))?;
        Ok(RuleOutcome::single(
            Rule::StableCartFromCocart,
            d,
            format!("cocart{d}-{d}+{}", self.stable_offset),
            v,
        ))
    }

    /// Inverse of [`Rules::stable_cart_from_cocart`] at fixed `d`.
    pub fn stable_cocart_from_cart(&self, d: u32, k: Degree) -> Result<RuleOutcome, EstimateError> {
        if d < 1 {
            return Err(EstimateError::DimensionTooSmall { dim: d, min: 1 });
        }
        let v = k.shift(i64::from(d) - self.stable_offset)?;
        Ok(RuleOutcome::single(
            Rule::StableCocartFromCart,
            d,
            format!("cart{d}+{d}-{}", self.stable_offset),
            v,
        ))
    }
}

fn partition_minimum(
    rule: Rule,
    d: u32,
    offset: i64,
    conn1: Degree,
    faces: &[Degree],
) -> Result<RuleOutcome, EstimateError> {
    if d < 2 {
        return Err(EstimateError::DimensionTooSmall { dim: d, min: 2 });
    }
    let want = (d - 1) as usize;
    if faces.len() < want {
        return Err(EstimateError::MissingDegree(faces.len() as u32 + 2));
    }
    if faces.len() > want {
        return Err(EstimateError::ExtraDegree(d + 1));
    }
    let c = |s: u32| {
        if s == 1 {
            conn1
        } else {
            faces[(s - 2) as usize]
        }
    };
    let candidates = integer_partitions(d)?
        .into_iter()
        .map(|blocks| {
            let summands: Vec<Degree> = blocks.iter().map(|&s| c(s)).collect();
            let value = Degree::Finite(offset).checked_add(deg_sum(summands.iter().copied())?)?;
            Ok(Candidate {
                term: Term::Partition {
                    blocks,
                    offset,
                    summands,
                },
                value,
            })
        })
        .collect::<Result<Vec<_>, EstimateError>>()?;
    RuleOutcome::from_candidates(rule, d, candidates)
}

/// [`Rules::hbm_cartesian`] with the standard constants.
pub fn hbm_cartesian(
    d: u32,
    conn1: Degree,
    cocart: &[Degree],
) -> Result<RuleOutcome, EstimateError> {
    Rules::STANDARD.hbm_cartesian(d, conn1, cocart)
}

/// [`Rules::dual_hbm_cocartesian`] with the standard constants.
pub fn dual_hbm_cocartesian(
    d: u32,
    conn1: Degree,
    cart: &[Degree],
) -> Result<RuleOutcome, EstimateError> {
    Rules::STANDARD.dual_hbm_cocartesian(d, conn1, cart)
}

pub fn stable_cart_from_cocart(d: u32, k: Degree) -> Result<Degree, EstimateError> {
    Ok(Rules::STANDARD.stable_cart_from_cocart(d, k)?.result)
}

pub fn stable_cocart_from_cart(d: u32, k: Degree) -> Result<Degree, EstimateError> {
    Ok(Rules::STANDARD.stable_cocart_from_cart(d, k)?.result)
}

// Face-transfer rules. Each is a one- or two-term minimum; the traced forms
// return a `RuleOutcome`, the plain forms just the degree.

/// A square whose two parallel legs are `m`-connected is `(m - 1)`-cartesian.
pub fn fr_square_from_legs_traced(m: Degree) -> Result<RuleOutcome, EstimateError> {
    Ok(RuleOutcome::single(
        Rule::FrSquareFromLegs,
        2,
        "legs-1",
        m.lower(1)?,
    ))
}

pub fn fr_square_from_legs(m: Degree) -> Result<Degree, EstimateError> {
    Ok(fr_square_from_legs_traced(m)?.result)
}

/// Viewing a cube as a map from a source face to a target face: a lower
/// bound for the source face is `min(total, target_face)`.
pub fn fr_source_from_total_traced(
    dim: u32,
    total: Degree,
    target_face: Degree,
) -> Result<RuleOutcome, EstimateError> {
    RuleOutcome::from_candidates(
        Rule::FrSourceFromTotal,
        dim,
        alloc::vec![
            Candidate::labeled("total", total),
            Candidate::labeled("target_face", target_face),
        ],
    )
}

pub fn fr_source_from_total(total: Degree, target_face: Degree) -> Degree {
    total.min(target_face)
}

/// The whole cube from its source and target faces:
/// `min(source_face, target_face - 1)`.
pub fn fr_total_from_faces_traced(
    dim: u32,
    source_face: Degree,
    target_face: Degree,
) -> Result<RuleOutcome, EstimateError> {
    RuleOutcome::from_candidates(
        Rule::FrTotalFromFaces,
        dim,
        alloc::vec![
            Candidate::labeled("source_face", source_face),
            Candidate::labeled("target_face-1", target_face.lower(1)?),
        ],
    )
}

pub fn fr_total_from_faces(
    source_face: Degree,
    target_face: Degree,
) -> Result<Degree, EstimateError> {
    Ok(source_face.min(target_face.lower(1)?))
}

/// In a `square_cart`-cartesian square, the map parallel to an
/// `other_map_conn`-connected one is `min(square_cart, other_map_conn)`
/// connected.
pub fn fr_parallel_map_traced(
    square_cart: Degree,
    other_map_conn: Degree,
) -> Result<RuleOutcome, EstimateError> {
    RuleOutcome::from_candidates(
        Rule::FrParallelMap,
        2,
        alloc::vec![
            Candidate::labeled("square", square_cart),
            Candidate::labeled("parallel_map", other_map_conn),
        ],
    )
}

pub fn fr_parallel_map(square_cart: Degree, other_map_conn: Degree) -> Degree {
    square_cart.min(other_map_conn)
}

/// A composite of maps is at least as connected as its least connected
/// factor.
pub fn compose_connectivity_traced(conns: &[Degree]) -> Result<RuleOutcome, EstimateError> {
    let candidates = conns
        .iter()
        .enumerate()
        .map(|(i, &c)| Candidate::labeled(format!("stage{i}"), c))
        .collect();
    RuleOutcome::from_candidates(Rule::ComposeConnectivity, 1, candidates)
}

pub fn compose_connectivity(conns: &[Degree]) -> Result<Degree, EstimateError> {
    deg_min(conns)
}

/// `X` is `k`-connected rel. `Z`, so the collapse `X → *_Z` is
/// `(k + 1)`-connected.
pub fn object_to_map_connectivity_traced(k: Degree) -> Result<RuleOutcome, EstimateError> {
    Ok(RuleOutcome::single(
        Rule::ObjectToMapConnectivity,
        1,
        "k+1",
        k.raise(1)?,
    ))
}

pub fn object_to_map_connectivity(k: Degree) -> Result<Degree, EstimateError> {
    k.raise(1)
}

/// Coface cubes of a fiber from those of the total space and base.
///
/// Only the `((id + 1) + 1)`-cartesian input shape is supported
/// (`conn1 = 3`, `cart_d = d + 2`, equal for total and base); the result is
/// the `(id + 1)`-cartesian profile of the same dimension.
pub fn fiber_transfer(total: &Profile, base: &Profile) -> Result<Profile, EstimateError> {
    if total.dim() != base.dim() {
        return Err(EstimateError::DimensionMismatch(total.dim(), base.dim()));
    }
    for (which, p) in [("total", total), ("base", base)] {
        p.require(Mode::Cartesian)?;
        let shaped = p.conn1() == Degree::Finite(3)
            && (2..=p.dim()).all(|d| p.degree(d) == Some(Degree::Finite(i64::from(d) + 2)));
        if !shaped {
            return Err(EstimateError::UnsupportedShape(format!(
                "{which} profile {p} is not ((id+1)+1)-cartesian"
            )));
        }
    }
    let lowered = total
        .degrees()
        .iter()
        .map(|d| d.lower(1))
        .collect::<Result<Vec<_>, _>>()?;
    Profile::new(
        total.dim(),
        total.conn1().lower(1)?,
        Mode::Cartesian,
        lowered,
    )
}
