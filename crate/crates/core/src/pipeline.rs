//! Functor transforms on profiles and the iterated `Ω̃ʳΣ̃ʳ` step.
//!
//! One step takes a cartesian profile, dualizes it, suspends, converts
//! back to cartesian estimates and loops. For `r = ∞` the suspend /
//! cartesianize / loop block is replaced by the stable conversion, since
//! stabilization preserves cocartesian degrees and the zeroth-object functor
//! preserves cartesian ones. For finite `r ≥ 2` the shifts are applied as a
//! single block of `r`; this is recorded in the derivation notes.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::degree::Degree;
use crate::error::EstimateError;
use crate::params::Exponent;
use crate::profile::{Mode, Profile};
use crate::rules::{RuleOutcome, Rules};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Transform {
    Dualize,
    Suspend(u32),
    Cartesianize,
    Loop(u32),
    Stabilize,
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Transform::Dualize => f.write_str("dualize"),
            Transform::Suspend(r) => write!(f, "suspend({r})"),
            Transform::Cartesianize => f.write_str("cartesianize"),
            Transform::Loop(r) => write!(f, "loop({r})"),
            Transform::Stabilize => f.write_str("stabilize"),
        }
    }
}

/// One transform application inside a derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Step {
    /// 1-based index of the `Ω̃Σ̃` iteration this transform belongs to; `0`
    /// for transforms applied outside an iteration (e.g. by a script).
    pub iteration: u32,
    pub transform: Transform,
    pub outcomes: Vec<RuleOutcome>,
    pub profile: Profile,
}

/// A recorded run of transforms starting from `initial`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Derivation {
    pub initial: Profile,
    pub steps: Vec<Step>,
    /// First iteration whose output equals the previous iteration's output
    /// (the initial profile counts as iteration 0).
    pub stabilized_at: Option<u32>,
    pub notes: Vec<String>,
}

impl Derivation {
    pub fn new(initial: Profile) -> Self {
        Derivation {
            initial,
            steps: Vec::new(),
            stabilized_at: None,
            notes: Vec::new(),
        }
    }

    /// The profile after the last step.
    pub fn current(&self) -> &Profile {
        self.steps.last().map_or(&self.initial, |s| &s.profile)
    }

    /// Output profile of each completed iteration, in order.
    pub fn iterates(&self) -> Vec<&Profile> {
        let mut out: Vec<&Profile> = Vec::new();
        for (i, step) in self.steps.iter().enumerate() {
            let last_of_iteration = self
                .steps
                .get(i + 1)
                .is_none_or(|next| next.iteration != step.iteration);
            if step.iteration > 0 && last_of_iteration {
                out.push(&step.profile);
            }
        }
        out
    }

    /// Re-applies every recorded transform and checks that the same rule
    /// outcomes and profiles come out.
    pub fn replay(&self, rules: &Rules) -> Result<(), EstimateError> {
        let mut current = self.initial.clone();
        for (i, step) in self.steps.iter().enumerate() {
            let (profile, outcomes) = rules.apply(&current, step.transform)?;
            if profile != step.profile || outcomes != step.outcomes {
                return Err(EstimateError::CrossCheck(alloc::format!(
                    "replay diverged at step {i} ({})",
                    step.transform
                )));
            }
            current = profile;
        }
        Ok(())
    }
}

/// The connectivity of the comparison map a cube encodes: its full-cube
/// cartesian degree.
pub fn comparison_connectivity(p: &Profile) -> Degree {
    p.full_cube_degree()
}

fn shifted(p: &Profile, by: i64) -> Result<Profile, EstimateError> {
    let degrees = p
        .degrees()
        .iter()
        .map(|d| d.shift(by))
        .collect::<Result<Vec<_>, _>>()?;
    Profile::new(p.dim(), p.conn1().shift(by)?, p.mode(), degrees)
}

/// `Σ̃ʳ`: raises the edge connectivity and every cocartesian degree by `r`.
pub fn suspend(p: &Profile, r: u32) -> Result<Profile, EstimateError> {
    p.require(Mode::Cocartesian)?;
    shifted(p, i64::from(r))
}

/// `Ω̃ʳ`: lowers the edge connectivity and every cartesian degree by `r`.
pub fn loops(p: &Profile, r: u32) -> Result<Profile, EstimateError> {
    p.require(Mode::Cartesian)?;
    shifted(p, -i64::from(r))
}

impl Rules {
    /// Cocartesian estimates for every face dimension by dual
    /// Blakers-Massey.
    pub fn dualize(&self, p: &Profile) -> Result<(Profile, Vec<RuleOutcome>), EstimateError> {
        p.require(Mode::Cartesian)?;
        let outcomes = (2..=p.dim())
            .map(|d| self.dual_hbm_cocartesian(d, p.conn1(), &p.degrees()[..(d - 1) as usize]))
            .collect::<Result<Vec<_>, _>>()?;
        let degrees = outcomes.iter().map(|o| o.result).collect();
        Ok((
            Profile::new(p.dim(), p.conn1(), Mode::Cocartesian, degrees)?,
            outcomes,
        ))
    }

    /// Cartesian estimates for every face dimension by Blakers-Massey.
    pub fn cartesianize(&self, p: &Profile) -> Result<(Profile, Vec<RuleOutcome>), EstimateError> {
        p.require(Mode::Cocartesian)?;
        let outcomes = (2..=p.dim())
            .map(|d| self.hbm_cartesian(d, p.conn1(), &p.degrees()[..(d - 1) as usize]))
            .collect::<Result<Vec<_>, _>>()?;
        let degrees = outcomes.iter().map(|o| o.result).collect();
        Ok((
            Profile::new(p.dim(), p.conn1(), Mode::Cartesian, degrees)?,
            outcomes,
        ))
    }

    /// Round trip through spectra: cocartesian degrees converted by the
    /// stable shift, edges unchanged.
    pub fn stabilize_spectra(
        &self,
        p: &Profile,
    ) -> Result<(Profile, Vec<RuleOutcome>), EstimateError> {
        p.require(Mode::Cocartesian)?;
        let outcomes = (2..=p.dim())
            .map(|d| self.stable_cart_from_cocart(d, p.degree(d).expect("d <= dim")))
            .collect::<Result<Vec<_>, _>>()?;
        let degrees = outcomes.iter().map(|o| o.result).collect();
        Ok((
            Profile::new(p.dim(), p.conn1(), Mode::Cartesian, degrees)?,
            outcomes,
        ))
    }

    pub fn apply(
        &self,
        p: &Profile,
        t: Transform,
    ) -> Result<(Profile, Vec<RuleOutcome>), EstimateError> {
        match t {
            Transform::Dualize => self.dualize(p),
            Transform::Cartesianize => self.cartesianize(p),
            Transform::Stabilize => self.stabilize_spectra(p),
            Transform::Suspend(r) => Ok((suspend(p, r)?, Vec::new())),
            Transform::Loop(r) => Ok((loops(p, r)?, Vec::new())),
        }
    }

    /// One application of `Ω̃ʳΣ̃ʳ`. `first_step` marks the initial
    /// cocartesian cube, which skips dualization.
    pub fn omega_sigma_step(
        &self,
        p: &Profile,
        r: Exponent,
        first_step: bool,
        iteration: u32,
    ) -> Result<(Profile, Vec<Step>), EstimateError> {
        let mut plan = Vec::with_capacity(4);
        if !first_step {
            plan.push(Transform::Dualize);
        }
        match r {
            Exponent::Finite(0) => return Err(EstimateError::ZeroExponent),
            Exponent::Finite(r) => plan.extend([
                Transform::Suspend(r),
                Transform::Cartesianize,
                Transform::Loop(r),
            ]),
            Exponent::Stable => plan.push(Transform::Stabilize),
        }
        let mut current = p.clone();
        let mut steps = Vec::with_capacity(plan.len());
        for transform in plan {
            let (next, outcomes) = self.apply(&current, transform)?;
            steps.push(Step {
                iteration,
                transform,
                outcomes,
                profile: next.clone(),
            });
            current = next;
        }
        Ok((current, steps))
    }

    /// Applies `Ω̃ʳΣ̃ʳ` until two consecutive outputs agree or `max_iters`
    /// steps have run. A cocartesian starting profile is treated as the
    /// initial cube of the resolution.
    pub fn iterate(
        &self,
        p: &Profile,
        r: Exponent,
        max_iters: u32,
    ) -> Result<Derivation, EstimateError> {
        if max_iters == 0 {
            return Err(EstimateError::ZeroIterations);
        }
        let mut derivation = Derivation::new(p.clone());
        if let Exponent::Finite(r) = r {
            if r >= 2 {
                derivation.notes.push(alloc::format!(
                    "r = {r}: suspension and loops applied as one block of {r}, \
                     Blakers-Massey once per step"
                ));
            }
        }
        let mut previous = p.clone();
        for i in 1..=max_iters {
            let first = i == 1 && p.mode() == Mode::Cocartesian;
            let (next, steps) = self.omega_sigma_step(&previous, r, first, i)?;
            derivation.steps.extend(steps);
            if next == previous {
                derivation.stabilized_at = Some(i);
                break;
            }
            previous = next;
        }
        Ok(derivation)
    }
}

pub fn dualize(p: &Profile) -> Result<Profile, EstimateError> {
    Ok(Rules::STANDARD.dualize(p)?.0)
}

pub fn cartesianize(p: &Profile) -> Result<Profile, EstimateError> {
    Ok(Rules::STANDARD.cartesianize(p)?.0)
}

pub fn stabilize_spectra(p: &Profile) -> Result<Profile, EstimateError> {
    Ok(Rules::STANDARD.stabilize_spectra(p)?.0)
}

pub fn omega_sigma_step(
    p: &Profile,
    r: Exponent,
    first_step: bool,
) -> Result<(Profile, Vec<Step>), EstimateError> {
    Rules::STANDARD.omega_sigma_step(p, r, first_step, 1)
}

pub fn iterate(p: &Profile, r: Exponent, max_iters: u32) -> Result<Derivation, EstimateError> {
    Rules::STANDARD.iterate(p, r, max_iters)
}
