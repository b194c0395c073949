//! Connectivity-estimate calculus for cubical diagrams.
//!
//! The engine tracks uniform estimates for cubes of retractive spaces
//! (how connected the edges are, how cartesian or cocartesian the faces
//! of each dimension are) and pushes them through suspension, loops,
//! stabilization and the higher Blakers-Massey theorems. On top of that
//! sit verifiers that replay the convergence arguments for Bousfield-Kan
//! completion towers and Taylor towers as checkable degree schedules, and
//! a small script language for writing such derivations by hand.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod degree;
pub mod error;
pub mod params;
pub mod partition;
pub mod pipeline;
pub mod profile;
pub mod rules;
pub mod script;
pub mod theorems;

pub use degree::{deg_add, deg_min, deg_sum, Degree};
pub use error::EstimateError;
pub use params::{Exponent, ParameterSet};
pub use partition::integer_partitions;
pub use pipeline::{Derivation, Step, Transform};
pub use profile::{Mode, Profile};
pub use rules::{Candidate, Rule, RuleOutcome, Rules, Term};
pub use theorems::{
    Check, Condition, Engine, Evidence, EvidenceKind, Param, Relation, Report, Verdict,
};
