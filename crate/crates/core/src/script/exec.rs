use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::ast::{ApplyOp, Assertion, Script, Stmt, Target};
use crate::degree::Degree;
use crate::error::EstimateError;
use crate::params::Exponent;
use crate::pipeline::{Derivation, Step, Transform};
use crate::profile::Mode;
use crate::rules::Rules;

/// Runtime failure: the script parsed but a statement could not be
/// carried out (wrong mode, overflow, a bound exceeded).
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("in `{statement}`: {source}")]
pub struct ExecError {
    pub statement: String,
    pub source: EstimateError,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssertionOutcome {
    pub statement: String,
    pub profile: String,
    pub actual: Degree,
    pub holds: bool,
}

/// The derivation recorded for one declared profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileRun {
    pub name: String,
    pub derivation: Derivation,
    steps_taken: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Execution {
    pub runs: Vec<ProfileRun>,
    pub assertions: Vec<AssertionOutcome>,
    /// Lines produced by `print`.
    pub output: Vec<String>,
}

impl Execution {
    pub fn pass(&self) -> bool {
        self.assertions.iter().all(|a| a.holds)
    }
}

struct Exec<'a> {
    rules: &'a Rules,
    max_iters: u32,
    state: Execution,
}

fn fail(stmt: &Stmt, source: EstimateError) -> ExecError {
    ExecError {
        statement: stmt.summary(),
        source,
    }
}

impl Exec<'_> {
    fn current(&mut self) -> Result<&mut ProfileRun, EstimateError> {
        self.state
            .runs
            .last_mut()
            .ok_or_else(|| EstimateError::Parameter("no profile declared".into()))
    }

    fn block(&mut self, stmts: &[Stmt]) -> Result<(), ExecError> {
        for stmt in stmts {
            self.stmt(stmt)?;
        }
        Ok(())
    }

    fn stmt(&mut self, stmt: &Stmt) -> Result<(), ExecError> {
        match stmt {
            Stmt::Profile(decl) => {
                if self.state.runs.iter().any(|r| r.name == decl.name) {
                    return Err(fail(
                        stmt,
                        EstimateError::Parameter(format!("`{}` declared twice", decl.name)),
                    ));
                }
                let profile = decl
                    .to_profile()
                    .map_err(|m| fail(stmt, EstimateError::UnsupportedShape(m)))?;
                self.state.runs.push(ProfileRun {
                    name: decl.name.clone(),
                    derivation: Derivation::new(profile),
                    steps_taken: 0,
                });
            }
            Stmt::Apply(op) => self.apply(*op).map_err(|e| fail(stmt, e))?,
            Stmt::Assert(a) => self.assertion(stmt, a).map_err(|e| fail(stmt, e))?,
            Stmt::Print => {
                let run = self.current().map_err(|e| fail(stmt, e))?;
                let line = format!("{}: {}", run.name, run.derivation.current());
                self.state.output.push(line);
            }
            Stmt::Repeat { count, body } => {
                if *count > self.max_iters {
                    return Err(fail(
                        stmt,
                        EstimateError::Parameter(format!(
                            "repeat count {count} exceeds the iteration bound {}",
                            self.max_iters
                        )),
                    ));
                }
                for _ in 0..*count {
                    self.block(body)?;
                }
            }
        }
        Ok(())
    }

    fn apply(&mut self, op: ApplyOp) -> Result<(), EstimateError> {
        let rules = self.rules;
        let run = self.current()?;
        let from = run.derivation.current().clone();
        let single = match op {
            ApplyOp::Dualize => Transform::Dualize,
            ApplyOp::Hbm => Transform::Cartesianize,
            ApplyOp::Stable => Transform::Stabilize,
            ApplyOp::Suspend(r) => Transform::Suspend(r.unwrap_or(1)),
            ApplyOp::Loop(r) => Transform::Loop(r.unwrap_or(1)),
            ApplyOp::Step(r) => {
                let r = r.unwrap_or(Exponent::ONE);
                let iteration = run.steps_taken + 1;
                let first = from.mode() == Mode::Cocartesian;
                let (next, steps) = rules.omega_sigma_step(&from, r, first, iteration)?;
                run.steps_taken = iteration;
                run.derivation.steps.extend(steps);
                if next == from && run.derivation.stabilized_at.is_none() {
                    run.derivation.stabilized_at = Some(iteration);
                }
                return Ok(());
            }
        };
        let (profile, outcomes) = rules.apply(&from, single)?;
        run.derivation.steps.push(Step {
            iteration: 0,
            transform: single,
            outcomes,
            profile,
        });
        Ok(())
    }

    fn assertion(&mut self, stmt: &Stmt, a: &Assertion) -> Result<(), EstimateError> {
        let run = self.current()?;
        let p = run.derivation.current();
        let actual = match a.target {
            Target::Conn1 => p.conn1(),
            Target::Face(mode, d) => {
                if d >= 2 && !p.accepts(mode) {
                    return Err(EstimateError::WrongMode {
                        expected: mode,
                        found: p.mode(),
                    });
                }
                p.degree(d).ok_or(EstimateError::DimensionTooSmall {
                    dim: p.dim(),
                    min: d,
                })?
            }
        };
        let outcome = AssertionOutcome {
            statement: stmt.summary(),
            profile: run.name.to_string(),
            actual,
            holds: a.cmp.holds(actual, a.value),
        };
        self.state.assertions.push(outcome);
        Ok(())
    }
}

/// Runs a script. Failed assertions are collected, not raised; any other
/// problem aborts with an [`ExecError`]. `repeat` counts above
/// `max_iters` are rejected.
pub fn execute(script: &Script, rules: &Rules, max_iters: u32) -> Result<Execution, ExecError> {
    let mut exec = Exec {
        rules,
        max_iters,
        state: Execution::default(),
    };
    exec.block(&script.statements)?;
    Ok(exec.state)
}
