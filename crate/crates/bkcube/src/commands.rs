//! Subcommand bodies. Each returns the process exit status and writes
//! only through the given streams, so tests can drive them in-process.

use std::collections::BTreeMap;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use bkcube_core::script::{self, ExecError, ScriptError};
use bkcube_core::theorems::Engine;
use bkcube_core::{Degree, EstimateError, Exponent, Mode, Profile};

use crate::trace::TraceDocument;
use crate::{battery, markdown};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Default for `BKCUBE_MAX_ITERS`.
pub const DEFAULT_MAX_ITERS: u32 = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Md,
    Json,
}

/// Output streams for a command.
pub struct Streams<'a> {
    pub out: &'a mut dyn Write,
    pub err: &'a mut dyn Write,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{}:{source}", path.display())]
    Parse { path: PathBuf, source: ScriptError },
    #[error(transparent)]
    Exec(#[from] ExecError),
    #[error(transparent)]
    Estimate(#[from] EstimateError),
    #[error("{0}")]
    Usage(String),
}

fn finish(result: Result<i32, CliError>, io: &mut Streams<'_>) -> i32 {
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn stdout_error(e: io::Error) -> CliError {
    CliError::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    }
}

/// Reads `BKCUBE_MAX_ITERS`; unset means [`DEFAULT_MAX_ITERS`].
pub fn max_iters_from(value: Option<&str>) -> Result<u32, CliError> {
    match value {
        None => Ok(DEFAULT_MAX_ITERS),
        Some(v) => match v.trim().parse::<u32>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(CliError::Usage(format!(
                "BKCUBE_MAX_ITERS must be a positive integer, got `{v}`"
            ))),
        },
    }
}

pub fn verify_paper(
    engine: &Engine,
    format: Format,
    out_path: Option<&Path>,
    io: &mut Streams<'_>,
) -> i32 {
    let result = (|| {
        let reports = battery::battery(engine)?;
        let text = match format {
            Format::Md => markdown::reports(&reports),
            Format::Json => TraceDocument::from_reports(&reports).to_json(),
        };
        match out_path {
            Some(path) => std::fs::write(path, &text).map_err(|source| CliError::Io {
                path: path.to_path_buf(),
                source,
            })?,
            None => io.out.write_all(text.as_bytes()).map_err(stdout_error)?,
        }
        let failed: Vec<_> = reports.iter().filter(|r| !r.pass()).collect();
        for r in &failed {
            let _ = writeln!(io.err, "verdict failed: {}", r.verdict.claim_id);
        }
        Ok(if failed.is_empty() {
            EXIT_PASS
        } else {
            EXIT_FAIL
        })
    })();
    finish(result, io)
}

/// Runs a script. Assertion results go to stdout, or to stderr when a
/// trace is requested (the trace then owns stdout).
pub fn run(engine: &Engine, path: &Path, trace: Option<Format>, io: &mut Streams<'_>) -> i32 {
    let result = (|| {
        let src = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let parsed = script::parse(&src).map_err(|source| CliError::Parse {
            path: path.to_path_buf(),
            source,
        })?;
        let ex = script::execute(&parsed, &engine.rules, engine.max_iters)?;
        let log: &mut dyn Write = if trace.is_some() {
            &mut *io.err
        } else {
            &mut *io.out
        };
        for line in &ex.output {
            writeln!(log, "{line}").map_err(stdout_error)?;
        }
        for a in &ex.assertions {
            let status = if a.holds { "ok" } else { "FAILED" };
            writeln!(
                log,
                "{status}: {} [{} has {}]",
                a.statement, a.profile, a.actual
            )
            .map_err(stdout_error)?;
        }
        let failed = ex.assertions.iter().filter(|a| !a.holds).count();
        writeln!(log, "{} assertions, {failed} failed", ex.assertions.len())
            .map_err(stdout_error)?;
        match trace {
            Some(Format::Md) => io.out.write_all(markdown::execution(&ex).as_bytes()),
            Some(Format::Json) => {
                let mut doc = TraceDocument::new();
                for r in &ex.runs {
                    doc.push_derivation(&r.derivation);
                }
                io.out.write_all(doc.to_json().as_bytes())
            }
            None => Ok(()),
        }
        .map_err(stdout_error)?;
        Ok(if ex.pass() { EXIT_PASS } else { EXIT_FAIL })
    })();
    finish(result, io)
}

#[derive(Clone, Debug, clap::Args)]
pub struct StepArgs {
    /// Cube dimension.
    #[arg(long)]
    pub dim: u32,
    /// Connectivity of the edges (an integer or `inf`).
    #[arg(long, allow_hyphen_values = true)]
    pub conn1: String,
    /// Cocartesian face degrees, e.g. `2=inf,3=inf`.
    #[arg(long, conflicts_with = "cart", allow_hyphen_values = true)]
    pub cocart: Option<String>,
    /// Cartesian face degrees, e.g. `2=3,3=4`.
    #[arg(long, allow_hyphen_values = true)]
    pub cart: Option<String>,
    /// Suspension exponent (a positive integer or `inf`).
    #[arg(long, default_value = "1")]
    pub r: String,
    /// Iteration bound; at most BKCUBE_MAX_ITERS.
    #[arg(long)]
    pub iters: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Md)]
    pub format: Format,
}

fn face_map(list: &str) -> Result<BTreeMap<u32, Degree>, CliError> {
    let bad = |what: &str| CliError::Usage(format!("bad face list `{list}`: {what}"));
    let mut map = BTreeMap::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (d, v) = item
            .split_once('=')
            .ok_or_else(|| bad("expected d=degree"))?;
        let d: u32 = d
            .trim()
            .parse()
            .map_err(|_| bad("face dimension is not an integer"))?;
        let v: Degree = v.parse().map_err(|e: EstimateError| bad(&e.to_string()))?;
        if map.insert(d, v).is_some() {
            return Err(bad("face dimension repeated"));
        }
    }
    Ok(map)
}

impl StepArgs {
    pub fn profile(&self) -> Result<Profile, CliError> {
        let conn1: Degree = self
            .conn1
            .parse()
            .map_err(|e| CliError::Usage(format!("--conn1: {e}")))?;
        let (mode, faces) = match (&self.cart, &self.cocart) {
            (Some(c), None) => (Mode::Cartesian, c.as_str()),
            (None, Some(c)) => (Mode::Cocartesian, c.as_str()),
            (None, None) if self.dim == 1 => (Mode::Cartesian, ""),
            _ => {
                return Err(CliError::Usage(
                    "give exactly one of --cart, --cocart".into(),
                ))
            }
        };
        Ok(Profile::from_map(self.dim, conn1, mode, &face_map(faces)?)?)
    }
}

/// Iterates the step functor from a profile given on the command line.
pub fn step(engine: &Engine, args: &StepArgs, io: &mut Streams<'_>) -> i32 {
    let result = (|| {
        let profile = args.profile()?;
        let r: Exponent = args
            .r
            .parse()
            .map_err(|e| CliError::Usage(format!("--r: {e}")))?;
        let iters = args.iters.unwrap_or(engine.max_iters);
        if iters == 0 {
            return Err(CliError::Usage("--iters must be at least 1".into()));
        }
        if iters > engine.max_iters {
            return Err(CliError::Usage(format!(
                "--iters {iters} exceeds BKCUBE_MAX_ITERS ({})",
                engine.max_iters
            )));
        }
        let derivation = engine.rules.iterate(&profile, r, iters)?;
        let text = match args.format {
            Format::Md => {
                let mut s = String::from("# bkcube step\n\n");
                markdown::derivation(&mut s, &derivation);
                s
            }
            Format::Json => {
                let mut doc = TraceDocument::new();
                doc.push_derivation(&derivation);
                doc.to_json()
            }
        };
        io.out.write_all(text.as_bytes()).map_err(stdout_error)?;
        Ok(EXIT_PASS)
    })();
    finish(result, io)
}
