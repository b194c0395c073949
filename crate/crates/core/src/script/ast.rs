use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::degree::Degree;
use crate::params::Exponent;
use crate::profile::Mode;

/// A parsed derivation script.
///
/// Optional arguments are kept as written (`suspend` vs `suspend 1`) so
/// that printing and re-parsing gives back the same tree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Script {
    pub statements: Vec<Stmt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Profile(ProfileDecl),
    Apply(ApplyOp),
    Assert(Assertion),
    Repeat { count: u32, body: Vec<Stmt> },
    Print,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileDecl {
    pub name: String,
    pub dim: u32,
    pub conn1: Degree,
    /// Face entries in source order.
    pub entries: Vec<Entry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Entry {
    pub mode: Mode,
    pub index: u32,
    pub value: Degree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ApplyOp {
    Dualize,
    Hbm,
    Stable,
    Suspend(Option<u32>),
    Loop(Option<u32>),
    Step(Option<Exponent>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Conn1,
    Face(Mode, u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Ge,
    Eq,
    Le,
}

impl Cmp {
    pub fn holds(self, actual: Degree, bound: Degree) -> bool {
        match self {
            Cmp::Ge => actual >= bound,
            Cmp::Eq => actual == bound,
            Cmp::Le => actual <= bound,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Cmp::Ge => ">=",
            Cmp::Eq => "=",
            Cmp::Le => "<=",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Assertion {
    pub target: Target,
    pub cmp: Cmp,
    pub value: Degree,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Conn1 => f.write_str("conn1"),
            Target::Face(mode, d) => write!(f, "{} {d}", mode.keyword()),
        }
    }
}

impl fmt::Display for ApplyOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ApplyOp::Dualize => f.write_str("dualize"),
            ApplyOp::Hbm => f.write_str("hbm"),
            ApplyOp::Stable => f.write_str("stable"),
            ApplyOp::Suspend(None) => f.write_str("suspend"),
            ApplyOp::Suspend(Some(r)) => write!(f, "suspend {r}"),
            ApplyOp::Loop(None) => f.write_str("loop"),
            ApplyOp::Loop(Some(r)) => write!(f, "loop {r}"),
            ApplyOp::Step(None) => f.write_str("step"),
            ApplyOp::Step(Some(r)) => write!(f, "step r={r}"),
        }
    }
}

impl fmt::Display for Assertion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "assert {} {} {}",
            self.target,
            self.cmp.symbol(),
            self.value
        )
    }
}

impl fmt::Display for ProfileDecl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "profile {} dim={} {{ conn1={}",
            self.name, self.dim, self.conn1
        )?;
        for e in &self.entries {
            write!(f, ", {} {}={}", e.mode.keyword(), e.index, e.value)?;
        }
        f.write_str(" }")
    }
}

fn write_block(f: &mut fmt::Formatter<'_>, stmts: &[Stmt], depth: usize) -> fmt::Result {
    for s in stmts {
        for _ in 0..depth {
            f.write_str("  ")?;
        }
        match s {
            Stmt::Profile(p) => write!(f, "{p}")?,
            Stmt::Apply(op) => write!(f, "apply {op}")?,
            Stmt::Assert(a) => write!(f, "{a}")?,
            Stmt::Print => f.write_str("print")?,
            Stmt::Repeat { count, body } => {
                writeln!(f, "repeat {count} {{")?;
                write_block(f, body, depth + 1)?;
                for _ in 0..depth {
                    f.write_str("  ")?;
                }
                f.write_str("}")?;
            }
        }
        f.write_str(";\n")?;
    }
    Ok(())
}

/// Canonical form: one statement per line, two-space indent inside
/// `repeat`. The empty script prints as the empty string.
impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_block(f, &self.statements, 0)
    }
}

impl Stmt {
    /// Single-line rendering, used to label assertion results.
    pub fn summary(&self) -> String {
        use alloc::format;
        match self {
            Stmt::Profile(p) => format!("{p}"),
            Stmt::Apply(op) => format!("apply {op}"),
            Stmt::Assert(a) => format!("{a}"),
            Stmt::Print => "print".into(),
            Stmt::Repeat { count, .. } => format!("repeat {count} {{ ... }}"),
        }
    }
}
