//! A small language for writing derivations by hand.
//!
//! ```text
//! # the square (1; inf) under one step
//! profile p dim=2 { conn1=1, cocart 2=inf };
//! apply step r=1;
//! assert cart 2 >= 2;
//! ```
//!
//! Statements act on the most recently declared profile. `step` defaults
//! to `r=1` and treats a cocartesian profile as the initial cube.

mod ast;
mod exec;
mod lexer;
mod parser;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use ast::{ApplyOp, Assertion, Cmp, Entry, ProfileDecl, Script, Stmt, Target};
pub use exec::{execute, AssertionOutcome, ExecError, Execution, ProfileRun};
pub use parser::parse;

/// Lexemes of `src` with their start positions, excluding comments and
/// whitespace. Useful for editors and for pointing at a token by index.
pub fn tokens(src: &str) -> Result<Vec<(Pos, String)>, ScriptError> {
    Ok(lexer::tokenize(src)?
        .into_iter()
        .filter(|t| t.tok != lexer::Tok::Eof)
        .map(|t| (t.pos, t.tok.lexeme()))
        .collect())
}

/// 1-based line and column (in characters).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pos {
    pub line: u32,
    pub col: u32,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Lexical,
    Syntax,
    Undeclared,
    Duplicate,
    InvalidProfile,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScriptError {
    pub kind: ErrorKind,
    pub pos: Pos,
    pub message: String,
    /// Tokens that would have been accepted; filled for syntax errors.
    pub expected: Vec<String>,
}

impl fmt::Display for ScriptError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ErrorKind::Lexical => "lexical error",
            ErrorKind::Syntax => "syntax error",
            ErrorKind::Undeclared => "undeclared profile",
            ErrorKind::Duplicate => "duplicate declaration",
            ErrorKind::InvalidProfile => "invalid profile",
        };
        write!(f, "{}: {kind}: {}", self.pos, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl core::error::Error for ScriptError {}
