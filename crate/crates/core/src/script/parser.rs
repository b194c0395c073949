use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::ast::{ApplyOp, Assertion, Cmp, Entry, ProfileDecl, Script, Stmt, Target};
use super::lexer::{tokenize, Tok, Token};
use super::{ErrorKind, Pos, ScriptError};
use crate::degree::Degree;
use crate::params::Exponent;
use crate::profile::{Mode, Profile};

const KEYWORDS: &[&str] = &[
    "profile", "dim", "conn1", "cart", "cocart", "inf", "apply", "dualize", "hbm", "stable",
    "suspend", "loop", "step", "r", "assert", "repeat", "print",
];

const STMT_START: &[&str] = &["`profile`", "`apply`", "`assert`", "`repeat`", "`print`"];

struct Parser {
    toks: Vec<Token>,
    at: usize,
    declared: BTreeMap<String, Pos>,
    // opening brace of the most recently closed `repeat` block
    last_closed: Option<Pos>,
    // opening brace of the first block whose `}` is misaligned with it
    misaligned: Option<Pos>,
}

fn is_word(t: &Tok, w: &str) -> bool {
    matches!(t, Tok::Word(x) if x == w)
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if t.tok != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn syntax<T>(&self, expected: &[&str]) -> Result<T, ScriptError> {
        let t = self.peek();
        Err(ScriptError {
            kind: ErrorKind::Syntax,
            pos: t.pos,
            message: format!("unexpected {}", t.tok),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        })
    }

    fn keyword(&mut self, w: &str) -> Result<Pos, ScriptError> {
        if is_word(&self.peek().tok, w) {
            Ok(self.next().pos)
        } else {
            self.syntax(&[&format!("`{w}`")])
        }
    }

    fn punct(&mut self, want: Tok) -> Result<Pos, ScriptError> {
        if self.peek().tok == want {
            Ok(self.next().pos)
        } else {
            self.syntax(&[&want.to_string()])
        }
    }

    fn int(&mut self) -> Result<(i64, Pos), ScriptError> {
        match self.peek().tok {
            Tok::Int(v) => Ok((v, self.next().pos)),
            _ => self.syntax(&["integer"]),
        }
    }

    /// A count-like integer: `1 ..= u32::MAX`.
    fn positive(&mut self, what: &str) -> Result<u32, ScriptError> {
        let (v, pos) = self.int()?;
        u32::try_from(v)
            .ok()
            .filter(|&v| v >= 1)
            .ok_or_else(|| ScriptError {
                kind: ErrorKind::Syntax,
                pos,
                message: format!("{what} must be a positive integer, got {v}"),
                expected: vec!["positive integer".into()],
            })
    }

    fn index(&mut self) -> Result<u32, ScriptError> {
        self.positive("face dimension")
    }

    fn degree(&mut self) -> Result<Degree, ScriptError> {
        match self.peek().tok {
            Tok::Int(v) => {
                self.next();
                Ok(Degree::Finite(v))
            }
            Tok::Word(ref w) if w == "inf" => {
                self.next();
                Ok(Degree::Infinite)
            }
            _ => self.syntax(&["integer", "`inf`"]),
        }
    }

    fn mode(&mut self) -> Result<Mode, ScriptError> {
        match &self.peek().tok {
            Tok::Word(w) if w == "cart" => {
                self.next();
                Ok(Mode::Cartesian)
            }
            Tok::Word(w) if w == "cocart" => {
                self.next();
                Ok(Mode::Cocartesian)
            }
            _ => self.syntax(&["`cart`", "`cocart`"]),
        }
    }

    /// Statements up to `end`. `open` is the brace that started a nested
    /// block; running out of input inside it is reported there, since the
    /// missing `}` could belong anywhere after it.
    fn block(&mut self, end: &Tok, open: Option<Pos>) -> Result<Vec<Stmt>, ScriptError> {
        let mut out = Vec::new();
        while self.peek().tok != *end {
            if let (Tok::Eof, Some(open)) = (&self.peek().tok, open) {
                return Err(ScriptError {
                    kind: ErrorKind::Syntax,
                    pos: open,
                    message: "`{` is never closed".into(),
                    expected: vec!["`}`".into()],
                });
            }
            out.push(self.stmt(end)?);
            self.punct(Tok::Semi)?;
        }
        Ok(out)
    }

    /// Column of the first token on the line of token `idx`.
    fn indent_at(&self, idx: usize) -> u32 {
        let line = self.toks[idx].pos.line;
        self.toks[..=idx]
            .iter()
            .rev()
            .take_while(|t| t.pos.line == line)
            .last()
            .map_or(1, |t| t.pos.col)
    }

    fn require_declared(&self, pos: Pos, what: &str) -> Result<(), ScriptError> {
        if self.declared.is_empty() {
            Err(ScriptError {
                kind: ErrorKind::Undeclared,
                pos,
                message: format!("`{what}` needs a profile, but none is declared yet"),
                expected: Vec::new(),
            })
        } else {
            Ok(())
        }
    }

    fn stmt(&mut self, end: &Tok) -> Result<Stmt, ScriptError> {
        let word = match &self.peek().tok {
            Tok::Word(w) => w.clone(),
            Tok::RBrace if *end == Tok::Eof => {
                // a stray `}` usually means an earlier block was closed early
                let here = self.peek().pos;
                let (pos, message) = match self.misaligned.or(self.last_closed) {
                    Some(open) => (
                        open,
                        format!("unmatched `}}` at {here}; this block may close too early"),
                    ),
                    None => (here, "unmatched `}`".into()),
                };
                return Err(ScriptError {
                    kind: ErrorKind::Syntax,
                    pos,
                    message,
                    expected: STMT_START.iter().map(|s| s.to_string()).collect(),
                });
            }
            _ => {
                let mut expected = STMT_START.to_vec();
                let closing = end.to_string();
                expected.push(&closing);
                return self.syntax(&expected);
            }
        };
        match word.as_str() {
            "profile" => self.profile().map(Stmt::Profile),
            "apply" => {
                let pos = self.next().pos;
                self.require_declared(pos, "apply")?;
                self.apply().map(Stmt::Apply)
            }
            "assert" => {
                let pos = self.next().pos;
                self.require_declared(pos, "assert")?;
                self.assertion().map(Stmt::Assert)
            }
            "print" => {
                let pos = self.next().pos;
                self.require_declared(pos, "print")?;
                Ok(Stmt::Print)
            }
            "repeat" => {
                let indent = self.indent_at(self.at);
                self.next();
                let count = self.positive("repeat count")?;
                let open = self.punct(Tok::LBrace)?;
                let body = self.block(&Tok::RBrace, Some(open))?;
                let close_at = self.at;
                let close = self.punct(Tok::RBrace)?;
                if self.misaligned.is_none()
                    && self.indent_at(close_at) == close.col
                    && close.col != indent
                {
                    self.misaligned = Some(open);
                }
                self.last_closed = Some(open);
                Ok(Stmt::Repeat { count, body })
            }
            _ => {
                let mut expected = STMT_START.to_vec();
                let closing = end.to_string();
                expected.push(&closing);
                self.syntax(&expected)
            }
        }
    }

    fn profile(&mut self) -> Result<ProfileDecl, ScriptError> {
        self.keyword("profile")?;
        let (name, name_pos) = match &self.peek().tok {
            Tok::Word(w) if !KEYWORDS.contains(&w.as_str()) => {
                let w = w.clone();
                (w, self.next().pos)
            }
            _ => return self.syntax(&["identifier"]),
        };
        if let Some(first) = self.declared.get(&name) {
            return Err(ScriptError {
                kind: ErrorKind::Duplicate,
                pos: name_pos,
                message: format!(
                    "profile `{name}` already declared at {}:{}",
                    first.line, first.col
                ),
                expected: Vec::new(),
            });
        }
        self.keyword("dim")?;
        self.punct(Tok::Eq)?;
        let dim_pos = self.peek().pos;
        let dim = self.positive("dimension")?;
        self.punct(Tok::LBrace)?;
        self.keyword("conn1")?;
        self.punct(Tok::Eq)?;
        let conn1 = self.degree()?;
        let mut entries = Vec::new();
        loop {
            match self.peek().tok {
                Tok::Comma => {
                    self.next();
                    let mode = self.mode()?;
                    let index = self.index()?;
                    self.punct(Tok::Eq)?;
                    let value = self.degree()?;
                    entries.push(Entry { mode, index, value });
                }
                Tok::RBrace => {
                    self.next();
                    break;
                }
                _ => return self.syntax(&["`,`", "`}`"]),
            }
        }
        let decl = ProfileDecl {
            name,
            dim,
            conn1,
            entries,
        };
        decl.to_profile().map_err(|message| ScriptError {
            kind: ErrorKind::InvalidProfile,
            pos: dim_pos,
            message,
            expected: Vec::new(),
        })?;
        self.declared.insert(decl.name.clone(), name_pos);
        Ok(decl)
    }

    fn apply(&mut self) -> Result<ApplyOp, ScriptError> {
        let word = match &self.peek().tok {
            Tok::Word(w) => w.clone(),
            _ => String::new(),
        };
        let op = match word.as_str() {
            "dualize" => ApplyOp::Dualize,
            "hbm" => ApplyOp::Hbm,
            "stable" => ApplyOp::Stable,
            "suspend" | "loop" => {
                self.next();
                let r = match self.peek().tok {
                    Tok::Int(_) => Some(self.positive("shift")?),
                    _ => None,
                };
                return Ok(if word == "suspend" {
                    ApplyOp::Suspend(r)
                } else {
                    ApplyOp::Loop(r)
                });
            }
            "step" => {
                self.next();
                if !is_word(&self.peek().tok, "r") {
                    return Ok(ApplyOp::Step(None));
                }
                self.next();
                self.punct(Tok::Eq)?;
                let r = if is_word(&self.peek().tok, "inf") {
                    self.next();
                    Exponent::Stable
                } else {
                    Exponent::Finite(self.positive("exponent")?)
                };
                return Ok(ApplyOp::Step(Some(r)));
            }
            _ => {
                return self.syntax(&[
                    "`dualize`",
                    "`hbm`",
                    "`stable`",
                    "`suspend`",
                    "`loop`",
                    "`step`",
                ])
            }
        };
        self.next();
        Ok(op)
    }

    fn assertion(&mut self) -> Result<Assertion, ScriptError> {
        let target = if is_word(&self.peek().tok, "conn1") {
            self.next();
            Target::Conn1
        } else if is_word(&self.peek().tok, "cart") || is_word(&self.peek().tok, "cocart") {
            let mode = self.mode()?;
            Target::Face(mode, self.index()?)
        } else {
            return self.syntax(&["`conn1`", "`cart`", "`cocart`"]);
        };
        let cmp = match self.peek().tok {
            Tok::Ge => Cmp::Ge,
            Tok::Eq => Cmp::Eq,
            Tok::Le => Cmp::Le,
            _ => return self.syntax(&["`>=`", "`=`", "`<=`"]),
        };
        self.next();
        let value = self.degree()?;
        Ok(Assertion { target, cmp, value })
    }
}

impl ProfileDecl {
    /// The declared profile. A 1-cube has no face entries and is taken as
    /// cartesian.
    pub fn to_profile(&self) -> Result<Profile, String> {
        let mode = self.entries.first().map_or(Mode::Cartesian, |e| e.mode);
        let mut map = BTreeMap::new();
        for e in &self.entries {
            if e.mode != mode {
                return Err(format!(
                    "faces mix `{}` and `{}` entries",
                    mode.keyword(),
                    e.mode.keyword()
                ));
            }
            if map.insert(e.index, e.value).is_some() {
                return Err(format!("face dimension {} given twice", e.index));
            }
        }
        Profile::from_map(self.dim, self.conn1, mode, &map).map_err(|e| e.to_string())
    }
}

/// Parses a script. Stops at the first error.
pub fn parse(src: &str) -> Result<Script, ScriptError> {
    let mut p = Parser {
        toks: tokenize(src)?,
        at: 0,
        declared: BTreeMap::new(),
        last_closed: None,
        misaligned: None,
    };
    let statements = p.block(&Tok::Eof, None)?;
    Ok(Script { statements })
}
