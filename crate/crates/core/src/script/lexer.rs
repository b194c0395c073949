use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{ErrorKind, Pos, ScriptError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Word(String),
    Int(i64),
    Semi,
    LBrace,
    RBrace,
    Comma,
    Eq,
    Ge,
    Le,
    Eof,
}

impl Tok {
    /// Source spelling of the token.
    pub(crate) fn lexeme(&self) -> String {
        use alloc::string::ToString;
        match self {
            Tok::Word(w) => w.clone(),
            Tok::Int(i) => i.to_string(),
            Tok::Eof => String::new(),
            other => {
                let quoted = other.to_string();
                quoted.trim_matches('`').into()
            }
        }
    }
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Word(w) => write!(f, "`{w}`"),
            Tok::Int(i) => write!(f, "`{i}`"),
            Tok::Semi => f.write_str("`;`"),
            Tok::LBrace => f.write_str("`{`"),
            Tok::RBrace => f.write_str("`}`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Eq => f.write_str("`=`"),
            Tok::Ge => f.write_str("`>=`"),
            Tok::Le => f.write_str("`<=`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

fn lex_error(pos: Pos, message: impl Into<String>) -> ScriptError {
    ScriptError {
        kind: ErrorKind::Lexical,
        pos,
        message: message.into(),
        expected: Vec::new(),
    }
}

/// Splits `src` into tokens; the last token is always [`Tok::Eof`].
/// Columns count characters, not bytes. `\r` is whitespace, so CRLF input
/// lexes like LF input.
pub(crate) fn tokenize(src: &str) -> Result<Vec<Token>, ScriptError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut col) = (1u32, 1u32);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        let mut bump = |chars: &mut core::iter::Peekable<core::str::Chars<'_>>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                bump(&mut chars);
            }
            '#' => {
                while chars.peek().is_some_and(|&c| c != '\n') {
                    bump(&mut chars);
                }
            }
            ';' | '{' | '}' | ',' | '=' => {
                bump(&mut chars);
                let tok = match c {
                    ';' => Tok::Semi,
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    ',' => Tok::Comma,
                    _ => Tok::Eq,
                };
                out.push(Token { tok, pos });
            }
            '>' | '<' => {
                bump(&mut chars);
                if chars.peek() != Some(&'=') {
                    return Err(lex_error(pos, alloc::format!("expected `=` after `{c}`")));
                }
                bump(&mut chars);
                let tok = if c == '>' { Tok::Ge } else { Tok::Le };
                out.push(Token { tok, pos });
            }
            '-' | '0'..='9' => {
                let mut text = String::new();
                if c == '-' {
                    text.push('-');
                    bump(&mut chars);
                    if !chars.peek().is_some_and(char::is_ascii_digit) {
                        return Err(lex_error(
                            pos,
                            "`-` must be followed by digits (negative infinity is not a degree)",
                        ));
                    }
                }
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    text.push(d);
                    bump(&mut chars);
                }
                if chars
                    .peek()
                    .is_some_and(|c| c.is_ascii_alphabetic() || *c == '_')
                {
                    return Err(lex_error(pos, "identifiers cannot start with a digit"));
                }
                let value = text
                    .parse::<i64>()
                    .map_err(|_| lex_error(pos, alloc::format!("integer `{text}` out of range")))?;
                out.push(Token {
                    tok: Tok::Int(value),
                    pos,
                });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut text = String::new();
                while let Some(&d) = chars
                    .peek()
                    .filter(|d| d.is_ascii_alphanumeric() || **d == '_')
                {
                    text.push(d);
                    bump(&mut chars);
                }
                out.push(Token {
                    tok: Tok::Word(text),
                    pos,
                });
            }
            other => {
                return Err(lex_error(
                    pos,
                    alloc::format!("unexpected character `{other}`"),
                ))
            }
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        pos: Pos { line, col },
    });
    Ok(out)
}
