//! Tokenizer for the `.tsys` format.

use std::fmt;

use crate::error::{Error, ParseError, Pos, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Num(u32),
    KwSystem,
    KwExternal,
    KwSentence,
    KwExpect,
    KwTrue,
    KwFalse,
    KwNot,
    KwAnd,
    KwOr,
    KwImplies,
    KwIff,
    KwForall,
    KwExists,
    KwIn,
    KwAtmost,
    KwAtleast,
    KwOf,
    KwAll,
    KwTruth,
    KwFalsity,
    KwUndet,
    Assign, // :=
    Equals,
    LParen,
    RParen,
    LBrace,
    RBrace,
    LAngle,
    RAngle,
    Colon,
    Comma,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Num(n) => write!(f, "number `{n}`"),
            Tok::KwSystem => write!(f, "`system`"),
            Tok::KwExternal => write!(f, "`external`"),
            Tok::KwSentence => write!(f, "`sentence`"),
            Tok::KwExpect => write!(f, "`expect`"),
            Tok::KwTrue => write!(f, "`true`"),
            Tok::KwFalse => write!(f, "`false`"),
            Tok::KwNot => write!(f, "`not`"),
            Tok::KwAnd => write!(f, "`and`"),
            Tok::KwOr => write!(f, "`or`"),
            Tok::KwImplies => write!(f, "`implies`"),
            Tok::KwIff => write!(f, "`iff`"),
            Tok::KwForall => write!(f, "`forall`"),
            Tok::KwExists => write!(f, "`exists`"),
            Tok::KwIn => write!(f, "`in`"),
            Tok::KwAtmost => write!(f, "`atmost`"),
            Tok::KwAtleast => write!(f, "`atleast`"),
            Tok::KwOf => write!(f, "`of`"),
            Tok::KwAll => write!(f, "`all`"),
            Tok::KwTruth => write!(f, "`T`"),
            Tok::KwFalsity => write!(f, "`F`"),
            Tok::KwUndet => write!(f, "`U`"),
            Tok::Assign => write!(f, "`:=`"),
            Tok::Equals => write!(f, "`=`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::LBrace => write!(f, "`{{`"),
            Tok::RBrace => write!(f, "`}}`"),
            Tok::LAngle => write!(f, "`<`"),
            Tok::RAngle => write!(f, "`>`"),
            Tok::Colon => write!(f, "`:`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Spanned {
    pub tok: Tok,
    pub pos: Pos,
}

fn keyword(word: &str) -> Option<Tok> {
    Some(match word {
        "system" => Tok::KwSystem,
        "external" => Tok::KwExternal,
        "sentence" => Tok::KwSentence,
        "expect" => Tok::KwExpect,
        "true" => Tok::KwTrue,
        "false" => Tok::KwFalse,
        "not" => Tok::KwNot,
        "and" => Tok::KwAnd,
        "or" => Tok::KwOr,
        "implies" => Tok::KwImplies,
        "iff" => Tok::KwIff,
        "forall" => Tok::KwForall,
        "exists" => Tok::KwExists,
        "in" => Tok::KwIn,
        "atmost" => Tok::KwAtmost,
        "atleast" => Tok::KwAtleast,
        "of" => Tok::KwOf,
        "all" => Tok::KwAll,
        "T" => Tok::KwTruth,
        "F" => Tok::KwFalsity,
        "U" => Tok::KwUndet,
        _ => return None,
    })
}

pub fn lex(input: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    let mut line: u32 = 1;
    let mut column: u32 = 1;

    macro_rules! bump {
        () => {{
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else if c.is_some() {
                column += 1;
            }
            c
        }};
    }

    loop {
        let pos = Pos { line, column };
        let Some(&c) = chars.peek() else {
            out.push(Spanned { tok: Tok::Eof, pos });
            return Ok(out);
        };
        if c.is_whitespace() {
            bump!();
            continue;
        }
        if c == '#' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                bump!();
            }
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut word = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    word.push(c);
                    bump!();
                } else {
                    break;
                }
            }
            let tok = keyword(&word).unwrap_or(Tok::Ident(word));
            out.push(Spanned { tok, pos });
            continue;
        }
        if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    digits.push(c);
                    bump!();
                } else {
                    break;
                }
            }
            let n: u32 = digits.parse().map_err(|_| {
                Error::Parse(ParseError {
                    pos,
                    found: format!("number `{digits}`"),
                    expected: vec!["a number below 2^32".into()],
                })
            })?;
            out.push(Spanned {
                tok: Tok::Num(n),
                pos,
            });
            continue;
        }
        bump!();
        let tok = match c {
            ':' => {
                if chars.peek() == Some(&'=') {
                    bump!();
                    Tok::Assign
                } else {
                    Tok::Colon
                }
            }
            '=' => Tok::Equals,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            '<' => Tok::LAngle,
            '>' => Tok::RAngle,
            ',' => Tok::Comma,
            other => {
                return Err(Error::Parse(ParseError {
                    pos,
                    found: format!("character `{other}`"),
                    expected: vec!["a token".into()],
                }))
            }
        };
        out.push(Spanned { tok, pos });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<Tok> {
        lex(s).unwrap().into_iter().map(|s| s.tok).collect()
    }

    #[test]
    fn basic_stream() {
        assert_eq!(
            toks("sentence L := not T(L)"),
            vec![
                Tok::KwSentence,
                Tok::Ident("L".into()),
                Tok::Assign,
                Tok::KwNot,
                Tok::KwTruth,
                Tok::LParen,
                Tok::Ident("L".into()),
                Tok::RParen,
                Tok::Eof,
            ]
        );
    }

    #[test]
    fn comments_end_at_newline() {
        assert_eq!(
            toks("a # the rest is ignored := ( \nb"),
            vec![Tok::Ident("a".into()), Tok::Ident("b".into()), Tok::Eof]
        );
    }

    #[test]
    fn positions_track_lines() {
        let spans = lex("a\n  b").unwrap();
        assert_eq!(spans[0].pos, Pos { line: 1, column: 1 });
        assert_eq!(spans[1].pos, Pos { line: 2, column: 3 });
    }

    #[test]
    fn colon_vs_assign() {
        assert_eq!(toks(": :="), vec![Tok::Colon, Tok::Assign, Tok::Eof]);
    }

    #[test]
    fn rejects_stray_character() {
        assert!(matches!(lex("a @ b"), Err(Error::Parse(_))));
    }

    #[test]
    fn single_letters_t_f_u_are_keywords() {
        assert_eq!(
            toks("T F U tfu"),
            vec![
                Tok::KwTruth,
                Tok::KwFalsity,
                Tok::KwUndet,
                Tok::Ident("tfu".into()),
                Tok::Eof
            ]
        );
    }
}
