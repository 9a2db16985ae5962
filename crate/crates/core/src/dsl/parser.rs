//! Recursive-descent parser for the `.tsys` format.

use crate::error::{Error, ParseError, Pos, Result};
use crate::value::{ClassicalValue, TruthValue3};

use super::lexer::{lex, Spanned, Tok};
use super::{Arg, Decl, DeclKind, ExpectDirective, NameSet, RawSystem, Surface};

/// Parses a complete `.tsys` source text.
///
/// An input with no tokens at all reports `EmptySystem` rather than a
/// syntax error; everything else syntactically wrong is `Parse` with the
/// position and the acceptable-token set.
pub fn parse_system(input: &str) -> Result<RawSystem> {
    let toks = lex(input)?;
    if toks.first().map(|s| &s.tok) == Some(&Tok::Eof) {
        return Err(Error::EmptySystem);
    }
    let mut p = Parser { toks, at: 0 };
    let system = p.system()?;
    Ok(system)
}

struct Parser {
    toks: Vec<Spanned>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].pos
    }

    fn advance(&mut self) -> Tok {
        let t = self.toks[self.at].tok.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.advance();
            true
        } else {
            false
        }
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T> {
        Err(Error::Parse(ParseError {
            pos: self.pos(),
            found: self.peek().to_string(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }))
    }

    fn expect(&mut self, tok: Tok, desc: &str) -> Result<()> {
        if self.eat(&tok) {
            Ok(())
        } else {
            self.fail(&[desc])
        }
    }

    fn ident(&mut self, desc: &str) -> Result<String> {
        match self.peek() {
            Tok::Ident(name) => {
                let name = name.clone();
                self.advance();
                Ok(name)
            }
            _ => self.fail(&[desc]),
        }
    }

    fn system(&mut self) -> Result<RawSystem> {
        self.expect(Tok::KwSystem, "`system`")?;
        let name = self.ident("system name")?;
        let mut decls = Vec::new();
        loop {
            let pos = self.pos();
            match self.peek() {
                Tok::Eof => break,
                Tok::KwExternal => {
                    self.advance();
                    let name = self.ident("external atom name")?;
                    self.expect(Tok::Equals, "`=`")?;
                    let value = match self.peek() {
                        Tok::KwTrue => ClassicalValue::True,
                        Tok::KwFalse => ClassicalValue::False,
                        _ => return self.fail(&["`true`", "`false`"]),
                    };
                    self.advance();
                    decls.push(Decl {
                        kind: DeclKind::External { name, value },
                        pos,
                    });
                }
                Tok::KwSentence => {
                    self.advance();
                    let name = self.ident("sentence name")?;
                    self.expect(Tok::Assign, "`:=`")?;
                    let body = self.formula()?;
                    decls.push(Decl {
                        kind: DeclKind::Sentence { name, body },
                        pos,
                    });
                }
                Tok::KwExpect => {
                    self.advance();
                    let directive = self.expect_directive()?;
                    decls.push(Decl {
                        kind: DeclKind::Expect(directive),
                        pos,
                    });
                }
                _ => return self.fail(&["`external`", "`sentence`", "`expect`", "end of input"]),
            }
        }
        Ok(RawSystem { name, decls })
    }

    fn expect_directive(&mut self) -> Result<ExpectDirective> {
        let name = self.ident("sentence name")?;
        let mut directive = ExpectDirective {
            name,
            mfp: None,
            lifp: None,
            final_value: None,
        };
        let mut any = false;
        loop {
            let key = match self.peek() {
                Tok::Ident(k) if k == "mfp" || k == "lifp" || k == "final" => k.clone(),
                _ if any => break,
                _ => return self.fail(&["`mfp=`", "`lifp=`", "`final=`"]),
            };
            let key_pos = self.pos();
            self.advance();
            self.expect(Tok::Equals, "`=`")?;
            let letter = self.ident("a verdict letter")?;
            let dup = match key.as_str() {
                "final" => {
                    let v = letter
                        .chars()
                        .next()
                        .filter(|_| letter.len() == 1)
                        .and_then(ClassicalValue::from_letter);
                    match v {
                        Some(v) => directive.final_value.replace(v).is_some(),
                        None => return self.fail(&["`t`", "`f`"]),
                    }
                }
                _ => {
                    let v = letter
                        .chars()
                        .next()
                        .filter(|_| letter.len() == 1)
                        .and_then(TruthValue3::from_letter);
                    match v {
                        Some(v) => {
                            let slot = if key == "mfp" {
                                &mut directive.mfp
                            } else {
                                &mut directive.lifp
                            };
                            slot.replace(v).is_some()
                        }
                        None => return self.fail(&["`t`", "`f`", "`u`"]),
                    }
                }
            };
            if dup {
                return Err(Error::Parse(ParseError {
                    pos: key_pos,
                    found: format!("repeated `{key}`"),
                    expected: vec!["each expectation key at most once".into()],
                }));
            }
            any = true;
        }
        Ok(directive)
    }

    fn formula(&mut self) -> Result<Surface> {
        self.iff_level()
    }

    fn iff_level(&mut self) -> Result<Surface> {
        let mut lhs = self.implies_level()?;
        while self.eat(&Tok::KwIff) {
            let rhs = self.implies_level()?;
            lhs = Surface::Iff(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn implies_level(&mut self) -> Result<Surface> {
        let lhs = self.or_level()?;
        if self.eat(&Tok::KwImplies) {
            // right-associative
            let rhs = self.implies_level()?;
            Ok(Surface::Implies(Box::new(lhs), Box::new(rhs)))
        } else {
            Ok(lhs)
        }
    }

    fn or_level(&mut self) -> Result<Surface> {
        let mut lhs = self.and_level()?;
        while self.eat(&Tok::KwOr) {
            let rhs = self.and_level()?;
            lhs = Surface::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn and_level(&mut self) -> Result<Surface> {
        let mut lhs = self.unary_level()?;
        while self.eat(&Tok::KwAnd) {
            let rhs = self.unary_level()?;
            lhs = Surface::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary_level(&mut self) -> Result<Surface> {
        match self.peek() {
            Tok::KwNot => {
                self.advance();
                let inner = self.unary_level()?;
                Ok(Surface::Not(Box::new(inner)))
            }
            Tok::KwForall | Tok::KwExists => {
                let forall = self.peek() == &Tok::KwForall;
                self.advance();
                let var = self.ident("bound variable")?;
                self.expect(Tok::KwIn, "`in`")?;
                let set = self.nameset()?;
                self.expect(Tok::Colon, "`:`")?;
                // the body extends as far right as possible
                let body = Box::new(self.formula()?);
                Ok(if forall {
                    Surface::ForAll { var, set, body }
                } else {
                    Surface::Exists { var, set, body }
                })
            }
            Tok::KwAtmost | Tok::KwAtleast => {
                let atmost = self.peek() == &Tok::KwAtmost;
                self.advance();
                let count = match self.peek() {
                    Tok::Num(n) => {
                        let n = *n;
                        self.advance();
                        n
                    }
                    _ => return self.fail(&["a count"]),
                };
                self.expect(Tok::KwOf, "`of`")?;
                let set = self.nameset()?;
                Ok(if atmost {
                    Surface::AtMost { count, set }
                } else {
                    Surface::AtLeast { count, set }
                })
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Surface> {
        match self.peek().clone() {
            Tok::KwTrue => {
                self.advance();
                Ok(Surface::True)
            }
            Tok::KwFalse => {
                self.advance();
                Ok(Surface::False)
            }
            Tok::Ident(name) => {
                self.advance();
                Ok(Surface::Ident(name))
            }
            Tok::KwTruth | Tok::KwFalsity | Tok::KwUndet => {
                let head = self.advance();
                self.expect(Tok::LParen, "`(`")?;
                let arg = self.arg()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(match head {
                    Tok::KwTruth => Surface::Truth(arg),
                    Tok::KwFalsity => Surface::Falsity(arg),
                    _ => Surface::Undetermined(arg),
                })
            }
            Tok::LParen => {
                self.advance();
                let inner = self.formula()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            _ => self.fail(&[
                "`true`",
                "`false`",
                "identifier",
                "`T`",
                "`F`",
                "`U`",
                "`not`",
                "`forall`",
                "`exists`",
                "`atmost`",
                "`atleast`",
                "`(`",
            ]),
        }
    }

    fn arg(&mut self) -> Result<Arg> {
        match self.peek() {
            Tok::Ident(name) => {
                let name = name.clone();
                self.advance();
                Ok(Arg::Name(name))
            }
            Tok::LAngle => {
                self.advance();
                let inner = self.formula()?;
                self.expect(Tok::RAngle, "`>`")?;
                Ok(Arg::Quote(Box::new(inner)))
            }
            _ => self.fail(&["identifier", "`<`"]),
        }
    }

    fn nameset(&mut self) -> Result<NameSet> {
        match self.peek() {
            Tok::KwAll => {
                self.advance();
                Ok(NameSet::All)
            }
            Tok::LBrace => {
                self.advance();
                let mut names = Vec::new();
                if self.eat(&Tok::RBrace) {
                    return Ok(NameSet::Explicit(names));
                }
                loop {
                    names.push(self.ident("sentence name")?);
                    if self.eat(&Tok::Comma) {
                        continue;
                    }
                    self.expect(Tok::RBrace, "`}`")?;
                    break;
                }
                Ok(NameSet::Explicit(names))
            }
            _ => self.fail(&["`all`", "`{`"]),
        }
    }
}
