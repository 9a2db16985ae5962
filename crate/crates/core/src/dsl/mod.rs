//! The `.tsys` sentence-system format: surface AST, parser and printer.
//!
//! ```text
//! system liar
//! sentence L := F(L)
//! expect L mfp=u lifp=u final=f
//! ```
//!
//! Grammar:
//!
//! ```text
//! system  ::= "system" IDENT decl* ;
//! decl    ::= "external" IDENT "=" ("true" | "false")
//!           | "sentence" IDENT ":=" formula
//!           | "expect" IDENT ("mfp=" V3 | "lifp=" V3 | "final=" V2)+ ;
//! formula ::= "true" | "false" | IDENT
//!           | ("T" | "F" | "U") "(" arg ")"
//!           | "not" formula
//!           | formula ("and" | "or" | "implies" | "iff") formula
//!           | ("forall" | "exists") IDENT "in" nameset ":" formula
//!           | ("atmost" | "atleast") NUM "of" nameset
//!           | "(" formula ")" ;
//! arg     ::= IDENT | "<" formula ">" ;
//! nameset ::= "all" | "{" (IDENT ("," IDENT)*)? "}" ;
//! V3      ::= "t" | "f" | "u" ;  V2 ::= "t" | "f" ;
//! ```
//!
//! `#` starts a comment running to end of line. Precedence, tightest
//! first: `not`, `and`, `or`, `implies`, `iff`; `implies` is
//! right-associative, the other binary operators left-associative. A
//! quantifier body extends as far right as possible.

mod lexer;
mod parser;
mod printer;

pub use parser::parse_system;
pub use printer::{format_formula, format_system};

use crate::error::Pos;
use crate::value::{ClassicalValue, TruthValue3};

/// A parsed `.tsys` file: declarations in source order, sugar intact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawSystem {
    pub name: String,
    pub decls: Vec<Decl>,
}

impl RawSystem {
    pub fn sentences(&self) -> impl Iterator<Item = (&str, &Surface)> {
        self.decls.iter().filter_map(|d| match &d.kind {
            DeclKind::Sentence { name, body } => Some((name.as_str(), body)),
            _ => None,
        })
    }

    pub fn expects(&self) -> impl Iterator<Item = &ExpectDirective> {
        self.decls.iter().filter_map(|d| match &d.kind {
            DeclKind::Expect(e) => Some(e),
            _ => None,
        })
    }

    /// Structural equality, ignoring source positions. The round-trip
    /// guarantee is stated in terms of this relation.
    pub fn eq_ignoring_positions(&self, other: &RawSystem) -> bool {
        self.name == other.name
            && self.decls.len() == other.decls.len()
            && self
                .decls
                .iter()
                .zip(&other.decls)
                .all(|(a, b)| a.kind == b.kind)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decl {
    pub kind: DeclKind,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeclKind {
    External { name: String, value: ClassicalValue },
    Sentence { name: String, body: Surface },
    Expect(ExpectDirective),
}

/// An expected-verdict annotation; pairs a sentence with the verdicts the
/// file claims for it. At least one of the three fields is present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectDirective {
    pub name: String,
    pub mfp: Option<TruthValue3>,
    pub lifp: Option<TruthValue3>,
    pub final_value: Option<ClassicalValue>,
}

/// A surface formula, before elaboration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Surface {
    True,
    False,
    /// Bare identifier: an external atom (sentence names are illegal here).
    Ident(String),
    /// `T(arg)` — arg is true.
    Truth(Arg),
    /// `F(arg)` — arg is false.
    Falsity(Arg),
    /// `U(arg)` — arg is undetermined.
    Undetermined(Arg),
    Not(Box<Surface>),
    And(Box<Surface>, Box<Surface>),
    Or(Box<Surface>, Box<Surface>),
    Implies(Box<Surface>, Box<Surface>),
    Iff(Box<Surface>, Box<Surface>),
    ForAll {
        var: String,
        set: NameSet,
        body: Box<Surface>,
    },
    Exists {
        var: String,
        set: NameSet,
        body: Box<Surface>,
    },
    AtMost {
        count: u32,
        set: NameSet,
    },
    AtLeast {
        count: u32,
        set: NameSet,
    },
}

/// Argument of `T`/`F`/`U`: a name or a quoted formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arg {
    Name(String),
    Quote(Box<Surface>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NameSet {
    /// Every user-declared sentence name, in declaration order.
    All,
    Explicit(Vec<String>),
}
