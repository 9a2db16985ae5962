//! Core domain model: sentence systems, core formulas and valuations.
//!
//! A [`SentenceSystem`] is a finite, closed universe of named sentences.
//! Each sentence body is a core [`Formula`]: propositional connectives over
//! external atoms (whose classical values are fixed by the system) and
//! truth atoms `T(name)` referring to other sentences by name. All surface
//! sugar (quantifiers, counting, `F`/`U`, quoted formulas) is gone by the
//! time a system exists; see the `elaborate` module.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::value::{ClassicalValue, TruthValue3};

/// Index of a sentence name within its system (canonical order).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NameId(pub u32);

/// Index of an external atom within its system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AtomId(pub u32);

impl NameId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl AtomId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A core formula. Leaves are constants, external atoms and truth atoms;
/// interior nodes are the three strong Kleene connectives.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    ConstTrue,
    ConstFalse,
    External(AtomId),
    TruthAtom(NameId),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn negate(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    /// Left fold into a conjunction; the empty conjunction is `ConstTrue`.
    pub fn conjunction<I: IntoIterator<Item = Formula>>(parts: I) -> Formula {
        let mut it = parts.into_iter();
        match it.next() {
            None => Formula::ConstTrue,
            Some(first) => it.fold(first, Formula::and),
        }
    }

    /// Left fold into a disjunction; the empty disjunction is `ConstFalse`.
    pub fn disjunction<I: IntoIterator<Item = Formula>>(parts: I) -> Formula {
        let mut it = parts.into_iter();
        match it.next() {
            None => Formula::ConstFalse,
            Some(first) => it.fold(first, Formula::or),
        }
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            Formula::ConstTrue
            | Formula::ConstFalse
            | Formula::External(_)
            | Formula::TruthAtom(_) => 1,
            Formula::Not(f) => 1 + f.size(),
            Formula::And(a, b) | Formula::Or(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn contains_truth_atom(&self) -> bool {
        match self {
            Formula::TruthAtom(_) => true,
            Formula::ConstTrue | Formula::ConstFalse | Formula::External(_) => false,
            Formula::Not(f) => f.contains_truth_atom(),
            Formula::And(a, b) | Formula::Or(a, b) => {
                a.contains_truth_atom() || b.contains_truth_atom()
            }
        }
    }

    /// Every truth atom in the tree, in left-to-right order, duplicates kept.
    pub fn truth_atoms(&self) -> Vec<NameId> {
        fn walk(f: &Formula, out: &mut Vec<NameId>) {
            match f {
                Formula::TruthAtom(n) => out.push(*n),
                Formula::ConstTrue | Formula::ConstFalse | Formula::External(_) => {}
                Formula::Not(g) => walk(g, out),
                Formula::And(a, b) | Formula::Or(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }
}

/// How a sentence name entered the system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Declared in the source file.
    User,
    /// Generated for a quoted formula `T(<...>)`.
    AutoQuote,
    /// Generated for `F(n)` / `U(n)` desugaring.
    AutoNegation,
}

/// An external atom together with its fixed classical value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct External {
    pub name: String,
    pub value: ClassicalValue,
}

/// A closed, finite system of named sentences.
///
/// Name order is canonical: user declarations in declaration order, then
/// auto-generated names in generation order. Every truth atom in every
/// body resolves to a name of the system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SentenceSystem {
    name: String,
    names: Vec<String>,
    bodies: Vec<Formula>,
    provenance: Vec<Provenance>,
    user_count: usize,
    externals: Vec<External>,
    name_index: HashMap<String, NameId>,
}

impl SentenceSystem {
    /// Assembles a system from parts, checking closure. Used by the
    /// elaborator and by tests that build systems directly.
    pub fn new(
        name: String,
        entries: Vec<(String, Formula, Provenance)>,
        user_count: usize,
        externals: Vec<External>,
    ) -> Result<SentenceSystem> {
        let mut names = Vec::with_capacity(entries.len());
        let mut bodies = Vec::with_capacity(entries.len());
        let mut provenance = Vec::with_capacity(entries.len());
        let mut name_index = HashMap::new();
        for (i, (n, body, prov)) in entries.into_iter().enumerate() {
            if name_index.insert(n.clone(), NameId(i as u32)).is_some() {
                return Err(Error::DuplicateName(n));
            }
            names.push(n);
            bodies.push(body);
            provenance.push(prov);
        }
        for ext in &externals {
            if name_index.contains_key(&ext.name) {
                return Err(Error::DuplicateName(ext.name.clone()));
            }
        }
        if user_count == 0 {
            return Err(Error::EmptySystem);
        }
        let system = SentenceSystem {
            name,
            names,
            bodies,
            provenance,
            user_count,
            externals,
            name_index,
        };
        for id in system.ids() {
            system.check_closed(system.body(id))?;
        }
        Ok(system)
    }

    fn check_closed(&self, f: &Formula) -> Result<()> {
        match f {
            Formula::TruthAtom(n) => {
                if n.index() >= self.names.len() {
                    return Err(Error::UnknownName {
                        name: format!("#{}", n.0),
                        context: "truth atom does not resolve".into(),
                    });
                }
            }
            Formula::External(a) => {
                if a.index() >= self.externals.len() {
                    return Err(Error::UnknownName {
                        name: format!("atom #{}", a.0),
                        context: "external atom does not resolve".into(),
                    });
                }
            }
            Formula::ConstTrue | Formula::ConstFalse => {}
            Formula::Not(g) => self.check_closed(g)?,
            Formula::And(a, b) | Formula::Or(a, b) => {
                self.check_closed(a)?;
                self.check_closed(b)?;
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Total number of sentence names, auto-generated ones included.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn user_count(&self) -> usize {
        self.user_count
    }

    pub fn ids(&self) -> impl Iterator<Item = NameId> + '_ {
        (0..self.names.len() as u32).map(NameId)
    }

    /// Ids of user-declared sentences, in declaration order.
    pub fn user_ids(&self) -> impl Iterator<Item = NameId> + '_ {
        (0..self.user_count as u32).map(NameId)
    }

    pub fn sentence_name(&self, id: NameId) -> &str {
        &self.names[id.index()]
    }

    pub fn body(&self, id: NameId) -> &Formula {
        &self.bodies[id.index()]
    }

    pub fn provenance(&self, id: NameId) -> Provenance {
        self.provenance[id.index()]
    }

    pub fn lookup(&self, name: &str) -> Option<NameId> {
        self.name_index.get(name).copied()
    }

    pub fn externals(&self) -> &[External] {
        &self.externals
    }

    pub fn external_value(&self, atom: AtomId) -> ClassicalValue {
        self.externals[atom.index()].value
    }

    pub fn external_name(&self, atom: AtomId) -> &str {
        &self.externals[atom.index()].name
    }

    pub fn lookup_external(&self, name: &str) -> Option<AtomId> {
        self.externals
            .iter()
            .position(|e| e.name == name)
            .map(|i| AtomId(i as u32))
    }
}

/// A total three-valued assignment over a system's sentence names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Valuation {
    values: Vec<TruthValue3>,
}

impl Valuation {
    /// The everywhere-undetermined valuation (bottom of the lattice).
    pub fn bottom(len: usize) -> Valuation {
        Valuation {
            values: vec![TruthValue3::Undet; len],
        }
    }

    pub fn from_values(values: Vec<TruthValue3>) -> Valuation {
        Valuation { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, id: NameId) -> TruthValue3 {
        self.values[id.index()]
    }

    pub fn set(&mut self, id: NameId, v: TruthValue3) {
        self.values[id.index()] = v;
    }

    pub fn values(&self) -> &[TruthValue3] {
        &self.values
    }

    /// Pointwise information order.
    pub fn info_leq(&self, other: &Valuation) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.values
            .iter()
            .zip(&other.values)
            .all(|(a, b)| a.info_leq(*b))
    }

    /// Number of names carrying a classical value.
    pub fn classical_count(&self) -> usize {
        self.values.iter().filter(|v| v.is_classical()).count()
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.values {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A total two-valued assignment over a system's sentence names. Serves
/// both as the truth-atom assignment fed to classical evaluation and as
/// the final valuation produced by the classical closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalValuation {
    values: Vec<ClassicalValue>,
}

impl ClassicalValuation {
    pub fn from_values(values: Vec<ClassicalValue>) -> ClassicalValuation {
        ClassicalValuation { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, id: NameId) -> ClassicalValue {
        self.values[id.index()]
    }

    pub fn values(&self) -> &[ClassicalValue] {
        &self.values
    }
}
