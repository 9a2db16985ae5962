//! Elaboration: lowers a parsed [`RawSystem`] into a closed core
//! [`SentenceSystem`].
//!
//! Desugaring, in rule order:
//!
//! 1. counting — `atmost k of S` becomes the conjunction, over every
//!    (k+1)-subset of S, of the negated conjunction of the subset's truth
//!    atoms; `atleast k of S` the disjunction over k-subsets of
//!    conjunctions;
//! 2. quantifiers — `forall x in S: p(x)` becomes the conjunction of
//!    `p(n)` for the names n of S in order (`exists` the disjunction);
//!    an empty conjunction is `true`, an empty disjunction `false`;
//! 3. derived predicates — `F(n)` becomes `T(q)` for an auto-generated
//!    sentence `q := not T(n)`; `U(n)` becomes
//!    `not T(n) and not T(q)`;
//! 4. quotes — `T(<p>)` becomes `T(q)` for an auto-generated sentence
//!    `q` whose body is the elaboration of `p`.
//!
//! Auto-generated sentences are pooled by body: requesting a body that
//! already exists reuses its name, so repeated `F(n)` and a literal quote
//! of `not T(n)` land on one sentence. Generated names are `neg_<n>` and
//! `quote_<k>`, suffixed with `_2`, `_3`, ... if a user claimed the name.

use std::collections::HashMap;

use itertools::Itertools;

use crate::dsl::{Arg, DeclKind, NameSet, RawSystem, Surface};
use crate::error::{Error, Result};
use crate::model::{AtomId, External, Formula, NameId, Provenance, SentenceSystem};

/// Lowers a raw system to core form. Also validates expect directives:
/// each must target a user-declared sentence.
pub fn elaborate_system(raw: &RawSystem) -> Result<SentenceSystem> {
    let mut st = Elaborator::new(raw)?;
    for (i, (_, body)) in raw.sentences().enumerate() {
        let core = st.lower(body, &HashMap::new())?;
        st.bodies[i] = Some(core);
    }
    for expect in raw.expects() {
        if !st.user_index.contains_key(&expect.name) {
            return Err(Error::UnknownName {
                name: expect.name.clone(),
                context: "expect directive targets no declared sentence".into(),
            });
        }
    }
    st.finish(raw)
}

/// Renders an elaborated system back to surface declarations. The result
/// is sugar-free, so elaborating it reproduces the same names and bodies
/// (auto-generated sentences come back as ordinary declarations).
pub fn core_to_raw(system: &SentenceSystem) -> RawSystem {
    fn surface(system: &SentenceSystem, f: &Formula) -> Surface {
        match f {
            Formula::ConstTrue => Surface::True,
            Formula::ConstFalse => Surface::False,
            Formula::External(a) => Surface::Ident(system.external_name(*a).to_string()),
            Formula::TruthAtom(n) => {
                Surface::Truth(Arg::Name(system.sentence_name(*n).to_string()))
            }
            Formula::Not(g) => Surface::Not(Box::new(surface(system, g))),
            Formula::And(a, b) => Surface::And(
                Box::new(surface(system, a)),
                Box::new(surface(system, b)),
            ),
            Formula::Or(a, b) => Surface::Or(
                Box::new(surface(system, a)),
                Box::new(surface(system, b)),
            ),
        }
    }
    let mut decls = Vec::new();
    let pos = crate::error::Pos { line: 1, column: 1 };
    for ext in system.externals() {
        decls.push(crate::dsl::Decl {
            kind: DeclKind::External {
                name: ext.name.clone(),
                value: ext.value,
            },
            pos,
        });
    }
    for id in system.ids() {
        decls.push(crate::dsl::Decl {
            kind: DeclKind::Sentence {
                name: system.sentence_name(id).to_string(),
                body: surface(system, system.body(id)),
            },
            pos,
        });
    }
    RawSystem {
        name: system.name().to_string(),
        decls,
    }
}

struct Elaborator {
    /// All names allocated so far, user first.
    names: Vec<String>,
    /// Bodies, parallel to `names`; user slots are filled as lowering
    /// proceeds, auto slots at creation.
    bodies: Vec<Option<Formula>>,
    provenance: Vec<Provenance>,
    user_index: HashMap<String, NameId>,
    user_names: Vec<String>,
    externals: Vec<External>,
    external_index: HashMap<String, AtomId>,
    /// Auto-sentence pool keyed by body.
    pool: HashMap<Formula, NameId>,
    quote_counter: u32,
}

impl Elaborator {
    fn new(raw: &RawSystem) -> Result<Elaborator> {
        let mut st = Elaborator {
            names: Vec::new(),
            bodies: Vec::new(),
            provenance: Vec::new(),
            user_index: HashMap::new(),
            user_names: Vec::new(),
            externals: Vec::new(),
            external_index: HashMap::new(),
            pool: HashMap::new(),
            quote_counter: 0,
        };
        for decl in &raw.decls {
            match &decl.kind {
                DeclKind::Sentence { name, .. } => {
                    if st.user_index.contains_key(name) || st.external_index.contains_key(name) {
                        return Err(Error::DuplicateName(name.clone()));
                    }
                    let id = NameId(st.names.len() as u32);
                    st.user_index.insert(name.clone(), id);
                    st.user_names.push(name.clone());
                    st.names.push(name.clone());
                    st.bodies.push(None);
                    st.provenance.push(Provenance::User);
                }
                DeclKind::External { name, value } => {
                    if st.user_index.contains_key(name) || st.external_index.contains_key(name) {
                        return Err(Error::DuplicateName(name.clone()));
                    }
                    let id = AtomId(st.externals.len() as u32);
                    st.external_index.insert(name.clone(), id);
                    st.externals.push(External {
                        name: name.clone(),
                        value: *value,
                    });
                }
                DeclKind::Expect(_) => {}
            }
        }
        if st.user_names.is_empty() {
            return Err(Error::EmptySystem);
        }
        Ok(st)
    }

    fn finish(self, raw: &RawSystem) -> Result<SentenceSystem> {
        let entries = self
            .names
            .into_iter()
            .zip(self.bodies)
            .zip(self.provenance)
            .map(|((name, body), prov)| (name, body.expect("body lowered"), prov))
            .collect();
        SentenceSystem::new(
            raw.name.clone(),
            entries,
            self.user_names.len(),
            self.externals,
        )
    }

    fn fresh_auto_name(&self, stem: String) -> String {
        if !self.user_index.contains_key(&stem) && !self.names.contains(&stem) {
            return stem;
        }
        let mut k = 2;
        loop {
            let candidate = format!("{stem}_{k}");
            if !self.user_index.contains_key(&candidate) && !self.names.contains(&candidate) {
                return candidate;
            }
            k += 1;
        }
    }

    /// Returns the pooled auto sentence for `body`, allocating it if new.
    fn auto_sentence(&mut self, body: Formula, stem: String, prov: Provenance) -> NameId {
        if let Some(&id) = self.pool.get(&body) {
            return id;
        }
        let name = self.fresh_auto_name(stem);
        let id = NameId(self.names.len() as u32);
        self.names.push(name);
        self.bodies.push(Some(body.clone()));
        self.provenance.push(prov);
        self.pool.insert(body, id);
        id
    }

    /// The auto sentence asserting that `target` is not true.
    fn negation_sentence(&mut self, target: NameId) -> NameId {
        let body = Formula::negate(Formula::TruthAtom(target));
        let stem = format!("neg_{}", self.names[target.index()]);
        self.auto_sentence(body, stem, Provenance::AutoNegation)
    }

    fn quote_sentence(&mut self, body: Formula) -> NameId {
        if let Some(&id) = self.pool.get(&body) {
            return id;
        }
        self.quote_counter += 1;
        let stem = format!("quote_{}", self.quote_counter);
        self.auto_sentence(body, stem, Provenance::AutoQuote)
    }

    /// Resolves a `T`/`F`/`U` argument to a sentence id, creating the
    /// quote sentence when the argument is a quoted formula.
    fn resolve_arg(&mut self, arg: &Arg, bound: &HashMap<String, NameId>) -> Result<NameId> {
        match arg {
            Arg::Name(name) => {
                if let Some(&id) = bound.get(name) {
                    return Ok(id);
                }
                if let Some(&id) = self.user_index.get(name) {
                    return Ok(id);
                }
                let context = if self.external_index.contains_key(name) {
                    "external atoms may not appear under T/F/U".to_string()
                } else {
                    "no sentence with this name".to_string()
                };
                Err(Error::UnknownName {
                    name: name.clone(),
                    context,
                })
            }
            Arg::Quote(inner) => {
                let body = self.lower(inner, bound)?;
                Ok(self.quote_sentence(body))
            }
        }
    }

    fn resolve_set(&self, set: &NameSet, pos_hint: &str) -> Result<Vec<NameId>> {
        match set {
            NameSet::All => Ok((0..self.user_names.len() as u32).map(NameId).collect()),
            NameSet::Explicit(names) => {
                let mut out = Vec::new();
                for name in names {
                    let Some(&id) = self.user_index.get(name) else {
                        return Err(Error::UnknownName {
                            name: name.clone(),
                            context: format!("in the name set of {pos_hint}"),
                        });
                    };
                    if !out.contains(&id) {
                        out.push(id);
                    }
                }
                Ok(out)
            }
        }
    }

    fn lower(&mut self, f: &Surface, bound: &HashMap<String, NameId>) -> Result<Formula> {
        Ok(match f {
            Surface::True => Formula::ConstTrue,
            Surface::False => Formula::ConstFalse,
            Surface::Ident(name) => {
                if bound.contains_key(name) || self.user_index.contains_key(name) {
                    return Err(Error::BareSentenceReference(name.clone()));
                }
                match self.external_index.get(name) {
                    Some(&atom) => Formula::External(atom),
                    None => {
                        return Err(Error::UnknownName {
                            name: name.clone(),
                            context: "no external atom with this name".into(),
                        })
                    }
                }
            }
            Surface::Truth(arg) => Formula::TruthAtom(self.resolve_arg(arg, bound)?),
            Surface::Falsity(arg) => {
                let target = self.resolve_arg(arg, bound)?;
                Formula::TruthAtom(self.negation_sentence(target))
            }
            Surface::Undetermined(arg) => {
                let target = self.resolve_arg(arg, bound)?;
                let negation = self.negation_sentence(target);
                Formula::and(
                    Formula::negate(Formula::TruthAtom(target)),
                    Formula::negate(Formula::TruthAtom(negation)),
                )
            }
            Surface::Not(inner) => Formula::negate(self.lower(inner, bound)?),
            Surface::And(a, b) => Formula::and(self.lower(a, bound)?, self.lower(b, bound)?),
            Surface::Or(a, b) => Formula::or(self.lower(a, bound)?, self.lower(b, bound)?),
            Surface::Implies(a, b) => {
                let a = self.lower(a, bound)?;
                let b = self.lower(b, bound)?;
                Formula::or(Formula::negate(a), b)
            }
            Surface::Iff(a, b) => {
                let a = self.lower(a, bound)?;
                let b = self.lower(b, bound)?;
                Formula::and(
                    Formula::or(Formula::negate(a.clone()), b.clone()),
                    Formula::or(Formula::negate(b), a),
                )
            }
            Surface::ForAll { var, set, body } => {
                let names = self.resolve_set(set, "a forall")?;
                let parts = self.instantiate(var, &names, body, bound)?;
                Formula::conjunction(parts)
            }
            Surface::Exists { var, set, body } => {
                let names = self.resolve_set(set, "an exists")?;
                let parts = self.instantiate(var, &names, body, bound)?;
                Formula::disjunction(parts)
            }
            Surface::AtMost { count, set } => {
                let names = self.resolve_set(set, "an atmost")?;
                let parts: Vec<Formula> = names
                    .iter()
                    .combinations(*count as usize + 1)
                    .map(|subset| {
                        Formula::negate(Formula::conjunction(
                            subset.into_iter().map(|&id| Formula::TruthAtom(id)),
                        ))
                    })
                    .collect();
                Formula::conjunction(parts)
            }
            Surface::AtLeast { count, set } => {
                let names = self.resolve_set(set, "an atleast")?;
                let parts: Vec<Formula> = names
                    .iter()
                    .combinations(*count as usize)
                    .map(|subset| {
                        Formula::conjunction(subset.into_iter().map(|&id| Formula::TruthAtom(id)))
                    })
                    .collect();
                Formula::disjunction(parts)
            }
        })
    }

    fn instantiate(
        &mut self,
        var: &str,
        names: &[NameId],
        body: &Surface,
        bound: &HashMap<String, NameId>,
    ) -> Result<Vec<Formula>> {
        let mut parts = Vec::with_capacity(names.len());
        for &id in names {
            let mut inner = bound.clone();
            inner.insert(var.to_string(), id); // inner binding shadows
            parts.push(self.lower(body, &inner)?);
        }
        Ok(parts)
    }
}
