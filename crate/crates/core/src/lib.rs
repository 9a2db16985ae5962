//! Fixed-point semantics for finite self-referential sentence systems.
//!
//! A `.tsys` file declares externally grounded atoms and named sentences
//! whose bodies may mention each other's truth through the predicates
//! `T` (true), `F` (false) and `U` (undetermined). This crate parses such
//! systems, lowers them to a propositional core, and computes:
//!
//! - the **minimal fixed point** of the strong Kleene jump operator,
//!   reached by iterating from the everywhere-undetermined valuation;
//! - **all fixed points** by exhaustive enumeration of the 3^N valuation
//!   space, plus the **intrinsic** ones (those clashing classically with
//!   no fixed point);
//! - the **largest intrinsic fixed point** (the join of the intrinsic
//!   ones) — the primary, partial valuation;
//! - its **classical closure** — the total two-valued final valuation in
//!   which `T(n)` means "n is true in the primary valuation", so
//!   paradoxical sentences get classical values recording their
//!   indeterminacy.
//!
//! The classic specimens (the Liar and its strengthened, quoted and
//! conditional relatives, the Truth-teller, finite Yablo tails) are all
//! expressible in a few lines each; see the `corpus/` directory of the
//! repository.

pub mod closure;
pub mod dsl;
pub mod elaborate;
pub mod error;
pub mod eval;
pub mod fixpoint;
pub mod graph;
pub mod model;
pub mod report;
pub mod value;

pub use error::{Error, ParseError, Pos, Result};
pub use model::{
    AtomId, ClassicalValuation, External, Formula, NameId, Provenance, SentenceSystem, Valuation,
};
pub use value::{ClassicalValue, TruthValue3};

/// Parses and elaborates a `.tsys` source text in one step.
pub fn load_system(source: &str) -> Result<(dsl::RawSystem, SentenceSystem)> {
    let raw = dsl::parse_system(source)?;
    let system = elaborate::elaborate_system(&raw)?;
    Ok((raw, system))
}
