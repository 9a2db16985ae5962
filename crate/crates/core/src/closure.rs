//! The classical closure: the total two-valued valuation read off a
//! primary (fixed-point) valuation.
//!
//! Truth atoms shift meaning here: `T(n)` becomes "n is true in the
//! primary valuation", so it is classically false whenever n is false
//! *or undetermined* there. Evaluating every body classically under that
//! assignment extends the primary valuation to a total one; names the
//! primary valuation left undetermined gain a classical value that
//! records the indeterminacy.

use crate::error::{Error, Result};
use crate::eval::{classical_eval, is_fixed_point};
use crate::fixpoint::Check;
use crate::model::{ClassicalValuation, Formula, NameId, SentenceSystem, Valuation};
use crate::value::{ClassicalValue, TruthValue3};

/// The truth-atom assignment induced by a primary valuation: true exactly
/// where the primary value is true.
pub fn truth_atom_assignment(primary: &Valuation) -> ClassicalValuation {
    ClassicalValuation::from_values(
        primary
            .values()
            .iter()
            .map(|v| ClassicalValue::from(*v == TruthValue3::True))
            .collect(),
    )
}

/// Closes a primary valuation into a total classical one.
///
/// Only fixed points may be closed (anything else would not be a
/// truth-predicate semantics to report on); other inputs are rejected
/// with `NotAFixedPoint`. The result never flips a classical primary
/// value, which is asserted.
pub fn classical_closure(
    system: &SentenceSystem,
    primary: &Valuation,
) -> Result<ClassicalValuation> {
    if !is_fixed_point(system, primary) {
        return Err(Error::NotAFixedPoint);
    }
    let atoms = truth_atom_assignment(primary);
    let finals = ClassicalValuation::from_values(
        system
            .ids()
            .map(|id| classical_eval(system.body(id), &atoms, system))
            .collect(),
    );
    for id in system.ids() {
        if let Some(classical) = primary.get(id).classical() {
            assert_eq!(
                finals.get(id),
                classical,
                "closure flipped the classical value of `{}`",
                system.sentence_name(id)
            );
        }
    }
    Ok(finals)
}

/// Names whose body is exactly `not T(itself)` — the self-negating shape
/// whose final verdict must assert the sentence while denying its truth.
pub fn self_negation_names(system: &SentenceSystem) -> Vec<NameId> {
    system
        .ids()
        .filter(|&id| system.body(id) == &Formula::negate(Formula::TruthAtom(id)))
        .collect()
}

/// The canonical body of `forall x in all: not (T(x) and not T(x))` for
/// this system; used to recognize a declared excluded-middle law sentence.
pub fn excluded_middle_law_body(system: &SentenceSystem) -> Formula {
    Formula::conjunction(system.user_ids().map(|id| {
        Formula::negate(Formula::and(
            Formula::TruthAtom(id),
            Formula::negate(Formula::TruthAtom(id)),
        ))
    }))
}

/// Model-level checks of the final valuation against its primary source:
///
/// (a) extension — classical primary values survive unchanged;
/// (b) the truth-atom rule — `T(n)` is finally true exactly when n is
///     true in the primary valuation;
/// (c) every self-negating sentence is finally true while `T` of it is
///     finally false, both at once;
/// (d) a declared excluded-middle law sentence is finally true.
pub fn check_final_properties(
    system: &SentenceSystem,
    primary: &Valuation,
    finals: &ClassicalValuation,
) -> Vec<Check> {
    let mut checks = Vec::new();
    let atoms = truth_atom_assignment(primary);

    let extension_bad: Vec<_> = system
        .ids()
        .filter(|&id| {
            primary
                .get(id)
                .classical()
                .is_some_and(|c| finals.get(id) != c)
        })
        .map(|id| system.sentence_name(id).to_string())
        .collect();
    checks.push(check(
        "final: extends the primary valuation",
        extension_bad.is_empty(),
        if extension_bad.is_empty() {
            format!("{} classical primary value(s) preserved", primary.classical_count())
        } else {
            format!("flipped at {}", extension_bad.join(", "))
        },
    ));

    let atom_rule_bad: Vec<_> = system
        .ids()
        .filter(|&id| {
            let final_atom = classical_eval(&Formula::TruthAtom(id), &atoms, system);
            final_atom.as_bool() != (primary.get(id) == TruthValue3::True)
        })
        .map(|id| system.sentence_name(id).to_string())
        .collect();
    checks.push(check(
        "final: T(n) is true exactly where n is primarily true",
        atom_rule_bad.is_empty(),
        if atom_rule_bad.is_empty() {
            format!("{} name(s)", system.len())
        } else {
            format!("violated at {}", atom_rule_bad.join(", "))
        },
    ));

    let selfneg = self_negation_names(system);
    if selfneg.is_empty() {
        checks.push(check(
            "final: self-negating sentences are true yet not T-true",
            true,
            "no self-negating sentence declared".to_string(),
        ));
    } else {
        let bad: Vec<_> = selfneg
            .iter()
            .filter(|&&id| {
                !(finals.get(id) == ClassicalValue::True
                    && classical_eval(&Formula::TruthAtom(id), &atoms, system)
                        == ClassicalValue::False)
            })
            .map(|&id| system.sentence_name(id).to_string())
            .collect();
        let names: Vec<_> = selfneg
            .iter()
            .map(|&id| system.sentence_name(id).to_string())
            .collect();
        checks.push(check(
            "final: self-negating sentences are true yet not T-true",
            bad.is_empty(),
            if bad.is_empty() {
                format!("holds for {}", names.join(", "))
            } else {
                format!("fails for {}", bad.join(", "))
            },
        ));
    }

    let law_body = excluded_middle_law_body(system);
    let laws: Vec<_> = system
        .ids()
        .filter(|&id| system.body(id) == &law_body)
        .collect();
    if laws.is_empty() {
        checks.push(check(
            "final: the excluded-middle law is true",
            true,
            "no law sentence declared".to_string(),
        ));
    } else {
        let bad: Vec<_> = laws
            .iter()
            .filter(|&&id| finals.get(id) != ClassicalValue::True)
            .map(|&id| system.sentence_name(id).to_string())
            .collect();
        checks.push(check(
            "final: the excluded-middle law is true",
            bad.is_empty(),
            if bad.is_empty() {
                format!(
                    "holds for {}",
                    laws.iter()
                        .map(|&id| system.sentence_name(id))
                        .collect::<Vec<_>>()
                        .join(", ")
                )
            } else {
                format!("fails for {}", bad.join(", "))
            },
        ));
    }

    checks
}

fn check(name: &str, passed: bool, detail: String) -> Check {
    Check {
        name: name.into(),
        passed,
        detail,
    }
}

/// Final truth value of the sentence asserting `T(n)` under the closure
/// of `primary` — convenience for tests and reports.
pub fn final_truth_atom(
    system: &SentenceSystem,
    primary: &Valuation,
    id: NameId,
) -> ClassicalValue {
    classical_eval(
        &Formula::TruthAtom(id),
        &truth_atom_assignment(primary),
        system,
    )
}
