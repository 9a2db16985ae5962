//! Formula evaluation: strong Kleene three-valued, classical two-valued,
//! and the jump operator that re-evaluates every sentence body under a
//! hypothesis about the truth predicate.

use crate::model::{ClassicalValuation, Formula, SentenceSystem, Valuation};
use crate::value::{ClassicalValue, TruthValue3};

/// Strong Kleene evaluation of a core formula. Truth atoms read the
/// hypothesis valuation `v`; external atoms read their declared value.
/// Total on closed formulas.
pub fn sk3_eval(formula: &Formula, v: &Valuation, system: &SentenceSystem) -> TruthValue3 {
    match formula {
        Formula::ConstTrue => TruthValue3::True,
        Formula::ConstFalse => TruthValue3::False,
        Formula::External(atom) => system.external_value(*atom).into(),
        Formula::TruthAtom(name) => v.get(*name),
        Formula::Not(f) => !sk3_eval(f, v, system),
        Formula::And(a, b) => sk3_eval(a, v, system) & sk3_eval(b, v, system),
        Formula::Or(a, b) => sk3_eval(a, v, system) | sk3_eval(b, v, system),
    }
}

/// Classical evaluation with a total two-valued truth-atom assignment.
pub fn classical_eval(
    formula: &Formula,
    truth_atoms: &ClassicalValuation,
    system: &SentenceSystem,
) -> ClassicalValue {
    fn eval(f: &Formula, t: &ClassicalValuation, system: &SentenceSystem) -> bool {
        match f {
            Formula::ConstTrue => true,
            Formula::ConstFalse => false,
            Formula::External(atom) => system.external_value(*atom).as_bool(),
            Formula::TruthAtom(name) => t.get(*name).as_bool(),
            Formula::Not(g) => !eval(g, t, system),
            Formula::And(a, b) => eval(a, t, system) && eval(b, t, system),
            Formula::Or(a, b) => eval(a, t, system) || eval(b, t, system),
        }
    }
    eval(formula, truth_atoms, system).into()
}

/// One step of the truth-determination procedure: every sentence is
/// re-evaluated under `v`. Fixed points of this map are exactly the
/// valuations obeying the truth-predicate conditions.
pub fn jump(system: &SentenceSystem, v: &Valuation) -> Valuation {
    Valuation::from_values(
        system
            .ids()
            .map(|id| sk3_eval(system.body(id), v, system))
            .collect(),
    )
}

/// `jump(v) == v`, checked without building the image valuation.
pub fn is_fixed_point(system: &SentenceSystem, v: &Valuation) -> bool {
    system
        .ids()
        .all(|id| sk3_eval(system.body(id), v, system) == v.get(id))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_system;
    use crate::elaborate::elaborate_system;
    use crate::model::NameId;
    use crate::value::TruthValue3::{False, True, Undet};

    fn system(src: &str) -> SentenceSystem {
        elaborate_system(&parse_system(src).unwrap()).unwrap()
    }

    // L or zeq / L and zeq with zeq a true external and L undetermined
    fn liar_with_external() -> SentenceSystem {
        system(
            "system s\nexternal zeq = true\nsentence L := not T(L)\n\
             sentence both := T(L) and zeq\nsentence either := T(L) or zeq",
        )
    }

    #[test]
    fn disjunction_with_true_side_is_true() {
        let s = liar_with_external();
        let v = Valuation::bottom(s.len());
        let either = s.body(s.lookup("either").unwrap());
        assert_eq!(sk3_eval(either, &v, &s), True);
    }

    #[test]
    fn conjunction_with_undetermined_side_is_undetermined() {
        let s = liar_with_external();
        let v = Valuation::bottom(s.len());
        let both = s.body(s.lookup("both").unwrap());
        assert_eq!(sk3_eval(both, &v, &s), Undet);
    }

    #[test]
    fn excluded_middle_for_truth_teller_is_undetermined() {
        let s = system("system s\nsentence I := T(I)\nsentence em := T(I) or not T(I)");
        let v = Valuation::bottom(s.len());
        assert_eq!(sk3_eval(s.body(s.lookup("em").unwrap()), &v, &s), Undet);
    }

    #[test]
    fn classical_eval_reads_assignment() {
        let s = system("system s\nsentence SL := not T(SL)");
        let t = ClassicalValuation::from_values(vec![ClassicalValue::False]);
        assert_eq!(
            classical_eval(s.body(NameId(0)), &t, &s),
            ClassicalValue::True
        );
    }

    #[test]
    fn classical_eval_conditional_with_false_antecedent() {
        let s = system("system s\nexternal l = false\nsentence C := T(C) implies l");
        let t = ClassicalValuation::from_values(vec![ClassicalValue::False]);
        assert_eq!(
            classical_eval(s.body(NameId(0)), &t, &s),
            ClassicalValue::True
        );
    }

    #[test]
    fn classical_eval_constants() {
        let s = system("system s\nsentence a := true");
        let t = ClassicalValuation::from_values(vec![ClassicalValue::False]);
        assert_eq!(
            classical_eval(&Formula::ConstTrue, &t, &s),
            ClassicalValue::True
        );
        assert_eq!(
            classical_eval(&Formula::ConstFalse, &t, &s),
            ClassicalValue::False
        );
    }

    #[test]
    fn jump_keeps_liar_at_bottom() {
        let s = system("system liar\nsentence L := F(L)");
        let bot = Valuation::bottom(s.len());
        assert_eq!(jump(&s, &bot), bot);
        assert!(is_fixed_point(&s, &bot));
    }

    #[test]
    fn jump_confirms_truth_teller_guess() {
        let s = system("system tt\nsentence I := T(I)");
        let mut v = Valuation::bottom(1);
        v.set(NameId(0), True);
        assert_eq!(jump(&s, &v).get(NameId(0)), True);
        assert!(is_fixed_point(&s, &v));
    }

    #[test]
    fn jump_grounds_external_leaf_in_one_step() {
        let s = system("system g\nexternal ext = true\nsentence g := ext");
        let bot = Valuation::bottom(1);
        assert_eq!(jump(&s, &bot).get(NameId(0)), True);
        assert!(!is_fixed_point(&s, &bot));
    }

    #[test]
    fn liar_rejects_classical_guesses() {
        let s = system("system liar\nsentence L := not T(L)");
        for guess in [True, False] {
            let mut v = Valuation::bottom(1);
            v.set(NameId(0), guess);
            assert!(!is_fixed_point(&s, &v));
        }
    }
}
