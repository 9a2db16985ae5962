//! Fixed points of the jump operator: the minimal fixed point, exhaustive
//! enumeration, the intrinsic subset and the largest intrinsic fixed point
//! (the join of all intrinsic fixed points).

use crate::error::{Error, Result};
use crate::eval::{jump, sk3_eval};
use crate::model::{SentenceSystem, Valuation};
use crate::value::TruthValue3;

pub use crate::eval::is_fixed_point;

/// Default cap on the enumeration space: 3^12 valuations.
pub const DEFAULT_MAX_ENUM: u64 = 531_441;

/// Size of the valuation space, saturating at `u128::MAX`.
pub fn valuation_space(names: usize) -> u128 {
    3u128.checked_pow(names as u32).unwrap_or(u128::MAX)
}

/// The least fixed point, reached by iterating the jump from the
/// everywhere-undetermined valuation.
///
/// Each productive step adds at least one classical value, so with N
/// names the chain stabilizes within N+1 jumps; failing that bound means
/// the jump lost monotonicity and is a bug, so it panics.
pub fn minimal_fixed_point(system: &SentenceSystem) -> Valuation {
    let mut current = Valuation::bottom(system.len());
    for _ in 0..=system.len() {
        let next = jump(system, &current);
        if next == current {
            return current;
        }
        debug_assert!(current.info_leq(&next));
        current = next;
    }
    panic!(
        "jump iteration did not stabilize within {} steps on system `{}`",
        system.len() + 1,
        system.name()
    );
}

/// Decodes an index into a valuation: names in system order form digits,
/// first name most significant, digit order u < f < t. Increasing index
/// is therefore the canonical order on valuations.
fn decode(index: u128, names: usize) -> Valuation {
    let mut values = vec![TruthValue3::Undet; names];
    let mut rest = index;
    for slot in values.iter_mut().rev() {
        *slot = TruthValue3::from_canonical_rank((rest % 3) as u8);
        rest /= 3;
    }
    Valuation::from_values(values)
}

/// All fixed points of the system, in canonical order.
///
/// Scans the whole 3^N valuation space; refuses with
/// `EnumerationLimitExceeded` when that space is larger than `limit`
/// (callers may still fall back to [`minimal_fixed_point`]).
pub fn enumerate_fixed_points(system: &SentenceSystem, limit: u64) -> Result<Vec<Valuation>> {
    enumerate_fixed_points_threaded(system, limit, 1)
}

/// [`enumerate_fixed_points`] with the scan split into `threads`
/// contiguous index ranges. The result is identical for every thread
/// count: ranges are concatenated in index order.
pub fn enumerate_fixed_points_threaded(
    system: &SentenceSystem,
    limit: u64,
    threads: usize,
) -> Result<Vec<Valuation>> {
    let space = valuation_space(system.len());
    if space > limit as u128 {
        return Err(Error::EnumerationLimitExceeded { space, limit });
    }
    let space = space as u64;
    let threads = threads.clamp(1, 64).min(space.max(1) as usize);

    let scan = |from: u64, to: u64| -> Vec<Valuation> {
        (from..to)
            .filter_map(|i| {
                let v = decode(i as u128, system.len());
                is_fixed_point(system, &v).then_some(v)
            })
            .collect()
    };

    if threads == 1 {
        return Ok(scan(0, space));
    }
    let chunk = space.div_ceil(threads as u64);
    let mut found = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads as u64)
            .map(|t| {
                let from = t * chunk;
                let to = ((t + 1) * chunk).min(space);
                scope.spawn(move || scan(from, to.max(from)))
            })
            .collect();
        for handle in handles {
            found.extend(handle.join().expect("enumeration worker panicked"));
        }
    });
    Ok(found)
}

/// Whether two valuations never disagree classically: no name is true in
/// one and false in the other. Both must range over the same names.
pub fn compatible(v: &Valuation, w: &Valuation) -> bool {
    debug_assert_eq!(v.len(), w.len());
    v.values()
        .iter()
        .zip(w.values())
        .all(|(a, b)| !a.is_classical() || !b.is_classical() || a == b)
}

/// The members of `fixed_points` compatible with every member. The input
/// must be the complete fixed-point set of a system.
pub fn intrinsic_fixed_points(fixed_points: &[Valuation]) -> Vec<Valuation> {
    fixed_points
        .iter()
        .filter(|v| fixed_points.iter().all(|w| compatible(v, w)))
        .cloned()
        .collect()
}

/// Pointwise join of pairwise-compatible valuations in the information
/// order: classical values win over undetermined ones.
fn join_all(len: usize, valuations: &[Valuation]) -> Valuation {
    let mut out = Valuation::bottom(len);
    for v in valuations {
        for (i, value) in v.values().iter().enumerate() {
            if value.is_classical() {
                let id = crate::model::NameId(i as u32);
                debug_assert!(!out.get(id).is_classical() || out.get(id) == *value);
                out.set(id, *value);
            }
        }
    }
    out
}

/// The largest intrinsic fixed point: the join of all intrinsic fixed
/// points. Panics if the join fails to be an intrinsic fixed point, which
/// the lattice structure rules out for a monotone jump.
pub fn largest_intrinsic_fixed_point(system: &SentenceSystem, limit: u64) -> Result<Valuation> {
    let fps = enumerate_fixed_points(system, limit)?;
    Ok(lifp_from_enumeration(system, &fps))
}

pub(crate) fn lifp_from_enumeration(system: &SentenceSystem, fps: &[Valuation]) -> Valuation {
    let intrinsic = intrinsic_fixed_points(fps);
    let lifp = join_all(system.len(), &intrinsic);
    assert!(
        is_fixed_point(system, &lifp) && fps.iter().all(|w| compatible(&lifp, w)),
        "join of intrinsic fixed points is not an intrinsic fixed point on `{}`",
        system.name()
    );
    lifp
}

/// Everything the fixed-point analysis of one system produces.
#[derive(Clone, Debug)]
pub struct FixedPointReport {
    /// All fixed points in canonical order; `None` past the limit.
    pub fixed_points: Option<Vec<Valuation>>,
    pub minimal: Valuation,
    pub intrinsic: Option<Vec<Valuation>>,
    pub lifp: Option<Valuation>,
    pub limit_exceeded: bool,
}

/// Runs the whole analysis: minimal fixed point always; enumeration,
/// intrinsic subset and LIFP when the space fits under `limit`.
pub fn analyze(system: &SentenceSystem, limit: u64, threads: usize) -> FixedPointReport {
    let minimal = minimal_fixed_point(system);
    match enumerate_fixed_points_threaded(system, limit, threads) {
        Ok(fps) => {
            let intrinsic = intrinsic_fixed_points(&fps);
            let lifp = lifp_from_enumeration(system, &fps);
            FixedPointReport {
                fixed_points: Some(fps),
                minimal,
                intrinsic: Some(intrinsic),
                lifp: Some(lifp),
                limit_exceeded: false,
            }
        }
        Err(Error::EnumerationLimitExceeded { .. }) => FixedPointReport {
            fixed_points: None,
            minimal,
            intrinsic: None,
            lifp: None,
            limit_exceeded: true,
        },
        Err(other) => unreachable!("enumeration returned unexpected error {other:?}"),
    }
}

/// One named pass/fail outcome inside a check report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn pass(name: &str, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            passed: true,
            detail: detail.into(),
        }
    }

    fn fail(name: &str, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            passed: false,
            detail: detail.into(),
        }
    }
}

/// Checks the five structural properties of the LIFP valuation against a
/// completed enumeration:
///
/// 1. grounding — names whose bodies have no truth atoms carry exactly
///    the classical value of their bodies;
/// 2. the strong Kleene conditions hold at every name (fixed point);
/// 3. the T-scheme — `T(n)` and the body of `n` agree everywhere;
/// 4. no fixed point disagrees classically with the LIFP;
/// 5. names undetermined in the LIFP are classical in no intrinsic
///    fixed point.
pub fn check_primary_properties(
    system: &SentenceSystem,
    report: &FixedPointReport,
) -> Option<Vec<Check>> {
    let (Some(fps), Some(intrinsic), Some(lifp)) =
        (&report.fixed_points, &report.intrinsic, &report.lifp)
    else {
        return None;
    };
    let mut checks = Vec::new();

    let mut grounded = 0usize;
    let mut grounding_bad = Vec::new();
    for id in system.ids() {
        let body = system.body(id);
        if body.contains_truth_atom() {
            continue;
        }
        grounded += 1;
        // classical route, independent of the sk3 evaluator
        let dummy = crate::model::ClassicalValuation::from_values(vec![
            crate::value::ClassicalValue::False;
            system.len()
        ]);
        let classical = crate::eval::classical_eval(body, &dummy, system);
        if lifp.get(id) != classical.into() {
            grounding_bad.push(system.sentence_name(id).to_string());
        }
    }
    checks.push(if grounding_bad.is_empty() {
        Check::pass(
            "primary: grounded names carry their classical values",
            format!("{grounded} grounded name(s)"),
        )
    } else {
        Check::fail(
            "primary: grounded names carry their classical values",
            format!("mismatch at {}", grounding_bad.join(", ")),
        )
    });

    let fp_ok = is_fixed_point(system, lifp);
    checks.push(if fp_ok {
        Check::pass(
            "primary: strong Kleene conditions hold at every name",
            format!("{} name(s)", system.len()),
        )
    } else {
        Check::fail(
            "primary: strong Kleene conditions hold at every name",
            "lifp is not a fixed point".to_string(),
        )
    });

    let t_scheme_bad: Vec<_> = system
        .ids()
        .filter(|&id| {
            sk3_eval(&crate::model::Formula::TruthAtom(id), lifp, system)
                != sk3_eval(system.body(id), lifp, system)
        })
        .map(|id| system.sentence_name(id).to_string())
        .collect();
    checks.push(if t_scheme_bad.is_empty() {
        Check::pass(
            "primary: T(n) agrees with the body of n everywhere",
            format!("{} name(s)", system.len()),
        )
    } else {
        Check::fail(
            "primary: T(n) agrees with the body of n everywhere",
            format!("mismatch at {}", t_scheme_bad.join(", ")),
        )
    });

    let clash = fps.iter().position(|w| !compatible(lifp, w));
    checks.push(match clash {
        None => Check::pass(
            "primary: no fixed point clashes classically with lifp",
            format!("{} fixed point(s)", fps.len()),
        ),
        Some(i) => Check::fail(
            "primary: no fixed point clashes classically with lifp",
            format!("fixed point #{i} clashes"),
        ),
    });

    let unforced_bad: Vec<_> = system
        .ids()
        .filter(|&id| {
            lifp.get(id) == TruthValue3::Undet
                && intrinsic.iter().any(|w| w.get(id).is_classical())
        })
        .map(|id| system.sentence_name(id).to_string())
        .collect();
    checks.push(if unforced_bad.is_empty() {
        Check::pass(
            "primary: undetermined names are classical in no intrinsic fixed point",
            format!("{} intrinsic fixed point(s)", intrinsic.len()),
        )
    } else {
        Check::fail(
            "primary: undetermined names are classical in no intrinsic fixed point",
            format!("forced at {}", unforced_bad.join(", ")),
        )
    });

    Some(checks)
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

    fn get(v: &Valuation, s: &SentenceSystem, name: &str) -> TruthValue3 {
        v.get(s.lookup(name).unwrap())
    }

    #[test]
    fn truth_teller_has_three_fixed_points_one_intrinsic() {
        let s = system("system tt\nsentence I := T(I)");
        let fps = enumerate_fixed_points(&s, DEFAULT_MAX_ENUM).unwrap();
        assert_eq!(fps.len(), 3);
        // canonical order: u < f < t
        assert_eq!(fps[0].get(NameId(0)), Undet);
        assert_eq!(fps[1].get(NameId(0)), False);
        assert_eq!(fps[2].get(NameId(0)), True);
        let intrinsic = intrinsic_fixed_points(&fps);
        assert_eq!(intrinsic.len(), 1);
        assert_eq!(intrinsic[0].get(NameId(0)), Undet);
    }

    #[test]
    fn liar_has_exactly_one_fixed_point() {
        let s = system("system liar\nsentence L := F(L)");
        assert_eq!(s.len(), 2); // brute force over 9 valuations
        let fps = enumerate_fixed_points(&s, DEFAULT_MAX_ENUM).unwrap();
        assert_eq!(fps.len(), 1);
        assert_eq!(fps[0], Valuation::bottom(2));
    }

    #[test]
    fn logician_has_two_patterns_and_a_true_lifp() {
        let s = system("system log\nsentence Log := T(Log) or T(<not T(Log)>)");
        let fps = enumerate_fixed_points(&s, DEFAULT_MAX_ENUM).unwrap();
        assert_eq!(fps.len(), 2);
        let intrinsic = intrinsic_fixed_points(&fps);
        assert_eq!(intrinsic.len(), 2);
        let mfp = minimal_fixed_point(&s);
        assert_eq!(get(&mfp, &s, "Log"), Undet);
        let lifp = largest_intrinsic_fixed_point(&s, DEFAULT_MAX_ENUM).unwrap();
        assert_eq!(get(&lifp, &s, "Log"), True);
    }

    #[test]
    fn minimal_fixed_point_is_a_fixed_point() {
        for src in [
            "system liar\nsentence L := F(L)",
            "system tt\nsentence I := T(I)",
            "system g\nexternal e = true\nsentence g := e",
        ] {
            let s = system(src);
            assert!(is_fixed_point(&s, &minimal_fixed_point(&s)));
        }
    }

    #[test]
    fn grounded_system_resolves_in_one_jump() {
        let s = system(
            "system g\nexternal e = true\nsentence a := e\nsentence b := not e\nsentence c := e or not e",
        );
        let mfp = minimal_fixed_point(&s);
        assert_eq!(get(&mfp, &s, "a"), True);
        assert_eq!(get(&mfp, &s, "b"), False);
        assert_eq!(get(&mfp, &s, "c"), True);
    }

    #[test]
    fn gupta_base_minimal_leaves_mutual_references_undetermined() {
        let s = system(
            "system gupta\n\
             sentence a1 := false\nsentence a2 := false\n\
             sentence a3 := forall x in {b1, b2, b3, b4}: T(x)\n\
             sentence a4 := false\n\
             sentence a5 := exists x in {b1, b2, b3, b4}: not T(x)\n\
             sentence b1 := true\nsentence b2 := true\nsentence b3 := true\n\
             sentence b4 := atmost 1 of {a1, a2, a3, a4, a5}",
        );
        let mfp = minimal_fixed_point(&s);
        for name in ["a3", "a5", "b4"] {
            assert_eq!(get(&mfp, &s, name), Undet, "{name}");
        }
        let lifp = largest_intrinsic_fixed_point(&s, DEFAULT_MAX_ENUM).unwrap();
        assert_eq!(get(&lifp, &s, "a3"), True);
        assert_eq!(get(&lifp, &s, "a5"), False);
        assert_eq!(get(&lifp, &s, "b4"), True);
    }

    #[test]
    fn gupta_starred_lifp_is_undetermined() {
        let s = system(
            "system gupta_starred\n\
             sentence a1 := false\nsentence a2 := false\n\
             sentence a3s := T(a3s)\n\
             sentence a4 := false\n\
             sentence a5s := T(<not T(a3s)>)\n\
             sentence b1 := true\nsentence b2 := true\nsentence b3 := true\n\
             sentence b4 := atmost 1 of {a1, a2, a3s, a4, a5s}",
        );
        let lifp = largest_intrinsic_fixed_point(&s, DEFAULT_MAX_ENUM).unwrap();
        for name in ["a3s", "a5s", "b4"] {
            assert_eq!(get(&lifp, &s, name), Undet, "{name}");
        }
    }

    #[test]
    fn compatibility_rules() {
        let v = Valuation::from_values(vec![True]);
        let w = Valuation::from_values(vec![False]);
        let u = Valuation::from_values(vec![Undet]);
        assert!(!compatible(&v, &w));
        assert!(compatible(&v, &u));
        assert!(compatible(&v, &v));
    }

    #[test]
    fn single_fixed_point_is_intrinsic() {
        let s = system("system liar\nsentence L := F(L)");
        let fps = enumerate_fixed_points(&s, DEFAULT_MAX_ENUM).unwrap();
        let intrinsic = intrinsic_fixed_points(&fps);
        assert_eq!(intrinsic, fps);
    }

    #[test]
    fn limit_is_enforced() {
        let s = system("system tt\nsentence I := T(I)");
        let err = enumerate_fixed_points(&s, 2).unwrap_err();
        assert_eq!(
            err,
            Error::EnumerationLimitExceeded { space: 3, limit: 2 }
        );
        let report = analyze(&s, 2, 1);
        assert!(report.limit_exceeded);
        assert!(report.fixed_points.is_none());
        assert!(report.lifp.is_none());
        assert_eq!(report.minimal, Valuation::bottom(1)); // mfp still there
    }

    #[test]
    fn threaded_enumeration_matches_sequential() {
        let s = system(
            "system log\nsentence Log := T(Log) or T(<not T(Log)>)\nsentence I := T(I)",
        );
        let seq = enumerate_fixed_points_threaded(&s, DEFAULT_MAX_ENUM, 1).unwrap();
        for threads in [2, 3, 4, 7] {
            let par = enumerate_fixed_points_threaded(&s, DEFAULT_MAX_ENUM, threads).unwrap();
            assert_eq!(seq, par, "threads={threads}");
        }
    }

    #[test]
    fn finite_yablo_has_unique_descending_fixed_point() {
        let s = system(
            "system yablo\n\
             sentence y1 := forall k in {y2, y3}: not T(k)\n\
             sentence y2 := forall k in {y3}: not T(k)\n\
             sentence y3 := forall k in {}: not T(k)",
        );
        let fps = enumerate_fixed_points(&s, DEFAULT_MAX_ENUM).unwrap();
        assert_eq!(fps.len(), 1);
        assert_eq!(get(&fps[0], &s, "y1"), False);
        assert_eq!(get(&fps[0], &s, "y2"), False);
        assert_eq!(get(&fps[0], &s, "y3"), True);
    }

    #[test]
    fn five_properties_hold_on_gupta_base() {
        let s = system(
            "system gupta\n\
             sentence a1 := false\nsentence a2 := false\n\
             sentence a3 := forall x in {b1, b2, b3, b4}: T(x)\n\
             sentence a4 := false\n\
             sentence a5 := exists x in {b1, b2, b3, b4}: not T(x)\n\
             sentence b1 := true\nsentence b2 := true\nsentence b3 := true\n\
             sentence b4 := atmost 1 of {a1, a2, a3, a4, a5}",
        );
        let report = analyze(&s, DEFAULT_MAX_ENUM, 1);
        let checks = check_primary_properties(&s, &report).unwrap();
        assert_eq!(checks.len(), 5);
        for check in &checks {
            assert!(check.passed, "{}: {}", check.name, check.detail);
        }
    }

    #[test]
    fn five_property_check_unavailable_past_limit() {
        let s = system("system tt\nsentence I := T(I)");
        let report = analyze(&s, 1, 1);
        assert!(check_primary_properties(&s, &report).is_none());
    }
}
