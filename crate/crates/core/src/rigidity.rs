//! Rigidity profiles and the realizability deciders.
//!
//! An element `a` outside `±F^2` is *rigid* when the binary form `<1, a>`
//! represents nothing beyond the two obvious classes, i.e.
//! `D(<1,a>) = {1, a}`; *double rigid* when both `a` and `-a` are rigid;
//! *basic* when it is in `±F^2` or not double rigid. A field is rigid when
//! every admissible class is. The deciders below connect nonrigidity to the
//! realizability of the groups `G1` (order 32) and `G2` (order 64) purely
//! through symbol and value-set conditions, and cross-check every stated
//! equivalence by evaluating each side independently.

use crate::field::{ClassSet, FieldError, FieldModel, SquareClass, ValuationData};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RigidityError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("equivalence violated in {what}: {details}")]
    Inconsistent { what: String, details: String },
}

/// Is `a` outside `±F^2`? (When `-1` is a square, `±F^2` collapses to `F^2`.)
pub fn is_admissible(m: &FieldModel, a: SquareClass) -> bool {
    !a.is_one() && a != m.minus_one()
}

/// `D(<1,a>) = {1, a}` — defined only away from `±F^2`.
pub fn is_rigid(m: &FieldModel, a: SquareClass) -> Result<bool, RigidityError> {
    m.check_class(a)?;
    if !is_admissible(m, a) {
        return Err(RigidityError::Field(FieldError::UndefinedRigidity(
            format!("class {} lies in ±F^2", m.class_label(a)),
        )));
    }
    let vs = m.value_set(a);
    let mut expected = ClassSet::EMPTY;
    expected.insert(SquareClass::ONE);
    expected.insert(a);
    Ok(vs.classes == expected)
}

pub fn is_double_rigid(m: &FieldModel, a: SquareClass) -> Result<bool, RigidityError> {
    Ok(is_rigid(m, a)? && is_rigid(m, m.negate(a))?)
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassRigidity {
    pub label: String,
    /// `None` for the classes of `1` and `-1`, where rigidity is undefined.
    pub rigid: Option<bool>,
    pub double_rigid: Option<bool>,
    pub basic: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RigidityProfile {
    pub model: String,
    pub classes: Vec<ClassRigidity>,
    pub field_rigid: bool,
    /// Basic classes as a set (B(F) modulo squares).
    pub basic_set: ClassSet,
    pub basic_labels: Vec<String>,
}

/// Per-class rigidity flags and the basic set.
pub fn profile(m: &FieldModel) -> RigidityProfile {
    let mut classes = Vec::new();
    let mut basic_set = ClassSet::EMPTY;
    let mut field_rigid = true;
    for a in m.classes() {
        if !is_admissible(m, a) {
            basic_set.insert(a);
            classes.push(ClassRigidity {
                label: m.class_label(a).into(),
                rigid: None,
                double_rigid: None,
                basic: true,
            });
            continue;
        }
        let r = is_rigid(m, a).expect("admissible");
        let dr = is_double_rigid(m, a).expect("admissible");
        field_rigid &= r;
        let basic = !dr;
        if basic {
            basic_set.insert(a);
        }
        classes.push(ClassRigidity {
            label: m.class_label(a).into(),
            rigid: Some(r),
            double_rigid: Some(dr),
            basic,
        });
    }
    // B(F) collapses to ±F^2 exactly for rigid fields.
    let mut pm = ClassSet::EMPTY;
    pm.insert(SquareClass::ONE);
    pm.insert(m.minus_one());
    debug_assert_eq!(field_rigid, basic_set == pm);
    let basic_labels = basic_set.iter().map(|c| m.class_label(c).to_string()).collect();
    RigidityProfile {
        model: m.name().into(),
        classes,
        field_rigid,
        basic_set,
        basic_labels,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NonrigidityReport {
    pub model: String,
    /// The field is nonrigid.
    pub nonrigid: bool,
    /// Some nonsquare `a` has `|D(<1,-a>)| >= 4`.
    pub witness_nonsquare: bool,
    /// Some `a` outside `±F^2` has `|D(<1,-a>)| >= 4`.
    pub witness_strict: bool,
    pub agree: bool,
}

/// Evaluates the three nonrigidity characterizations independently.
pub fn nonrigidity_characterizations(m: &FieldModel) -> NonrigidityReport {
    let nonrigid = !profile(m).field_rigid;
    let witness_nonsquare = m
        .classes()
        .any(|a| !a.is_one() && m.value_set(m.negate(a)).size() >= 4);
    let witness_strict = m
        .classes()
        .any(|a| is_admissible(m, a) && m.value_set(m.negate(a)).size() >= 4);
    NonrigidityReport {
        model: m.name().into(),
        nonrigid,
        witness_nonsquare,
        witness_strict,
        agree: nonrigid == witness_nonsquare && witness_nonsquare == witness_strict,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Condition {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RealizabilityVerdict {
    pub group: String,
    pub model: String,
    pub realizable: bool,
    pub witness: Option<Vec<String>>,
    #[serde(skip)]
    pub witness_classes: Option<Vec<SquareClass>>,
    pub conditions: Vec<Condition>,
}

fn enforce_agreement(
    what: &str,
    conditions: &[Condition],
) -> Result<bool, RigidityError> {
    let first = conditions[0].holds;
    if conditions.iter().any(|c| c.holds != first) {
        return Err(RigidityError::Inconsistent {
            what: what.into(),
            details: format!("{conditions:?}"),
        });
    }
    Ok(first)
}

/// Is the span of the given classes all pairwise-independent (dimension =
/// count)?
fn independent(classes: &[SquareClass]) -> bool {
    let mut span = vec![SquareClass::ONE];
    for &c in classes {
        if span.contains(&c) {
            return false;
        }
        let mut next = span.clone();
        for &s in &span {
            next.push(s.product(c));
        }
        span = next;
    }
    true
}

/// Realizability of `G1` over the model: the equivalent conditions are
/// evaluated independently and must agree. Scans run in class order, so the
/// reported witness is deterministic.
pub fn g1_realizability(m: &FieldModel) -> Result<RealizabilityVerdict, RigidityError> {
    let prof = profile(m);
    // A split-symbol pair (a,a), (a,b) with a, b independent.
    let mut witness: Option<(SquareClass, SquareClass)> = None;
    'outer: for a in m.classes() {
        if a.is_one() || !m.symbol(a, a).is_split() {
            continue;
        }
        for b in m.classes() {
            if !independent(&[a, b]) {
                continue;
            }
            if m.symbol(a, b).is_split() {
                witness = Some((a, b));
                break 'outer;
            }
        }
    }
    let sums = m.value_set(SquareClass::ONE);
    // A nonsquare sum of two squares with a large value set of <1,-a>.
    let big_value_set = m.classes().any(|a| {
        !a.is_one() && sums.contains(a) && m.value_set(m.negate(a)).size() >= 4
    });
    let mut pm = ClassSet::EMPTY;
    pm.insert(SquareClass::ONE);
    pm.insert(m.minus_one());
    let sums_beyond_pm = sums.classes.iter().any(|c| !pm.contains(c));
    let nonrigid_and_sums = !prof.field_rigid && sums_beyond_pm;
    let split_by_level = if m.minus_one().is_one() {
        !prof.field_rigid
    } else {
        sums_beyond_pm
    };
    let mut conditions = vec![
        Condition {
            name: "split_symbol_pair".into(),
            holds: witness.is_some(),
        },
        Condition {
            name: "nonsquare_sum_with_big_value_set".into(),
            holds: big_value_set,
        },
        Condition {
            name: "nonrigid_and_sums_beyond_pm_squares".into(),
            holds: nonrigid_and_sums,
        },
        Condition {
            name: "level_split_form".into(),
            holds: split_by_level,
        },
    ];
    if m.is_formally_real() {
        conditions.push(Condition {
            name: "not_pythagorean".into(),
            holds: !m.is_pythagorean(),
        });
    }
    let realizable = enforce_agreement("g1_realizability", &conditions)?;
    Ok(RealizabilityVerdict {
        group: "G1".into(),
        model: m.name().into(),
        realizable,
        witness: witness.map(|(a, b)| vec![m.class_label(a).into(), m.class_label(b).into()]),
        witness_classes: witness.map(|(a, b)| vec![a, b]),
        conditions,
    })
}

/// Realizability of `G2` over the model; same contract as [`g1_realizability`].
pub fn g2_realizability(m: &FieldModel) -> Result<RealizabilityVerdict, RigidityError> {
    let mut witness: Option<(SquareClass, SquareClass, SquareClass)> = None;
    'outer: for a in m.classes() {
        if a.is_one() {
            continue;
        }
        for b in m.classes() {
            if !independent(&[a, b]) || !m.symbol(a, b).is_split() {
                continue;
            }
            for c in m.classes() {
                if independent(&[a, b, c]) && m.symbol(a, c).is_split() {
                    witness = Some((a, b, c));
                    break 'outer;
                }
            }
        }
    }
    // The same condition through value-set membership.
    let mut via_value_sets = false;
    'vs: for a in m.classes() {
        if a.is_one() {
            continue;
        }
        let d = m.value_set(m.negate(a));
        for b in d.classes.iter() {
            if !independent(&[a, b]) {
                continue;
            }
            for c in d.classes.iter() {
                if independent(&[a, b, c]) {
                    via_value_sets = true;
                    break 'vs;
                }
            }
        }
    }
    let size_condition = m.classes().any(|a| {
        if a.is_one() {
            return false;
        }
        let d = m.value_set(m.negate(a)).size();
        d >= 8 || (d == 4 && !m.value_set(SquareClass::ONE).contains(a))
    });
    let conditions = vec![
        Condition {
            name: "independent_triple_with_split_symbols".into(),
            holds: witness.is_some(),
        },
        Condition {
            name: "independent_triple_in_value_set".into(),
            holds: via_value_sets,
        },
        Condition {
            name: "value_set_size_8_or_4_excluding_sums".into(),
            holds: size_condition,
        },
    ];
    let realizable = enforce_agreement("g2_realizability", &conditions)?;
    Ok(RealizabilityVerdict {
        group: "G2".into(),
        model: m.name().into(),
        realizable,
        witness: witness.map(|(a, b, c)| {
            vec![
                m.class_label(a).into(),
                m.class_label(b).into(),
                m.class_label(c).into(),
            ]
        }),
        witness_classes: witness.map(|(a, b, c)| vec![a, b, c]),
        conditions,
    })
}

/// Nonrigidity of the field is equivalent to one of `G1`, `G2` being
/// realizable; evaluates both sides and returns the common value.
pub fn nonrigid_iff_realizable(m: &FieldModel) -> Result<bool, RigidityError> {
    let lhs = !profile(m).field_rigid;
    let rhs = g1_realizability(m)?.realizable || g2_realizability(m)?.realizable;
    if lhs != rhs {
        return Err(RigidityError::Inconsistent {
            what: "nonrigid_iff_realizable".into(),
            details: format!("nonrigid = {lhs}, realizable = {rhs}"),
        });
    }
    Ok(lhs)
}

fn g1_branch(m: &FieldModel, a: SquareClass) -> bool {
    m.symbol(a, a).is_split()
        && m.classes()
            .any(|b| independent(&[a, b]) && m.symbol(a, b).is_split())
}

fn g2_branch(m: &FieldModel, a: SquareClass) -> bool {
    for b in m.classes() {
        if !independent(&[a, b]) || !m.symbol(a, b).is_split() {
            continue;
        }
        for c in m.classes() {
            if independent(&[a, b, c]) && m.symbol(a, c).is_split() {
                return true;
            }
        }
    }
    false
}

/// Nonrigidity of `-a` is equivalent to one of the two tower imbeddings
/// through `F(sqrt(a))` existing; both sides evaluated, result returned.
pub fn nonrigidity_via_imbeddings(m: &FieldModel, a: SquareClass) -> Result<bool, RigidityError> {
    m.check_class(a)?;
    if !is_admissible(m, a) {
        return Err(RigidityError::Precondition(format!(
            "class {} lies in ±F^2",
            m.class_label(a)
        )));
    }
    let lhs = !is_rigid(m, m.negate(a))?;
    let rhs = g1_branch(m, a) || g2_branch(m, a);
    if lhs != rhs {
        return Err(RigidityError::Inconsistent {
            what: "nonrigidity_via_imbeddings".into(),
            details: format!(
                "-{} nonrigid = {lhs}, imbedding witnesses = {rhs}",
                m.class_label(a)
            ),
        });
    }
    Ok(lhs)
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ValuationOutcome {
    /// The model is rigid; the valuation existence theorem does not apply.
    ModelRigid,
    /// No valuation in the menu satisfies both qualifying conditions. This is
    /// a statement about the menu, not a nonexistence claim.
    NoQualifyingValuation,
    Qualified {
        valuation: String,
        two_divisible: bool,
        double_rigid_classes: Vec<String>,
        /// Pointwise: double rigid iff odd valuation parity.
        parity_characterizes_double_rigid: bool,
        /// Not 2-divisible iff a double rigid class exists iff both tower
        /// imbeddings fail for some `±a` pair.
        divisibility_equivalence: bool,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct ValuationReport {
    pub model: String,
    #[serde(flatten)]
    pub outcome: ValuationOutcome,
}

fn qualifies(v: &ValuationData, basic: ClassSet) -> bool {
    v.one_plus_m_in_squares && v.unit_classes == basic
}

/// Scans the valuation menu for one compatible with the basic set
/// (`1 + M` in the squares and `B(F) = units * squares`), then verifies the
/// double-rigidity characterizations against it.
pub fn valuation_diagnostics(m: &FieldModel) -> Result<ValuationReport, RigidityError> {
    let prof = profile(m);
    if prof.field_rigid {
        return Ok(ValuationReport {
            model: m.name().into(),
            outcome: ValuationOutcome::ModelRigid,
        });
    }
    let Some(v) = m.valuations().iter().find(|v| qualifies(v, prof.basic_set)) else {
        return Ok(ValuationReport {
            model: m.name().into(),
            outcome: ValuationOutcome::NoQualifyingValuation,
        });
    };
    let mut double_rigid_classes = Vec::new();
    let mut pointwise = true;
    for c in m.classes() {
        let dr = is_admissible(m, c) && is_double_rigid(m, c).expect("admissible");
        if dr {
            double_rigid_classes.push(m.class_label(c).to_string());
        }
        pointwise &= dr == (v.value_parity(c) != 0);
    }
    let some_double_rigid = !double_rigid_classes.is_empty();
    let imbeddings_fail_somewhere = m.classes().any(|a| {
        is_admissible(m, a)
            && !(g1_branch(m, a) || g2_branch(m, a))
            && !(g1_branch(m, m.negate(a)) || g2_branch(m, m.negate(a)))
    });
    let divisibility_equivalence =
        (!v.two_divisible == some_double_rigid) && (some_double_rigid == imbeddings_fail_somewhere);
    Ok(ValuationReport {
        model: m.name().into(),
        outcome: ValuationOutcome::Qualified {
            valuation: v.name.clone(),
            two_divisible: v.two_divisible,
            double_rigid_classes,
            parity_characterizes_double_rigid: pointwise,
            divisibility_equivalence,
        },
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RankTwoReport {
    pub model: String,
    pub formally_real: bool,
    pub g1_realizable: bool,
    pub items: Vec<Condition>,
    pub consistent: bool,
}

/// The rank-2 trichotomy: `G1` realizable iff nonrigid; for nonreal models
/// iff the 2-torsion Brauer group vanishes; for real models iff uniquely
/// ordered iff not Pythagorean.
pub fn rank_two_suite(m: &FieldModel) -> Result<RankTwoReport, RigidityError> {
    if m.rank() != 2 {
        return Err(RigidityError::Field(FieldError::RankMismatch {
            expected: 2,
            got: m.rank(),
        }));
    }
    let g1 = g1_realizability(m)?.realizable;
    let nonrigid = !profile(m).field_rigid;
    let mut items = vec![Condition {
        name: "g1_iff_nonrigid".into(),
        holds: g1 == nonrigid,
    }];
    if m.is_formally_real() {
        let unique = m.orderings()?.len() == 1;
        items.push(Condition {
            name: "g1_iff_uniquely_ordered".into(),
            holds: g1 == unique,
        });
        items.push(Condition {
            name: "uniquely_ordered_iff_not_pythagorean".into(),
            holds: unique == !m.is_pythagorean(),
        });
    } else {
        let br2_trivial = m.symbol_table_bits().iter().all(|&row| row == 0);
        items.push(Condition {
            name: "g1_iff_br2_trivial".into(),
            holds: g1 == br2_trivial,
        });
    }
    let consistent = items.iter().all(|c| c.holds);
    Ok(RankTwoReport {
        model: m.name().into(),
        formally_real: m.is_formally_real(),
        g1_realizable: g1,
        items,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{
        dyadic2, finite_field, laurent, menu_models, padic, rationals, reals,
    };

    #[test]
    fn padic_units_are_rigid() {
        // p = 5: -1 is a square, so the nonresidue class is admissible.
        let q5 = padic(5).unwrap();
        let u = SquareClass(1);
        assert!(is_rigid(&q5, u).unwrap());
        assert!(profile(&q5).field_rigid);
        // p = 3: the nonresidue *is* the class of -1; rigidity is undefined
        // there, while the ramified classes are rigid.
        let q3 = padic(3).unwrap();
        assert_eq!(q3.minus_one(), SquareClass(1));
        assert!(is_rigid(&q3, SquareClass(1)).is_err());
        assert!(is_rigid(&q3, SquareClass(2)).unwrap());
        assert!(profile(&q3).field_rigid);
        assert!(is_rigid(&q3, SquareClass::ONE).is_err());
    }

    #[test]
    fn dyadic_2_is_not_rigid() {
        let q2 = dyadic2();
        let two = SquareClass(0b010);
        assert_eq!(q2.class_label(two), "2");
        assert!(!is_rigid(&q2, two).unwrap());
        assert_eq!(q2.value_set(two).size(), 4);
        assert!(!profile(&q2).field_rigid);
    }

    #[test]
    fn laurent_uniformizer_is_double_rigid() {
        let l = laurent(dyadic2()).unwrap();
        let t = SquareClass(0b1000);
        assert_eq!(l.class_label(t), "t");
        assert!(is_double_rigid(&l, t).unwrap());
    }

    #[test]
    fn nonrigidity_condition_values() {
        let r = nonrigidity_characterizations(&dyadic2());
        assert!(r.agree && r.nonrigid);
        let r = nonrigidity_characterizations(&padic(3).unwrap());
        assert!(r.agree && !r.nonrigid);
        let r = nonrigidity_characterizations(&reals());
        assert!(r.agree && !r.nonrigid);
    }

    #[test]
    fn g1_dyadic_witness() {
        let v = g1_realizability(&dyadic2()).unwrap();
        assert!(v.realizable);
        let w = v.witness.unwrap();
        // First split-pair in class order: a = 2 with b = -1.
        assert_eq!(w, vec!["2", "-1"]);
        let q2 = dyadic2();
        let sums = q2.value_set(SquareClass::ONE);
        let a = v.witness_classes.unwrap()[0];
        assert!(sums.contains(a) && !a.is_one());
    }

    #[test]
    fn g1_negative_cases() {
        assert!(!g1_realizability(&padic(3).unwrap()).unwrap().realizable);
        assert!(!g1_realizability(&reals()).unwrap().realizable);
        assert!(!g1_realizability(&laurent(reals()).unwrap()).unwrap().realizable);
        assert!(!g1_realizability(&finite_field(5).unwrap()).unwrap().realizable);
    }

    #[test]
    fn g2_dyadic_witness_is_minus_one_2_5() {
        let v = g2_realizability(&dyadic2()).unwrap();
        assert!(v.realizable);
        assert_eq!(v.witness.unwrap(), vec!["-1", "2", "5"]);
    }

    #[test]
    fn g2_rank_2_never_realizable() {
        for m in [padic(3).unwrap(), padic(5).unwrap(), laurent(reals()).unwrap()] {
            assert!(!g2_realizability(&m).unwrap().realizable, "{}", m.name());
        }
    }

    #[test]
    fn rationals_27_realizable_both_ways() {
        let q = rationals(&[2, 7]).unwrap();
        let v1 = g1_realizability(&q).unwrap();
        assert!(v1.realizable);
        let v2 = g2_realizability(&q).unwrap();
        assert!(v2.realizable);
        assert_eq!(v2.witness.unwrap(), vec!["2", "-1", "7"]);
        // (2, 7) is itself a valid split pair for the G1 conditions.
        let two = SquareClass(0b010);
        let seven = SquareClass(0b100);
        assert!(q.symbol(two, two).is_split() && q.symbol(two, seven).is_split());
    }

    #[test]
    fn equivalences_hold_across_the_menu() {
        for m in menu_models() {
            let common = nonrigid_iff_realizable(&m).unwrap();
            let _ = common;
            for a in m.classes().filter(|&a| is_admissible(&m, a)) {
                nonrigidity_via_imbeddings(&m, a).unwrap();
            }
        }
    }

    #[test]
    fn element_nonrigidity_examples() {
        let q2 = dyadic2();
        // The class of -1 is excluded by the theorem's own hypothesis.
        assert!(nonrigidity_via_imbeddings(&q2, q2.minus_one()).is_err());
        // a = 2: nonrigid -2, reachable through the G1 branch.
        let two = SquareClass(0b010);
        assert!(nonrigidity_via_imbeddings(&q2, two).unwrap());
        assert!(g1_branch(&q2, two));
        // a = -2: (a,a) does not split, so only the G2 branch applies.
        let minus_two = SquareClass(0b011);
        assert_eq!(q2.class_label(minus_two), "-2");
        assert!(nonrigidity_via_imbeddings(&q2, minus_two).unwrap());
        assert!(!g1_branch(&q2, minus_two) && g2_branch(&q2, minus_two));
        // The double rigid uniformizer: both branches fail.
        let l = laurent(dyadic2()).unwrap();
        let t = SquareClass(0b1000);
        assert!(!nonrigidity_via_imbeddings(&l, t).unwrap());
    }

    #[test]
    fn valuation_diagnostics_dyadic() {
        let rep = valuation_diagnostics(&dyadic2()).unwrap();
        match rep.outcome {
            ValuationOutcome::Qualified {
                ref valuation,
                two_divisible,
                ref double_rigid_classes,
                parity_characterizes_double_rigid,
                divisibility_equivalence,
            } => {
                assert_eq!(valuation, "trivial");
                assert!(two_divisible);
                assert!(double_rigid_classes.is_empty());
                assert!(parity_characterizes_double_rigid);
                assert!(divisibility_equivalence);
            }
            ref o => panic!("unexpected outcome {o:?}"),
        }
    }

    #[test]
    fn valuation_diagnostics_laurent_dyadic() {
        let rep = valuation_diagnostics(&laurent(dyadic2()).unwrap()).unwrap();
        match rep.outcome {
            ValuationOutcome::Qualified {
                ref valuation,
                two_divisible,
                ref double_rigid_classes,
                parity_characterizes_double_rigid,
                divisibility_equivalence,
            } => {
                assert_eq!(valuation, "t-adic");
                assert!(!two_divisible);
                assert!(double_rigid_classes.contains(&"t".to_string()));
                assert_eq!(double_rigid_classes.len(), 8);
                assert!(parity_characterizes_double_rigid);
                assert!(divisibility_equivalence);
            }
            ref o => panic!("unexpected outcome {o:?}"),
        }
    }

    #[test]
    fn valuation_diagnostics_rationals_and_rigid_models() {
        let rep = valuation_diagnostics(&rationals(&[2, 7]).unwrap()).unwrap();
        match rep.outcome {
            ValuationOutcome::Qualified { ref valuation, ref double_rigid_classes, .. } => {
                assert_eq!(valuation, "trivial");
                assert!(double_rigid_classes.is_empty());
            }
            ref o => panic!("unexpected outcome {o:?}"),
        }
        let rep = valuation_diagnostics(&padic(3).unwrap()).unwrap();
        assert!(matches!(rep.outcome, ValuationOutcome::ModelRigid));
    }

    #[test]
    fn rank_two_cases() {
        // Nonreal rigid: G1 unrealizable and Br2 nontrivial.
        let r = rank_two_suite(&padic(3).unwrap()).unwrap();
        assert!(r.consistent && !r.g1_realizable);
        // Real Pythagorean: two orderings, G1 unrealizable.
        let r = rank_two_suite(&laurent(reals()).unwrap()).unwrap();
        assert!(r.consistent && !r.g1_realizable);
        // Nonreal with trivial Brauer classes but rank 2.
        let r = rank_two_suite(&laurent(finite_field(5).unwrap()).unwrap()).unwrap();
        assert!(r.consistent);
        assert!(rank_two_suite(&dyadic2()).is_err());
    }

    #[test]
    fn monotone_under_prime_set_growth() {
        let small = rationals(&[2, 7]).unwrap();
        let big = rationals(&[2, 3, 7]).unwrap();
        for (s, b) in [
            (g1_realizability(&small).unwrap(), g1_realizability(&big).unwrap()),
            (g2_realizability(&small).unwrap(), g2_realizability(&big).unwrap()),
        ] {
            if s.realizable {
                assert!(b.realizable);
            }
        }
    }
}
