//! Property tests over the algebraic kernels: field axioms for tower
//! arithmetic, group axioms across constructions, and isomorphism-search
//! sanity on the zoo.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use quadgal_core::fp::{named_group, zoo};
use quadgal_core::group::{is_isomorphic, GroupElement};
use quadgal_core::tower::{TowerElement, TowerField};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-12i64..=12, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn biquadratic_element() -> impl Strategy<Value = TowerElement> {
    proptest::collection::vec(small_rational(), 4)
        .prop_map(|c| TowerElement::from_coeffs(2, c))
}

fn e27() -> TowerField {
    TowerField::rationals()
        .extend_rational(2)
        .unwrap()
        .extend_rational(7)
        .unwrap()
}

proptest! {
    #[test]
    fn tower_field_axioms(x in biquadratic_element(),
                          y in biquadratic_element(),
                          z in biquadratic_element()) {
        let t = e27();
        // Distributivity and commutativity.
        let lhs = t.mul(&t.add(&x, &y), &z);
        let rhs = t.add(&t.mul(&x, &z), &t.mul(&y, &z));
        prop_assert!(t.equals(&lhs, &rhs));
        prop_assert!(t.equals(&t.mul(&x, &y), &t.mul(&y, &x)));
        // Associativity of multiplication.
        let lhs = t.mul(&t.mul(&x, &y), &z);
        let rhs = t.mul(&x, &t.mul(&y, &z));
        prop_assert!(t.equals(&lhs, &rhs));
        // Multiplicative inverses.
        if !x.is_zero() {
            let inv = t.inverse(&x).unwrap();
            let one = t.constant(BigRational::from_integer(1.into()));
            prop_assert!(t.equals(&t.mul(&x, &inv), &one));
        }
    }

    #[test]
    fn norms_are_multiplicative(x in biquadratic_element(), y in biquadratic_element()) {
        let t = e27();
        let nx = t.relative_norm(&x, 0);
        let ny = t.relative_norm(&y, 0);
        let nxy = t.relative_norm(&t.mul(&x, &y), 0);
        prop_assert_eq!(
            nxy.as_rational().unwrap(),
            &(nx.as_rational().unwrap() * ny.as_rational().unwrap())
        );
    }

    #[test]
    fn sqrt_of_squares_recovers_up_to_sign(x in biquadratic_element()) {
        let t = e27();
        let sq = t.square(&x);
        let s = t.sqrt(&sq).expect("squares have roots");
        prop_assert!(t.equals(&s, &x) || t.equals(&s, &t.neg(&x)));
    }

    #[test]
    fn conjugation_is_multiplicative(x in biquadratic_element(),
                                     y in biquadratic_element(),
                                     mask in 0u32..4) {
        let t = e27();
        let cx = t.conjugate_masked(&x, mask).unwrap();
        let cy = t.conjugate_masked(&y, mask).unwrap();
        let cxy = t.conjugate_masked(&t.mul(&x, &y), mask).unwrap();
        prop_assert!(t.equals(&cxy, &t.mul(&cx, &cy)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn group_axioms_on_random_zoo_triples(which in 0usize..13, seed in 0u64..10_000) {
        let members = zoo();
        let (_, g) = &members[which];
        let n = g.order() as u64;
        let a = GroupElement(((seed * 7919) % n) as u16);
        let b = GroupElement(((seed * 104_729) % n) as u16);
        let c = GroupElement(((seed * 1_299_709) % n) as u16);
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(a, g.inverse(a)), g.identity());
        prop_assert_eq!(g.mul(g.identity(), a), a);
        // Lagrange for cyclic subgroups.
        prop_assert_eq!(g.order() % g.element_order(a), 0);
    }

    #[test]
    fn quotient_by_random_normal_subgroup(seed in 0u64..200) {
        let g = named_group("DwC").unwrap();
        let normals = g.normal_subgroups().unwrap();
        let n = &normals[(seed as usize) % normals.len()];
        let q = g.quotient(n).unwrap();
        prop_assert_eq!(q.group.order() * n.order(), g.order());
        prop_assert_eq!(q.map.kernel(), n.clone());
    }
}

#[test]
fn isomorphism_is_reflexive_and_symmetric_on_the_zoo() {
    let members = zoo();
    for (name, g) in &members {
        assert!(is_isomorphic(g, g).unwrap(), "{name} not self-isomorphic");
    }
    for (an, a) in &members {
        for (bn, b) in &members {
            let ab = is_isomorphic(a, b).unwrap();
            let ba = is_isomorphic(b, a).unwrap();
            assert_eq!(ab, ba, "asymmetry between {an} and {bn}");
            if an == bn {
                assert!(ab);
            }
        }
    }
}
