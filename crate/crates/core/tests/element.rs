mod common;

use common::*;
use hfsc_core::{HesitantElement, InclusionKind};
use num_rational::Ratio;
use proptest::prelude::*;

use InclusionKind::*;

#[test]
fn bounds() {
    assert_eq!(h("0.9,0.2").lower(), d("0.2"));
    assert_eq!(h("0.5").lower(), d("0.5"));
    assert_eq!(h("0.7,0.5,0.5").lower(), d("0.5"));
    assert_eq!(h("0.9,0.2").upper(), d("0.9"));
    assert_eq!(h("0.5").upper(), d("0.5"));
    assert_eq!(h("0.6,0.6,0.5").upper(), d("0.6"));
}

#[test]
fn means_are_exact() {
    assert_eq!(h("0.9,0.2").mean(), Ratio::new(55, 100));
    assert_eq!(h("0.6,0.6,0.5").mean(), Ratio::new(17, 30));
    assert_eq!(h("0.4,0.4").mean(), Ratio::new(2, 5));
    assert!(h("0.9,0.2").included_in(M, &h("0.6,0.6,0.5")));
    assert!(!h("0.6,0.6,0.5").included_in(M, &h("0.9,0.2")));
}

#[test]
fn union_examples() {
    assert_eq!(h("0.2,0.3,0.4").union(&h("0.2,0.4,0.5")), h("0.5,0.4,0.4,0.3,0.2,0.2"));
    assert_eq!(h("1,1,0.2").union(&h("1,1,1")), h("1,1,1,1,1"));
    let a = h("0.6,0.3,0.3");
    let aa = a.union(&a);
    assert_eq!(aa, h("0.6,0.6,0.3,0.3,0.3,0.3"));
    for k in [P, A, M] {
        assert!(aa.equiv(k, &a));
    }
}

#[test]
fn intersect_examples() {
    assert_eq!(h("0.2,0.3,0.4").intersect(&h("0.2,0.4,0.5")), h("0.4,0.4,0.3,0.2,0.2"));
    assert_eq!(h("0.4,0.4").intersect(&h("0.5,0.3")), h("0.4,0.4,0.3"));
    assert_eq!(h("0.6,0.6").intersect(&h("0.2,0.1")), h("0.2,0.1"));
}

#[test]
fn complement_examples() {
    assert_eq!(h("0.6,0.6").complement(), h("0.4,0.4"));
    assert_eq!(h("0.5").complement(), h("0.5"));
    assert_eq!(h("0.8,0.7").complement(), h("0.3,0.2"));
}

#[test]
fn inclusion_examples() {
    assert!(h("0.6,0.6,0.5").included_in(P, &h("0.9,0.2")));
    assert!(h("0.6,0.6,0.5").included_in(A, &h("0.7,0.5,0.5")));
    assert!(h("0.7,0.5,0.5").included_in(S, &h("0.8,0.6,0.5")));
    assert!(h("0.9,0.2").included_in(T, &h("0.9,0.3,0.1")));
    assert!(h("0.7,0.5,0.5").included_in(N, &h("0.9,0.8,0.7")));
    let x = h("0.6,0.4");
    assert!(!x.included_in(T, &x));
}

#[test]
fn sot_examples() {
    assert!(h("0.9,0.2").included_in_sot(&h("0.9,0.3,0.1")));
    let x = h("0.7,0.1,0.1");
    assert!(x.included_in_sot(&x));
    assert!(!h("0.5,0.1").included_in_sot(&h("0.4,0.3")));
}

#[test]
fn n_reflexive_only_on_constants() {
    assert!(h("0.3,0.3").included_in(N, &h("0.3,0.3")));
    assert!(!h("0.4,0.3").included_in(N, &h("0.4,0.3")));
}

proptest! {
    #![proptest_config(cfg(512))]

    #[test]
    fn matches_oracle(a in tenths_vec(5), b in tenths_vec(5), k in arb_kind()) {
        let (x, y) = (elem(&a), elem(&b));
        prop_assert_eq!(tenths_of(&x.union(&y)), oracle::union(&a, &b));
        prop_assert_eq!(tenths_of(&x.intersect(&y)), oracle::intersect(&a, &b));
        prop_assert_eq!(tenths_of(&x.complement()), oracle::complement(&a));
        prop_assert_eq!(x.included_in(k, &y), oracle::includes(k, &a, &b));
    }

    #[test]
    fn outputs_stay_descending(a in arb_elem(), b in arb_elem()) {
        for r in [a.union(&b), a.intersect(&b), a.complement()] {
            prop_assert!(r.degrees().windows(2).all(|w| w[0] >= w[1]));
            prop_assert!(r.len() >= 1);
        }
    }

    #[test]
    fn commutative_and_associative(a in arb_elem(), b in arb_elem(), c in arb_elem()) {
        prop_assert_eq!(a.union(&b), b.union(&a));
        prop_assert_eq!(a.intersect(&b), b.intersect(&a));
        let orders = [[&a, &b, &c], [&a, &c, &b], [&b, &a, &c], [&b, &c, &a], [&c, &a, &b], [&c, &b, &a]];
        let u0 = a.union(&b).union(&c);
        let i0 = a.intersect(&b).intersect(&c);
        for [x, y, z] in orders {
            prop_assert_eq!(&x.union(y).union(z), &u0);
            prop_assert_eq!(&x.union(&y.union(z)), &u0);
            prop_assert_eq!(&x.intersect(y).intersect(z), &i0);
        }
    }

    #[test]
    fn complement_involution_and_de_morgan(a in arb_elem(), b in arb_elem()) {
        prop_assert_eq!(a.complement().complement(), a.clone());
        prop_assert_eq!(a.intersect(&b).complement(), a.complement().union(&b.complement()));
        prop_assert_eq!(a.union(&b).complement(), a.complement().intersect(&b.complement()));
    }

    #[test]
    fn transitivity(a in arb_elem(), b in arb_elem(), c in arb_elem(), k in arb_kind()) {
        if a.included_in(k, &b) && b.included_in(k, &c) {
            prop_assert!(a.included_in(k, &c));
        }
    }

    #[test]
    fn implication_chain(a in arb_elem(), b in arb_elem()) {
        if a.included_in(S, &b) {
            prop_assert!(a.included_in(A, &b));
            prop_assert!(a.included_in(M, &b));
        }
        if a.included_in(A, &b) { prop_assert!(a.included_in(P, &b)); }
        if a.included_in(T, &b) { prop_assert!(a.included_in(P, &b)); }
        if a.included_in(N, &b) { prop_assert!(a.included_in_sot(&b)); }
    }

    #[test]
    fn reflexivity(a in arb_elem()) {
        for k in [P, A, M, S] {
            prop_assert!(a.included_in(k, &a));
        }
        prop_assert!(!a.included_in(T, &a));
        prop_assert_eq!(a.included_in(N, &a), a.is_constant());
    }

    #[test]
    fn s_equality_is_multiset_equality(a in arb_elem(), b in arb_elem()) {
        prop_assert_eq!(a.equiv(S, &b), a == b);
    }

    #[test]
    fn n_equality_forces_one_value(a in arb_elem(), b in arb_elem()) {
        if a.equiv(N, &b) {
            prop_assert!(a.degrees().iter().chain(b.degrees()).all(|&g| g == a.upper()));
        }
    }

    #[test]
    fn complement_antitone(a in arb_elem(), b in arb_elem()) {
        for k in [A, M, N] {
            if a.included_in(k, &b) {
                prop_assert!(b.complement().included_in(k, &a.complement()));
            }
        }
        if a.included_in(S, &b) {
            prop_assert!(b.complement().included_in_sot(&a.complement()));
        }
    }

    #[test]
    fn bound_identities(a in arb_elem(), b in arb_elem()) {
        prop_assert_eq!(a.union(&b).lower(), a.lower().max(b.lower()));
        prop_assert_eq!(a.union(&b).upper(), a.upper().max(b.upper()));
        prop_assert_eq!(a.intersect(&b).upper(), a.upper().min(b.upper()));
        prop_assert_eq!(a.intersect(&b).lower(), a.lower().min(b.lower()));
    }

    #[test]
    fn serde_round_trip(a in arb_elem()) {
        let json = serde_json::to_string(&a).unwrap();
        let back: HesitantElement = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, a);
    }
}

#[test]
fn deserializes_any_order_and_numbers() {
    let a: HesitantElement = serde_json::from_str(r#"["0.2", 0.5, "0.3"]"#).unwrap();
    assert_eq!(a, h("0.5,0.3,0.2"));
    assert!(serde_json::from_str::<HesitantElement>("[]").is_err());
}
