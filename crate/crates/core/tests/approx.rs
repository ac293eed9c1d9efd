mod common;

use common::*;
use hfsc_core::{CoveringSpace, Error, HesitantFuzzySet, InclusionKind, ObjectSet};
use proptest::prelude::*;

use InclusionKind::*;

fn target() -> HesitantFuzzySet {
    hfs(&object_table().universe().clone(), &["0.2,0.1", "0.2,0.1", "0.1,0.1", "0.2,0.1", "0.2,0.2"])
}

fn space(kind: InclusionKind, params: &[&str], beta: &str) -> CoveringSpace {
    CoveringSpace::new(restrict(&object_table(), params), h(beta), kind).unwrap()
}

fn subset(s: &CoveringSpace, names: &[&str]) -> ObjectSet {
    ObjectSet::from_names(s.universe().clone(), names.iter().copied()).unwrap()
}

#[test]
fn p_hesitant_pair() {
    let s = space(P, &["e6", "e7"], "0.5,0.3,0.2");
    let x = target();
    let lower = s.hesitant_lower(&x).unwrap();
    let upper = s.hesitant_upper(&x).unwrap();
    for i in 0..5 {
        assert_eq!(*lower.at(i), h("0.3,0.3,0.3,0.3,0.2,0.2"));
        assert_eq!(*upper.at(i), h("0.2,0.2,0.2,0.2,0.2"));
    }
}

#[test]
fn coinciding_kinds_at_first_object() {
    let x = target();
    for k in [A, S, N] {
        let s = space(k, &["e6", "e7"], "0.5,0.3,0.2");
        assert_eq!(*s.hesitant_lower(&x).unwrap().at(0), h("0.3,0.3,0.3,0.3,0.2,0.2"), "kind {k}");
        assert_eq!(*s.hesitant_upper(&x).unwrap().at(0), h("0.2,0.2,0.2,0.2,0.2"), "kind {k}");
    }
    // under M the second parameter also qualifies at x1, so the neighborhood shrinks
    let s = space(M, &["e6", "e7"], "0.5,0.3,0.2");
    assert_eq!(s.qualifying(0), vec![0, 1]);
    assert_eq!(*s.hesitant_lower(&x).unwrap().at(0), h("0.7,0.7,0.7,0.7,0.6,0.6"));
    assert_eq!(*s.hesitant_upper(&x).unwrap().at(0), h("0.2,0.2,0.2,0.2,0.2,0.2,0.2"));
}

#[test]
fn t_lower_sixteen_degrees() {
    let s = space(T, &["e6", "e8"], "0.5,0.3,0.2");
    let x = target();
    assert_eq!(*s.hesitant_lower(&x).unwrap().at(0), h("0.5,0.5,0.5,0.5,0.5,0.5,0.5,0.4,0.4,0.4,0.3,0.3,0.3,0.3,0.3,0.2"));
    assert_eq!(*s.hesitant_upper(&x).unwrap().at(0), h("0.2,0.2,0.2,0.2,0.2"));
}

#[test]
fn crisp_pairs() {
    let beta = "0.5,0.4,0.3";
    let s = space(P, &["e1", "e2"], beta);
    let x = subset(&s, &["x1", "x2"]);
    assert!(s.crisp_lower(&x).unwrap().is_empty());
    assert_eq!(s.crisp_upper(&x).unwrap(), ObjectSet::all(s.universe().clone()));

    // the A neighborhood of x1 is {x1,x3}, so x1 is not in the lower approximation
    let s = space(A, &["e1", "e2"], beta);
    assert!(s.crisp_lower(&x).unwrap().is_empty());
    assert_eq!(s.crisp_upper(&x).unwrap(), ObjectSet::all(s.universe().clone()));

    for (k, params) in [(T, ["e6", "e8"]), (N, ["e6", "e7"])] {
        let s = space(k, &params, beta);
        assert!(s.crisp_lower(&x).unwrap().is_empty());
        assert_eq!(s.crisp_upper(&x).unwrap().len(), 5);
    }
}

#[test]
fn m_and_s_sandwich_failures() {
    let beta = "0.5,0.4,0.3";
    let s = space(M, &["e3", "e4"], beta);
    let x = subset(&s, &["x1", "x2", "x4", "x5"]);
    assert_eq!(s.crisp_neighborhood("x3").unwrap().defined().unwrap().to_string(), "{x1,x4,x5}");
    assert!(s.crisp_lower(&x).unwrap().contains(2));
    assert!(!s.crisp_upper(&subset(&s, &["x3"])).unwrap().contains(2));

    let s = space(S, &["e4", "e9"], beta);
    let x = subset(&s, &["x1", "x2", "x3", "x4"]);
    assert_eq!(s.crisp_neighborhood("x5").unwrap().defined().unwrap().to_string(), "{x4}");
    assert!(s.crisp_lower(&x).unwrap().contains(4));
    assert!(!s.crisp_upper(&subset(&s, &["x5"])).unwrap().contains(4));
}

#[test]
fn identity_targets() {
    let s = space(P, &["e1", "e2"], "0.5,0.4,0.3");
    let u = s.universe().clone();
    let full = HesitantFuzzySet::full(u.clone());
    let empty = HesitantFuzzySet::empty(u.clone());
    assert!(s.hesitant_lower(&full).unwrap().equiv(N, &full).unwrap());
    assert!(s.hesitant_upper(&empty).unwrap().equiv(N, &empty).unwrap());
    let all = ObjectSet::all(u.clone());
    let report = s.approx_report(&full, &all).unwrap();
    assert_eq!(report.crisp.lower, all);
    assert_eq!(report.crisp.upper, all);
    assert_eq!(report.params, ["e1", "e2"]);
    assert!(s.crisp_upper(&ObjectSet::none(u)).unwrap().is_empty());
}

#[test]
fn undefined_neighborhood_rejected() {
    let s = space(T, &["e4", "e5"], "0.5,0.4,0.3");
    let err = s.hesitant_lower(&target()).unwrap_err();
    assert_eq!(err, Error::UndefinedNeighborhood("x1".into()));
    assert!(s.crisp_upper(&ObjectSet::all(s.universe().clone())).is_err());
}

fn oracle_lower(nb: &[Vec<u32>], x: &[Vec<u32>]) -> Vec<u32> {
    let terms: Vec<_> = nb.iter().zip(x).map(|(s, v)| oracle::union(&oracle::complement(s), v)).collect();
    terms[1..].iter().fold(terms[0].clone(), |acc, t| oracle::intersect(&acc, t))
}

fn oracle_upper(nb: &[Vec<u32>], x: &[Vec<u32>]) -> Vec<u32> {
    let terms: Vec<_> = nb.iter().zip(x).map(|(s, v)| oracle::intersect(s, v)).collect();
    terms[1..].iter().fold(terms[0].clone(), |acc, t| oracle::union(&acc, t))
}

proptest! {
    #![proptest_config(cfg(256))]

    #[test]
    fn folds_match_oracle(s in arb_space(4, 3), xt in arb_target(4), mask in arb_mask(4)) {
        let nbs = oracle_neighborhoods(&s);
        prop_assume!(nbs.iter().all(Option::is_some));
        let u = s.universe().clone();
        let x = HesitantFuzzySet::new(u.clone(), xt.iter().map(|t| elem(t)).collect()).unwrap();
        let xc = ObjectSet::from_mask(u, mask.clone());
        let report = s.approx_report(&x, &xc).unwrap();
        for (i, nb) in nbs.iter().enumerate() {
            let (fz, cr) = nb.as_ref().unwrap();
            prop_assert_eq!(tenths_of(report.hesitant.lower.at(i)), oracle_lower(fz, &xt));
            prop_assert_eq!(tenths_of(report.hesitant.upper.at(i)), oracle_upper(fz, &xt));
            let sub = cr.iter().zip(&mask).all(|(&c, &m)| !c || m);
            let meets = cr.iter().zip(&mask).any(|(&c, &m)| c && m);
            prop_assert_eq!(report.crisp.lower.contains(i), sub);
            prop_assert_eq!(report.crisp.upper.contains(i), meets);
        }
    }

    #[test]
    fn duality(s in arb_space(4, 3), xt in arb_target(4), mask in arb_mask(4)) {
        prop_assume!(s.neighborhood_table().all_defined());
        let u = s.universe().clone();
        let x = HesitantFuzzySet::new(u.clone(), xt.iter().map(|t| elem(t)).collect()).unwrap();
        prop_assert_eq!(s.hesitant_lower(&x.complement()).unwrap(), s.hesitant_upper(&x).unwrap().complement());
        prop_assert_eq!(s.hesitant_upper(&x.complement()).unwrap(), s.hesitant_lower(&x).unwrap().complement());
        let xc = ObjectSet::from_mask(u, mask);
        prop_assert_eq!(s.crisp_lower(&xc.complement()).unwrap(), s.crisp_upper(&xc).unwrap().complement());
        prop_assert_eq!(s.crisp_upper(&xc.complement()).unwrap(), s.crisp_lower(&xc).unwrap().complement());
    }
}
