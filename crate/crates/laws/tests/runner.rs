use std::collections::BTreeSet;

use hfsc_core::InclusionKind;
use hfsc_laws::law::Verdict;
use hfsc_laws::{coverage, registry, run_laws, Bounds, Expectation, Instance, Law, Status};

fn ids(it: impl Iterator<Item = String>) -> BTreeSet<String> {
    it.collect()
}

#[test]
fn ids_are_unique_and_descriptive() {
    let laws = registry();
    let set: BTreeSet<_> = laws.iter().map(|l| l.id.as_str()).collect();
    assert_eq!(set.len(), laws.len());
    for l in &laws {
        assert!(l.id.chars().all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '.' || c == '-'), "{}", l.id);
        // no citation-style ids such as "prop-3" or "ex3.19"
        for seg in l.id.split(['.', '-']) {
            let head = seg.trim_end_matches(|c: char| c.is_ascii_digit());
            assert!(head == seg || !["ex", "prop", "thm", "def", "table"].contains(&head), "{}", l.id);
        }
        assert!(!l.statement.is_empty());
    }
}

#[test]
fn coverage_index_partitions_the_registry() {
    let laws = registry();
    let cov = coverage(&laws);
    let total: usize = cov.values().map(Vec::len).sum();
    assert_eq!(total, laws.len());
    for g in ["inclusion", "strictness", "crisp-approximation", "hesitant-approximation"] {
        assert!(cov.keys().any(|k| k.starts_with(g)), "group {g} missing: {:?}", cov.keys());
    }
}

#[test]
fn four_strict_witnesses() {
    let w = ids(registry().into_iter().filter(|l| l.expect == Expectation::StrictWitness).map(|l| l.id));
    let want = ids(
        ["witness.crisp-join.a", "witness.crisp-meet.t", "witness.crisp-fold-join.p-prefix", "witness.crisp-fold-join.n-prefix"]
            .map(String::from)
            .into_iter(),
    );
    assert_eq!(w, want);
}

#[test]
fn empty_registry_gives_empty_report() {
    let r = run_laws(&[], 1, Bounds::default(), 10);
    assert!(r.laws.is_empty());
    assert_eq!(r.exit_code(), 0);
}

/// The seed-1 outcome: everything passes except claims refuted by a frozen
/// counterexample and the finite-prefix witnesses, and only the t-bracketing
/// laws are vacuous (their hypothesis is unsatisfiable).
#[test]
fn seed_one_outcome() {
    let r = run_laws(&registry(), 1, Bounds::default(), 100);
    let failed = ids(r.failures().map(|l| l.id.clone()));
    let want = ids(
        [
            "crisp.m.lower-extremes",
            "crisp.m.upper-extremes",
            "crisp.s.lower-extremes",
            "crisp.s.upper-extremes",
            "nbhd.defined.a",
            "witness.crisp-fold-join.n-prefix",
            "witness.crisp-fold-join.p-prefix",
        ]
        .map(String::from)
        .into_iter(),
    );
    assert_eq!(failed, want);
    let vacuous = ids(r.laws.iter().filter(|l| l.status == Status::Vacuous).map(|l| l.id.clone()));
    assert_eq!(vacuous, ids(["approx.t.iterated-sandwich", "approx.t.sandwich"].map(String::from).into_iter()));
    assert_eq!(r.exit_code(), 1);
    for f in r.failures() {
        assert!(f.failure.is_some());
    }
}

#[test]
fn reports_are_deterministic() {
    let laws = registry();
    let a = run_laws(&laws, 7, Bounds::default(), 40);
    let b = run_laws(&laws, 7, Bounds::default(), 40);
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.to_text(), b.to_text());
    let c = run_laws(&laws, 8, Bounds::default(), 40);
    assert_eq!(c.laws.len(), a.laws.len());
}

#[test]
fn false_law_is_shrunk_to_a_small_instance() {
    // false whenever some cell of F has two or more degrees
    let law = Law::holds(
        "test.single-degree-cells",
        "test",
        "every cell of F is a single degree",
        InclusionKind::P,
        |_, _, _| {},
        |i: &Instance| {
            let long = i.soft[0].rows.iter().flatten().any(|e| e.len() > 1);
            if long {
                Verdict::Violated("long cell".into())
            } else {
                Verdict::Holds
            }
        },
    );
    let r = run_laws(&[law], 3, Bounds::default(), 50);
    let f = r.laws[0].failure.as_ref().expect("fails");
    let i = &f.instance;
    assert_eq!(i.objects, 1);
    assert_eq!(i.soft[0].params.len(), 1);
    assert_eq!(i.soft[0].rows[0][0].len(), 2);
    assert!(f.shrink_steps > 0 || i.beta.len() == 1);
}

#[test]
fn vacuous_law_is_not_a_failure() {
    let law = Law::holds("test.never", "test", "hypothesis never met", InclusionKind::P, |_, _, _| {}, |_| Verdict::Vacuous);
    let r = run_laws(&[law], 1, Bounds::default(), 20);
    assert_eq!(r.laws[0].status, Status::Vacuous);
    assert_eq!(r.exit_code(), 0);
}

#[test]
fn witness_with_unmet_premises_fails() {
    let inst = Instance::with_soft(InclusionKind::P, "0.5", &[("e1", &["0.5"])]);
    let law = Law::witness("test.witness", "test", "nothing to witness", inst, |_| Verdict::Vacuous);
    let r = run_laws(&[law], 1, Bounds::default(), 5);
    assert_eq!(r.laws[0].status, Status::Fail);
}

#[test]
fn regressions_run_before_generated_cases() {
    let inst = Instance::with_soft(InclusionKind::P, "0.5", &[("e1", &["0.5"]), ("e2", &["0.3"])]);
    let law = Law::holds("test.one-param", "test", "F has one parameter", InclusionKind::P, |_, _, _| {}, |i| {
        if i.soft[0].params.len() > 1 && i.soft[0].params.contains(&"e2".to_string()) && i.objects == 1 {
            Verdict::Violated("two".into())
        } else {
            Verdict::Holds
        }
    })
    .with_regression(inst);
    let r = run_laws(&[law], 1, Bounds::default(), 5);
    let f = r.laws[0].failure.as_ref().unwrap();
    assert_eq!(f.case, None);
}

#[test]
fn text_report_lists_counterexamples() {
    let r = run_laws(&registry(), 1, Bounds::default(), 5);
    let t = r.to_text();
    assert!(t.contains("FAIL    nbhd.defined.a"));
    assert!(t.contains("F(e1) = [{0.9,0.1}]"));
    assert!(t.contains("VACUOUS approx.t.sandwich"));
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["seed"], 1);
    assert_eq!(v["laws"].as_array().unwrap().len(), r.laws.len());
}
