//! Fixed constructions showing that one-sided crisp neighborhood laws can
//! be strict. F's rows hold the fuzzy neighborhoods' values at one object z
//! (named x1 here), so the crisp neighborhoods at z are read per row.

use hfsc_core::{crisp_of, Degree, HesitantElement, HesitantFuzzySet, InclusionKind};

use crate::instance::{Instance, SoftRows};
use crate::law::{ensure, take, Law, Verdict};

use InclusionKind::*;

#[derive(Clone, Copy)]
enum Op {
    Join,
    Meet,
}

/// z lies in the crisp set of the combined neighborhoods but in none of the
/// individual crisp neighborhoods.
fn strict_at_z(i: &Instance, op: Op) -> Verdict {
    let (k, beta) = (i.kind, &i.beta);
    let rows = i.family();
    let combined = match op {
        Op::Join => take!(hfsc_core::family_union(&rows)),
        Op::Meet => take!(hfsc_core::family_intersect(&rows)),
    };
    let members: Vec<bool> = rows.iter().map(|r| crisp_of(k, beta, r).contains(0)).collect();
    let inside = crisp_of(k, beta, &combined).contains(0);
    ensure!(members.iter().all(|m| !m), "z already belongs to some individual crisp neighborhood");
    ensure!(
        inside,
        "z is outside the crisp set of the combined neighborhood {}, so the containment is an equality here",
        combined
    );
    Verdict::Holds
}

/// `0.5(1 - 1/i)` on the 10^-9 grid, rounded down.
fn prefix_degree(i: u64) -> Degree {
    Degree::floor_ratio(i - 1, 2 * i, hfsc_core::MAX_PRECISION).expect("in range")
}

fn prefix_instance(kind: InclusionKind, n: u64) -> Instance {
    let rows = (1..=n).map(|i| vec![HesitantElement::singleton(prefix_degree(i))]).collect();
    let f = SoftRows { params: (1..=n).map(|i| format!("sn-x{i}")).collect(), rows };
    let mut inst = Instance::with_soft(kind, "0.5", &[("e1", &["0.5"])]);
    inst.soft = vec![f.clone(), f.clone(), f];
    inst
}

const PREFIX: u64 = 10;

pub fn laws() -> Vec<Law> {
    let a_join = Instance::with_soft(A, "0.5,0.4,0.3", &[("sn-x1", &["0.5,0.1"]), ("sn-x2", &["0.4,0.3"])]);
    let t_meet = Instance::with_soft(T, "0.5,0.4,0.3", &[("sn-x1", &["0.5,0.3,0.1"]), ("sn-x2", &["0.5,0.4,0.1"])]);
    let mut v = vec![
        Law::witness(
            "witness.crisp-join.a",
            "strictness",
            "the union of crisp a-neighborhoods can be strictly smaller than the crisp set of the union",
            a_join,
            |i| strict_at_z(i, Op::Join),
        ),
        Law::witness(
            "witness.crisp-meet.t",
            "strictness",
            "the intersection of crisp t-neighborhoods can be strictly smaller than the crisp set of the intersection",
            t_meet,
            |i| strict_at_z(i, Op::Meet),
        ),
    ];
    for (k, tag) in [(P, "p"), (N, "n")] {
        v.push(Law::witness(
            format!("witness.crisp-fold-join.{tag}-prefix"),
            "strictness",
            format!("neighborhoods with bound 0.5(1-1/i), i = 1..{PREFIX}, make the {tag}-union law strict"),
            prefix_instance(k, PREFIX),
            |i| match strict_at_z(i, Op::Join) {
                Verdict::Violated(m) => Verdict::Violated(format!(
                    "{m}; over any finite prefix the combined bound is the largest member's, \
                     so strictness needs the limit 0.5 which no finite family attains"
                )),
                v => v,
            },
        ));
        v.push(Law::holds(
            format!("witness.prefix-limit.{tag}"),
            "strictness",
            format!("for the 0.5(1-1/i) family under {tag}: every finite prefix excludes z, the bounds strictly increase, and the limit {{0.5}} admits z"),
            k,
            move |_, _, i| *i = prefix_instance(k, PREFIX),
            |i| {
                let rows = i.family();
                let bound = |h: &HesitantFuzzySet| match i.kind {
                    N => h.at(0).lower(),
                    _ => h.at(0).upper(),
                };
                for w in rows.windows(2) {
                    ensure!(bound(&w[0]) < bound(&w[1]), "bounds do not increase");
                }
                for n in 1..=rows.len() {
                    let u = take!(hfsc_core::family_union(&rows[..n]));
                    ensure!(!crisp_of(i.kind, &i.beta, &u).contains(0), "prefix of length {n} already admits z");
                }
                let limit = HesitantFuzzySet::constant(i.universe(), HesitantElement::singleton(Degree::tenths(5)));
                ensure!(crisp_of(i.kind, &i.beta, &limit).contains(0), "the limit does not admit z");
                Verdict::Holds
            },
        ));
    }
    v
}
