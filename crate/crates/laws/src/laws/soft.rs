//! Soft-set algebra: De Morgan over restricted and product operations, and
//! the lattice laws lifted parameter-wise.

use hfsc_core::{HesitantFuzzySoftSet, InclusionKind};

use crate::gen::{Gen, Rng8};
use crate::instance::Instance;
use crate::law::{ensure, eqv, take, Law, Verdict};

use InclusionKind::*;

fn fgh(i: &Instance) -> (HesitantFuzzySoftSet, HesitantFuzzySoftSet, HesitantFuzzySoftSet) {
    (i.soft_set(0), i.soft_set(1), i.soft_set(2))
}

/// `lhs =_k rhs` on every parameter of `lhs`. The two sides of an
/// absorption law have different parameter sets, so only the left one is
/// compared.
fn equiv_on_lhs(k: InclusionKind, lhs: &HesitantFuzzySoftSet, rhs: &HesitantFuzzySoftSet) -> Result<(), String> {
    for (p, l) in lhs.iter() {
        let r = rhs.get(p).ok_or_else(|| format!("parameter {p} missing on the right"))?;
        if !eqv(k, l, r) {
            return Err(format!("at {p}: {l} ≠{k} {r}"));
        }
    }
    Ok(())
}

fn noop(_: &Gen, _: &mut Rng8, _: &mut Instance) {}

pub fn laws() -> Vec<Law> {
    let mut v = vec![
        Law::holds("soft.de-morgan.restricted-join", "soft-de-morgan", "(F ∪ G)ᶜ = Fᶜ ∩ Gᶜ (restricted)", P, noop, |i| {
            let (f, g, _) = fgh(i);
            let l = take!(f.restricted_union(&g)).complement();
            ensure!(l == take!(f.complement().restricted_intersect(&g.complement())), "mismatch");
            Verdict::Holds
        }),
        Law::holds("soft.de-morgan.restricted-meet", "soft-de-morgan", "(F ∩ G)ᶜ = Fᶜ ∪ Gᶜ (restricted)", P, noop, |i| {
            let (f, g, _) = fgh(i);
            let l = take!(f.restricted_intersect(&g)).complement();
            ensure!(l == take!(f.complement().restricted_union(&g.complement())), "mismatch");
            Verdict::Holds
        }),
        Law::holds("soft.de-morgan.vee", "soft-de-morgan", "(F ∨ G)ᶜ = Fᶜ ∧ Gᶜ", P, noop, |i| {
            let (f, g, _) = fgh(i);
            ensure!(take!(f.vee(&g)).complement() == take!(f.complement().wedge(&g.complement())), "mismatch");
            Verdict::Holds
        }),
        Law::holds("soft.de-morgan.wedge", "soft-de-morgan", "(F ∧ G)ᶜ = Fᶜ ∨ Gᶜ", P, noop, |i| {
            let (f, g, _) = fgh(i);
            ensure!(take!(f.wedge(&g)).complement() == take!(f.complement().vee(&g.complement())), "mismatch");
            Verdict::Holds
        }),
        Law::holds(
            "soft.extended-union.agrees-on-shared",
            "soft-union",
            "the extended union restricted to shared parameters is the restricted union",
            P,
            noop,
            |i| {
                let (f, g, _) = fgh(i);
                let ext = take!(f.extended_union(&g));
                let res = take!(f.restricted_union(&g));
                ensure!(take!(ext.restrict(res.params())) == res, "mismatch on shared parameters");
                for (p, h) in ext.iter() {
                    match (f.get(p), g.get(p)) {
                        (Some(a), None) => ensure!(a == h, "{p} should come from F"),
                        (None, Some(b)) => ensure!(b == h, "{p} should come from G"),
                        _ => {}
                    }
                }
                Verdict::Holds
            },
        ),
    ];

    for k in [P, A, M] {
        v.push(Law::holds(
            format!("soft.idempotent.{k}"),
            "soft-lattice",
            format!("F ∩ F ={k} F and F ∪ F ={k} F"),
            k,
            noop,
            move |i| {
                let f = i.soft_set(0);
                if let Err(e) = equiv_on_lhs(k, &take!(f.restricted_intersect(&f)), &f) {
                    return Verdict::Violated(format!("meet: {e}"));
                }
                if let Err(e) = equiv_on_lhs(k, &take!(f.restricted_union(&f)), &f) {
                    return Verdict::Violated(format!("join: {e}"));
                }
                Verdict::Holds
            },
        ));
    }
    for k in [P, A] {
        v.push(Law::holds(
            format!("soft.absorption.{k}"),
            "soft-lattice",
            format!("(F ∪ G) ∩ F ={k} F and (F ∩ G) ∪ F ={k} F, on the left side's parameters"),
            k,
            noop,
            move |i| {
                let (f, g, _) = fgh(i);
                let l1 = take!(take!(f.restricted_union(&g)).restricted_intersect(&f));
                if let Err(e) = equiv_on_lhs(k, &l1, &f) {
                    return Verdict::Violated(format!("(F ∪ G) ∩ F: {e}"));
                }
                let l2 = take!(take!(f.restricted_intersect(&g)).restricted_union(&f));
                if let Err(e) = equiv_on_lhs(k, &l2, &f) {
                    return Verdict::Violated(format!("(F ∩ G) ∪ F: {e}"));
                }
                Verdict::Holds
            },
        ));
        v.push(Law::holds(
            format!("soft.distributive.{k}"),
            "soft-lattice",
            format!("(F ∪ G) ∩ H ={k} (H ∩ F) ∪ (H ∩ G) and (F ∩ G) ∪ H ={k} (H ∪ F) ∩ (H ∪ G)"),
            k,
            noop,
            move |i| {
                let (f, g, h) = fgh(i);
                let l = take!(take!(f.restricted_union(&g)).restricted_intersect(&h));
                let r = take!(take!(h.restricted_intersect(&f)).restricted_union(&take!(h.restricted_intersect(&g))));
                ensure!(l.params() == r.params(), "parameter sets differ");
                if let Err(e) = equiv_on_lhs(k, &l, &r) {
                    return Verdict::Violated(format!("meet over join: {e}"));
                }
                let l = take!(take!(f.restricted_intersect(&g)).restricted_union(&h));
                let r = take!(take!(h.restricted_union(&f)).restricted_intersect(&take!(h.restricted_union(&g))));
                ensure!(l.params() == r.params(), "parameter sets differ");
                if let Err(e) = equiv_on_lhs(k, &l, &r) {
                    return Verdict::Violated(format!("join over meet: {e}"));
                }
                Verdict::Holds
            },
        ));
    }
    v.push(Law::holds("soft.commutative", "soft-lattice", "F ∩ G = G ∩ F and F ∪ G = G ∪ F", P, noop, |i| {
        let (f, g, _) = fgh(i);
        ensure!(same(&take!(f.restricted_intersect(&g)), &take!(g.restricted_intersect(&f))), "meet differs");
        ensure!(same(&take!(f.restricted_union(&g)), &take!(g.restricted_union(&f))), "join differs");
        Verdict::Holds
    }));
    v.push(Law::holds(
        "soft.associative",
        "soft-lattice",
        "(F ∩ G) ∩ H = F ∩ (G ∩ H) and (F ∪ G) ∪ H = F ∪ (G ∪ H)",
        P,
        noop,
        |i| {
            let (f, g, h) = fgh(i);
            let l = take!(take!(f.restricted_intersect(&g)).restricted_intersect(&h));
            let r = take!(f.restricted_intersect(&take!(g.restricted_intersect(&h))));
            ensure!(same(&l, &r), "meet differs");
            let l = take!(take!(f.restricted_union(&g)).restricted_union(&h));
            let r = take!(f.restricted_union(&take!(g.restricted_union(&h))));
            ensure!(same(&l, &r), "join differs");
            Verdict::Holds
        },
    ));
    v
}

/// Equality as maps: parameter order may differ between the two sides.
fn same(a: &HesitantFuzzySoftSet, b: &HesitantFuzzySoftSet) -> bool {
    a.len() == b.len() && a.iter().all(|(p, h)| b.get(p) == Some(h))
}
