//! Approximation laws: the hesitant suites per kind, threshold monotonicity,
//! the crisp suites, and agreement of spaces with equal crisp neighborhoods.

use hfsc_core::{Degree, HesitantElement, HesitantFuzzySet, InclusionKind, NeighborhoodTable, ObjectSet};
use rand::Rng;

use crate::gen::{Gen, Rng8};
use crate::instance::{Instance, SoftRows};
use crate::law::{ensure, eqv, need, show, show_set, sub, take, Law, Verdict};
use crate::laws::sets::lift;

use InclusionKind::*;

/// Inclusion used in hypotheses and in conclusions of a kind's suite.
fn suite(k: InclusionKind) -> (InclusionKind, InclusionKind) {
    match k {
        P => (P, P),
        A => (A, A),
        M => (M, M),
        S => (S, A),
        T => (T, P),
        N => (N, A),
    }
}

fn covering(g: &Gen, rng: &mut Rng8, i: &mut Instance) {
    g.make_space(rng, i, true);
}

fn lo(t: &NeighborhoodTable, x: &HesitantFuzzySet) -> Option<HesitantFuzzySet> {
    t.hesitant_lower(x).ok()
}

fn up(t: &NeighborhoodTable, x: &HesitantFuzzySet) -> Option<HesitantFuzzySet> {
    t.hesitant_upper(x).ok()
}

/// Raise F's degrees into [0.5, 1] so SN_x(x) tends to sit above its own
/// complement, which the bracketing hypothesis needs.
fn fold_up(i: &mut Instance) {
    let half = Degree::from_units(Degree::UNITS as u32 / 2).expect("half");
    for r in &mut i.soft[0].rows {
        for e in r.iter_mut() {
            let d = e.degrees().iter().map(|&d| if d < half { d.complement() } else { d }).collect();
            *e = HesitantElement::new(d).expect("non-empty");
        }
    }
}

/// Picks X(x) with `SN_x(x)ᶜ ⊂_hyp X(x) ⊂_hyp SN_x(x)` where one can be found.
fn bracket(g: &Gen, rng: &mut Rng8, i: &mut Instance, hyp: InclusionKind) {
    if rng.gen_bool(0.8) {
        fold_up(i);
    }
    if !g.make_space(rng, i, true) {
        return;
    }
    let Some(t) = i.defined_table() else { return };
    for x in 0..i.objects {
        let s = t.fuzzy(x).expect("defined").at(x).clone();
        let c = s.complement();
        for _ in 0..12 {
            let cand = if rng.gen_bool(0.5) { Some(g.above(rng, hyp, &c)) } else { g.below(rng, hyp, &s) };
            if let Some(e) = cand {
                if c.included_in(hyp, &e) && e.included_in(hyp, &s) {
                    i.sets[0][x] = e;
                    break;
                }
            }
        }
    }
}

fn bracketed(t: &NeighborhoodTable, x: &HesitantFuzzySet, hyp: InclusionKind) -> bool {
    (0..x.values().len()).all(|o| {
        let s = t.fuzzy(o).expect("defined").at(o);
        s.complement().included_in(hyp, x.at(o)) && x.at(o).included_in(hyp, s)
    })
}

pub fn laws() -> Vec<Law> {
    let mut v = Vec::new();
    for k in InclusionKind::ALL {
        v.extend(hesitant_suite(k));
    }
    for k in InclusionKind::ALL {
        v.push(Law::holds(
            format!("approx.threshold-monotone.{k}"),
            "approximation-threshold",
            format!("β1 ⊂{k} β2 with both coverings valid: upper^β1 X ⊂a upper^β2 X and lower^β2 X ⊂a lower^β1 X"),
            k,
            move |g, rng, i| {
                g.make_space(rng, i, true);
                if let Some(b1) = g.below(rng, k, &i.beta) {
                    i.beta2 = b1;
                }
            },
            move |i| {
                need!(i.beta2.included_in(k, &i.beta));
                let t2 = take!(i.space()).neighborhood_table();
                let t1 = take!(i.space_with(0, &i.beta2)).neighborhood_table();
                need!(t1.all_defined() && t2.all_defined());
                let x = i.set(0);
                let (u1, u2) = (take!(up(&t1, &x)), take!(up(&t2, &x)));
                ensure!(sub(A, &u1, &u2), "upper: {} ⊄a {}", show(&u1), show(&u2));
                let (l1, l2) = (take!(lo(&t1, &x)), take!(lo(&t2, &x)));
                ensure!(sub(A, &l2, &l1), "lower: {} ⊄a {}", show(&l2), show(&l1));
                Verdict::Holds
            },
        ));
    }
    for k in InclusionKind::ALL {
        v.extend(crisp_suite(k));
    }
    for k in InclusionKind::ALL {
        v.push(Law::holds(
            format!("crisp.same-neighborhoods.{k}"),
            "crisp-approximation",
            format!("two parameter choices with equal crisp neighborhoods give equal crisp approximations ({k})"),
            k,
            |g, rng, i| {
                g.make_space(rng, i, true);
                // B = A plus one parameter; an all-zero row never qualifies
                let mut b: SoftRows = i.soft[0].clone();
                let extra = format!("e{}", g.bounds.max_params + 1);
                let row = if rng.gen_bool(0.5) {
                    vec![HesitantElement::singleton(Degree::ZERO); i.objects]
                } else {
                    g.row(rng, i.objects)
                };
                b.params.push(extra);
                b.rows.push(row);
                i.soft[1] = b;
            },
            |i| {
                let t1 = take!(i.space()).neighborhood_table();
                let t2 = take!(i.space_with(1, &i.beta)).neighborhood_table();
                need!(t1.all_defined() && t2.all_defined());
                need!((0..i.objects).all(|x| t1.crisp(x) == t2.crisp(x)));
                let x = i.subset(0);
                ensure!(take!(t1.crisp_lower(&x)) == take!(t2.crisp_lower(&x)), "lower differs");
                ensure!(take!(t1.crisp_upper(&x)) == take!(t2.crisp_upper(&x)), "upper differs");
                Verdict::Holds
            },
        ));
    }
    v
}

fn hesitant_suite(k: InclusionKind) -> Vec<Law> {
    let (hyp, c) = suite(k);
    let mut v = Vec::new();

    if k == N {
        v.push(Law::holds(
            "approx.n.extremes",
            "hesitant-approximation",
            "H^U ⊂n lower(H^U) and upper(H^∅) ⊂n H^∅",
            k,
            covering,
            |i| {
                let t = take!(i.defined_table());
                let (full, empty) = (HesitantFuzzySet::full(i.universe()), HesitantFuzzySet::empty(i.universe()));
                let l = take!(lo(&t, &full));
                ensure!(sub(N, &full, &l), "H^U ⊄n {}", show(&l));
                let u = take!(up(&t, &empty));
                ensure!(sub(N, &u, &empty), "{} ⊄n H^∅", show(&u));
                Verdict::Holds
            },
        ));
    } else {
        v.push(Law::holds(
            format!("approx.{k}.extremes"),
            "hesitant-approximation",
            "lower(H^U) =n H^U and upper(H^∅) =n H^∅",
            k,
            covering,
            |i| {
                let t = take!(i.defined_table());
                let (full, empty) = (HesitantFuzzySet::full(i.universe()), HesitantFuzzySet::empty(i.universe()));
                let l = take!(lo(&t, &full));
                ensure!(eqv(N, &l, &full), "lower(H^U) = {}", show(&l));
                let u = take!(up(&t, &empty));
                ensure!(eqv(N, &u, &empty), "upper(H^∅) = {}", show(&u));
                Verdict::Holds
            },
        ));
    }

    v.push(Law::holds(
        format!("approx.{k}.duality"),
        "hesitant-approximation",
        "lower(Xᶜ) = upper(X)ᶜ and upper(Xᶜ) = lower(X)ᶜ exactly",
        k,
        covering,
        |i| {
            let t = take!(i.defined_table());
            let x = i.set(0);
            let l = take!(lo(&t, &x.complement()));
            let u = take!(up(&t, &x));
            ensure!(l == u.complement(), "lower(Xᶜ) = {}, upper(X)ᶜ = {}", show(&l), show(&u.complement()));
            ensure!(take!(up(&t, &x.complement())) == take!(lo(&t, &x)).complement(), "upper(Xᶜ) ≠ lower(X)ᶜ");
            Verdict::Holds
        },
    ));

    if k == M {
        return v;
    }

    v.push(Law::holds(
        format!("approx.{k}.meet-join"),
        "hesitant-approximation",
        format!("lower(X ∩ Y) ={c} lower X ∩ lower Y and upper(X ∪ Y) ={c} upper X ∪ upper Y"),
        k,
        covering,
        move |i| {
            let t = take!(i.defined_table());
            let (x, y) = (i.set(0), i.set(1));
            let l = take!(lo(&t, &take!(x.intersect(&y))));
            let r = take!(take!(lo(&t, &x)).intersect(&take!(lo(&t, &y))));
            ensure!(eqv(c, &l, &r), "lower: {} ≠{c} {}", show(&l), show(&r));
            let l = take!(up(&t, &take!(x.union(&y))));
            let r = take!(take!(up(&t, &x)).union(&take!(up(&t, &y))));
            ensure!(eqv(c, &l, &r), "upper: {} ≠{c} {}", show(&l), show(&r));
            Verdict::Holds
        },
    ));

    v.push(Law::holds(
        format!("approx.{k}.monotone"),
        "hesitant-approximation",
        format!("X ⊂{hyp} Y implies lower X ⊂{c} lower Y and upper X ⊂{c} upper Y"),
        k,
        move |g, rng, i| {
            g.make_space(rng, i, true);
            lift(g, rng, i, hyp, 0, 1);
        },
        move |i| {
            let t = take!(i.defined_table());
            let (x, y) = (i.set(0), i.set(1));
            need!(sub(hyp, &x, &y));
            let (lx, ly) = (take!(lo(&t, &x)), take!(lo(&t, &y)));
            ensure!(sub(c, &lx, &ly), "lower: {} ⊄{c} {}", show(&lx), show(&ly));
            let (ux, uy) = (take!(up(&t, &x)), take!(up(&t, &y)));
            ensure!(sub(c, &ux, &uy), "upper: {} ⊄{c} {}", show(&ux), show(&uy));
            Verdict::Holds
        },
    ));

    v.push(Law::holds(
        format!("approx.{k}.one-sided"),
        "hesitant-approximation",
        format!("lower X ∪ lower Y ⊂{c} lower(X ∪ Y) and upper(X ∩ Y) ⊂{c} upper X ∩ upper Y"),
        k,
        covering,
        move |i| {
            let t = take!(i.defined_table());
            let (x, y) = (i.set(0), i.set(1));
            let l = take!(take!(lo(&t, &x)).union(&take!(lo(&t, &y))));
            let r = take!(lo(&t, &take!(x.union(&y))));
            ensure!(sub(c, &l, &r), "lower: {} ⊄{c} {}", show(&l), show(&r));
            let l = take!(up(&t, &take!(x.intersect(&y))));
            let r = take!(take!(up(&t, &x)).intersect(&take!(up(&t, &y))));
            ensure!(sub(c, &l, &r), "upper: {} ⊄{c} {}", show(&l), show(&r));
            Verdict::Holds
        },
    ));

    v.push(Law::holds(
        format!("approx.{k}.sandwich"),
        "hesitant-approximation",
        format!("SN_x(x)ᶜ ⊂{hyp} X(x) ⊂{hyp} SN_x(x) at every x implies lower X ⊂{c} X ⊂{c} upper X"),
        k,
        move |g, rng, i| bracket(g, rng, i, hyp),
        move |i| {
            let t = take!(i.defined_table());
            let x = i.set(0);
            need!(bracketed(&t, &x, hyp));
            let (l, u) = (take!(lo(&t, &x)), take!(up(&t, &x)));
            ensure!(sub(c, &l, &x), "lower X = {} ⊄{c} X", show(&l));
            ensure!(sub(c, &x, &u), "X ⊄{c} upper X = {}", show(&u));
            Verdict::Holds
        },
    ));

    v.push(Law::holds(
        format!("approx.{k}.iterated-sandwich"),
        "hesitant-approximation",
        format!("under the same bracketing: lower(lower X) ⊂{c} lower X ⊂{c} X ⊂{c} upper X ⊂{c} upper(upper X)"),
        k,
        move |g, rng, i| bracket(g, rng, i, hyp),
        move |i| {
            let t = take!(i.defined_table());
            let x = i.set(0);
            need!(bracketed(&t, &x, hyp));
            let (l, u) = (take!(lo(&t, &x)), take!(up(&t, &x)));
            let (ll, uu) = (take!(lo(&t, &l)), take!(up(&t, &u)));
            let chain = [(&ll, &l, "lower(lower X) ⊂ lower X"), (&l, &x, "lower X ⊂ X"), (&x, &u, "X ⊂ upper X"), (&u, &uu, "upper X ⊂ upper(upper X)")];
            for (a, b, what) in chain {
                ensure!(sub(c, a, b), "{what} fails under {c}");
            }
            Verdict::Holds
        },
    ));

    v.push(Law::holds(
        format!("approx.{k}.ordered-pair"),
        "hesitant-approximation",
        format!("X ⊂{hyp} Y implies lower X ∪ lower Y ={c} lower(X ∪ Y) and upper(X ∩ Y) ={c} upper X ∩ upper Y"),
        k,
        move |g, rng, i| {
            g.make_space(rng, i, true);
            lift(g, rng, i, hyp, 0, 1);
        },
        move |i| {
            let t = take!(i.defined_table());
            let (x, y) = (i.set(0), i.set(1));
            need!(sub(hyp, &x, &y));
            let l = take!(take!(lo(&t, &x)).union(&take!(lo(&t, &y))));
            let r = take!(lo(&t, &take!(x.union(&y))));
            ensure!(eqv(c, &l, &r), "lower: {} ≠{c} {}", show(&l), show(&r));
            let l = take!(up(&t, &take!(x.intersect(&y))));
            let r = take!(take!(up(&t, &x)).intersect(&take!(up(&t, &y))));
            ensure!(eqv(c, &l, &r), "upper: {} ≠{c} {}", show(&l), show(&r));
            Verdict::Holds
        },
    ));
    v
}

fn crisp_suite(k: InclusionKind) -> Vec<Law> {
    let mut v = Vec::new();
    let covering_loose = |g: &Gen, rng: &mut Rng8, i: &mut Instance| {
        g.make_space(rng, i, false);
    };

    let mut lower_ext = Law::holds(
        format!("crisp.{k}.lower-extremes"),
        "crisp-approximation",
        "lower(∅) = ∅ and lower(U) = U",
        k,
        covering_loose,
        |i| {
            let t = take!(i.defined_table());
            let u = i.universe();
            let l = take!(t.crisp_lower(&ObjectSet::none(u.clone())));
            ensure!(l.is_empty(), "lower(∅) = {}", show_set(&l));
            let l = take!(t.crisp_lower(&ObjectSet::all(u.clone())));
            ensure!(l == ObjectSet::all(u), "lower(U) = {}", show_set(&l));
            Verdict::Holds
        },
    );
    let mut upper_ext = Law::holds(
        format!("crisp.{k}.upper-extremes"),
        "crisp-approximation",
        "upper(∅) = ∅ and upper(U) = U",
        k,
        covering_loose,
        |i| {
            let t = take!(i.defined_table());
            let u = i.universe();
            let up = take!(t.crisp_upper(&ObjectSet::none(u.clone())));
            ensure!(up.is_empty(), "upper(∅) = {}", show_set(&up));
            let up = take!(t.crisp_upper(&ObjectSet::all(u.clone())));
            ensure!(up == ObjectSet::all(u), "upper(U) = {}", show_set(&up));
            Verdict::Holds
        },
    );
    // an empty crisp neighborhood breaks both; these spaces produce one
    match k {
        M => {
            let inst = Instance::with_soft(M, "0.5,0.4,0.3,0.2,0.1", &[("e4", &["0.5,0.1"]), ("e5", &["0.3,0.3"])]);
            lower_ext = lower_ext.with_regression(inst.clone());
            upper_ext = upper_ext.with_regression(inst);
        }
        S => {
            let inst = Instance::with_soft(S, "0.5,0.4", &[("e1", &["0.5,0.4"]), ("e2", &["0.5,0.4"]), ("e3", &["1"])]);
            lower_ext = lower_ext.with_regression(inst.clone());
            upper_ext = upper_ext.with_regression(inst);
        }
        _ => {}
    }
    v.push(lower_ext);
    v.push(upper_ext);

    v.push(Law::holds(
        format!("crisp.{k}.monotone"),
        "crisp-approximation",
        "X ⊆ Y implies lower X ⊆ lower Y and upper X ⊆ upper Y",
        k,
        |g, rng, i| {
            g.make_space(rng, i, true);
            for x in 0..i.objects {
                i.subsets[1][x] |= i.subsets[0][x];
            }
        },
        |i| {
            let t = take!(i.defined_table());
            let (x, y) = (i.subset(0), i.subset(1));
            need!(x.is_subset(&y));
            ensure!(take!(t.crisp_lower(&x)).is_subset(&take!(t.crisp_lower(&y))), "lower not monotone");
            ensure!(take!(t.crisp_upper(&x)).is_subset(&take!(t.crisp_upper(&y))), "upper not monotone");
            Verdict::Holds
        },
    ));

    v.push(Law::holds(
        format!("crisp.{k}.one-sided"),
        "crisp-approximation",
        "lower X ∪ lower Y ⊆ lower(X ∪ Y) and upper(X ∩ Y) ⊆ upper X ∩ upper Y",
        k,
        covering,
        |i| {
            let t = take!(i.defined_table());
            let (x, y) = (i.subset(0), i.subset(1));
            let l = take!(t.crisp_lower(&x)).union(&take!(t.crisp_lower(&y)));
            ensure!(l.is_subset(&take!(t.crisp_lower(&x.union(&y)))), "lower join");
            let u = take!(t.crisp_upper(&x.intersect(&y)));
            ensure!(u.is_subset(&take!(t.crisp_upper(&x)).intersect(&take!(t.crisp_upper(&y)))), "upper meet");
            Verdict::Holds
        },
    ));

    v.push(Law::holds(
        format!("crisp.{k}.meet-join"),
        "crisp-approximation",
        "lower X ∩ lower Y = lower(X ∩ Y) and upper(X ∪ Y) = upper X ∪ upper Y",
        k,
        covering,
        |i| {
            let t = take!(i.defined_table());
            let (x, y) = (i.subset(0), i.subset(1));
            let l = take!(t.crisp_lower(&x)).intersect(&take!(t.crisp_lower(&y)));
            ensure!(l == take!(t.crisp_lower(&x.intersect(&y))), "lower meet");
            let u = take!(t.crisp_upper(&x)).union(&take!(t.crisp_upper(&y)));
            ensure!(u == take!(t.crisp_upper(&x.union(&y))), "upper join");
            Verdict::Holds
        },
    ));

    v.push(Law::holds(
        format!("crisp.{k}.duality"),
        "crisp-approximation",
        "lower(Xᶜ) = upper(X)ᶜ and upper(Xᶜ) = lower(X)ᶜ",
        k,
        covering,
        |i| {
            let t = take!(i.defined_table());
            let x = i.subset(0);
            ensure!(take!(t.crisp_lower(&x.complement())) == take!(t.crisp_upper(&x)).complement(), "lower(Xᶜ)");
            ensure!(take!(t.crisp_upper(&x.complement())) == take!(t.crisp_lower(&x)).complement(), "upper(Xᶜ)");
            Verdict::Holds
        },
    ));

    if matches!(k, P | A | T | N) {
        v.push(Law::holds(
            format!("crisp.{k}.sandwich"),
            "crisp-approximation",
            "lower X ⊆ X ⊆ upper X",
            k,
            covering,
            |i| {
                let t = take!(i.defined_table());
                let x = i.subset(0);
                let (l, u) = (take!(t.crisp_lower(&x)), take!(t.crisp_upper(&x)));
                ensure!(l.is_subset(&x), "lower X = {} ⊄ X = {}", show_set(&l), show_set(&x));
                ensure!(x.is_subset(&u), "X = {} ⊄ upper X = {}", show_set(&x), show_set(&u));
                Verdict::Holds
            },
        ));
    }
    v
}
