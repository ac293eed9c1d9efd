//! Neighborhood laws: self-threshold, definedness, transitivity, threshold
//! monotonicity, the ordering characterisations, and the exchange between
//! fuzzy and crisp neighborhoods.

use hfsc_core::{crisp_of, family_intersect, family_union, CoveringSpace, InclusionKind, NeighborhoodTable, ObjectSet};

use crate::gen::{Gen, Rng8};
use crate::instance::Instance;
use crate::law::{ensure, eqv, need, show, show_set, sub, take, Law, Verdict};

use InclusionKind::*;

fn covering(g: &Gen, rng: &mut Rng8, i: &mut Instance) {
    g.make_space(rng, i, true);
}

fn covering_loose(g: &Gen, rng: &mut Rng8, i: &mut Instance) {
    g.make_space(rng, i, false);
}

fn table(i: &Instance) -> Option<(CoveringSpace, NeighborhoodTable)> {
    let s = i.space()?;
    let t = s.neighborhood_table();
    Some((s, t))
}

fn name(x: usize) -> String {
    format!("x{}", x + 1)
}

/// Every non-empty subset of `0..n`, as ascending index lists.
fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u32..(1 << n)).map(move |m| (0..n).filter(|&j| m & (1 << j) != 0).collect())
}

pub fn laws() -> Vec<Law> {
    let mut v = Vec::new();

    for k in [P, A, T, N] {
        v.push(Law::holds(
            format!("nbhd.self-threshold.{k}"),
            "neighborhood-basic",
            format!("β ⊂{k} SN_x(x) wherever SN_x is defined"),
            k,
            covering_loose,
            move |i| {
                let (s, t) = take!(table(i));
                for x in 0..i.objects {
                    if let Some(n) = t.fuzzy(x) {
                        ensure!(s.beta().included_in(k, n.at(x)), "β ⊄{k} SN_{}({}) = {}", name(x), name(x), n.at(x));
                    }
                }
                Verdict::Holds
            },
        ));
    }

    for k in [P, A, N] {
        let mut law = Law::holds(
            format!("nbhd.defined.{k}"),
            "neighborhood-basic",
            format!("every SN_x of a valid {k}-covering is defined"),
            k,
            covering_loose,
            |i| {
                let (_, t) = take!(table(i));
                if let Some(x) = t.first_undefined() {
                    return Verdict::Violated(format!("SN_{} is undefined", name(x)));
                }
                Verdict::Holds
            },
        );
        if k == A {
            law = law.with_regression(Instance::with_soft(A, "0.8,0.4", &[("e1", &["0.9,0.1"]), ("e2", &["0.5,0.5"])]));
        }
        v.push(law);
    }

    for k in [P, A, N] {
        v.push(Law::holds(
            format!("nbhd.transitive.{k}"),
            "neighborhood-order",
            format!("β ⊂{k} SN_x(y) and β ⊂{k} SN_y(z) imply β ⊂{k} SN_x(z)"),
            k,
            covering,
            move |i| {
                let (s, t) = take!(table(i));
                let b = s.beta();
                let n = i.objects;
                for x in 0..n {
                    let Some(sx) = t.fuzzy(x) else { continue };
                    for y in (0..n).filter(|&y| b.included_in(k, sx.at(y))) {
                        let Some(sy) = t.fuzzy(y) else { continue };
                        for z in (0..n).filter(|&z| b.included_in(k, sy.at(z))) {
                            ensure!(b.included_in(k, sx.at(z)), "x={} y={} z={}", name(x), name(y), name(z));
                        }
                    }
                }
                Verdict::Holds
            },
        ));
    }

    for k in InclusionKind::ALL {
        v.push(Law::holds(
            format!("nbhd.threshold-monotone.{k}"),
            "neighborhood-threshold",
            format!("β1 ⊂{k} β2 implies SN^β1_x ⊂a SN^β2_x for both thresholds"),
            k,
            move |g, rng, i| {
                g.make_space(rng, i, true);
                if let Some(b1) = g.below(rng, k, &i.beta) {
                    i.beta2 = b1;
                }
            },
            move |i| {
                // beta is β2, beta2 is the smaller β1
                need!(i.beta2.included_in(k, &i.beta));
                let t2 = take!(i.space()).neighborhood_table();
                let t1 = take!(i.space_with(0, &i.beta2)).neighborhood_table();
                for x in 0..i.objects {
                    if let (Some(n1), Some(n2)) = (t1.fuzzy(x), t2.fuzzy(x)) {
                        ensure!(sub(A, n1, n2), "at {}: {} ⊄a {}", name(x), show(n1), show(n2));
                    }
                }
                Verdict::Holds
            },
        ));
    }

    for (k, iff) in [(P, true), (A, true), (N, false)] {
        let concl = if k == N { A } else { k };
        v.push(Law::holds(
            format!("nbhd.order.{k}"),
            "neighborhood-order",
            format!("β ⊂{k} SN_x(y) {} SN_y ⊂{concl} SN_x", if iff { "iff" } else { "implies" }),
            k,
            covering,
            move |i| {
                let (s, t) = take!(table(i));
                for x in 0..i.objects {
                    for y in 0..i.objects {
                        let (Some(sx), Some(sy)) = (t.fuzzy(x), t.fuzzy(y)) else { continue };
                        let member = s.beta().included_in(k, sx.at(y));
                        let order = sub(concl, sy, sx);
                        if iff {
                            ensure!(member == order, "x={} y={}: membership {member}, order {order}", name(x), name(y));
                        } else if member {
                            ensure!(order, "x={} y={}: SN_y ⊄{concl} SN_x", name(x), name(y));
                        }
                    }
                }
                Verdict::Holds
            },
        ));
        v.push(Law::holds(
            format!("nbhd.order-mutual.{k}"),
            "neighborhood-order",
            format!("β ⊂{k} SN_x(y) and β ⊂{k} SN_y(x) {} SN_x ={concl} SN_y", if iff { "iff" } else { "imply" }),
            k,
            covering,
            move |i| {
                let (s, t) = take!(table(i));
                let b = s.beta();
                for x in 0..i.objects {
                    for y in 0..i.objects {
                        let (Some(sx), Some(sy)) = (t.fuzzy(x), t.fuzzy(y)) else { continue };
                        let mutual = b.included_in(k, sx.at(y)) && b.included_in(k, sy.at(x));
                        let same = eqv(concl, sx, sy);
                        if iff {
                            ensure!(mutual == same, "x={} y={}: mutual {mutual}, equivalent {same}", name(x), name(y));
                        } else if mutual {
                            ensure!(same, "x={} y={}: SN_x ≠{concl} SN_y", name(x), name(y));
                        }
                    }
                }
                Verdict::Holds
            },
        ));
    }

    v.extend(crisp_laws());
    v
}

fn crisp_laws() -> Vec<Law> {
    let mut v = Vec::new();

    for k in [P, A, T, N] {
        v.push(Law::holds(
            format!("crisp-nbhd.self-member.{k}"),
            "crisp-neighborhood",
            format!("x ∈ SN̄_x wherever it is defined ({k})"),
            k,
            covering_loose,
            |i| {
                let (_, t) = take!(table(i));
                for x in 0..i.objects {
                    if let Some(c) = t.crisp(x) {
                        ensure!(c.contains(x), "{} ∉ SN̄_{} = {}", name(x), name(x), show_set(c));
                    }
                }
                Verdict::Holds
            },
        ));
    }

    for k in [P, A] {
        v.push(Law::holds(
            format!("crisp-nbhd.order.{k}"),
            "crisp-neighborhood",
            format!("y ∈ SN̄_x iff SN̄_y ⊆ SN̄_x ({k})"),
            k,
            covering,
            |i| {
                let (_, t) = take!(table(i));
                for x in 0..i.objects {
                    for y in 0..i.objects {
                        let (Some(cx), Some(cy)) = (t.crisp(x), t.crisp(y)) else { continue };
                        ensure!(cx.contains(y) == cy.is_subset(cx), "x={} y={}", name(x), name(y));
                    }
                }
                Verdict::Holds
            },
        ));
        v.push(Law::holds(
            format!("crisp-nbhd.order-mutual.{k}"),
            "crisp-neighborhood",
            format!("x ∈ SN̄_y and y ∈ SN̄_x iff SN̄_x = SN̄_y ({k})"),
            k,
            covering,
            |i| {
                let (_, t) = take!(table(i));
                for x in 0..i.objects {
                    for y in 0..i.objects {
                        let (Some(cx), Some(cy)) = (t.crisp(x), t.crisp(y)) else { continue };
                        ensure!((cx.contains(y) && cy.contains(x)) == (cx == cy), "x={} y={}", name(x), name(y));
                    }
                }
                Verdict::Holds
            },
        ));
    }

    for k in [P, A, N] {
        v.push(Law::holds(
            format!("crisp-nbhd.transitive.{k}"),
            "crisp-neighborhood",
            format!("y ∈ SN̄_x and z ∈ SN̄_y imply z ∈ SN̄_x ({k})"),
            k,
            covering,
            |i| {
                let (_, t) = take!(table(i));
                for x in 0..i.objects {
                    let Some(cx) = t.crisp(x) else { continue };
                    for y in cx.indices() {
                        let Some(cy) = t.crisp(y) else { continue };
                        for z in cy.indices() {
                            ensure!(cx.contains(z), "x={} y={} z={}", name(x), name(y), name(z));
                        }
                    }
                }
                Verdict::Holds
            },
        ));
    }

    for k in [P, A] {
        v.push(Law::holds(
            format!("crisp-nbhd.fuzzy-order.{k}"),
            "crisp-neighborhood",
            format!("SN_y ⊂{k} SN_x iff SN̄_y ⊆ SN̄_x"),
            k,
            covering,
            move |i| {
                let (_, t) = take!(table(i));
                for x in 0..i.objects {
                    for y in 0..i.objects {
                        let (Some(sx), Some(sy)) = (t.fuzzy(x), t.fuzzy(y)) else { continue };
                        let (cx, cy) = (t.crisp(x).expect("defined"), t.crisp(y).expect("defined"));
                        ensure!(sub(k, sy, sx) == cy.is_subset(cx), "x={} y={}", name(x), name(y));
                    }
                }
                Verdict::Holds
            },
        ));
        v.push(Law::holds(
            format!("crisp-nbhd.fuzzy-equal.{k}"),
            "crisp-neighborhood",
            format!("SN̄_x = SN̄_y iff SN_x ={k} SN_y"),
            k,
            covering,
            move |i| {
                let (_, t) = take!(table(i));
                for x in 0..i.objects {
                    for y in 0..i.objects {
                        let (Some(sx), Some(sy)) = (t.fuzzy(x), t.fuzzy(y)) else { continue };
                        let (cx, cy) = (t.crisp(x).expect("defined"), t.crisp(y).expect("defined"));
                        ensure!((cx == cy) == eqv(k, sx, sy), "x={} y={}", name(x), name(y));
                    }
                }
                Verdict::Holds
            },
        ));
    }

    // crisp image of a join/meet of two neighborhoods against join/meet of crisp neighborhoods
    let pairs: [(InclusionKind, Op, Cmp); 7] = [
        (P, Op::Join, Cmp::Equal),
        (P, Op::Meet, Cmp::Equal),
        (A, Op::Join, Cmp::CrispInImage),
        (A, Op::Meet, Cmp::Equal),
        (T, Op::Meet, Cmp::CrispInImage),
        (N, Op::Join, Cmp::Equal),
        (N, Op::Meet, Cmp::Equal),
    ];
    for (k, op, cmp) in pairs {
        v.push(Law::holds(
            format!("crisp-nbhd.pair-{}.{k}", op.tag()),
            "crisp-exchange",
            format!("SN̄_x {} SN̄_y {} crisp image of SN_x {} SN_y ({k})", op.crisp_sym(), cmp.sym(), op.sym()),
            k,
            covering,
            move |i| {
                let (s, t) = take!(table(i));
                for x in 0..i.objects {
                    for y in 0..i.objects {
                        let (Some(sx), Some(sy)) = (t.fuzzy(x), t.fuzzy(y)) else { continue };
                        let (cx, cy) = (t.crisp(x).expect("defined"), t.crisp(y).expect("defined"));
                        let fused = take!(match op {
                            Op::Join => sx.union(sy),
                            Op::Meet => sx.intersect(sy),
                        });
                        let image = crisp_of(k, s.beta(), &fused);
                        let combined = op.crisp(cx, cy);
                        ensure!(
                            cmp.holds(&combined, &image),
                            "x={} y={}: {} vs image {}",
                            name(x),
                            name(y),
                            show_set(&combined),
                            show_set(&image)
                        );
                    }
                }
                Verdict::Holds
            },
        ));
    }

    // folds over finitely many objects: prefix sequences and arbitrary index sets
    let folds: [(&str, InclusionKind, Op, Cmp); 14] = [
        ("fold", P, Op::Join, Cmp::Equal),
        ("fold", P, Op::Meet, Cmp::Equal),
        ("family", P, Op::Join, Cmp::CrispInImage),
        ("family", P, Op::Meet, Cmp::Equal),
        ("fold", A, Op::Join, Cmp::CrispInImage),
        ("fold", A, Op::Meet, Cmp::Equal),
        ("family", A, Op::Join, Cmp::CrispInImage),
        ("family", A, Op::Meet, Cmp::Equal),
        ("fold", T, Op::Meet, Cmp::CrispInImage),
        ("family", T, Op::Meet, Cmp::CrispInImage),
        ("fold", N, Op::Join, Cmp::Equal),
        ("fold", N, Op::Meet, Cmp::Equal),
        ("family", N, Op::Join, Cmp::CrispInImage),
        ("family", N, Op::Meet, Cmp::Equal),
    ];
    for (scope, k, op, cmp) in folds {
        let what = if scope == "fold" { "the first N objects" } else { "any index set" };
        v.push(Law::holds(
            format!("crisp-nbhd.{scope}-{}.{k}", op.tag()),
            "crisp-exchange",
            format!("over {what}: {} of SN̄ {} crisp image of the {} of SN ({k})", op.crisp_word(), cmp.sym(), op.word()),
            k,
            covering,
            move |i| {
                let (s, t) = take!(table(i));
                need!(t.all_defined());
                let n = i.objects;
                let index_sets: Vec<Vec<usize>> =
                    if scope == "fold" { (1..=n).map(|m| (0..m).collect()).collect() } else { subsets(n).collect() };
                for idx in index_sets {
                    let fuzzy: Vec<_> = idx.iter().map(|&x| t.fuzzy(x).expect("defined")).collect();
                    let fused = take!(match op {
                        Op::Join => family_union(fuzzy.iter().copied()),
                        Op::Meet => family_intersect(fuzzy.iter().copied()),
                    });
                    let image = crisp_of(k, s.beta(), &fused);
                    let mut combined = t.crisp(idx[0]).expect("defined").clone();
                    for &x in &idx[1..] {
                        combined = op.crisp(&combined, t.crisp(x).expect("defined"));
                    }
                    ensure!(
                        cmp.holds(&combined, &image),
                        "indices {:?}: {} vs image {}",
                        idx.iter().map(|&x| name(x)).collect::<Vec<_>>(),
                        show_set(&combined),
                        show_set(&image)
                    );
                }
                Verdict::Holds
            },
        ));
    }
    v
}

#[derive(Clone, Copy)]
enum Op {
    Join,
    Meet,
}

impl Op {
    fn tag(self) -> &'static str {
        match self {
            Op::Join => "join",
            Op::Meet => "meet",
        }
    }
    fn sym(self) -> &'static str {
        match self {
            Op::Join => "∪",
            Op::Meet => "∩",
        }
    }
    fn crisp_sym(self) -> &'static str {
        match self {
            Op::Join => "⊔",
            Op::Meet => "⊓",
        }
    }
    fn word(self) -> &'static str {
        match self {
            Op::Join => "union",
            Op::Meet => "intersection",
        }
    }
    fn crisp_word(self) -> &'static str {
        match self {
            Op::Join => "set union",
            Op::Meet => "set intersection",
        }
    }
    fn crisp(self, a: &ObjectSet, b: &ObjectSet) -> ObjectSet {
        match self {
            Op::Join => a.union(b),
            Op::Meet => a.intersect(b),
        }
    }
}

#[derive(Clone, Copy)]
enum Cmp {
    Equal,
    CrispInImage,
}

impl Cmp {
    fn sym(self) -> &'static str {
        match self {
            Cmp::Equal => "=",
            Cmp::CrispInImage => "⊆",
        }
    }
    fn holds(self, combined: &ObjectSet, image: &ObjectSet) -> bool {
        match self {
            Cmp::Equal => combined == image,
            Cmp::CrispInImage => combined.is_subset(image),
        }
    }
}
