//! Inclusion, equivalence and lattice laws for hesitant fuzzy sets, and the
//! threshold/monotonicity laws for families of them.

use hfsc_core::{family_intersect, family_union, HesitantElement, HesitantFuzzySet, InclusionKind};
use rand::Rng;

use crate::gen::{Gen, Rng8};
use crate::instance::Instance;
use crate::law::{ensure, eqv, need, show, sub, take, Law, Rel, Verdict};

use InclusionKind::*;

/// `sets[to][x] := above(kind, sets[from][x])` at every object.
pub(crate) fn lift(g: &Gen, rng: &mut Rng8, inst: &mut Instance, kind: InclusionKind, from: usize, to: usize) {
    for x in 0..inst.objects {
        inst.sets[to][x] = g.above(rng, kind, &inst.sets[from][x]);
    }
}

fn xyz(inst: &Instance) -> (HesitantFuzzySet, HesitantFuzzySet, HesitantFuzzySet) {
    (inst.set(0), inst.set(1), inst.set(2))
}

pub fn laws() -> Vec<Law> {
    let mut v = Vec::new();

    for k in InclusionKind::ALL {
        v.push(Law::holds(
            format!("inclusion.transitive.{k}"),
            "inclusion-order",
            format!("X ⊂{k} Y and Y ⊂{k} Z imply X ⊂{k} Z"),
            k,
            move |g, rng, i| {
                lift(g, rng, i, k, 0, 1);
                lift(g, rng, i, k, 1, 2);
            },
            move |i| {
                let (x, y, z) = xyz(i);
                need!(sub(k, &x, &y) && sub(k, &y, &z));
                ensure!(sub(k, &x, &z), "X ⊄{k} Z");
                Verdict::Holds
            },
        ));
    }

    let chain = [(A, Rel::In(P), "a-to-p"), (S, Rel::In(A), "s-to-a"), (S, Rel::In(M), "s-to-m"), (T, Rel::In(P), "t-to-p"), (N, Rel::Sot, "n-to-sot")];
    for (hyp, concl, name) in chain {
        v.push(Law::holds(
            format!("inclusion.implies.{name}"),
            "inclusion-strength",
            format!("X ⊂{hyp} Y implies X ⊂{concl} Y"),
            hyp,
            move |g, rng, i| lift(g, rng, i, hyp, 0, 1),
            move |i| {
                let (x, y, _) = xyz(i);
                need!(sub(hyp, &x, &y));
                ensure!(concl.test(&x, &y), "X ⊄{concl} Y");
                Verdict::Holds
            },
        ));
    }

    for (k, iff) in [(P, true), (A, true), (T, false), (N, true)] {
        let arrow = if iff { "iff" } else { "implies" };
        v.push(Law::holds(
            format!("inclusion.meet-bound.{k}"),
            "inclusion-meet",
            format!("X ⊂{k} Y and X ⊂{k} Z {arrow} X ⊂{k} Y ∩ Z"),
            k,
            move |g, rng, i| {
                if rng.gen_bool(0.5) {
                    lift(g, rng, i, k, 0, 1);
                    lift(g, rng, i, k, 0, 2);
                }
            },
            move |i| {
                let (x, y, z) = xyz(i);
                let both = sub(k, &x, &y) && sub(k, &x, &z);
                let meet = sub(k, &x, &take!(y.intersect(&z)));
                if iff {
                    ensure!(both == meet, "separate inclusions {both}, inclusion in the meet {meet}");
                } else {
                    need!(both);
                    ensure!(meet, "X ⊄{k} Y ∩ Z");
                }
                Verdict::Holds
            },
        ));
    }

    for (k, concl) in [(A, Rel::In(A)), (M, Rel::In(M)), (S, Rel::Sot), (N, Rel::In(N))] {
        v.push(Law::holds(
            format!("complement.antitone.{k}"),
            "complement-order",
            format!("X ⊂{k} Y implies Yᶜ ⊂{concl} Xᶜ"),
            k,
            move |g, rng, i| lift(g, rng, i, k, 0, 1),
            move |i| {
                let (x, y, _) = xyz(i);
                need!(sub(k, &x, &y));
                ensure!(concl.test(&y.complement(), &x.complement()), "Yᶜ ⊄{concl} Xᶜ");
                Verdict::Holds
            },
        ));
    }

    v.extend(equivalence_laws());
    v.extend(lattice_laws());
    v.extend(family_laws());
    v
}

fn copy_x_to_y(rng: &mut Rng8, i: &mut Instance) {
    if rng.gen_bool(0.5) {
        i.sets[1] = i.sets[0].clone();
    }
}

fn pam(x: &HesitantFuzzySet, y: &HesitantFuzzySet) -> Verdict {
    for k in [P, A, M] {
        ensure!(eqv(k, x, y), "not X ={k} Y");
    }
    Verdict::Holds
}

fn equivalence_laws() -> Vec<Law> {
    vec![
        Law::holds(
            "equivalence.equal-implies-pam",
            "equivalence",
            "X = Y implies X =p Y, X =a Y and X =m Y",
            P,
            |_, rng, i| copy_x_to_y(rng, i),
            |i| {
                let (x, y, _) = xyz(i);
                need!(x == y);
                pam(&x, &y)
            },
        ),
        Law::holds(
            "equivalence.s-iff-equal",
            "equivalence",
            "X =s Y iff X = Y",
            S,
            |_, rng, i| copy_x_to_y(rng, i),
            |i| {
                let (x, y, _) = xyz(i);
                let mutual = eqv(S, &x, &y);
                ensure!(mutual == (x == y), "mutual s-inclusion {mutual}, equality {}", x == y);
                Verdict::Holds
            },
        ),
        Law::holds(
            "equivalence.s-implies-pam",
            "equivalence",
            "X =s Y implies X =p Y, X =a Y and X =m Y",
            S,
            |_, rng, i| copy_x_to_y(rng, i),
            |i| {
                let (x, y, _) = xyz(i);
                need!(eqv(S, &x, &y));
                pam(&x, &y)
            },
        ),
        Law::holds(
            "equivalence.n-forces-one-value",
            "equivalence",
            "X =n Y implies every degree of X(x) and Y(x) is the same value",
            N,
            constant_pair,
            |i| {
                let (x, y, _) = xyz(i);
                need!(eqv(N, &x, &y));
                for o in 0..i.objects {
                    let v = x.at(o).upper();
                    let all = x.at(o).degrees().iter().chain(y.at(o).degrees()).all(|&d| d == v);
                    ensure!(all, "degrees differ at x{}", o + 1);
                }
                Verdict::Holds
            },
        ),
        Law::holds(
            "equivalence.n-implies-pam",
            "equivalence",
            "X =n Y implies X =p Y, X =a Y and X =m Y",
            N,
            constant_pair,
            |i| {
                let (x, y, _) = xyz(i);
                need!(eqv(N, &x, &y));
                pam(&x, &y)
            },
        ),
    ]
}

/// Mutual n-inclusion needs one repeated value per object on both sides.
fn constant_pair(g: &Gen, rng: &mut Rng8, i: &mut Instance) {
    if rng.gen_bool(0.75) {
        for x in 0..i.objects {
            let d = g.degree(rng);
            i.sets[0][x] = HesitantElement::constant(d, g.len(rng));
            i.sets[1][x] = HesitantElement::constant(d, g.len(rng));
        }
    }
}

fn lattice_laws() -> Vec<Law> {
    let mut v = Vec::new();
    let noop = |_: &Gen, _: &mut Rng8, _: &mut Instance| {};
    for k in [P, A, M] {
        v.push(Law::holds(
            format!("lattice.idempotent.{k}"),
            "lattice-equivalence",
            format!("X ∩ X ={k} X and X ∪ X ={k} X"),
            k,
            noop,
            move |i| {
                let x = i.set(0);
                ensure!(eqv(k, &take!(x.intersect(&x)), &x), "X ∩ X ≠{k} X");
                ensure!(eqv(k, &take!(x.union(&x)), &x), "X ∪ X ≠{k} X");
                Verdict::Holds
            },
        ));
    }
    for k in [P, A] {
        v.push(Law::holds(
            format!("lattice.absorption.{k}"),
            "lattice-equivalence",
            format!("(X ∪ Y) ∩ X ={k} X and (X ∩ Y) ∪ X ={k} X"),
            k,
            noop,
            move |i| {
                let (x, y, _) = xyz(i);
                let l1 = take!(take!(x.union(&y)).intersect(&x));
                ensure!(eqv(k, &l1, &x), "(X ∪ Y) ∩ X = {} ≠{k} X", show(&l1));
                let l2 = take!(take!(x.intersect(&y)).union(&x));
                ensure!(eqv(k, &l2, &x), "(X ∩ Y) ∪ X = {} ≠{k} X", show(&l2));
                Verdict::Holds
            },
        ));
        v.push(Law::holds(
            format!("lattice.distributive.{k}"),
            "lattice-equivalence",
            format!("(X ∪ Y) ∩ Z ={k} (Z ∩ X) ∪ (Z ∩ Y) and (X ∩ Y) ∪ Z ={k} (Z ∪ X) ∩ (Z ∪ Y)"),
            k,
            noop,
            move |i| {
                let (x, y, z) = xyz(i);
                let l = take!(take!(x.union(&y)).intersect(&z));
                let r = take!(take!(z.intersect(&x)).union(&take!(z.intersect(&y))));
                ensure!(eqv(k, &l, &r), "{} ≠{k} {}", show(&l), show(&r));
                let l = take!(take!(x.intersect(&y)).union(&z));
                let r = take!(take!(z.union(&x)).intersect(&take!(z.union(&y))));
                ensure!(eqv(k, &l, &r), "{} ≠{k} {}", show(&l), show(&r));
                Verdict::Holds
            },
        ));
    }
    v.push(Law::holds("lattice.commutative", "lattice-exact", "X ∩ Y = Y ∩ X and X ∪ Y = Y ∪ X", P, noop, |i| {
        let (x, y, _) = xyz(i);
        ensure!(take!(x.intersect(&y)) == take!(y.intersect(&x)), "meet not commutative");
        ensure!(take!(x.union(&y)) == take!(y.union(&x)), "join not commutative");
        Verdict::Holds
    }));
    v.push(Law::holds(
        "lattice.associative",
        "lattice-exact",
        "(X ∩ Y) ∩ Z = X ∩ (Y ∩ Z) and (X ∪ Y) ∪ Z = X ∪ (Y ∪ Z)",
        P,
        noop,
        |i| {
            let (x, y, z) = xyz(i);
            ensure!(
                take!(take!(x.intersect(&y)).intersect(&z)) == take!(x.intersect(&take!(y.intersect(&z)))),
                "meet not associative"
            );
            ensure!(take!(take!(x.union(&y)).union(&z)) == take!(x.union(&take!(y.union(&z)))), "join not associative");
            Verdict::Holds
        },
    ));
    v.push(Law::holds("complement.involution", "lattice-exact", "(Xᶜ)ᶜ = X", P, noop, |i| {
        let x = i.set(0);
        ensure!(x.complement().complement() == x, "double complement differs");
        Verdict::Holds
    }));
    v.push(Law::holds("complement.de-morgan-meet", "lattice-exact", "(X ∩ Y)ᶜ = Xᶜ ∪ Yᶜ", P, noop, |i| {
        let (x, y, _) = xyz(i);
        ensure!(take!(x.intersect(&y)).complement() == take!(x.complement().union(&y.complement())), "mismatch");
        Verdict::Holds
    }));
    v.push(Law::holds("complement.de-morgan-join", "lattice-exact", "(X ∪ Y)ᶜ = Xᶜ ∩ Yᶜ", P, noop, |i| {
        let (x, y, _) = xyz(i);
        ensure!(take!(x.union(&y)).complement() == take!(x.complement().intersect(&y.complement())), "mismatch");
        Verdict::Holds
    }));
    v
}

/// Every family member made to dominate X (so "for all H" hypotheses fire).
fn lift_family(g: &Gen, rng: &mut Rng8, i: &mut Instance, kind: InclusionKind, all: bool) {
    let n = i.soft[0].rows.len();
    let pick = rng.gen_range(0..n);
    for j in 0..n {
        if all || j == pick {
            for x in 0..i.objects {
                i.soft[0].rows[j][x] = g.above(rng, kind, &i.sets[0][x]);
            }
        }
    }
}

fn family_laws() -> Vec<Law> {
    let mut v = Vec::new();
    for (k, iff) in [(P, true), (A, true), (T, false), (N, true)] {
        let arrow = if iff { "iff" } else { "implies" };
        v.push(Law::holds(
            format!("family.meet-threshold.{k}"),
            "family-threshold",
            format!("X ⊂{k} H for every H in the family {arrow} X ⊂{k} ⋂ family"),
            k,
            move |g, rng, i| {
                if rng.gen_bool(0.6) {
                    lift_family(g, rng, i, k, true)
                }
            },
            move |i| {
                let (x, fam) = (i.set(0), i.family());
                let every = fam.iter().all(|h| sub(k, &x, h));
                let meet = sub(k, &x, &take!(family_intersect(&fam)));
                if iff {
                    ensure!(every == meet, "every member {every}, meet {meet}");
                } else {
                    need!(every);
                    ensure!(meet, "X ⊄{k} ⋂ family");
                }
                Verdict::Holds
            },
        ));
    }
    for k in [P, A, N] {
        v.push(Law::holds(
            format!("family.join-threshold.{k}"),
            "family-threshold",
            format!("X ⊂{k} H for some H in the family implies X ⊂{k} ⋃ family"),
            k,
            move |g, rng, i| lift_family(g, rng, i, k, false),
            move |i| {
                let (x, fam) = (i.set(0), i.family());
                need!(fam.iter().any(|h| sub(k, &x, h)));
                ensure!(sub(k, &x, &take!(family_union(&fam))), "X ⊄{k} ⋃ family");
                Verdict::Holds
            },
        ));
    }
    v.push(Law::holds(
        "family.join-threshold.t-shorter",
        "family-threshold",
        "X ⊂t H for some H, and |X(x)| < |H(x)| for every H and x, imply X ⊂t ⋃ family",
        T,
        |g, rng, i| {
            // shorten X to one degree so every member is longer
            for x in 0..i.objects {
                let top = i.sets[0][x].upper();
                i.sets[0][x] = HesitantElement::singleton(top);
                for r in &mut i.soft[0].rows {
                    if r[x].len() < 2 {
                        r[x] = g.above(rng, T, &i.sets[0][x]);
                    }
                }
            }
            lift_family(g, rng, i, T, false);
        },
        |i| {
            let (x, fam) = (i.set(0), i.family());
            let shorter = fam.iter().all(|h| (0..i.objects).all(|o| x.at(o).len() < h.at(o).len()));
            need!(shorter && fam.iter().any(|h| sub(T, &x, h)));
            ensure!(sub(T, &x, &take!(family_union(&fam))), "X ⊄t ⋃ family");
            Verdict::Holds
        },
    ));

    // sub-family inclusions; the sub-family is every non-empty subset of F's rows
    let mono: [(&str, Rel, Fam, Fam); 8] = [
        ("meet-p", Rel::In(P), Fam::MeetBig, Fam::MeetSmall),
        ("join-p", Rel::In(P), Fam::JoinSmall, Fam::JoinBig),
        ("meet-join-p", Rel::In(P), Fam::MeetSmall, Fam::JoinBig),
        ("meet-a", Rel::In(A), Fam::MeetBig, Fam::MeetSmall),
        ("join-a", Rel::In(A), Fam::JoinSmall, Fam::JoinBig),
        ("meet-join-a", Rel::In(A), Fam::MeetSmall, Fam::JoinBig),
        ("join-sot", Rel::Sot, Fam::JoinSmall, Fam::JoinBig),
        ("meet-join-sot", Rel::Sot, Fam::MeetSmall, Fam::JoinBig),
    ];
    for (name, rel, lhs, rhs) in mono {
        v.push(Law::holds(
            format!("family.monotone.{name}"),
            "family-monotone",
            format!("for a sub-family H1 of H2: {} ⊂{rel} {}", lhs.label(), rhs.label()),
            P,
            |_, _, _| {},
            move |i| {
                let fam = i.family();
                let big = take!(family_intersect(&fam));
                let big_join = take!(family_union(&fam));
                for mask in 1u32..(1 << fam.len()) {
                    let small: Vec<_> = fam.iter().enumerate().filter(|(j, _)| mask & (1 << j) != 0).map(|(_, h)| h.clone()).collect();
                    let (sm, sj) = (take!(family_intersect(&small)), take!(family_union(&small)));
                    let pick = |f: Fam| match f {
                        Fam::MeetBig => &big,
                        Fam::JoinBig => &big_join,
                        Fam::MeetSmall => &sm,
                        Fam::JoinSmall => &sj,
                    };
                    let (a, b) = (pick(lhs), pick(rhs));
                    ensure!(rel.test(a, b), "sub-family mask {mask:b}: {} ⊄{rel} {}", show(a), show(b));
                }
                Verdict::Holds
            },
        ));
    }
    v
}

#[derive(Clone, Copy)]
enum Fam {
    MeetBig,
    JoinBig,
    MeetSmall,
    JoinSmall,
}

impl Fam {
    fn label(self) -> &'static str {
        match self {
            Fam::MeetBig => "⋂H2",
            Fam::JoinBig => "⋃H2",
            Fam::MeetSmall => "⋂H1",
            Fam::JoinSmall => "⋃H1",
        }
    }
}
