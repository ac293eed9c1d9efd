//! Worked reference values: the two tables, the six covering spaces over the
//! object table, their neighborhoods, and the approximations computed from
//! them. Expected values are transcribed as printed; a fixture whose printed
//! value disagrees with the definitions stays red and carries a note.

use std::fmt::Write as _;

use hfsc_core::{
    CoveringSpace, CrispNeighborhood, FuzzyNeighborhood, HesitantElement, HesitantFuzzySet, HesitantFuzzySoftSet,
    InclusionKind, ObjectSet, Universe,
};
use serde::Serialize;

use crate::tables::{hfs, object_table, object_table_on, pair_f, pair_g, pair_universe};

use InclusionKind::*;

pub struct Fixture {
    pub id: &'static str,
    pub about: &'static str,
    /// Canonical rendering of the printed value.
    pub expected: String,
    /// Why the printed value cannot be reproduced, when it cannot.
    pub note: Option<&'static str>,
    compute: fn() -> String,
}

impl Fixture {
    pub fn actual(&self) -> String {
        (self.compute)()
    }

    pub fn outcome(&self) -> FixtureOutcome {
        let actual = self.actual();
        FixtureOutcome {
            id: self.id,
            about: self.about,
            ok: actual == self.expected,
            expected: self.expected.clone(),
            actual,
            note: self.note,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureOutcome {
    pub id: &'static str,
    pub about: &'static str,
    pub ok: bool,
    pub expected: String,
    pub actual: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureReport {
    pub passed: usize,
    pub failed: usize,
    pub fixtures: Vec<FixtureOutcome>,
}

impl FixtureReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.ok() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for f in &self.fixtures {
            let tag = if f.ok { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{tag} {}: {}", f.id, f.about);
            if !f.ok {
                let _ = writeln!(s, "     expected {}", f.expected);
                let _ = writeln!(s, "     actual   {}", f.actual);
            }
            if let Some(n) = f.note {
                let _ = writeln!(s, "     note: {n}");
            }
        }
        let _ = writeln!(s, "{} passed, {} failed", self.passed, self.failed);
        s
    }
}

/// Runs `fixtures` in order.
pub fn run_fixtures(fixtures: &[Fixture]) -> FixtureReport {
    let outcomes: Vec<FixtureOutcome> = fixtures.iter().map(Fixture::outcome).collect();
    let passed = outcomes.iter().filter(|o| o.ok).count();
    FixtureReport { passed, failed: outcomes.len() - passed, fixtures: outcomes }
}

// ---- rendering ---------------------------------------------------------------

fn elem(s: &str) -> String {
    s.parse::<HesitantElement>().expect("fixture literal").to_string()
}

fn on_pair(cells: &[&str]) -> String {
    hfs(&pair_universe(), cells).to_string()
}

fn on_objects(cells: &[&str]) -> String {
    hfs(&Universe::numbered(5), cells).to_string()
}

fn fuzzy(n: FuzzyNeighborhood) -> String {
    match n {
        FuzzyNeighborhood::Defined(h) => h.to_string(),
        FuzzyNeighborhood::Undefined => "Null".into(),
    }
}

fn crisp(n: CrispNeighborhood) -> String {
    match n {
        CrispNeighborhood::Defined(s) => s.to_string(),
        CrispNeighborhood::Undefined => "Null".into(),
    }
}

fn or_err<T: ToString, E: std::fmt::Display>(r: Result<T, E>) -> String {
    r.map_or_else(|e| format!("error: {e}"), |v| v.to_string())
}

fn at_param(f: Result<HesitantFuzzySoftSet, hfsc_core::Error>, p: &str) -> String {
    match f {
        Ok(s) => s.get(p).map_or("missing".into(), |h| h.to_string()),
        Err(e) => format!("error: {e}"),
    }
}

fn on_table(kind: InclusionKind, params: &[&str], beta: &str) -> CoveringSpace {
    CoveringSpace::new(object_table_on(params), beta.parse().expect("beta"), kind).expect("valid space")
}

/// The six spaces with threshold {0.5,0.4,0.3}.
fn space(kind: InclusionKind) -> CoveringSpace {
    let params: &[&str] = match kind {
        P | A => &["e1", "e2"],
        M => &["e2", "e3"],
        S => &["e3", "e4"],
        T => &["e4", "e5"],
        N => &["e5", "e6"],
    };
    on_table(kind, params, NEIGHBORHOOD_BETA)
}

const NEIGHBORHOOD_BETA: &str = "0.5,0.4,0.3";
const HESITANT_BETA: &str = "0.5,0.3,0.2";

fn target() -> HesitantFuzzySet {
    hfs(&Universe::numbered(5), &["0.2,0.1", "0.2,0.1", "0.1,0.1", "0.2,0.1", "0.2,0.2"])
}

fn hes_space(kind: InclusionKind) -> CoveringSpace {
    let params: &[&str] = if kind == T { &["e6", "e8"] } else { &["e6", "e7"] };
    on_table(kind, params, HESITANT_BETA)
}

fn hes_lower_x1(kind: InclusionKind) -> String {
    hes_space(kind).hesitant_lower(&target()).map_or_else(|e| format!("error: {e}"), |h| h.at(0).to_string())
}

fn hes_upper_x1(kind: InclusionKind) -> String {
    hes_space(kind).hesitant_upper(&target()).map_or_else(|e| format!("error: {e}"), |h| h.at(0).to_string())
}

fn objects(s: &CoveringSpace, names: &[&str]) -> ObjectSet {
    ObjectSet::from_names(s.universe().clone(), names.iter().copied()).expect("known objects")
}

fn crisp_pair(kind: InclusionKind, params: &[&str]) -> (String, String) {
    let s = on_table(kind, params, NEIGHBORHOOD_BETA);
    let x = objects(&s, &["x1", "x2"]);
    (or_err(s.crisp_lower(&x)), or_err(s.crisp_upper(&x)))
}

fn contains(r: Result<ObjectSet, hfsc_core::Error>, i: usize) -> String {
    r.map_or_else(|e| format!("error: {e}"), |s| s.contains(i).to_string())
}

const ALL: &str = "{x1,x2,x3,x4,x5}";

// ---- the fixtures --------------------------------------------------------------

fn fx(id: &'static str, about: &'static str, expected: String, compute: fn() -> String) -> Fixture {
    Fixture { id, about, expected, note: None, compute }
}

fn noted(mut f: Fixture, note: &'static str) -> Fixture {
    f.note = Some(note);
    f
}

fn restricted(params: &[&str], of_g: bool) -> HesitantFuzzySoftSet {
    let s = if of_g { pair_g() } else { pair_f() };
    s.restrict(params).expect("known parameters")
}

fn soft_incl(kind: InclusionKind, a: &[&str], b: &[&str]) -> String {
    or_err(restricted(a, false).included_in(kind, &restricted(b, true)))
}

pub fn reference_fixtures() -> Vec<Fixture> {
    let mut v = pair_table_fixtures();
    v.extend(object_table_fixtures());
    v.extend(neighborhood_fixtures());
    v.extend(crisp_neighborhood_fixtures());
    v.extend(hesitant_approx_fixtures());
    v.extend(crisp_approx_fixtures());
    v
}

fn pair_table_fixtures() -> Vec<Fixture> {
    fn ab() -> (HesitantFuzzySoftSet, HesitantFuzzySoftSet) {
        (restricted(&["e1", "e2"], false), restricted(&["e2", "e3"], true))
    }
    vec![
        fx("pair-table.restricted-meet.e2", "restricted intersection of F on {e1,e2} and G on {e2,e3}, at e2",
            on_pair(&["0.2,0.2,0.3,0.4,0.4", "0.1,0.2,0.2,0.3,0.3,0.3"]),
            || { let (a, b) = ab(); at_param(a.restricted_intersect(&b), "e2") }),
        fx("pair-table.restricted-meet.params", "parameter domain of the restricted intersection", "[e2]".into(),
            || { let (a, b) = ab(); a.restricted_intersect(&b).map_or_else(|e| format!("error: {e}"), |s| format!("[{}]", s.params().join(","))) }),
        fx("pair-table.restricted-join.e2", "restricted union at e2",
            on_pair(&["0.2,0.2,0.3,0.4,0.4,0.5", "0.2,0.2,0.3,0.3,0.3"]),
            || { let (a, b) = ab(); at_param(a.restricted_union(&b), "e2") }),
        fx("pair-table.extended-join.e1", "extended union at e1 (F only)",
            on_pair(&["0.2,0.3,0.5", "0.3,0.5,0.7"]),
            || { let (a, b) = ab(); at_param(a.extended_union(&b), "e1") }),
        fx("pair-table.extended-join.e2", "extended union at e2 (shared)",
            on_pair(&["0.2,0.2,0.3,0.4,0.4,0.5", "0.2,0.2,0.3,0.3,0.3"]),
            || { let (a, b) = ab(); at_param(a.extended_union(&b), "e2") }),
        fx("pair-table.extended-join.e3", "extended union at e3 (G only)",
            on_pair(&["0.6,0.6,0.9", "0.2,0.5,0.8"]),
            || { let (a, b) = ab(); at_param(a.extended_union(&b), "e3") }),
        fx("pair-table.extended-join.params", "parameter domain of the extended union", "[e1,e2,e3]".into(),
            || { let (a, b) = ab(); a.extended_union(&b).map_or_else(|e| format!("error: {e}"), |s| format!("[{}]", s.params().join(","))) }),
        fx("pair-table.soft-inclusion.p", "F on {e1,e2} is p-included in G on {e1,e2,e3}", "true".into(),
            || soft_incl(P, &["e1", "e2"], &["e1", "e2", "e3"])),
        fx("pair-table.soft-inclusion.a", "F on {e2,e3} is a-included in G on {e2,e3,e4}", "true".into(),
            || soft_incl(A, &["e2", "e3"], &["e2", "e3", "e4"])),
        fx("pair-table.soft-inclusion.m", "F on {e2,e3} is m-included in G on {e2,e3,e4}", "true".into(),
            || soft_incl(M, &["e2", "e3"], &["e2", "e3", "e4"])),
        fx("pair-table.soft-inclusion.s", "F on {e2,e3} is s-included in G on {e2,e3,e4}", "true".into(),
            || soft_incl(S, &["e2", "e3"], &["e2", "e3", "e4"])),
        fx("pair-table.soft-inclusion.t", "F on {e4} is t-included in G on {e4,e5}", "true".into(),
            || soft_incl(T, &["e4"], &["e4", "e5"])),
        fx("pair-table.soft-inclusion.n", "F on {e4,e5} is n-included in G on {e3,e4,e5}", "true".into(),
            || soft_incl(N, &["e4", "e5"], &["e3", "e4", "e5"])),
    ]
}

fn object_table_fixtures() -> Vec<Fixture> {
    vec![
        fx("object-table.unit.e1-e2", "the all-ones set sized by the shortest cell, over {e1,e2}",
            on_objects(&["1,1", "1,1", "1,1,1", "1,1,1", "1,1,1"]),
            || object_table_on(&["e1", "e2"]).one_of().to_string()),
        fx("object-table.union.e1-e2", "union of F over {e1,e2}",
            on_objects(&["1,1", "1,1", "1,1,1", "1,1,1,1,1", "1,1,1"]),
            || object_table_on(&["e1", "e2"]).union_all().to_string()),
        fx("object-table.covering.e1-e2", "F over {e1,e2} is a covering", "true".into(),
            || object_table_on(&["e1", "e2"]).is_covering().to_string()),
        fx("object-table.union.e2-e3", "union over {e2,e3}",
            on_objects(&["1,1", "0.5,0.4,0.4", "0.5,0.5", "1,1,1", "1,1,1"]),
            || object_table_on(&["e2", "e3"]).union_all().to_string()),
        fx("object-table.union.e3-e4", "union over {e3,e4}",
            on_objects(&["0.8,0.7,0.7", "0.6,0.5,0.4", "0.9,0.8,0.5", "0.6,0.5,0.5", "0.6,0.6,0.6"]),
            || object_table_on(&["e3", "e4"]).union_all().to_string()),
        fx("object-table.union.e4-e5", "union over {e4,e5}",
            on_objects(&["0.8,0.8,0.7,0.7,0.7", "0.6,0.6,0.5,0.4,0.3", "0.9,0.9,0.8,0.8", "0.7,0.6,0.6,0.5,0.5", "0.8,0.7,0.6,0.6,0.6"]),
            || object_table_on(&["e4", "e5"]).union_all().to_string()),
        fx("object-table.union.e5-e6", "union over {e5,e6}",
            on_objects(&["0.8,0.7,0.7", "0.7,0.6,0.5,0.5", "0.9,0.8", "0.8,0.7,0.7", "0.8,0.7,0.7,0.6,0.6"]),
            || object_table_on(&["e5", "e6"]).union_all().to_string()),
        fx("object-table.union.e6-e7", "union over {e6,e7}",
            on_objects(&["0.6,0.6", "0.7,0.5", "0.7,0.6", "0.8,0.7", "0.7,0.6"]),
            || object_table_on(&["e6", "e7"]).union_all().to_string()),
        fx("object-table.shape", "objects and parameters of the object table", "5 objects, 9 parameters".into(),
            || { let t = object_table(); format!("{} objects, {} parameters", t.universe().len(), t.len()) }),
    ]
}

fn validity(kind: InclusionKind, params: &[&str], beta: &str) -> String {
    match CoveringSpace::new(object_table_on(params), beta.parse().expect("beta"), kind) {
        Ok(_) => "valid".into(),
        Err(e) => format!("error: {e}"),
    }
}

fn nb(kind: InclusionKind, x: &str) -> String {
    or_err(space(kind).fuzzy_neighborhood(x).map(fuzzy))
}

fn cnb(kind: InclusionKind, x: &str) -> String {
    or_err(space(kind).crisp_neighborhood(x).map(crisp))
}

/// Rendering of F(e) over the object table.
fn column(p: &str) -> String {
    let cells = crate::tables::OBJECT_TABLE.iter().find(|(q, _)| *q == p).expect("known parameter").1;
    on_objects(cells)
}

fn neighborhood_fixtures() -> Vec<Fixture> {
    let p_x1 = on_objects(&["0.5,0.4,0.3", "0.4,0.3,0.2", "0.5,0.3,0.3", "1,1,1,1,1,0.2", "0.7,0.3,0.2"]);
    vec![
        fx("space.p.valid", "p-covering on {e1,e2}", "valid".into(), || validity(P, &["e1", "e2"], NEIGHBORHOOD_BETA)),
        fx("space.a.valid", "a-covering on {e1,e2}", "valid".into(), || validity(A, &["e1", "e2"], NEIGHBORHOOD_BETA)),
        fx("space.m.valid", "m-covering on {e2,e3}", "valid".into(), || validity(M, &["e2", "e3"], NEIGHBORHOOD_BETA)),
        fx("space.s.valid", "s-covering on {e3,e4}", "valid".into(), || validity(S, &["e3", "e4"], NEIGHBORHOOD_BETA)),
        fx("space.t.valid", "t-covering on {e4,e5}", "valid".into(), || validity(T, &["e4", "e5"], NEIGHBORHOOD_BETA)),
        fx("space.n.valid", "n-covering on {e5,e6}", "valid".into(), || validity(N, &["e5", "e6"], NEIGHBORHOOD_BETA)),
        fx("nbhd.p.x1", "p-neighborhood of x1 is F(e1) ∩ F(e2)", p_x1.clone(), || nb(P, "x1")),
        fx("nbhd.p.x2", "p-neighborhood of x2 is F(e1)", column("e1"), || nb(P, "x2")),
        fx("nbhd.a.x1", "a-neighborhood of x1 is F(e1) ∩ F(e2)", p_x1, || nb(A, "x1")),
        fx("nbhd.a.x2", "a-neighborhood of x2 is F(e1)", column("e1"), || nb(A, "x2")),
        fx("nbhd.m.x1", "m-neighborhood of x1 is F(e2) ∩ F(e3)",
            on_objects(&["0.7,0.5,0.2", "0.4,0.4,0.3,0.2", "0.5,0.5,0.3,0.3", "0.5,0.4", "0.6,0.5,0.2"]), || nb(M, "x1")),
        fx("nbhd.m.x2", "m-neighborhood of x2 is F(e3)", column("e3"), || nb(M, "x2")),
        fx("nbhd.s.x1", "s-neighborhood of x1 is F(e4)", column("e4"), || nb(S, "x1")),
        fx("nbhd.s.x2", "s-neighborhood of x2 is F(e3)", column("e3"), || nb(S, "x2")),
        fx("nbhd.t.x1", "no parameter t-qualifies at x1", "Null".into(), || nb(T, "x1")),
        fx("nbhd.t.x2", "t-neighborhood of x2 is F(e5)", column("e5"), || nb(T, "x2")),
        fx("nbhd.n.x1", "n-neighborhood of x1 is F(e5) ∩ F(e6)",
            on_objects(&["0.6,0.6", "0.6,0.5,0.5,0.4,0.3", "0.7,0.6", "0.7,0.7,0.6,0.5,0.1", "0.7,0.7,0.6,0.6,0.1"]), || nb(N, "x1")),
        fx("nbhd.n.x5", "n-neighborhood of x5 is F(e6)", column("e6"), || nb(N, "x5")),
    ]
}

fn crisp_neighborhood_fixtures() -> Vec<Fixture> {
    vec![
        fx("crisp-nbhd.p.x1", "crisp p-neighborhood of x1", "{x1,x3,x4,x5}".into(), || cnb(P, "x1")),
        fx("crisp-nbhd.a.x1", "crisp a-neighborhood of x1", "{x1,x3}".into(), || cnb(A, "x1")),
        fx("crisp-nbhd.m.x1", "crisp m-neighborhood of x1", "{x1,x3,x4,x5}".into(), || cnb(M, "x1")),
        fx("crisp-nbhd.s.x1", "crisp s-neighborhood of x1", "{x1,x4,x5}".into(), || cnb(S, "x1")),
        fx("crisp-nbhd.t.x2", "crisp t-neighborhood of x2", "{x2,x4,x5}".into(), || cnb(T, "x2")),
        fx("crisp-nbhd.t.x1", "crisp t-neighborhood of x1 is undefined", "Null".into(), || cnb(T, "x1")),
        fx("crisp-nbhd.n.x1", "crisp n-neighborhood of x1", "{x1,x3}".into(), || cnb(N, "x1")),
    ]
}

fn hesitant_approx_fixtures() -> Vec<Fixture> {
    let low = elem("0.3,0.3,0.3,0.3,0.2,0.2");
    let up = elem("0.2,0.2,0.2,0.2,0.2");
    let five = |e: &str| on_objects(&[e, e, e, e, e]);
    let coincide = "the same space under m: e7 also m-qualifies at x1 (mean 0.35 ≥ β's 0.333…), so the \
                    x1-neighborhood is F(e6) ∩ F(e7) rather than F(e6) and both approximations move";
    vec![
        fx("approx.p.neighborhood-x1", "p-neighborhood of x1 with β = {0.5,0.3,0.2} is F(e6)", column("e6"),
            || or_err(hes_space(P).fuzzy_neighborhood("x1").map(fuzzy))),
        fx("approx.p.lower", "p-lower approximation of X", five("0.3,0.3,0.3,0.3,0.2,0.2"),
            || or_err(hes_space(P).hesitant_lower(&target()))),
        fx("approx.p.upper", "p-upper approximation of X", five("0.2,0.2,0.2,0.2,0.2"),
            || or_err(hes_space(P).hesitant_upper(&target()))),
        fx("approx.n.lower-x1", "n-lower approximation at x1", low.clone(), || hes_lower_x1(N)),
        fx("approx.n.upper-x1", "n-upper approximation at x1", up.clone(), || hes_upper_x1(N)),
        fx("approx.s.lower-x1", "s-lower approximation at x1", low.clone(), || hes_lower_x1(S)),
        fx("approx.s.upper-x1", "s-upper approximation at x1", up.clone(), || hes_upper_x1(S)),
        noted(fx("approx.m.lower-x1", "m-lower approximation at x1", low.clone(), || hes_lower_x1(M)), coincide),
        noted(fx("approx.m.upper-x1", "m-upper approximation at x1", up.clone(), || hes_upper_x1(M)), coincide),
        fx("approx.a.lower-x1", "a-lower approximation at x1", low, || hes_lower_x1(A)),
        fx("approx.a.upper-x1", "a-upper approximation at x1", up.clone(), || hes_upper_x1(A)),
        fx("approx.t.neighborhood-x1", "t-neighborhood of x1 on {e6,e8} is F(e8)", column("e8"),
            || or_err(hes_space(T).fuzzy_neighborhood("x1").map(fuzzy))),
        fx("approx.t.lower-x1", "t-lower approximation at x1 (sixteen degrees)",
            elem("0.5,0.5,0.5,0.5,0.5,0.5,0.5,0.4,0.4,0.4,0.3,0.3,0.3,0.3,0.3,0.2"), || hes_lower_x1(T)),
        fx("approx.t.upper-x1", "t-upper approximation at x1", up, || hes_upper_x1(T)),
    ]
}

fn crisp_approx_fixtures() -> Vec<Fixture> {
    let pair = |l: &str| format!("lower {l}, upper {ALL}");
    vec![
        fx("crisp-approx.p.pair", "p-approximations of {x1,x2}", pair("{}"),
            || { let (l, u) = crisp_pair(P, &["e1", "e2"]); format!("lower {l}, upper {u}") }),
        noted(
            fx("crisp-approx.a.pair", "a-approximations of {x1,x2}", pair("{x1}"),
                || { let (l, u) = crisp_pair(A, &["e1", "e2"]); format!("lower {l}, upper {u}") }),
            "the crisp a-neighborhood of x1 in this space is {x1,x3}, as printed for the same space, and \
             {x1,x3} is not inside {x1,x2}; no other neighborhood is either, so the lower approximation is empty",
        ),
        fx("crisp-approx.m.neighborhood-x3", "crisp m-neighborhood of x3 on {e3,e4}", "{x1,x4,x5}".into(),
            || or_err(on_table(M, &["e3", "e4"], NEIGHBORHOOD_BETA).crisp_neighborhood("x3").map(crisp))),
        fx("crisp-approx.m.lower-escapes", "x3 is in the m-lower approximation of {x1,x2,x4,x5}", "true".into(), || {
            let s = on_table(M, &["e3", "e4"], NEIGHBORHOOD_BETA);
            contains(s.crisp_lower(&objects(&s, &["x1", "x2", "x4", "x5"])), 2)
        }),
        fx("crisp-approx.m.upper-misses", "x3 is in the m-upper approximation of {x3}", "false".into(), || {
            let s = on_table(M, &["e3", "e4"], NEIGHBORHOOD_BETA);
            contains(s.crisp_upper(&objects(&s, &["x3"])), 2)
        }),
        fx("crisp-approx.s.neighborhood-x5", "crisp s-neighborhood of x5 on {e4,e9}", "{x4}".into(),
            || or_err(on_table(S, &["e4", "e9"], NEIGHBORHOOD_BETA).crisp_neighborhood("x5").map(crisp))),
        fx("crisp-approx.s.lower-escapes", "x5 is in the s-lower approximation of {x1,x2,x3,x4}", "true".into(), || {
            let s = on_table(S, &["e4", "e9"], NEIGHBORHOOD_BETA);
            contains(s.crisp_lower(&objects(&s, &["x1", "x2", "x3", "x4"])), 4)
        }),
        fx("crisp-approx.s.upper-misses", "x5 is in the s-upper approximation of {x5}", "false".into(), || {
            let s = on_table(S, &["e4", "e9"], NEIGHBORHOOD_BETA);
            contains(s.crisp_upper(&objects(&s, &["x5"])), 4)
        }),
        fx("crisp-approx.t.pair", "t-approximations of {x1,x2} on {e6,e8}", pair("{}"),
            || { let (l, u) = crisp_pair(T, &["e6", "e8"]); format!("lower {l}, upper {u}") }),
        fx("crisp-approx.n.pair", "n-approximations of {x1,x2} on {e6,e7}", pair("{}"),
            || { let (l, u) = crisp_pair(N, &["e6", "e7"]); format!("lower {l}, upper {u}") }),
    ]
}
