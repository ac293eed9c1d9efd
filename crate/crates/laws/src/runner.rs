//! Runs laws on seeded instances, shrinks the first counterexample of each
//! failing law, and renders a deterministic report.

use std::fmt::Write as _;

use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;

use crate::gen::{Bounds, Gen, Rng8};
use crate::instance::Instance;
use crate::law::{Expectation, Law, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    /// Every generated case missed the hypothesis. Not a failure.
    Vacuous,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    /// Generated case index, or `None` for a stored regression or fixed instance.
    pub case: Option<usize>,
    pub message: String,
    pub shrink_steps: usize,
    pub instance: Instance,
    pub rendered: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct LawResult {
    pub id: String,
    pub group: &'static str,
    pub statement: String,
    pub expect: Expectation,
    pub status: Status,
    pub evaluated: usize,
    pub held: usize,
    pub vacuous: usize,
    pub failure: Option<Failure>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub seed: u64,
    pub cases: usize,
    pub bounds: Bounds,
    pub passed: usize,
    pub vacuous: usize,
    pub failed: usize,
    pub laws: Vec<LawResult>,
}

const MAX_SHRINK_STEPS: usize = 500;

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// splitmix64 finalizer
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Per-case seed: independent of law order and thread scheduling.
pub fn case_seed(seed: u64, law: &str, case: usize) -> u64 {
    mix(mix(seed ^ fnv1a(law)).wrapping_add(case as u64))
}

pub fn generate(law: &Law, gen: &Gen, seed: u64, case: usize) -> Instance {
    let mut rng = Rng8::seed_from_u64(case_seed(seed, &law.id, case));
    let mut inst = gen.instance(&mut rng, law.kind);
    (law.prepare)(gen, &mut rng, &mut inst);
    inst
}

/// Greedy descent over `shrink_candidates`, keeping the first candidate that
/// still violates the law.
pub fn shrink(law: &Law, mut inst: Instance, mut message: String) -> (Instance, String, usize) {
    let mut steps = 0;
    'outer: while steps < MAX_SHRINK_STEPS {
        for c in inst.shrink_candidates() {
            if let Verdict::Violated(m) = (law.check)(&c) {
                inst = c;
                message = m;
                steps += 1;
                continue 'outer;
            }
        }
        break;
    }
    (inst, message, steps)
}

fn failure(case: Option<usize>, message: String, steps: usize, instance: Instance) -> Failure {
    let rendered = instance.to_string();
    Failure { case, message, shrink_steps: steps, instance, rendered }
}

pub fn run_law(law: &Law, gen: &Gen, seed: u64, cases: usize) -> LawResult {
    let mut r = LawResult {
        id: law.id.clone(),
        group: law.group,
        statement: law.statement.clone(),
        expect: law.expect,
        status: Status::Pass,
        evaluated: 0,
        held: 0,
        vacuous: 0,
        failure: None,
    };
    let tally = |v: &Verdict, r: &mut LawResult| {
        r.evaluated += 1;
        match v {
            Verdict::Holds => r.held += 1,
            Verdict::Vacuous => r.vacuous += 1,
            Verdict::Violated(_) => {}
        }
    };

    for inst in &law.regressions {
        let v = (law.check)(inst);
        tally(&v, &mut r);
        match (v, law.expect) {
            (Verdict::Violated(m), Expectation::Holds) => {
                let (i, m, s) = shrink(law, inst.clone(), m);
                r.failure = Some(failure(None, m, s, i));
                r.status = Status::Fail;
                return r;
            }
            (Verdict::Violated(m), Expectation::StrictWitness) => {
                r.failure = Some(failure(None, m, 0, inst.clone()));
                r.status = Status::Fail;
                return r;
            }
            (Verdict::Vacuous, Expectation::StrictWitness) => {
                let m = "the fixed instance does not meet the construction's premises".to_string();
                r.failure = Some(failure(None, m, 0, inst.clone()));
                r.status = Status::Fail;
                return r;
            }
            _ => {}
        }
    }
    if law.expect == Expectation::StrictWitness {
        return r;
    }

    for case in 0..cases {
        let inst = generate(law, gen, seed, case);
        let v = (law.check)(&inst);
        tally(&v, &mut r);
        if let Verdict::Violated(m) = v {
            let (i, m, s) = shrink(law, inst, m);
            r.failure = Some(failure(Some(case), m, s, i));
            r.status = Status::Fail;
            return r;
        }
    }
    if r.held == 0 {
        r.status = Status::Vacuous;
    }
    r
}

/// Runs every law with `cases` generated instances each. The report holds
/// no timings, so equal inputs give byte-identical output.
pub fn run_laws(laws: &[Law], seed: u64, bounds: Bounds, cases: usize) -> Report {
    let gen = Gen::new(bounds);
    let mut results: Vec<LawResult> = laws.par_iter().map(|l| run_law(l, &gen, seed, cases)).collect();
    results.sort_by(|a, b| a.id.cmp(&b.id));
    let count = |s: Status| results.iter().filter(|r| r.status == s).count();
    Report {
        seed,
        cases,
        bounds,
        passed: count(Status::Pass),
        vacuous: count(Status::Vacuous),
        failed: count(Status::Fail),
        laws: results,
    }
}

impl Report {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    /// 0 when every law passed or was vacuous, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.ok() {
            0
        } else {
            1
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawResult> {
        self.laws.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "seed {} | {} cases per law | {} laws", self.seed, self.cases, self.laws.len());
        for r in &self.laws {
            let tag = match r.status {
                Status::Pass => "PASS",
                Status::Vacuous => "VACUOUS",
                Status::Fail => "FAIL",
            };
            let _ = writeln!(s, "{tag:<7} {} ({} held, {} vacuous)", r.id, r.held, r.vacuous);
            if let Some(f) = &r.failure {
                let at = f.case.map_or("fixed instance".to_string(), |c| format!("case {c}"));
                let _ = writeln!(s, "        {}", r.statement);
                let _ = writeln!(s, "        {at}, {} shrink steps: {}", f.shrink_steps, f.message);
                for line in f.rendered.lines() {
                    let _ = writeln!(s, "          {line}");
                }
            }
        }
        let _ = writeln!(s, "{} passed, {} vacuous, {} failed", self.passed, self.vacuous, self.failed);
        s
    }
}
