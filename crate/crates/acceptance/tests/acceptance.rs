//! Acceptance gate. Prints one PASS/FAIL line per criterion with its wall
//! time and budget, then details for the failures, and exits nonzero if any
//! criterion failed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hfsc_cli::{run, Cli, Command, Format};
use hfsc_laws::{reference_fixtures, registry, run_fixtures, run_laws, Bounds, Expectation, Law, Status};

/// The published seed for the generated-case criteria.
const SEED: u64 = 1;
const CASES: usize = 1000;

struct Outcome {
    ok: bool,
    summary: String,
    details: Vec<String>,
}

struct Criterion {
    name: &'static str,
    budget: Duration,
    check: fn() -> Outcome,
}

fn fixtures(prefixes: &[&str]) -> Outcome {
    let chosen: Vec<_> =
        reference_fixtures().into_iter().filter(|f| prefixes.iter().any(|p| f.id.starts_with(p))).collect();
    let r = run_fixtures(&chosen);
    let details = r
        .fixtures
        .iter()
        .filter(|f| !f.ok)
        .map(|f| {
            let mut s = format!("{}: expected {}, got {}", f.id, f.expected, f.actual);
            if let Some(n) = f.note {
                s += &format!("\n      {n}");
            }
            s
        })
        .collect();
    Outcome {
        ok: r.ok() && !chosen.is_empty(),
        summary: format!("{}/{} fixtures exact", r.passed, r.passed + r.failed),
        details,
    }
}

fn laws(select: impl Fn(&Law) -> bool, cases: usize, min_held: usize) -> Outcome {
    let chosen: Vec<Law> = registry().into_iter().filter(|l| select(l)).collect();
    let r = run_laws(&chosen, SEED, Bounds::default(), cases);
    let mut details: Vec<String> = r
        .failures()
        .map(|l| {
            let m = l.failure.as_ref().map_or(String::new(), |f| f.message.clone());
            format!("{}: {}\n      {m}", l.id, l.statement)
        })
        .collect();
    let thin: Vec<_> = r.laws.iter().filter(|l| l.status == Status::Pass && l.held < min_held).collect();
    for l in &thin {
        details.push(format!("{}: only {} non-vacuous cases, {min_held} required", l.id, l.held));
    }
    let vacuous: Vec<&str> = r.laws.iter().filter(|l| l.status == Status::Vacuous).map(|l| l.id.as_str()).collect();
    let mut summary = format!("{} laws, {} passed, {} vacuous, {} failed", r.laws.len(), r.passed, r.vacuous, r.failed);
    if !vacuous.is_empty() {
        summary += &format!(" (vacuous: {})", vacuous.join(", "));
    }
    Outcome { ok: r.ok() && thin.is_empty() && !chosen.is_empty(), summary, details }
}

fn cli(command: Command, format: Format) -> String {
    let o = run(&Cli { command, format, precision: 4 });
    format!("{}\n--- stderr\n{}\n--- exit {}", o.stdout, o.stderr, o.code)
}

fn determinism() -> Outcome {
    let mut details = Vec::new();
    let mut runs = 0;
    for format in [Format::Text, Format::Json] {
        let laws = || cli(Command::Laws { seed: SEED, cases: 100 }, format);
        let repro = || cli(Command::Reproduce, format);
        for (what, a, b) in [("laws", laws(), laws()), ("repro-paper", repro(), repro())] {
            runs += 2;
            if a != b {
                details.push(format!("{what} --format {format:?}: outputs differ"));
            }
        }
    }
    Outcome { ok: details.is_empty(), summary: format!("{runs} runs, pairwise byte-identical"), details }
}

fn duality_id(l: &Law) -> bool {
    let parts: Vec<&str> = l.id.split('.').collect();
    matches!(parts.as_slice(), ["approx" | "crisp", _, "duality"])
}

fn main() -> ExitCode {
    let second = Duration::from_secs(1);
    let minute = Duration::from_secs(60);
    let criteria = [
        Criterion {
            name: "soft-set algebra table: restricted meet/join, extended join",
            budget: second,
            check: || {
                fixtures(&["pair-table.restricted-meet", "pair-table.restricted-join", "pair-table.extended-join"])
            },
        },
        Criterion {
            name: "six covering spaces valid, fuzzy neighborhoods incl. Null",
            budget: second,
            check: || fixtures(&["space.", "nbhd."]),
        },
        Criterion { name: "crisp neighborhoods incl. Null", budget: second, check: || fixtures(&["crisp-nbhd."]) },
        Criterion {
            name: "hesitant approximations: p everywhere, t at x1, n/s/m/a coincidences",
            budget: second,
            check: || fixtures(&["approx."]),
        },
        Criterion {
            name: "crisp approximation pairs and the m/s sandwich escapes",
            budget: second,
            check: || fixtures(&["crisp-approx."]),
        },
        Criterion {
            name: "every quantified law over 1000 cases, seed 1",
            budget: minute,
            check: || laws(|l| l.expect == Expectation::Holds, CASES, 0),
        },
        Criterion {
            name: "four strictness constructions",
            budget: second,
            check: || laws(|l| l.expect == Expectation::StrictWitness, 1, 0),
        },
        Criterion {
            name: "duality, hesitant and crisp, 1000 non-vacuous cases per kind",
            budget: minute,
            check: || laws(duality_id, CASES, CASES),
        },
        Criterion { name: "laws and repro-paper reports byte-identical", budget: minute, check: determinism },
    ];

    let mut failed = 0;
    let mut notes = Vec::new();
    for (i, c) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = (c.check)();
        let dt = t.elapsed();
        let in_time = dt < c.budget;
        let ok = o.ok && in_time;
        failed += usize::from(!ok);
        println!(
            "criterion {} {} {:>8.3}s (budget {}s)  {}: {}",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            dt.as_secs_f64(),
            c.budget.as_secs(),
            c.name,
            o.summary
        );
        if !in_time {
            notes.push(format!("criterion {}: over budget", i + 1));
        }
        for d in o.details {
            notes.push(format!("criterion {}: {d}", i + 1));
        }
    }
    if !notes.is_empty() {
        println!();
        for n in notes {
            println!("  {n}");
        }
    }
    println!("\n{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
