//! Command-line front end: document loading, the five commands, and
//! canonical text/JSON rendering. `run` returns the output and exit status
//! instead of printing so the commands can be tested in-process.

pub mod doc;
pub mod error;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hfsc_core::{
    CoveringSpace, CrispNeighborhood, FuzzyNeighborhood, HesitantElement, HesitantFuzzySet, InclusionKind, ObjectSet,
    DEFAULT_PRECISION, MAX_PRECISION,
};
use hfsc_laws::{reference_fixtures, registry, run_fixtures, run_laws, Bounds};
use serde_json::{json, Map, Value};

pub use doc::{cell_text, SpaceDocument, TargetDocument};
pub use error::CliError;

#[derive(Parser, Debug)]
#[command(name = "hfsc", version, about = "Hesitant fuzzy soft β-covering spaces: neighborhoods, approximations, laws")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Fractional digits accepted in degree literals.
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION, value_parser = clap::value_parser!(u32).range(0..=MAX_PRECISION as i64))]
    pub precision: u32,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check that the soft set is a covering and a β-covering.
    Validate(SpaceArgs),
    /// Fuzzy (or with --crisp, crisp) neighborhoods.
    Nbhd {
        #[command(flatten)]
        space: SpaceArgs,
        /// Only this object.
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        crisp: bool,
    },
    /// Lower/upper approximations of a target.
    Approx {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        target: PathBuf,
        /// Defaults to the target's own form.
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        #[arg(long, value_enum, default_value_t = Bound::Both)]
        bound: Bound,
    },
    /// Run the law registry on generated instances.
    Laws {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        cases: u64,
    },
    /// Recompute the worked reference values and diff them against the printed ones.
    #[command(name = "repro-paper")]
    Reproduce,
}

#[derive(Args, Debug)]
pub struct SpaceArgs {
    /// JSON space document, or a .csv table.
    #[arg(long)]
    pub space: PathBuf,
    /// Overrides the document's kind.
    #[arg(long)]
    pub kind: Option<InclusionKind>,
    /// Overrides the document's β, e.g. "0.5,0.4,0.3".
    #[arg(long)]
    pub beta: Option<String>,
    /// Overrides the document's parameter subset, e.g. "e1,e2".
    #[arg(long, value_delimiter = ',')]
    pub params: Option<Vec<String>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Hesitant,
    Crisp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Bound {
    Lower,
    Upper,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run(cli: &Cli) -> Output {
    let r = match &cli.command {
        Command::Validate(s) => validate(cli, s),
        Command::Nbhd { space, x, crisp } => neighborhoods(cli, space, x.as_deref(), *crisp),
        Command::Approx { space, target, mode, bound } => approx(cli, space, target, *mode, *bound),
        Command::Laws { seed, cases } => {
            let r = run_laws(&registry(), *seed, Bounds::default(), *cases as usize);
            Ok((render_report(cli.format, r.to_json(), r.to_text()), r.exit_code()))
        }
        Command::Reproduce => {
            let r = run_fixtures(&reference_fixtures());
            Ok((render_report(cli.format, r.to_json(), r.to_text()), r.exit_code()))
        }
    };
    match r {
        Ok((stdout, code)) => Output { stdout, stderr: String::new(), code },
        Err(e) => Output { stdout: String::new(), stderr: format!("error: {e}\n"), code: e.exit_code() },
    }
}

fn render_report(f: Format, json: String, text: String) -> String {
    match f {
        Format::Json => json + "\n",
        Format::Text => text,
    }
}

/// The document with flag overrides applied: (F restricted to A, β, kind).
struct Setup {
    doc: SpaceDocument,
    soft: hfsc_core::HesitantFuzzySoftSet,
    beta: HesitantElement,
    kind: InclusionKind,
}

fn setup(cli: &Cli, a: &SpaceArgs) -> Result<Setup, CliError> {
    let doc = SpaceDocument::load(&a.space, cli.precision)?;
    let kind = a.kind.or(doc.kind).ok_or_else(|| CliError::Parse("no kind: pass --kind or set \"kind\"".into()))?;
    let beta = match &a.beta {
        Some(s) => HesitantElement::parse_list(s.trim().trim_start_matches('{').trim_end_matches('}'), cli.precision)
            .map_err(|e| CliError::Parse(format!("--beta: {e}")))?,
        None => doc.beta.clone().ok_or_else(|| CliError::Parse("no beta: pass --beta or set \"beta\"".into()))?,
    };
    let params = a.params.clone().or_else(|| doc.parameters.clone());
    let soft = match &params {
        Some(p) => doc.soft.restrict(p).map_err(|e| CliError::Parse(format!("parameters: {e}")))?,
        None => doc.soft.clone(),
    };
    Ok(Setup { doc, soft, beta, kind })
}

fn space(s: &Setup) -> Result<CoveringSpace, CliError> {
    CoveringSpace::new(s.soft.clone(), s.beta.clone(), s.kind).map_err(|e| CliError::Verdict(e.to_string()))
}

fn header(s: &Setup) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("kind".into(), json!(s.kind.to_string()));
    m.insert("beta".into(), json!(cell_text(&s.beta)));
    m.insert("parameters".into(), json!(s.soft.params()));
    m
}

fn header_text(s: &Setup) -> String {
    format!("kind {}, beta {}, parameters {{{}}}\n", s.kind, s.beta, s.soft.params().join(","))
}

fn set_json(h: &HesitantFuzzySet) -> Value {
    Value::Object(h.iter().map(|(o, e)| (o.to_string(), json!(cell_text(e)))).collect())
}

fn objects_json(s: &ObjectSet) -> Value {
    json!(s.names())
}

fn finish(cli: &Cli, m: Map<String, Value>, text: String, code: i32) -> Result<(String, i32), CliError> {
    let out = match cli.format {
        Format::Json => serde_json::to_string_pretty(&Value::Object(m)).expect("serializes") + "\n",
        Format::Text => text,
    };
    Ok((out, code))
}

fn validate(cli: &Cli, a: &SpaceArgs) -> Result<(String, i32), CliError> {
    let s = setup(cli, a)?;
    let union = s.soft.union_all();
    let covering = s.soft.is_covering();
    let failing = s.soft.first_uncovered(&s.beta, s.kind).map(|i| s.soft.universe().name(i).to_string());
    let mut m = header(&s);
    m.insert("union".into(), set_json(&union));
    m.insert("covering".into(), json!(covering));
    m.insert("beta_covering".into(), json!(failing.is_none()));
    m.insert("failing_object".into(), failing.clone().map_or(Value::Null, Value::String));
    let mut t = header_text(&s);
    t += &format!("union: {union}\n");
    t += &format!("covering: {}\n", if covering { "yes" } else { "no" });
    match &failing {
        None => t += &format!("β-covering ({}): yes\n", s.kind),
        Some(x) => t += &format!("β-covering ({}): no, fails at {x}\n", s.kind),
    }
    finish(cli, m, t, i32::from(failing.is_some()))
}

fn neighborhoods(cli: &Cli, a: &SpaceArgs, only: Option<&str>, crisp: bool) -> Result<(String, i32), CliError> {
    let s = setup(cli, a)?;
    let sp = space(&s)?;
    let objects: Vec<String> = match only {
        Some(x) => {
            s.doc.universe().position(x).map_err(|e| CliError::Parse(e.to_string()))?;
            vec![x.to_string()]
        }
        None => s.doc.universe().objects().to_vec(),
    };
    let table = sp.neighborhood_table();
    let mut rows = Vec::new();
    let mut t = header_text(&s);
    for x in &objects {
        let row = &table.rows[s.doc.universe().position(x).expect("checked")];
        let mut r = Map::new();
        r.insert("object".into(), json!(x));
        r.insert("qualifying".into(), json!(row.qualifying));
        if crisp {
            let v = match &row.crisp {
                CrispNeighborhood::Defined(o) => (objects_json(o), o.to_string()),
                CrispNeighborhood::Undefined => (json!("Null"), "Null".to_string()),
            };
            r.insert("crisp".into(), v.0);
            t += &format!("SN_{x} = {}\n", v.1);
        } else {
            let v = match &row.fuzzy {
                FuzzyNeighborhood::Defined(h) => (set_json(h), h.to_string()),
                FuzzyNeighborhood::Undefined => (json!("Null"), "Null".to_string()),
            };
            r.insert("fuzzy".into(), v.0);
            t += &format!("SN~_{x} = {}\n", v.1);
        }
        rows.push(Value::Object(r));
    }
    let mut m = header(&s);
    m.insert("neighborhoods".into(), Value::Array(rows));
    finish(cli, m, t, 0)
}

fn approx(
    cli: &Cli,
    a: &SpaceArgs,
    target: &std::path::Path,
    mode: Option<Mode>,
    bound: Bound,
) -> Result<(String, i32), CliError> {
    let s = setup(cli, a)?;
    let sp = space(&s)?;
    let tgt = TargetDocument::load(target, s.doc.universe(), cli.precision)?;
    let verdict = |e: hfsc_core::Error| CliError::Verdict(e.to_string());
    let mut m = header(&s);
    let mut t = header_text(&s);
    let (lower, upper) = (bound != Bound::Upper, bound != Bound::Lower);
    match (tgt, mode) {
        (TargetDocument::Hesitant(x), None | Some(Mode::Hesitant)) => {
            m.insert("mode".into(), json!("hesitant"));
            if lower {
                let l = sp.hesitant_lower(&x).map_err(verdict)?;
                m.insert("lower".into(), set_json(&l));
                t += &format!("lower: {l}\n");
            }
            if upper {
                let u = sp.hesitant_upper(&x).map_err(verdict)?;
                m.insert("upper".into(), set_json(&u));
                t += &format!("upper: {u}\n");
            }
        }
        (TargetDocument::Crisp(x), None | Some(Mode::Crisp)) => {
            m.insert("mode".into(), json!("crisp"));
            if lower {
                let l = sp.crisp_lower(&x).map_err(verdict)?;
                m.insert("lower".into(), objects_json(&l));
                t += &format!("lower: {l}\n");
            }
            if upper {
                let u = sp.crisp_upper(&x).map_err(verdict)?;
                m.insert("upper".into(), objects_json(&u));
                t += &format!("upper: {u}\n");
            }
        }
        (_, Some(md)) => {
            return Err(CliError::Parse(format!("--mode {md:?} does not match the target document's form").to_lowercase()))
        }
    }
    finish(cli, m, t, 0)
}
