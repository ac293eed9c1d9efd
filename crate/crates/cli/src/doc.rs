//! Space and target documents: JSON and the table-style CSV layout.

use std::path::Path;
use std::sync::Arc;

use hfsc_core::{DegreeLiteral, HesitantElement, HesitantFuzzySet, HesitantFuzzySoftSet, InclusionKind, ObjectSet, Universe};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::CliError;

/// A degree list as written: `"0.5,0.4,0.3"` or `["0.5", 0.4, ...]`.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
enum Cell {
    Text(String),
    List(Vec<DegreeLiteral>),
}

fn parse_cell(c: &Cell, precision: u32, at: &str) -> Result<HesitantElement, CliError> {
    let r = match c {
        Cell::Text(s) => HesitantElement::parse_list(s.trim().trim_start_matches('{').trim_end_matches('}'), precision),
        Cell::List(v) => v
            .iter()
            .map(|d| d.parse(precision))
            .collect::<Result<Vec<_>, _>>()
            .and_then(HesitantElement::new),
    };
    r.map_err(|e| CliError::Parse(format!("{at}: {e}")))
}

/// Canonical cell text: descending, comma-joined, no braces.
pub fn cell_text(h: &HesitantElement) -> String {
    let s = h.to_string();
    s[1..s.len() - 1].to_string()
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawSpace {
    universe: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    parameters: Option<Vec<String>>,
    soft_set: Map<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    beta: Option<Cell>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    kind: Option<String>,
}

/// U, the soft set F on E, an optional choice of A ⊆ E, and optionally β and the kind.
#[derive(Clone, Debug, PartialEq)]
pub struct SpaceDocument {
    pub soft: HesitantFuzzySoftSet,
    pub parameters: Option<Vec<String>>,
    pub beta: Option<HesitantElement>,
    pub kind: Option<InclusionKind>,
}

impl SpaceDocument {
    pub fn universe(&self) -> &Arc<Universe> {
        self.soft.universe()
    }

    pub fn from_json(text: &str, precision: u32) -> Result<Self, CliError> {
        let raw: RawSpace = serde_json::from_str(text).map_err(|e| CliError::Parse(format!("space document: {e}")))?;
        let u = Universe::new(raw.universe.iter().cloned()).map_err(|e| CliError::Parse(format!("universe: {e}")))?;
        let mut entries = Vec::new();
        for (p, row) in &raw.soft_set {
            let Value::Object(cells) = row else {
                return Err(CliError::Parse(format!("soft_set.{p}: expected an object mapping objects to degrees")));
            };
            for o in cells.keys() {
                if u.position(o).is_err() {
                    return Err(CliError::Parse(format!("soft_set.{p}: unknown object {o:?}")));
                }
            }
            let mut values = Vec::with_capacity(u.len());
            for o in u.objects() {
                let at = format!("soft_set.{p}.{o}");
                let v = cells.get(o).ok_or_else(|| CliError::Parse(format!("{at}: missing")))?;
                let c: Cell = serde_json::from_value(v.clone()).map_err(|e| CliError::Parse(format!("{at}: {e}")))?;
                values.push(parse_cell(&c, precision, &at)?);
            }
            let h = HesitantFuzzySet::new(u.clone(), values).map_err(|e| CliError::Parse(e.to_string()))?;
            entries.push((p.clone(), h));
        }
        let soft = HesitantFuzzySoftSet::new(u, entries).map_err(|e| CliError::Parse(format!("soft_set: {e}")))?;
        let beta = raw.beta.as_ref().map(|c| parse_cell(c, precision, "beta")).transpose()?;
        let kind = raw
            .kind
            .as_deref()
            .map(|k| k.parse::<InclusionKind>().map_err(|e| CliError::Parse(format!("kind: {e}"))))
            .transpose()?;
        let doc = SpaceDocument { soft, parameters: raw.parameters, beta, kind };
        if let Some(ps) = &doc.parameters {
            doc.soft.restrict(ps).map_err(|e| CliError::Parse(format!("parameters: {e}")))?;
        }
        Ok(doc)
    }

    /// The table-style layout: a header row `U, x1, ..., xn`, then one row
    /// per parameter with one comma-joined degree list per object.
    pub fn from_csv(text: &str, precision: u32) -> Result<Self, CliError> {
        let mut rd = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(true)
            .trim(csv::Trim::All)
            .comment(Some(b'#'))
            .from_reader(text.as_bytes());
        let mut rows = rd.records();
        let head = rows
            .next()
            .ok_or_else(|| CliError::Parse("csv: empty file".into()))?
            .map_err(|e| CliError::Parse(format!("csv: {e}")))?;
        let objects: Vec<String> = head.iter().skip(1).filter(|s| !s.is_empty()).map(str::to_string).collect();
        let u = Universe::new(objects).map_err(|e| CliError::Parse(format!("csv header: {e}")))?;
        let mut entries = Vec::new();
        for (line, rec) in rows.enumerate() {
            let rec = rec.map_err(|e| CliError::Parse(format!("csv: {e}")))?;
            let mut it = rec.iter();
            let Some(p) = it.next().filter(|p| !p.is_empty()) else { continue };
            let cells: Vec<&str> = it.collect();
            let cells: Vec<&str> = cells.into_iter().take(u.len()).collect();
            if cells.len() < u.len() || cells.iter().any(|c| c.is_empty()) {
                return Err(CliError::Parse(format!("csv row {} ({p}): expected {} cells", line + 2, u.len())));
            }
            let values = cells
                .iter()
                .zip(u.objects())
                .map(|(c, o)| parse_cell(&Cell::Text(c.to_string()), precision, &format!("csv {p}.{o}")))
                .collect::<Result<Vec<_>, _>>()?;
            entries.push((p.to_string(), HesitantFuzzySet::new(u.clone(), values).expect("row length checked")));
        }
        let soft = HesitantFuzzySoftSet::new(u, entries).map_err(|e| CliError::Parse(format!("csv: {e}")))?;
        Ok(SpaceDocument { soft, parameters: None, beta: None, kind: None })
    }

    /// Reads JSON, or CSV when the file name ends in `.csv`.
    pub fn load(path: &Path, precision: u32) -> Result<Self, CliError> {
        let text = read(path)?;
        if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
            Self::from_csv(&text, precision)
        } else {
            Self::from_json(&text, precision)
        }
    }

    pub fn to_json(&self) -> String {
        let mut soft_set = Map::new();
        for (p, h) in self.soft.iter() {
            let row: Map<String, Value> = h.iter().map(|(o, e)| (o.to_string(), Value::String(cell_text(e)))).collect();
            soft_set.insert(p.to_string(), Value::Object(row));
        }
        let raw = RawSpace {
            universe: self.universe().objects().to_vec(),
            parameters: self.parameters.clone(),
            soft_set,
            beta: self.beta.as_ref().map(|b| Cell::Text(cell_text(b))),
            kind: self.kind.map(|k| k.to_string()),
        };
        serde_json::to_string_pretty(&raw).expect("document serializes")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum TargetDocument {
    Hesitant(HesitantFuzzySet),
    Crisp(ObjectSet),
}

impl TargetDocument {
    /// `{"subset": [...]}` for a crisp target, otherwise an object mapping
    /// every object of `u` to a degree list.
    pub fn from_json(text: &str, u: &Arc<Universe>, precision: u32) -> Result<Self, CliError> {
        let v: Value = serde_json::from_str(text).map_err(|e| CliError::Parse(format!("target document: {e}")))?;
        let Value::Object(m) = v else {
            return Err(CliError::Parse("target document: expected an object".into()));
        };
        if let Some(sub) = m.get("subset") {
            if m.len() != 1 {
                return Err(CliError::Parse("target document: a crisp target has only the \"subset\" key".into()));
            }
            let names: Vec<String> = serde_json::from_value(sub.clone())
                .map_err(|e| CliError::Parse(format!("subset: {e}")))?;
            let s = ObjectSet::from_names(u.clone(), names.iter().map(String::as_str))
                .map_err(|e| CliError::Parse(format!("subset: {e}")))?;
            return Ok(TargetDocument::Crisp(s));
        }
        for o in m.keys() {
            if u.position(o).is_err() {
                return Err(CliError::Parse(format!("target: unknown object {o:?}")));
            }
        }
        let mut values = Vec::with_capacity(u.len());
        for o in u.objects() {
            let v = m.get(o).ok_or_else(|| CliError::Parse(format!("target.{o}: missing")))?;
            let c: Cell = serde_json::from_value(v.clone()).map_err(|e| CliError::Parse(format!("target.{o}: {e}")))?;
            values.push(parse_cell(&c, precision, &format!("target.{o}"))?);
        }
        Ok(TargetDocument::Hesitant(HesitantFuzzySet::new(u.clone(), values).expect("one value per object")))
    }

    pub fn load(path: &Path, u: &Arc<Universe>, precision: u32) -> Result<Self, CliError> {
        Self::from_json(&read(path)?, u, precision)
    }

    pub fn to_json(&self) -> String {
        let v = match self {
            TargetDocument::Crisp(s) => serde_json::json!({ "subset": s.names() }),
            TargetDocument::Hesitant(h) => {
                Value::Object(h.iter().map(|(o, e)| (o.to_string(), Value::String(cell_text(e)))).collect())
            }
        };
        serde_json::to_string_pretty(&v).expect("document serializes")
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}
