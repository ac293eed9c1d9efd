//! The two reference tables, transcribed cell by cell.

use std::sync::Arc;

use hfsc_core::{HesitantFuzzySet, HesitantFuzzySoftSet, Universe};

pub type Rows = &'static [(&'static str, &'static [&'static str])];

/// F and G over U = {x, y}, parameters e1..e5.
pub const PAIR_F: Rows = &[
    ("e1", &["0.2,0.3,0.5", "0.3,0.5,0.7"]),
    ("e2", &["0.2,0.3,0.4", "0.1,0.2,0.3"]),
    ("e3", &["0.5,0.6,0.8", "0.1,0.5,0.8"]),
    ("e4", &["0.3,0.5", "0.2,0.6"]),
    ("e5", &["0.3,0.5,0.6", "0.1,0.2,0.3"]),
];

pub const PAIR_G: Rows = &[
    ("e1", &["0.1,0.2,0.6", "0.2,0.5,0.8"]),
    ("e2", &["0.2,0.4,0.5", "0.2,0.3,0.3"]),
    ("e3", &["0.6,0.6,0.9", "0.2,0.5,0.8"]),
    ("e4", &["0.5,0.6,0.7", "0.7,0.8,0.9"]),
    ("e5", &["0.7,0.8,0.9", "0.3,0.4,0.5"]),
];

/// One soft set over x1..x5, parameters e1..e9.
pub const OBJECT_TABLE: Rows = &[
    ("e1", &["0.5,0.4,0.3", "1,1", "1,1,1", "1,1,0.2", "0.7,0.3,0.2"]),
    ("e2", &["1,1", "0.4,0.3,0.2", "0.5,0.3,0.3", "1,1,1", "1,1,1"]),
    ("e3", &["0.7,0.5,0.2", "0.5,0.4", "0.5", "0.5,0.4", "0.6,0.5,0.2"]),
    ("e4", &["0.8,0.7", "0.6,0.1", "0.9,0.8,0.2", "0.6,0.5", "0.6,0.6"]),
    ("e5", &["0.8,0.7,0.7", "0.6,0.5,0.4,0.3", "0.9,0.8", "0.7,0.6,0.5,0.1", "0.8,0.7,0.6,0.1"]),
    ("e6", &["0.6,0.6", "0.7,0.5", "0.7,0.6", "0.8,0.7", "0.7,0.6"]),
    ("e7", &["0.4,0.3", "0.3,0.2", "0.2,0.1", "0.4,0.3", "0.3,0.2"]),
    ("e8", &["0.7,0.7,0.5,0.4", "0.6,0.5,0.4,0.4", "0.8,0.6,0.5,0.5", "0.7,0.7,0.5,0.4", "0.7,0.6,0.5,0.5"]),
    ("e9", &["0.7,0.5,0.2", "0.5,0.4", "0.5", "0.5,0.4", "0.6,0.5,0.3"]),
];

pub fn hfs(u: &Arc<Universe>, cells: &[&str]) -> HesitantFuzzySet {
    HesitantFuzzySet::new(u.clone(), cells.iter().map(|c| c.parse().expect("table literal")).collect())
        .expect("row length")
}

pub fn soft(u: &Arc<Universe>, rows: Rows) -> HesitantFuzzySoftSet {
    HesitantFuzzySoftSet::new(u.clone(), rows.iter().map(|(p, r)| (p.to_string(), hfs(u, r)))).expect("table literal")
}

pub fn pair_universe() -> Arc<Universe> {
    Universe::new(["x", "y"]).expect("two objects")
}

pub fn pair_f() -> HesitantFuzzySoftSet {
    soft(&pair_universe(), PAIR_F)
}

pub fn pair_g() -> HesitantFuzzySoftSet {
    soft(&pair_universe(), PAIR_G)
}

pub fn object_table() -> HesitantFuzzySoftSet {
    soft(&Universe::numbered(5), OBJECT_TABLE)
}

/// `object_table()` restricted to `params`.
pub fn object_table_on(params: &[&str]) -> HesitantFuzzySoftSet {
    object_table().restrict(params).expect("known parameters")
}
