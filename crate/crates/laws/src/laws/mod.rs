//! The law registry.

pub mod approx;
pub mod nbhd;
pub mod sets;
pub mod soft;
pub mod witness;

use std::collections::BTreeMap;

use crate::law::Law;

/// Every law, sorted by id.
pub fn registry() -> Vec<Law> {
    let mut v = sets::laws();
    v.extend(soft::laws());
    v.extend(nbhd::laws());
    v.extend(approx::laws());
    v.extend(witness::laws());
    v.sort_by(|a, b| a.id.cmp(&b.id));
    v
}

/// Law ids grouped by the part of the theory they exercise.
pub fn coverage(laws: &[Law]) -> BTreeMap<&'static str, Vec<String>> {
    let mut m: BTreeMap<&'static str, Vec<String>> = BTreeMap::new();
    for l in laws {
        m.entry(l.group).or_default().push(l.id.clone());
    }
    m
}
