#![allow(dead_code)]

use std::sync::Arc;

use hfsc_core::{CoveringSpace, Degree, HesitantElement, HesitantFuzzySet, HesitantFuzzySoftSet, InclusionKind, Universe};
use proptest::prelude::*;

// ---------------------------------------------------------------------------
// Brute-force reference: elements as unsorted Vec<u32> of tenths, operations
// written straight from the definitions with no sharing of library code.

pub mod oracle {
    use hfsc_core::InclusionKind;

    fn desc(mut v: Vec<u32>) -> Vec<u32> {
        v.sort_by(|a, b| b.cmp(a));
        v
    }

    pub fn union(a: &[u32], b: &[u32]) -> Vec<u32> {
        let t = (*a.iter().min().unwrap()).max(*b.iter().min().unwrap());
        desc(a.iter().chain(b).copied().filter(|&g| g >= t).collect())
    }

    pub fn intersect(a: &[u32], b: &[u32]) -> Vec<u32> {
        let t = (*a.iter().max().unwrap()).min(*b.iter().max().unwrap());
        desc(a.iter().chain(b).copied().filter(|&g| g <= t).collect())
    }

    pub fn complement(a: &[u32]) -> Vec<u32> {
        desc(a.iter().map(|g| 10 - g).collect())
    }

    pub fn includes(kind: InclusionKind, a: &[u32], b: &[u32]) -> bool {
        let (v, w) = (desc(a.to_vec()), desc(b.to_vec()));
        let (k, l) = (v.len(), w.len());
        let max = |x: &[u32]| *x.iter().max().unwrap();
        let min = |x: &[u32]| *x.iter().min().unwrap();
        match kind {
            InclusionKind::P => max(&v) <= max(&w),
            InclusionKind::A => max(&v) <= max(&w) && min(&v) <= min(&w),
            InclusionKind::M => {
                let sv: u32 = v.iter().sum();
                let sw: u32 = w.iter().sum();
                // sv/k <= sw/l
                (sv as u64) * (l as u64) <= (sw as u64) * (k as u64)
            }
            InclusionKind::S => k >= l && (0..l).all(|i| w[i] >= v[i]),
            InclusionKind::T => k < l && (0..k).all(|i| w[i] >= v[i]),
            InclusionKind::N => max(&v) <= min(&w),
        }
    }
}

// ---------------------------------------------------------------------------
// Conversions and small builders.

pub fn h(s: &str) -> HesitantElement {
    s.parse().unwrap()
}

pub fn tenths_of(e: &HesitantElement) -> Vec<u32> {
    e.degrees()
        .iter()
        .map(|d| {
            assert_eq!(d.units() % 100_000_000, 0, "off the tenth grid: {d}");
            d.units() / 100_000_000
        })
        .collect()
}

pub fn elem(t: &[u32]) -> HesitantElement {
    HesitantElement::from_tenths(t)
}

pub fn hfs(u: &Arc<Universe>, values: &[&str]) -> HesitantFuzzySet {
    HesitantFuzzySet::new(u.clone(), values.iter().map(|s| h(s)).collect()).unwrap()
}

pub fn soft(u: &Arc<Universe>, rows: &[(&str, &[&str])]) -> HesitantFuzzySoftSet {
    HesitantFuzzySoftSet::new(u.clone(), rows.iter().map(|(p, vals)| (p.to_string(), hfs(u, vals)))).unwrap()
}

// ---------------------------------------------------------------------------
// Reference tables.

/// Two soft sets over U = {x, y}, parameters e1..e5.
pub fn pair_tables() -> (HesitantFuzzySoftSet, HesitantFuzzySoftSet) {
    let u = Universe::new(["x", "y"]).unwrap();
    let f = soft(
        &u,
        &[
            ("e1", &["0.2,0.3,0.5", "0.3,0.5,0.7"]),
            ("e2", &["0.2,0.3,0.4", "0.1,0.2,0.3"]),
            ("e3", &["0.5,0.6,0.8", "0.1,0.5,0.8"]),
            ("e4", &["0.3,0.5", "0.2,0.6"]),
            ("e5", &["0.3,0.5,0.6", "0.1,0.2,0.3"]),
        ],
    );
    let g = soft(
        &u,
        &[
            ("e1", &["0.1,0.2,0.6", "0.2,0.5,0.8"]),
            ("e2", &["0.2,0.4,0.5", "0.2,0.3,0.3"]),
            ("e3", &["0.6,0.6,0.9", "0.2,0.5,0.8"]),
            ("e4", &["0.5,0.6,0.7", "0.7,0.8,0.9"]),
            ("e5", &["0.7,0.8,0.9", "0.3,0.4,0.5"]),
        ],
    );
    (f, g)
}

/// One soft set over x1..x5, parameters e1..e9.
pub fn object_table() -> HesitantFuzzySoftSet {
    let u = Universe::numbered(5);
    soft(
        &u,
        &[
            ("e1", &["0.5,0.4,0.3", "1,1", "1,1,1", "1,1,0.2", "0.7,0.3,0.2"]),
            ("e2", &["1,1", "0.4,0.3,0.2", "0.5,0.3,0.3", "1,1,1", "1,1,1"]),
            ("e3", &["0.7,0.5,0.2", "0.5,0.4", "0.5", "0.5,0.4", "0.6,0.5,0.2"]),
            ("e4", &["0.8,0.7", "0.6,0.1", "0.9,0.8,0.2", "0.6,0.5", "0.6,0.6"]),
            ("e5", &["0.8,0.7,0.7", "0.6,0.5,0.4,0.3", "0.9,0.8", "0.7,0.6,0.5,0.1", "0.8,0.7,0.6,0.1"]),
            ("e6", &["0.6,0.6", "0.7,0.5", "0.7,0.6", "0.8,0.7", "0.7,0.6"]),
            ("e7", &["0.4,0.3", "0.3,0.2", "0.2,0.1", "0.4,0.3", "0.3,0.2"]),
            ("e8", &["0.7,0.7,0.5,0.4", "0.6,0.5,0.4,0.4", "0.8,0.6,0.5,0.5", "0.7,0.7,0.5,0.4", "0.7,0.6,0.5,0.5"]),
            ("e9", &["0.7,0.5,0.2", "0.5,0.4", "0.5", "0.5,0.4", "0.6,0.5,0.3"]),
        ],
    )
}

pub fn restrict(f: &HesitantFuzzySoftSet, params: &[&str]) -> HesitantFuzzySoftSet {
    f.restrict(params).unwrap()
}

// ---------------------------------------------------------------------------
// Strategies on the tenth grid.

pub fn tenths_vec(max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..=10, 1..=max_len)
}

pub fn arb_elem() -> impl Strategy<Value = HesitantElement> {
    tenths_vec(5).prop_map(|t| HesitantElement::from_tenths(&t))
}

pub fn arb_kind() -> impl Strategy<Value = InclusionKind> {
    prop::sample::select(InclusionKind::ALL.to_vec())
}

pub fn arb_hfs(n: usize) -> impl Strategy<Value = HesitantFuzzySet> {
    prop::collection::vec(arb_elem(), n).prop_map(move |v| HesitantFuzzySet::new(Universe::numbered(n), v).unwrap())
}

pub fn arb_soft(n: usize, params: usize) -> impl Strategy<Value = HesitantFuzzySoftSet> {
    prop::collection::vec(arb_hfs(n), params).prop_map(|sets| {
        let u = sets[0].universe().clone();
        HesitantFuzzySoftSet::new(u, sets.into_iter().enumerate().map(|(j, s)| (format!("e{}", j + 1), s))).unwrap()
    })
}

pub fn d(s: &str) -> Degree {
    s.parse().unwrap()
}

/// A random soft set repaired into a valid β-covering: at every uncovered
/// object the last parameter is overwritten with ones.
pub fn arb_space(n: usize, params: usize) -> impl Strategy<Value = CoveringSpace> {
    (arb_soft(n, params), tenths_vec(4), arb_kind()).prop_filter_map("repair failed", |(mut f, b, kind)| {
        let beta = elem(&b);
        let last = f.len() - 1;
        while let Some(i) = f.first_uncovered(&beta, kind) {
            let len = if kind == InclusionKind::S { beta.len() } else { beta.len() + 1 };
            let ones = HesitantElement::constant(Degree::ONE, len);
            if f.sets()[last].at(i) == &ones {
                return None;
            }
            let set = f.sets()[last].with_value(i, ones);
            f = f.with_set(last, set);
        }
        CoveringSpace::new(f, beta, kind).ok()
    })
}

/// Fuzzy neighborhood as tenths per object, and its crisp membership.
pub type OracleNeighborhood = (Vec<Vec<u32>>, Vec<bool>);

/// Neighborhoods recomputed from the tenths oracle: `None` for undefined.
pub fn oracle_neighborhoods(space: &CoveringSpace) -> Vec<Option<OracleNeighborhood>> {
    let kind = space.kind();
    let beta = tenths_of(space.beta());
    let n = space.universe().len();
    (0..n)
        .map(|x| {
            let q: Vec<_> = space.soft().sets().iter().filter(|s| oracle::includes(kind, &beta, &tenths_of(s.at(x)))).collect();
            if q.is_empty() {
                return None;
            }
            let fuzzy: Vec<Vec<u32>> = (0..n)
                .map(|y| q[1..].iter().fold(tenths_of(q[0].at(y)), |acc, s| oracle::intersect(&acc, &tenths_of(s.at(y)))))
                .collect();
            let crisp = fuzzy.iter().map(|v| oracle::includes(kind, &beta, v)).collect();
            Some((fuzzy, crisp))
        })
        .collect()
}

pub fn arb_target(n: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(tenths_vec(4), n)
}

pub fn arb_mask(n: usize) -> impl Strategy<Value = Vec<bool>> {
    prop::collection::vec(any::<bool>(), n)
}

/// Case count with on-disk regression files turned off.
pub fn cfg(cases: u32) -> ProptestConfig {
    ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(cases) }
}
