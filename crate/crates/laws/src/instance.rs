use std::fmt;
use std::sync::Arc;

use hfsc_core::{
    CoveringSpace, HesitantElement, HesitantFuzzySet, HesitantFuzzySoftSet, InclusionKind, NeighborhoodTable, ObjectSet,
    Universe,
};
use serde::Serialize;

/// Parameter rows of one soft set, kept raw so the shrinker can cut them.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SoftRows {
    pub params: Vec<String>,
    /// `rows[j][x]`
    pub rows: Vec<Vec<HesitantElement>>,
}

impl SoftRows {
    pub fn build(&self, u: &Arc<Universe>) -> HesitantFuzzySoftSet {
        let entries = self
            .params
            .iter()
            .zip(&self.rows)
            .map(|(p, r)| (p.clone(), HesitantFuzzySet::new(u.clone(), r.clone()).expect("row length matches universe")));
        HesitantFuzzySoftSet::new(u.clone(), entries).expect("generated soft set")
    }

    pub fn index_of(&self, p: &str) -> Option<usize> {
        self.params.iter().position(|q| q == p)
    }
}

/// Everything a law may look at. Laws ignore the parts they do not use.
///
/// Slot conventions: `soft[0..3]` are F, G, H; `sets[0..3]` are X, Y, Z;
/// `subsets[0..2]` are crisp X, Y. `beta2` is a second threshold for
/// laws comparing two spaces.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Instance {
    pub objects: usize,
    pub kind: InclusionKind,
    pub beta: HesitantElement,
    pub beta2: HesitantElement,
    pub soft: Vec<SoftRows>,
    pub sets: Vec<Vec<HesitantElement>>,
    pub subsets: Vec<Vec<bool>>,
}

impl Instance {
    pub fn universe(&self) -> Arc<Universe> {
        Universe::numbered(self.objects)
    }

    pub fn soft_set(&self, i: usize) -> HesitantFuzzySoftSet {
        self.soft[i].build(&self.universe())
    }

    pub fn set(&self, i: usize) -> HesitantFuzzySet {
        HesitantFuzzySet::new(self.universe(), self.sets[i].clone()).expect("set length matches universe")
    }

    pub fn subset(&self, i: usize) -> ObjectSet {
        ObjectSet::from_mask(self.universe(), self.subsets[i].clone())
    }

    /// The space on F with `beta`, if F is a valid covering.
    pub fn space(&self) -> Option<CoveringSpace> {
        CoveringSpace::new(self.soft_set(0), self.beta.clone(), self.kind).ok()
    }

    pub fn space_with(&self, soft: usize, beta: &HesitantElement) -> Option<CoveringSpace> {
        CoveringSpace::new(self.soft_set(soft), beta.clone(), self.kind).ok()
    }

    /// Neighborhood table of the main space when it is valid and every
    /// neighborhood is defined.
    pub fn defined_table(&self) -> Option<NeighborhoodTable> {
        let t = self.space()?.neighborhood_table();
        t.all_defined().then_some(t)
    }

    /// The family of F's parameter images.
    pub fn family(&self) -> Vec<HesitantFuzzySet> {
        self.soft_set(0).sets().to_vec()
    }

    // ---- shrinking --------------------------------------------------------

    /// Strictly smaller neighbours, in the order objects, parameters, degrees.
    pub fn shrink_candidates(&self) -> Vec<Instance> {
        let mut out = Vec::new();
        if self.objects > 1 {
            for x in 0..self.objects {
                let mut c = self.clone();
                c.objects -= 1;
                for s in &mut c.soft {
                    for r in &mut s.rows {
                        r.remove(x);
                    }
                }
                for s in &mut c.sets {
                    s.remove(x);
                }
                for m in &mut c.subsets {
                    m.remove(x);
                }
                out.push(c);
            }
        }
        for (i, s) in self.soft.iter().enumerate() {
            if s.params.len() > 1 {
                for j in 0..s.params.len() {
                    let mut c = self.clone();
                    c.soft[i].params.remove(j);
                    c.soft[i].rows.remove(j);
                    out.push(c);
                }
            }
        }
        let mut push_elem = |path: &dyn Fn(&mut Instance) -> &mut HesitantElement, e: &HesitantElement| {
            for k in 0..e.len() {
                if let Some(smaller) = e.without(k) {
                    let mut c = self.clone();
                    *path(&mut c) = smaller;
                    out.push(c);
                }
            }
        };
        push_elem(&|c| &mut c.beta, &self.beta);
        push_elem(&|c| &mut c.beta2, &self.beta2);
        for (i, s) in self.soft.iter().enumerate() {
            for (j, r) in s.rows.iter().enumerate() {
                for (x, e) in r.iter().enumerate() {
                    push_elem(&move |c| &mut c.soft[i].rows[j][x], e);
                }
            }
        }
        for (i, s) in self.sets.iter().enumerate() {
            for (x, e) in s.iter().enumerate() {
                push_elem(&move |c| &mut c.sets[i][x], e);
            }
        }
        out
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let u = self.universe();
        writeln!(f, "U = {{{}}}, kind = {}, beta = {}, beta2 = {}", u.objects().join(","), self.kind, self.beta, self.beta2)?;
        for (name, s) in ["F", "G", "H"].iter().zip(&self.soft) {
            for (p, r) in s.params.iter().zip(&s.rows) {
                let cells: Vec<_> = r.iter().map(|e| e.to_string()).collect();
                writeln!(f, "{name}({p}) = [{}]", cells.join(" "))?;
            }
        }
        for (name, s) in ["X", "Y", "Z"].iter().zip(&self.sets) {
            let cells: Vec<_> = s.iter().map(|e| e.to_string()).collect();
            writeln!(f, "{name} = [{}]", cells.join(" "))?;
        }
        for (name, m) in ["crisp X", "crisp Y"].iter().zip(&self.subsets) {
            writeln!(f, "{name} = {}", ObjectSet::from_mask(u.clone(), m.clone()))?;
        }
        Ok(())
    }
}

impl Instance {
    /// A hand-written instance: F is given, every other slot is filler.
    pub fn with_soft(kind: InclusionKind, beta: &str, rows: &[(&str, &[&str])]) -> Instance {
        let objects = rows[0].1.len();
        let parse = |s: &str| s.parse::<HesitantElement>().expect("fixture literal");
        let f = SoftRows {
            params: rows.iter().map(|(p, _)| p.to_string()).collect(),
            rows: rows.iter().map(|(_, r)| r.iter().map(|s| parse(s)).collect()).collect(),
        };
        let half = vec![parse("0.5"); objects];
        Instance {
            objects,
            kind,
            beta: parse(beta),
            beta2: parse(beta),
            soft: vec![f.clone(), f.clone(), f],
            sets: vec![half.clone(), half.clone(), half],
            subsets: vec![vec![false; objects]; 2],
        }
    }
}
