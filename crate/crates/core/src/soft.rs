use std::fmt;
use std::sync::Arc;

use crate::degree::Degree;
use crate::element::{HesitantElement, InclusionKind};
use crate::error::Error;
use crate::hfs::{family_union, same_universe, HesitantFuzzySet, Universe};

/// A hesitant fuzzy soft set `(F, A)`: one hesitant fuzzy set per parameter.
#[derive(Clone, PartialEq, Eq)]
pub struct HesitantFuzzySoftSet {
    universe: Arc<Universe>,
    params: Vec<String>,
    sets: Vec<HesitantFuzzySet>,
}

impl HesitantFuzzySoftSet {
    pub fn new<I, S>(universe: Arc<Universe>, entries: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (S, HesitantFuzzySet)>,
        S: Into<String>,
    {
        let mut params = Vec::new();
        let mut sets = Vec::new();
        for (p, h) in entries {
            let p = p.into();
            if params.contains(&p) {
                return Err(Error::DuplicateParameter(p));
            }
            same_universe(&universe, h.universe())?;
            params.push(p);
            sets.push(h);
        }
        if params.is_empty() {
            return Err(Error::EmptyParameters);
        }
        Ok(HesitantFuzzySoftSet { universe, params, sets })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn sets(&self) -> &[HesitantFuzzySet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    pub fn get(&self, param: &str) -> Option<&HesitantFuzzySet> {
        self.params.iter().position(|p| p == param).map(|i| &self.sets[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &HesitantFuzzySet)> {
        self.params.iter().map(String::as_str).zip(&self.sets)
    }

    /// The soft set `(F, A')` for a sub-list `A'` of the parameters, in the
    /// order given.
    pub fn restrict<S: AsRef<str>>(&self, params: &[S]) -> Result<Self, Error> {
        let entries = params
            .iter()
            .map(|p| {
                let p = p.as_ref();
                self.get(p)
                    .cloned()
                    .map(|h| (p.to_string(), h))
                    .ok_or_else(|| Error::UnknownParameter(p.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(self.universe.clone(), entries)
    }

    fn restricted(&self, other: &Self, op: impl Fn(&HesitantFuzzySet, &HesitantFuzzySet) -> Result<HesitantFuzzySet, Error>) -> Result<Self, Error> {
        same_universe(&self.universe, &other.universe)?;
        let mut entries = Vec::new();
        for (p, f) in self.iter() {
            if let Some(g) = other.get(p) {
                entries.push((p.to_string(), op(f, g)?));
            }
        }
        if entries.is_empty() {
            return Err(Error::EmptyParameterIntersection);
        }
        Self::new(self.universe.clone(), entries)
    }

    /// Parameters `A ⊓ B`, each mapped to `F(e) ∩ G(e)`.
    pub fn restricted_intersect(&self, other: &Self) -> Result<Self, Error> {
        self.restricted(other, HesitantFuzzySet::intersect)
    }

    /// Parameters `A ⊓ B`, each mapped to `F(e) ∪ G(e)`.
    pub fn restricted_union(&self, other: &Self) -> Result<Self, Error> {
        self.restricted(other, HesitantFuzzySet::union)
    }

    /// Parameters `A ⊔ B`: `F(e)` on `A - B`, `G(e)` on `B - A`, and the
    /// union on the overlap.
    pub fn extended_union(&self, other: &Self) -> Result<Self, Error> {
        same_universe(&self.universe, &other.universe)?;
        let mut entries = Vec::new();
        for (p, f) in self.iter() {
            let h = match other.get(p) {
                Some(g) => f.union(g)?,
                None => f.clone(),
            };
            entries.push((p.to_string(), h));
        }
        for (p, g) in other.iter() {
            if self.get(p).is_none() {
                entries.push((p.to_string(), g.clone()));
            }
        }
        Self::new(self.universe.clone(), entries)
    }

    pub fn complement(&self) -> Self {
        HesitantFuzzySoftSet {
            universe: self.universe.clone(),
            params: self.params.clone(),
            sets: self.sets.iter().map(HesitantFuzzySet::complement).collect(),
        }
    }

    fn pairwise(&self, other: &Self, op: impl Fn(&HesitantFuzzySet, &HesitantFuzzySet) -> Result<HesitantFuzzySet, Error>) -> Result<PairTable, Error> {
        same_universe(&self.universe, &other.universe)?;
        let mut cells = Vec::with_capacity(self.len() * other.len());
        for f in &self.sets {
            for g in &other.sets {
                cells.push(op(f, g)?);
            }
        }
        Ok(PairTable {
            rows: self.params.clone(),
            cols: other.params.clone(),
            cells,
        })
    }

    /// `F(e_i) ∩ G(e_j)` for every pair.
    pub fn wedge(&self, other: &Self) -> Result<PairTable, Error> {
        self.pairwise(other, HesitantFuzzySet::intersect)
    }

    /// `F(e_i) ∪ G(e_j)` for every pair.
    pub fn vee(&self, other: &Self) -> Result<PairTable, Error> {
        self.pairwise(other, HesitantFuzzySet::union)
    }

    /// `(F, A) ⊂_kind (G, B)`: `A ⊑ B` and `F(e) ⊂_kind G(e)` for `e ∈ A`.
    pub fn included_in(&self, kind: InclusionKind, other: &Self) -> Result<bool, Error> {
        same_universe(&self.universe, &other.universe)?;
        for (p, f) in self.iter() {
            match other.get(p) {
                Some(g) if f.included_in(kind, g)? => {}
                _ => return Ok(false),
            }
        }
        Ok(true)
    }

    /// Same parameter set and per-parameter equivalence under `kind`.
    pub fn equiv(&self, kind: InclusionKind, other: &Self) -> Result<bool, Error> {
        same_universe(&self.universe, &other.universe)?;
        if self.len() != other.len() {
            return Ok(false);
        }
        for (p, f) in self.iter() {
            match other.get(p) {
                Some(g) if f.equiv(kind, g)? => {}
                _ => return Ok(false),
            }
        }
        Ok(true)
    }

    /// `⋃_{e ∈ A} F(e)`.
    pub fn union_all(&self) -> HesitantFuzzySet {
        family_union(&self.sets).expect("soft sets have at least one parameter")
    }

    /// All-ones set whose length at `x` is the shortest `|F(e)(x)|`.
    pub fn one_of(&self) -> HesitantFuzzySet {
        let values = (0..self.universe.len())
            .map(|i| {
                let n = self.sets.iter().map(|h| h.at(i).len()).min().expect("non-empty");
                HesitantElement::constant(Degree::ONE, n)
            })
            .collect();
        HesitantFuzzySet::new(self.universe.clone(), values).expect("total")
    }

    /// `1 ⊂_sot ⋃ F(e)` at every object.
    pub fn is_covering(&self) -> bool {
        self.one_of().included_in_sot(&self.union_all()).expect("same universe")
    }

    /// First object (in universe order) where `β ⊄_kind (⋃ F(e))(x)`.
    pub fn first_uncovered(&self, beta: &HesitantElement, kind: InclusionKind) -> Option<usize> {
        let u = self.union_all();
        u.values().iter().position(|h| !beta.included_in(kind, h))
    }

    pub fn beta_covers(&self, beta: &HesitantElement, kind: InclusionKind) -> bool {
        self.first_uncovered(beta, kind).is_none()
    }

    /// Drops object `i`, re-homing every image on `universe`.
    pub fn without_object(&self, i: usize, universe: &Arc<Universe>) -> Self {
        HesitantFuzzySoftSet {
            universe: universe.clone(),
            params: self.params.clone(),
            sets: self.sets.iter().map(|h| h.without_object(i, universe)).collect(),
        }
    }

    /// Drops parameter `j`, or `None` if it is the only one.
    pub fn without_param(&self, j: usize) -> Option<Self> {
        if self.len() == 1 {
            return None;
        }
        let mut out = self.clone();
        out.params.remove(j);
        out.sets.remove(j);
        Some(out)
    }

    pub fn with_set(&self, j: usize, h: HesitantFuzzySet) -> Self {
        let mut out = self.clone();
        out.sets[j] = h;
        out
    }
}

impl fmt::Display for HesitantFuzzySoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, h) in self.iter() {
            writeln!(f, "{p}: {h}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HesitantFuzzySoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Result of a wedge or vee product, indexed by parameter pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairTable {
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    cells: Vec<HesitantFuzzySet>,
}

impl PairTable {
    pub fn get(&self, row: &str, col: &str) -> Option<&HesitantFuzzySet> {
        let i = self.rows.iter().position(|r| r == row)?;
        let j = self.cols.iter().position(|c| c == col)?;
        Some(&self.cells[i * self.cols.len() + j])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str, &HesitantFuzzySet)> {
        let n = self.cols.len();
        self.cells
            .iter()
            .enumerate()
            .map(move |(k, h)| (self.rows[k / n].as_str(), self.cols[k % n].as_str(), h))
    }

    pub fn complement(&self) -> PairTable {
        PairTable {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            cells: self.cells.iter().map(HesitantFuzzySet::complement).collect(),
        }
    }
}

/// A soft set validated as a β-covering under one inclusion kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringSpace {
    soft: HesitantFuzzySoftSet,
    beta: HesitantElement,
    kind: InclusionKind,
}

impl CoveringSpace {
    pub fn new(soft: HesitantFuzzySoftSet, beta: HesitantElement, kind: InclusionKind) -> Result<Self, Error> {
        if let Some(i) = soft.first_uncovered(&beta, kind) {
            return Err(Error::NotABetaCovering {
                object: soft.universe().name(i).to_string(),
            });
        }
        Ok(CoveringSpace { soft, beta, kind })
    }

    pub fn soft(&self) -> &HesitantFuzzySoftSet {
        &self.soft
    }

    pub fn beta(&self) -> &HesitantElement {
        &self.beta
    }

    pub fn kind(&self) -> InclusionKind {
        self.kind
    }

    pub fn universe(&self) -> &Arc<Universe> {
        self.soft.universe()
    }
}
