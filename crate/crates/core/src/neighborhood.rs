use std::sync::Arc;

use crate::element::{HesitantElement, InclusionKind};
use crate::error::Error;
use crate::hfs::{family_intersect, HesitantFuzzySet, ObjectSet, Universe};
use crate::soft::CoveringSpace;

/// `SN~_x`: the intersection of every qualifying parameter image, or
/// `Undefined` when no parameter qualifies at `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FuzzyNeighborhood {
    Defined(HesitantFuzzySet),
    Undefined,
}

impl FuzzyNeighborhood {
    pub fn defined(&self) -> Option<&HesitantFuzzySet> {
        match self {
            FuzzyNeighborhood::Defined(h) => Some(h),
            FuzzyNeighborhood::Undefined => None,
        }
    }
}

/// `SN̄_x`: the objects where β is dominated by `SN~_x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CrispNeighborhood {
    Defined(ObjectSet),
    Undefined,
}

impl CrispNeighborhood {
    pub fn defined(&self) -> Option<&ObjectSet> {
        match self {
            CrispNeighborhood::Defined(s) => Some(s),
            CrispNeighborhood::Undefined => None,
        }
    }
}

/// `{z : β ⊂_kind h(z)}` for an arbitrary hesitant fuzzy set `h`.
pub fn crisp_of(kind: InclusionKind, beta: &HesitantElement, h: &HesitantFuzzySet) -> ObjectSet {
    let mask = h.values().iter().map(|v| beta.included_in(kind, v)).collect();
    ObjectSet::from_mask(h.universe().clone(), mask)
}

impl CoveringSpace {
    /// Indices of parameters `e` with `β ⊂_kind F(e)(x_i)`.
    pub fn qualifying(&self, i: usize) -> Vec<usize> {
        self.soft()
            .sets()
            .iter()
            .enumerate()
            .filter(|(_, h)| self.beta().included_in(self.kind(), h.at(i)))
            .map(|(j, _)| j)
            .collect()
    }

    pub fn fuzzy_neighborhood_at(&self, i: usize) -> FuzzyNeighborhood {
        let q = self.qualifying(i);
        if q.is_empty() {
            return FuzzyNeighborhood::Undefined;
        }
        let sets = self.soft().sets();
        FuzzyNeighborhood::Defined(family_intersect(q.iter().map(|&j| &sets[j])).expect("non-empty"))
    }

    pub fn fuzzy_neighborhood(&self, x: &str) -> Result<FuzzyNeighborhood, Error> {
        Ok(self.fuzzy_neighborhood_at(self.universe().position(x)?))
    }

    pub fn crisp_neighborhood_at(&self, i: usize) -> CrispNeighborhood {
        match self.fuzzy_neighborhood_at(i) {
            FuzzyNeighborhood::Defined(h) => CrispNeighborhood::Defined(crisp_of(self.kind(), self.beta(), &h)),
            FuzzyNeighborhood::Undefined => CrispNeighborhood::Undefined,
        }
    }

    pub fn crisp_neighborhood(&self, x: &str) -> Result<CrispNeighborhood, Error> {
        Ok(self.crisp_neighborhood_at(self.universe().position(x)?))
    }

    /// Both neighborhoods of every object, in universe order.
    pub fn neighborhood_table(&self) -> NeighborhoodTable {
        let rows = (0..self.universe().len())
            .map(|i| {
                let qualifying = self.qualifying(i);
                let fuzzy = if qualifying.is_empty() {
                    FuzzyNeighborhood::Undefined
                } else {
                    let sets = self.soft().sets();
                    FuzzyNeighborhood::Defined(family_intersect(qualifying.iter().map(|&j| &sets[j])).expect("non-empty"))
                };
                let crisp = match &fuzzy {
                    FuzzyNeighborhood::Defined(h) => CrispNeighborhood::Defined(crisp_of(self.kind(), self.beta(), h)),
                    FuzzyNeighborhood::Undefined => CrispNeighborhood::Undefined,
                };
                NeighborhoodRow {
                    object: self.universe().name(i).to_string(),
                    qualifying: qualifying.iter().map(|&j| self.soft().params()[j].clone()).collect(),
                    fuzzy,
                    crisp,
                }
            })
            .collect();
        NeighborhoodTable {
            universe: self.universe().clone(),
            kind: self.kind(),
            beta: self.beta().clone(),
            rows,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodRow {
    pub object: String,
    pub qualifying: Vec<String>,
    pub fuzzy: FuzzyNeighborhood,
    pub crisp: CrispNeighborhood,
}

/// Neighborhoods of every object of a space; also the entry point for
/// approximations, which reuse it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodTable {
    pub(crate) universe: Arc<Universe>,
    pub(crate) kind: InclusionKind,
    pub(crate) beta: HesitantElement,
    pub rows: Vec<NeighborhoodRow>,
}

impl NeighborhoodTable {
    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn kind(&self) -> InclusionKind {
        self.kind
    }

    pub fn beta(&self) -> &HesitantElement {
        &self.beta
    }

    pub fn fuzzy(&self, i: usize) -> Option<&HesitantFuzzySet> {
        self.rows[i].fuzzy.defined()
    }

    pub fn crisp(&self, i: usize) -> Option<&ObjectSet> {
        self.rows[i].crisp.defined()
    }

    /// First object whose neighborhood is undefined.
    pub fn first_undefined(&self) -> Option<usize> {
        self.rows.iter().position(|r| r.fuzzy == FuzzyNeighborhood::Undefined)
    }

    pub fn all_defined(&self) -> bool {
        self.first_undefined().is_none()
    }

    pub(crate) fn require_defined(&self) -> Result<(), Error> {
        match self.first_undefined() {
            Some(i) => Err(Error::UndefinedNeighborhood(self.universe.name(i).to_string())),
            None => Ok(()),
        }
    }
}
