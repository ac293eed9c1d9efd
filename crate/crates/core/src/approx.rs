use crate::element::{HesitantElement, InclusionKind};
use crate::error::Error;
use crate::hfs::{same_universe, HesitantFuzzySet, ObjectSet};
use crate::neighborhood::NeighborhoodTable;
use crate::soft::CoveringSpace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproximationPair {
    pub lower: HesitantFuzzySet,
    pub upper: HesitantFuzzySet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrispApproximationPair {
    pub lower: ObjectSet,
    pub upper: ObjectSet,
}

/// All four approximations of one pair of targets, with the space's settings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxReport {
    pub kind: InclusionKind,
    pub beta: HesitantElement,
    pub params: Vec<String>,
    pub hesitant: ApproximationPair,
    pub crisp: CrispApproximationPair,
}

impl NeighborhoodTable {
    /// `lower(X)(x) = ⋂_y ((SN~_x)^c(y) ∪ X(y))`, folded in universe order.
    pub fn hesitant_lower(&self, x: &HesitantFuzzySet) -> Result<HesitantFuzzySet, Error> {
        same_universe(&self.universe, x.universe())?;
        self.require_defined()?;
        let values = (0..self.universe.len())
            .map(|i| {
                let sn = self.fuzzy(i).expect("checked");
                let terms: Vec<_> = sn.values().iter().zip(x.values()).map(|(s, v)| s.complement().union(v)).collect();
                HesitantElement::intersect_all(&terms).expect("non-empty universe")
            })
            .collect();
        HesitantFuzzySet::new(self.universe.clone(), values)
    }

    /// `upper(X)(x) = ⋃_y (SN~_x(y) ∩ X(y))`, folded in universe order.
    pub fn hesitant_upper(&self, x: &HesitantFuzzySet) -> Result<HesitantFuzzySet, Error> {
        same_universe(&self.universe, x.universe())?;
        self.require_defined()?;
        let values = (0..self.universe.len())
            .map(|i| {
                let sn = self.fuzzy(i).expect("checked");
                let terms: Vec<_> = sn.values().iter().zip(x.values()).map(|(s, v)| s.intersect(v)).collect();
                HesitantElement::union_all(&terms).expect("non-empty universe")
            })
            .collect();
        HesitantFuzzySet::new(self.universe.clone(), values)
    }

    /// `{x : SN̄_x ⊑ X}`.
    pub fn crisp_lower(&self, x: &ObjectSet) -> Result<ObjectSet, Error> {
        same_universe(&self.universe, x.universe())?;
        self.require_defined()?;
        let mask = (0..self.universe.len()).map(|i| self.crisp(i).expect("checked").is_subset(x)).collect();
        Ok(ObjectSet::from_mask(self.universe.clone(), mask))
    }

    /// `{x : SN̄_x ⊓ X ≠ ∅}`.
    pub fn crisp_upper(&self, x: &ObjectSet) -> Result<ObjectSet, Error> {
        same_universe(&self.universe, x.universe())?;
        self.require_defined()?;
        let mask = (0..self.universe.len()).map(|i| self.crisp(i).expect("checked").intersects(x)).collect();
        Ok(ObjectSet::from_mask(self.universe.clone(), mask))
    }
}

impl CoveringSpace {
    pub fn hesitant_lower(&self, x: &HesitantFuzzySet) -> Result<HesitantFuzzySet, Error> {
        self.neighborhood_table().hesitant_lower(x)
    }

    pub fn hesitant_upper(&self, x: &HesitantFuzzySet) -> Result<HesitantFuzzySet, Error> {
        self.neighborhood_table().hesitant_upper(x)
    }

    pub fn crisp_lower(&self, x: &ObjectSet) -> Result<ObjectSet, Error> {
        self.neighborhood_table().crisp_lower(x)
    }

    pub fn crisp_upper(&self, x: &ObjectSet) -> Result<ObjectSet, Error> {
        self.neighborhood_table().crisp_upper(x)
    }

    pub fn approx_report(&self, hesitant: &HesitantFuzzySet, crisp: &ObjectSet) -> Result<ApproxReport, Error> {
        let table = self.neighborhood_table();
        Ok(ApproxReport {
            kind: self.kind(),
            beta: self.beta().clone(),
            params: self.soft().params().to_vec(),
            hesitant: ApproximationPair {
                lower: table.hesitant_lower(hesitant)?,
                upper: table.hesitant_upper(hesitant)?,
            },
            crisp: CrispApproximationPair {
                lower: table.crisp_lower(crisp)?,
                upper: table.crisp_upper(crisp)?,
            },
        })
    }
}
