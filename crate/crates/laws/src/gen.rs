//! Random instances on a decimal grid, plus constructive helpers that build
//! elements satisfying a given inclusion hypothesis.

use hfsc_core::{Degree, HesitantElement, InclusionKind, MAX_PRECISION};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::instance::{Instance, SoftRows};

use InclusionKind::*;

pub type Rng8 = ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub max_objects: usize,
    pub max_params: usize,
    pub max_len: usize,
    /// Fractional digits of the degree grid; 1 means multiples of 0.1.
    pub grid_digits: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_objects: 5, max_params: 4, max_len: 5, grid_digits: 1 }
    }
}

/// Grid arithmetic: degrees are drawn as integer steps.
#[derive(Clone, Copy, Debug)]
pub struct Gen {
    pub bounds: Bounds,
    steps: u32,
}

impl Gen {
    pub fn new(bounds: Bounds) -> Gen {
        let digits = bounds.grid_digits.clamp(1, MAX_PRECISION);
        Gen { bounds, steps: 10u32.pow(digits) }
    }

    fn unit(&self) -> u32 {
        (Degree::UNITS as u32) / self.steps
    }

    fn step_of_ceil(&self, d: Degree) -> u32 {
        d.units().div_ceil(self.unit())
    }

    fn step_of_floor(&self, d: Degree) -> u32 {
        d.units() / self.unit()
    }

    fn deg(&self, step: u32) -> Degree {
        Degree::from_units(step * self.unit()).expect("within grid")
    }

    /// Uniform grid degree in `[lo, hi]`; falls back to `lo` if no grid point fits.
    pub fn degree_in(&self, rng: &mut Rng8, lo: Degree, hi: Degree) -> Degree {
        let (a, b) = (self.step_of_ceil(lo), self.step_of_floor(hi));
        if a > b {
            return lo;
        }
        self.deg(rng.gen_range(a..=b))
    }

    pub fn degree(&self, rng: &mut Rng8) -> Degree {
        self.degree_in(rng, Degree::ZERO, Degree::ONE)
    }

    pub fn len(&self, rng: &mut Rng8) -> usize {
        rng.gen_range(1..=self.bounds.max_len)
    }

    pub fn element(&self, rng: &mut Rng8) -> HesitantElement {
        let n = self.len(rng);
        self.element_in(rng, n, Degree::ZERO, Degree::ONE)
    }

    pub fn element_in(&self, rng: &mut Rng8, len: usize, lo: Degree, hi: Degree) -> HesitantElement {
        HesitantElement::new((0..len).map(|_| self.degree_in(rng, lo, hi)).collect()).expect("non-empty")
    }

    pub fn row(&self, rng: &mut Rng8, n: usize) -> Vec<HesitantElement> {
        (0..n).map(|_| self.element(rng)).collect()
    }

    /// Some `b` with `a ⊂_kind b`.
    pub fn above(&self, rng: &mut Rng8, kind: InclusionKind, a: &HesitantElement) -> HesitantElement {
        let len = self.len(rng);
        match kind {
            P => {
                let mut d = self.element(rng).degrees().to_vec();
                d[0] = self.degree_in(rng, a.upper(), Degree::ONE);
                HesitantElement::new(d).expect("non-empty")
            }
            A => {
                let mut d = self.element_in(rng, len, a.lower(), Degree::ONE).degrees().to_vec();
                d[0] = self.degree_in(rng, a.upper(), Degree::ONE);
                HesitantElement::new(d).expect("non-empty")
            }
            M => self.element_in(rng, len, ceil_mean(a), Degree::ONE),
            S => {
                let l = rng.gen_range(1..=a.len());
                HesitantElement::new(a.degrees()[..l].iter().map(|&g| self.degree_in(rng, g, Degree::ONE)).collect())
                    .expect("non-empty")
            }
            T => {
                let extra = rng.gen_range(1..=2);
                let mut d: Vec<_> = a.degrees().iter().map(|&g| self.degree_in(rng, g, Degree::ONE)).collect();
                d.extend((0..extra).map(|_| self.degree(rng)));
                HesitantElement::new(d).expect("non-empty")
            }
            N => self.element_in(rng, len, a.upper(), Degree::ONE),
        }
    }

    /// Some `a` with `a ⊂_kind b`, or `None` when none exists (T over a
    /// singleton).
    pub fn below(&self, rng: &mut Rng8, kind: InclusionKind, b: &HesitantElement) -> Option<HesitantElement> {
        let len = self.len(rng);
        Some(match kind {
            P => self.element_in(rng, len, Degree::ZERO, b.upper()),
            A | M | N => self.above(rng, kind, &b.complement()).complement(),
            S => {
                let extra = rng.gen_range(0..=1);
                let mut d: Vec<_> = b.degrees().iter().map(|&g| self.degree_in(rng, Degree::ZERO, g)).collect();
                d.extend((0..extra).map(|_| self.degree_in(rng, Degree::ZERO, b.lower())));
                HesitantElement::new(d).expect("non-empty")
            }
            T => {
                if b.len() < 2 {
                    return None;
                }
                let l = rng.gen_range(1..b.len());
                HesitantElement::new(b.degrees()[..l].iter().map(|&g| self.degree_in(rng, Degree::ZERO, g)).collect())
                    .expect("non-empty")
            }
        })
    }

    /// A fresh instance: universe, F/G/H sharing F's first parameter,
    /// three hesitant sets, two crisp sets, two thresholds.
    pub fn instance(&self, rng: &mut Rng8, kind: InclusionKind) -> Instance {
        let n = rng.gen_range(1..=self.bounds.max_objects);
        let pool: Vec<String> = (1..=self.bounds.max_params.max(1)).map(|j| format!("e{j}")).collect();
        let f_params = self.pick_params(rng, &pool, None);
        let anchor = f_params[0].clone();
        let g_params = self.pick_params(rng, &pool, Some(&anchor));
        let h_params = self.pick_params(rng, &pool, Some(&anchor));
        let soft = [f_params, g_params, h_params]
            .into_iter()
            .map(|params| {
                let rows = params.iter().map(|_| self.row(rng, n)).collect();
                SoftRows { params, rows }
            })
            .collect();
        Instance {
            objects: n,
            kind,
            beta: self.element(rng),
            beta2: self.element(rng),
            soft,
            sets: (0..3).map(|_| self.row(rng, n)).collect(),
            subsets: (0..2).map(|_| (0..n).map(|_| rng.gen_bool(0.5)).collect()).collect(),
        }
    }

    /// A non-empty ordered subset of `pool`, containing `must` if given.
    fn pick_params(&self, rng: &mut Rng8, pool: &[String], must: Option<&String>) -> Vec<String> {
        let k = rng.gen_range(1..=pool.len());
        let mut chosen: Vec<String> = pool.choose_multiple(rng, k).cloned().collect();
        if let Some(m) = must {
            if !chosen.contains(m) {
                chosen[0] = m.clone();
            }
        }
        chosen.sort_by_key(|p| p[1..].parse::<usize>().unwrap_or(0));
        chosen.dedup();
        chosen
    }

    /// Repairs F (soft slot 0) into a valid covering for `inst.beta`, and if
    /// `defined` is set, so that every neighborhood is defined. Returns
    /// whether it succeeded; laws treat failures as vacuous cases.
    pub fn make_space(&self, rng: &mut Rng8, inst: &mut Instance, defined: bool) -> bool {
        self.make_space_at(rng, inst, 0, defined)
    }

    pub fn make_space_at(&self, rng: &mut Rng8, inst: &mut Instance, slot: usize, defined: bool) -> bool {
        let (kind, beta) = (inst.kind, inst.beta.clone());
        for attempt in 0..8 {
            let f = inst.soft_set(slot);
            let union = f.union_all();
            let bad: Vec<usize> = (0..inst.objects)
                .filter(|&x| {
                    !beta.included_in(kind, union.at(x))
                        || (defined && !f.sets().iter().any(|s| beta.included_in(kind, s.at(x))))
                })
                .collect();
            if bad.is_empty() {
                return true;
            }
            let rows = &mut inst.soft[slot].rows;
            for x in bad {
                let j = rng.gen_range(0..rows.len());
                rows[j][x] = self.above(rng, kind, &beta);
                if attempt >= 3 {
                    // a bottom element in every other row leaves the union at x
                    // equal to row j's value unless that value reaches 0
                    for (k, r) in rows.iter_mut().enumerate() {
                        if k != j {
                            r[x] = HesitantElement::singleton(Degree::ZERO);
                        }
                    }
                }
            }
        }
        inst.space_with(slot, &beta).is_some_and(|s| !defined || s.neighborhood_table().all_defined())
    }

    pub fn shuffle<T>(&self, rng: &mut Rng8, v: &mut [T]) {
        v.shuffle(rng);
    }
}

/// Smallest degree (in units) not below the mean. Rounding up keeps the
/// mean comparison exact.
fn ceil_mean(a: &HesitantElement) -> Degree {
    let sum: u64 = a.degrees().iter().map(|d| d.units() as u64).sum();
    let n = a.len() as u64;
    Degree::from_units(sum.div_ceil(n) as u32).expect("mean of degrees is a degree")
}
