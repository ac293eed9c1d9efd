use std::fmt;

use hfsc_core::{HesitantFuzzySet, InclusionKind, ObjectSet};
use serde::Serialize;

use crate::gen::{Gen, Rng8};
use crate::instance::Instance;

/// Outcome of one law on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// The hypothesis is not met on this instance.
    Vacuous,
    Violated(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    /// Quantified law, checked on generated instances.
    Holds,
    /// Fixed construction showing a one-sided law is strict.
    StrictWitness,
}

pub type Prepare = Box<dyn Fn(&Gen, &mut Rng8, &mut Instance) + Send + Sync>;
pub type Check = Box<dyn Fn(&Instance) -> Verdict + Send + Sync>;

pub struct Law {
    pub id: String,
    pub group: &'static str,
    pub statement: String,
    pub expect: Expectation,
    /// Kind stamped onto generated instances.
    pub kind: InclusionKind,
    pub prepare: Prepare,
    pub check: Check,
    /// Instances evaluated before any generated case.
    pub regressions: Vec<Instance>,
}

impl Law {
    pub fn holds(
        id: impl Into<String>,
        group: &'static str,
        statement: impl Into<String>,
        kind: InclusionKind,
        prepare: impl Fn(&Gen, &mut Rng8, &mut Instance) + Send + Sync + 'static,
        check: impl Fn(&Instance) -> Verdict + Send + Sync + 'static,
    ) -> Law {
        Law {
            id: id.into(),
            group,
            statement: statement.into(),
            expect: Expectation::Holds,
            kind,
            prepare: Box::new(prepare),
            check: Box::new(check),
            regressions: Vec::new(),
        }
    }

    pub fn witness(
        id: impl Into<String>,
        group: &'static str,
        statement: impl Into<String>,
        fixed: Instance,
        check: impl Fn(&Instance) -> Verdict + Send + Sync + 'static,
    ) -> Law {
        Law {
            id: id.into(),
            group,
            statement: statement.into(),
            expect: Expectation::StrictWitness,
            kind: fixed.kind,
            prepare: Box::new(|_, _, _| {}),
            check: Box::new(check),
            regressions: vec![fixed],
        }
    }

    pub fn with_regression(mut self, inst: Instance) -> Law {
        self.regressions.push(inst);
        self
    }
}

impl fmt::Debug for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Law").field("id", &self.id).field("expect", &self.expect).finish()
    }
}

// ---- check vocabulary ------------------------------------------------------

/// Vacuous unless the hypothesis holds.
macro_rules! need {
    ($c:expr) => {
        if !$c {
            return $crate::law::Verdict::Vacuous;
        }
    };
}

/// Unwraps an `Option`/`Result`, treating absence as a vacuous case.
macro_rules! take {
    ($e:expr) => {
        match $crate::law::Present::present($e) {
            Some(v) => v,
            None => return $crate::law::Verdict::Vacuous,
        }
    };
}

macro_rules! ensure {
    ($c:expr, $($fmt:tt)+) => {
        if !$c {
            return $crate::law::Verdict::Violated(format!($($fmt)+));
        }
    };
}

pub(crate) use {ensure, need, take};

pub trait Present<T> {
    fn present(self) -> Option<T>;
}

impl<T> Present<T> for Option<T> {
    fn present(self) -> Option<T> {
        self
    }
}

impl<T, E> Present<T> for Result<T, E> {
    fn present(self) -> Option<T> {
        self.ok()
    }
}

/// A relation between hesitant fuzzy sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    In(InclusionKind),
    Sot,
}

impl Rel {
    pub fn test(self, a: &HesitantFuzzySet, b: &HesitantFuzzySet) -> bool {
        match self {
            Rel::In(k) => a.included_in(k, b).unwrap_or(false),
            Rel::Sot => a.included_in_sot(b).unwrap_or(false),
        }
    }
}

impl fmt::Display for Rel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rel::In(k) => write!(f, "{k}"),
            Rel::Sot => f.write_str("sot"),
        }
    }
}

pub fn sub(k: InclusionKind, a: &HesitantFuzzySet, b: &HesitantFuzzySet) -> bool {
    Rel::In(k).test(a, b)
}

/// `=_k`: inclusion both ways.
pub fn eqv(k: InclusionKind, a: &HesitantFuzzySet, b: &HesitantFuzzySet) -> bool {
    sub(k, a, b) && sub(k, b, a)
}

pub fn show(h: &HesitantFuzzySet) -> String {
    h.to_string()
}

pub fn show_set(s: &ObjectSet) -> String {
    s.to_string()
}
