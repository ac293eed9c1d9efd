use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::degree::Degree;
use crate::element::{HesitantElement, InclusionKind};
use crate::error::Error;

/// A finite, ordered set of distinct object identifiers.
#[derive(Clone)]
pub struct Universe {
    objects: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<I, S>(objects: I) -> Result<Arc<Universe>, Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let objects: Vec<String> = objects.into_iter().map(Into::into).collect();
        if objects.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let mut index = HashMap::with_capacity(objects.len());
        for (i, o) in objects.iter().enumerate() {
            if index.insert(o.clone(), i).is_some() {
                return Err(Error::DuplicateObject(o.clone()));
            }
        }
        Ok(Arc::new(Universe { objects, index }))
    }

    /// `x1, ..., xn`.
    pub fn numbered(n: usize) -> Arc<Universe> {
        Universe::new((1..=n).map(|i| format!("x{i}"))).expect("n > 0")
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn name(&self, i: usize) -> &str {
        &self.objects[i]
    }

    pub fn position(&self, object: &str) -> Result<usize, Error> {
        self.index
            .get(object)
            .copied()
            .ok_or_else(|| Error::ObjectNotInUniverse(object.to_string()))
    }

    /// The same universe with object `i` removed, or `None` if it would be empty.
    pub fn without(&self, i: usize) -> Option<Arc<Universe>> {
        if self.len() == 1 {
            return None;
        }
        let objs = self.objects.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, o)| o.clone());
        Some(Universe::new(objs).expect("still distinct"))
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
    }
}

impl Eq for Universe {}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.objects).finish()
    }
}

pub(crate) fn same_universe(a: &Arc<Universe>, b: &Arc<Universe>) -> Result<(), Error> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::UniverseMismatch)
    }
}

/// A total map from a universe to hesitant elements.
#[derive(Clone, PartialEq, Eq)]
pub struct HesitantFuzzySet {
    universe: Arc<Universe>,
    values: Vec<HesitantElement>,
}

impl HesitantFuzzySet {
    /// Values are given in universe order.
    pub fn new(universe: Arc<Universe>, values: Vec<HesitantElement>) -> Result<Self, Error> {
        if values.len() != universe.len() {
            let object = universe.objects().get(values.len()).cloned().unwrap_or_default();
            return Err(Error::MissingValue { object, param: None });
        }
        Ok(HesitantFuzzySet { universe, values })
    }

    /// Builds from `(object, element)` pairs; every object must appear exactly once.
    pub fn from_pairs<I, S>(universe: Arc<Universe>, pairs: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (S, HesitantElement)>,
        S: AsRef<str>,
    {
        let mut slots: Vec<Option<HesitantElement>> = vec![None; universe.len()];
        for (o, h) in pairs {
            let i = universe.position(o.as_ref())?;
            if slots[i].replace(h).is_some() {
                return Err(Error::DuplicateObject(o.as_ref().to_string()));
            }
        }
        let values = slots
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| Error::MissingValue {
                    object: universe.name(i).to_string(),
                    param: None,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(HesitantFuzzySet { universe, values })
    }

    /// Same element at every object.
    pub fn constant(universe: Arc<Universe>, h: HesitantElement) -> Self {
        let values = vec![h; universe.len()];
        HesitantFuzzySet { universe, values }
    }

    /// `H^U`: every degree is 1.
    pub fn full(universe: Arc<Universe>) -> Self {
        Self::constant(universe, HesitantElement::singleton(Degree::ONE))
    }

    /// `H^∅`: every degree is 0.
    pub fn empty(universe: Arc<Universe>) -> Self {
        Self::constant(universe, HesitantElement::singleton(Degree::ZERO))
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn values(&self) -> &[HesitantElement] {
        &self.values
    }

    pub fn at(&self, i: usize) -> &HesitantElement {
        &self.values[i]
    }

    pub fn get(&self, object: &str) -> Result<&HesitantElement, Error> {
        Ok(&self.values[self.universe.position(object)?])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &HesitantElement)> {
        self.universe.objects().iter().map(String::as_str).zip(&self.values)
    }

    pub fn map(&self, f: impl Fn(&HesitantElement) -> HesitantElement) -> Self {
        HesitantFuzzySet {
            universe: self.universe.clone(),
            values: self.values.iter().map(f).collect(),
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&HesitantElement, &HesitantElement) -> HesitantElement) -> Result<Self, Error> {
        same_universe(&self.universe, &other.universe)?;
        Ok(HesitantFuzzySet {
            universe: self.universe.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn union(&self, other: &Self) -> Result<Self, Error> {
        self.zip_with(other, HesitantElement::union)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self, Error> {
        self.zip_with(other, HesitantElement::intersect)
    }

    pub fn complement(&self) -> Self {
        self.map(HesitantElement::complement)
    }

    /// `self ⊂_kind other` at every object.
    pub fn included_in(&self, kind: InclusionKind, other: &Self) -> Result<bool, Error> {
        same_universe(&self.universe, &other.universe)?;
        Ok(self.values.iter().zip(&other.values).all(|(a, b)| a.included_in(kind, b)))
    }

    pub fn included_in_sot(&self, other: &Self) -> Result<bool, Error> {
        same_universe(&self.universe, &other.universe)?;
        Ok(self.values.iter().zip(&other.values).all(|(a, b)| a.included_in_sot(b)))
    }

    /// Mutual inclusion. For `S` this is plain equality.
    pub fn equiv(&self, kind: InclusionKind, other: &Self) -> Result<bool, Error> {
        same_universe(&self.universe, &other.universe)?;
        if kind == InclusionKind::S {
            return Ok(self.values == other.values);
        }
        Ok(self.included_in(kind, other)? && other.included_in(kind, self)?)
    }

    /// `β ⊂_kind self(x)` at every object.
    pub fn dominates(&self, kind: InclusionKind, beta: &HesitantElement) -> bool {
        self.values.iter().all(|h| beta.included_in(kind, h))
    }

    /// Drops object `i`; the result lives over `universe`, which must be the
    /// matching reduced universe.
    pub fn without_object(&self, i: usize, universe: &Arc<Universe>) -> Self {
        let mut values = self.values.clone();
        values.remove(i);
        HesitantFuzzySet {
            universe: universe.clone(),
            values,
        }
    }

    pub fn with_value(&self, i: usize, h: HesitantElement) -> Self {
        let mut values = self.values.clone();
        values[i] = h;
        HesitantFuzzySet {
            universe: self.universe.clone(),
            values,
        }
    }
}

impl fmt::Display for HesitantFuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (o, h)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{h}/{o}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HesitantFuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Intersection of every member, folded left.
pub fn family_intersect<'a, I>(family: I) -> Result<HesitantFuzzySet, Error>
where
    I: IntoIterator<Item = &'a HesitantFuzzySet>,
{
    let mut it = family.into_iter();
    let first = it.next().ok_or(Error::EmptyFamily)?.clone();
    it.try_fold(first, |acc, h| acc.intersect(h))
}

/// Union of every member, folded left.
pub fn family_union<'a, I>(family: I) -> Result<HesitantFuzzySet, Error>
where
    I: IntoIterator<Item = &'a HesitantFuzzySet>,
{
    let mut it = family.into_iter();
    let first = it.next().ok_or(Error::EmptyFamily)?.clone();
    it.try_fold(first, |acc, h| acc.union(h))
}

/// A crisp subset of a universe.
#[derive(Clone, PartialEq, Eq)]
pub struct ObjectSet {
    universe: Arc<Universe>,
    members: Vec<bool>,
}

impl ObjectSet {
    pub fn none(universe: Arc<Universe>) -> Self {
        let members = vec![false; universe.len()];
        ObjectSet { universe, members }
    }

    pub fn all(universe: Arc<Universe>) -> Self {
        let members = vec![true; universe.len()];
        ObjectSet { universe, members }
    }

    pub fn from_mask(universe: Arc<Universe>, members: Vec<bool>) -> Self {
        assert_eq!(universe.len(), members.len(), "mask length");
        ObjectSet { universe, members }
    }

    pub fn from_names<I, S>(universe: Arc<Universe>, names: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut set = Self::none(universe);
        for n in names {
            let i = set.universe.position(n.as_ref())?;
            set.members[i] = true;
        }
        Ok(set)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members[i]
    }

    pub fn insert(&mut self, i: usize) {
        self.members[i] = true;
    }

    pub fn mask(&self) -> &[bool] {
        &self.members
    }

    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|&b| b)
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&b| b).count()
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i)
    }

    /// Member names in universe order.
    pub fn names(&self) -> Vec<&str> {
        self.indices().map(|i| self.universe.name(i)).collect()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.members.iter().zip(&other.members).all(|(&a, &b)| !a || b)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.members.iter().zip(&other.members).any(|(&a, &b)| a && b)
    }

    fn zip(&self, other: &Self, f: impl Fn(bool, bool) -> bool) -> Self {
        ObjectSet {
            universe: self.universe.clone(),
            members: self.members.iter().zip(&other.members).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a || b)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a && b)
    }

    pub fn complement(&self) -> Self {
        ObjectSet {
            universe: self.universe.clone(),
            members: self.members.iter().map(|b| !b).collect(),
        }
    }

    pub fn without_object(&self, i: usize, universe: &Arc<Universe>) -> Self {
        let mut members = self.members.clone();
        members.remove(i);
        ObjectSet {
            universe: universe.clone(),
            members,
        }
    }
}

impl fmt::Display for ObjectSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names().join(","))
    }
}

impl fmt::Debug for ObjectSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
