use std::cmp::Reverse;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::degree::Degree;
use crate::error::Error;

/// The six inclusion relations between hesitant elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InclusionKind {
    /// Upper bounds compare.
    P,
    /// Both bounds compare.
    A,
    /// Means compare.
    M,
    /// Longer-or-equal left side, dominated index-wise on the right's length.
    S,
    /// Strictly shorter left side, dominated index-wise on its own length.
    T,
    /// Left upper bound below right lower bound.
    N,
}

impl InclusionKind {
    pub const ALL: [InclusionKind; 6] = [
        InclusionKind::P,
        InclusionKind::A,
        InclusionKind::M,
        InclusionKind::S,
        InclusionKind::T,
        InclusionKind::N,
    ];

    pub fn tag(self) -> char {
        match self {
            InclusionKind::P => 'p',
            InclusionKind::A => 'a',
            InclusionKind::M => 'm',
            InclusionKind::S => 's',
            InclusionKind::T => 't',
            InclusionKind::N => 'n',
        }
    }
}

impl fmt::Display for InclusionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

impl FromStr for InclusionKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "p" => Ok(InclusionKind::P),
            "a" => Ok(InclusionKind::A),
            "m" => Ok(InclusionKind::M),
            "s" => Ok(InclusionKind::S),
            "t" => Ok(InclusionKind::T),
            "n" => Ok(InclusionKind::N),
            other => Err(format!("unknown inclusion kind {other:?} (expected one of p,a,m,s,t,n)")),
        }
    }
}

impl Serialize for InclusionKind {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for InclusionKind {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A non-empty multiset of degrees, kept in descending order.
///
/// Equality is multiset equality: two elements are equal iff they hold the
/// same degrees with the same multiplicities.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HesitantElement {
    degrees: Vec<Degree>,
}

impl HesitantElement {
    pub fn new(mut degrees: Vec<Degree>) -> Result<Self, Error> {
        if degrees.is_empty() {
            return Err(Error::EmptyElement);
        }
        degrees.sort_unstable_by_key(|&d| Reverse(d));
        Ok(HesitantElement { degrees })
    }

    pub fn singleton(d: Degree) -> Self {
        HesitantElement { degrees: vec![d] }
    }

    /// `len` copies of one degree.
    pub fn constant(d: Degree, len: usize) -> Self {
        assert!(len > 0, "constant element needs a positive length");
        HesitantElement { degrees: vec![d; len] }
    }

    /// Degrees given in tenths, e.g. `from_tenths(&[5, 4, 3])` is {0.5, 0.4, 0.3}.
    pub fn from_tenths(tenths: &[u32]) -> Self {
        Self::new(tenths.iter().map(|&t| Degree::tenths(t)).collect()).expect("non-empty")
    }

    /// Parses a comma-separated list of degrees.
    pub fn parse_list(s: &str, precision: u32) -> Result<Self, Error> {
        let degrees = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| Degree::parse(t, precision))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(degrees)
    }

    pub fn degrees(&self) -> &[Degree] {
        &self.degrees
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn lower(&self) -> Degree {
        *self.degrees.last().expect("non-empty")
    }

    pub fn upper(&self) -> Degree {
        self.degrees[0]
    }

    fn sum_units(&self) -> u64 {
        self.degrees.iter().map(|d| d.units() as u64).sum()
    }

    /// Exact arithmetic mean, duplicates counted.
    pub fn mean(&self) -> Ratio<u64> {
        Ratio::new(self.sum_units(), self.len() as u64 * Degree::UNITS)
    }

    pub fn is_constant(&self) -> bool {
        self.lower() == self.upper()
    }

    /// Multiset sum of both operands, keeping degrees at or above the larger
    /// of the two lower bounds.
    pub fn union(&self, other: &Self) -> Self {
        let t = self.lower().max(other.lower());
        let a = &self.degrees[..self.degrees.partition_point(|&d| d >= t)];
        let b = &other.degrees[..other.degrees.partition_point(|&d| d >= t)];
        HesitantElement { degrees: merge_desc(a, b) }
    }

    /// Multiset sum of both operands, keeping degrees at or below the smaller
    /// of the two upper bounds.
    pub fn intersect(&self, other: &Self) -> Self {
        let t = self.upper().min(other.upper());
        let a = &self.degrees[self.degrees.partition_point(|&d| d > t)..];
        let b = &other.degrees[other.degrees.partition_point(|&d| d > t)..];
        HesitantElement { degrees: merge_desc(a, b) }
    }

    pub fn complement(&self) -> Self {
        HesitantElement {
            degrees: self.degrees.iter().rev().map(|d| d.complement()).collect(),
        }
    }

    /// `self ⊂_kind other`.
    pub fn included_in(&self, kind: InclusionKind, other: &Self) -> bool {
        match kind {
            InclusionKind::P => self.upper() <= other.upper(),
            InclusionKind::A => self.upper() <= other.upper() && self.lower() <= other.lower(),
            InclusionKind::M => {
                // sum1 / n1 <= sum2 / n2, cross-multiplied
                self.sum_units() as u128 * other.len() as u128 <= other.sum_units() as u128 * self.len() as u128
            }
            InclusionKind::S => {
                self.len() >= other.len() && dominated_prefix(&self.degrees, &other.degrees, other.len())
            }
            InclusionKind::T => {
                self.len() < other.len() && dominated_prefix(&self.degrees, &other.degrees, self.len())
            }
            InclusionKind::N => self.upper() <= other.lower(),
        }
    }

    /// `self ⊂_s other` or `self ⊂_t other`.
    pub fn included_in_sot(&self, other: &Self) -> bool {
        self.included_in(InclusionKind::S, other) || self.included_in(InclusionKind::T, other)
    }

    /// Mutual inclusion under `kind`.
    pub fn equiv(&self, kind: InclusionKind, other: &Self) -> bool {
        self.included_in(kind, other) && other.included_in(kind, self)
    }

    /// Union of a non-empty sequence, folded left.
    pub fn union_all<'a, I: IntoIterator<Item = &'a HesitantElement>>(items: I) -> Option<Self> {
        let mut it = items.into_iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, h| acc.union(h)))
    }

    /// Intersection of a non-empty sequence, folded left.
    pub fn intersect_all<'a, I: IntoIterator<Item = &'a HesitantElement>>(items: I) -> Option<Self> {
        let mut it = items.into_iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, h| acc.intersect(h)))
    }

    /// Removes the degree at `index`. Returns `None` for singletons.
    pub fn without(&self, index: usize) -> Option<Self> {
        if self.len() == 1 || index >= self.len() {
            return None;
        }
        let mut degrees = self.degrees.clone();
        degrees.remove(index);
        Some(HesitantElement { degrees })
    }
}

// v[i] <= w[i] for i < n
fn dominated_prefix(v: &[Degree], w: &[Degree], n: usize) -> bool {
    v[..n].iter().zip(&w[..n]).all(|(a, b)| a <= b)
}

fn merge_desc(a: &[Degree], b: &[Degree]) -> Vec<Degree> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] >= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl fmt::Display for HesitantElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, d) in self.degrees.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for HesitantElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for HesitantElement {
    type Err = Error;

    /// Accepts `"0.5,0.4"` or `"{0.5,0.4}"`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim().trim_start_matches('{').trim_end_matches('}');
        Self::parse_list(t, crate::degree::DEFAULT_PRECISION)
    }
}

impl Serialize for HesitantElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.degrees.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HesitantElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let degrees = Vec::<Degree>::deserialize(d)?;
        HesitantElement::new(degrees).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(s: &str) -> HesitantElement {
        s.parse().unwrap()
    }

    #[test]
    fn stored_descending() {
        assert_eq!(h("0.2,0.5,0.3").degrees(), h("0.5,0.3,0.2").degrees());
        assert_eq!(h("0.2,0.5,0.3").to_string(), "{0.5,0.3,0.2}");
    }

    #[test]
    fn empty_rejected() {
        assert_eq!(HesitantElement::new(vec![]), Err(Error::EmptyElement));
        assert!("".parse::<HesitantElement>().is_err());
    }

    #[test]
    fn without_keeps_order() {
        let a = h("0.5,0.4,0.3");
        assert_eq!(a.without(1).unwrap(), h("0.5,0.3"));
        assert!(h("0.5").without(0).is_none());
    }
}
