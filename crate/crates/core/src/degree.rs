use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Number of decimal digits carried internally.
pub const MAX_PRECISION: u32 = 9;
/// Digits accepted by [`Degree::from_str`] and serde.
pub const DEFAULT_PRECISION: u32 = 4;

const SCALE: u32 = 1_000_000_000;

/// An exact membership degree in `[0, 1]`.
///
/// Stored as an integer count of `10^-9` units, so equality and ordering
/// never involve rounding. Parsing is restricted to a coarser grid
/// (`DEFAULT_PRECISION` digits unless asked otherwise).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Degree(u32);

impl Degree {
    pub const ZERO: Degree = Degree(0);
    pub const ONE: Degree = Degree(SCALE);
    pub const UNITS: u64 = SCALE as u64;

    /// Builds a degree from raw `10^-9` units.
    pub fn from_units(units: u32) -> Result<Degree, Error> {
        if units > SCALE {
            return Err(Error::DegreeOutOfRange(format!("{units}e-9")));
        }
        Ok(Degree(units))
    }

    /// `n / 10`. Panics above 10; meant for fixtures and generators.
    pub fn tenths(n: u32) -> Degree {
        assert!(n <= 10, "tenths out of range: {n}");
        Degree(n * (SCALE / 10))
    }

    pub fn units(self) -> u32 {
        self.0
    }

    pub fn complement(self) -> Degree {
        Degree(SCALE - self.0)
    }

    /// Largest degree on the `precision`-digit grid not exceeding `num / den`.
    pub fn floor_ratio(num: u64, den: u64, precision: u32) -> Result<Degree, Error> {
        if den == 0 || num > den {
            return Err(Error::DegreeOutOfRange(format!("{num}/{den}")));
        }
        let step = 10u64.pow(MAX_PRECISION - precision.min(MAX_PRECISION));
        let units = (num as u128 * SCALE as u128 / den as u128) as u64;
        Ok(Degree((units / step * step) as u32))
    }

    /// Parses a decimal literal such as `"0.35"`, `"1"` or `".5"`.
    ///
    /// More fractional digits than `precision` is an error rather than a
    /// silent rounding.
    pub fn parse(s: &str, precision: u32) -> Result<Degree, Error> {
        let bad = || Error::InvalidDegree(s.to_string());
        if precision > MAX_PRECISION {
            return Err(Error::PrecisionTooFine(precision));
        }
        let t = s.trim();
        let (int, frac) = match t.split_once('.') {
            Some((i, f)) => (i, f),
            None => (t, ""),
        };
        if int.is_empty() && frac.is_empty() {
            return Err(bad());
        }
        if !int.bytes().all(|b| b.is_ascii_digit()) || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let frac = frac.trim_end_matches('0');
        if frac.len() as u32 > precision {
            return Err(Error::OffGrid {
                literal: s.to_string(),
                precision,
            });
        }
        let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        let mut units = int.checked_mul(SCALE as u64).ok_or_else(|| Error::DegreeOutOfRange(s.to_string()))?;
        if !frac.is_empty() {
            let digits: u64 = frac.parse().map_err(|_| bad())?;
            units += digits * 10u64.pow(MAX_PRECISION - frac.len() as u32);
        }
        if units > SCALE as u64 {
            return Err(Error::DegreeOutOfRange(s.to_string()));
        }
        Ok(Degree(units as u32))
    }
}

impl FromStr for Degree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Degree, Error> {
        Degree::parse(s, DEFAULT_PRECISION)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let int = self.0 / SCALE;
        let frac = self.0 % SCALE;
        if frac == 0 {
            return write!(f, "{int}");
        }
        let digits = format!("{frac:09}");
        write!(f, "{int}.{}", digits.trim_end_matches('0'))
    }
}

impl fmt::Debug for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Degree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Degree, D::Error> {
        let lit = DegreeLiteral::deserialize(d)?;
        lit.parse(DEFAULT_PRECISION).map_err(serde::de::Error::custom)
    }
}

/// A degree as written in a document: a decimal string or a JSON number.
#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(untagged)]
pub enum DegreeLiteral {
    Text(String),
    Number(f64),
}

impl DegreeLiteral {
    pub fn parse(&self, precision: u32) -> Result<Degree, Error> {
        match self {
            DegreeLiteral::Text(s) => Degree::parse(s, precision),
            // f64 Display is the shortest round-tripping form, so 0.3 prints "0.3".
            DegreeLiteral::Number(x) => Degree::parse(&x.to_string(), precision),
        }
    }
}

impl From<Degree> for DegreeLiteral {
    fn from(d: Degree) -> Self {
        DegreeLiteral::Text(d.to_string())
    }
}
