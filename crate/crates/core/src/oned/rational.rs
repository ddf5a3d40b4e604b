use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A positive reduced fraction `p/q`, always printed as `p/q` (also when
/// `q = 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    p: u64,
    q: u64,
}

impl Rational {
    /// Reduces `p/q`.
    ///
    /// # Panics
    /// Panics when `q == 0`.
    pub fn new(p: u64, q: u64) -> Self {
        assert!(q != 0, "zero denominator");
        let g = p.gcd(&q).max(1);
        Rational { p: p / g, q: q / g }
    }

    pub fn integer(p: u64) -> Self {
        Rational { p, q: 1 }
    }

    pub fn numer(&self) -> u64 {
        self.p
    }

    pub fn denom(&self) -> u64 {
        self.q
    }

    pub fn to_f64(&self) -> f64 {
        self.p as f64 / self.q as f64
    }

    pub fn ceil(&self) -> u64 {
        self.p.div_ceil(self.q)
    }

    pub fn floor(&self) -> u64 {
        self.p / self.q
    }

    /// `self − k`, saturating at zero.
    pub fn minus_integer(&self, k: u64) -> Self {
        Rational::new(self.p.saturating_sub(k * self.q), self.q)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.p as u128 * other.q as u128).cmp(&(other.p as u128 * self.q as u128))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Rational {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        let p: u64 = p.parse().map_err(|e| format!("bad numerator in {s:?}: {e}"))?;
        let q: u64 = q.parse().map_err(|e| format!("bad denominator in {s:?}: {e}"))?;
        if q == 0 {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(Rational::new(p, q))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
