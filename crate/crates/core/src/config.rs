//! ADE labels such as `2A1+A3` naming a sub-root system (equivalently a
//! configuration of surface singularities).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{AtlasError, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::D => "D",
            Family::E => "E",
        })
    }
}

/// One irreducible simply-laced type.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AdeType {
    pub family: Family,
    pub rank: u32,
}

impl AdeType {
    pub fn new(family: Family, rank: u32) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(AtlasError::Parse(format!(
                "{family}{rank} is not an ADE type"
            )))
        }
    }

    pub const fn a(rank: u32) -> Self {
        Self {
            family: Family::A,
            rank,
        }
    }

    pub const fn d(rank: u32) -> Self {
        Self {
            family: Family::D,
            rank,
        }
    }

    pub const fn e(rank: u32) -> Self {
        Self {
            family: Family::E,
            rank,
        }
    }

    /// Number of roots: n(n+1), 2n(n-1), 72/126/240.
    pub fn root_count(&self) -> u64 {
        let n = u64::from(self.rank);
        match (self.family, self.rank) {
            (Family::A, _) => n * (n + 1),
            (Family::D, _) => 2 * n * (n - 1),
            (Family::E, 6) => 72,
            (Family::E, 7) => 126,
            (Family::E, _) => 240,
        }
    }

    /// Order of the Weyl group: (n+1)!, 2^{n-1} n!, and the E6..E8 orders.
    pub fn weyl_order(&self) -> u64 {
        let n = u64::from(self.rank);
        let fact = |k: u64| (1..=k).product::<u64>();
        match (self.family, self.rank) {
            (Family::A, _) => fact(n + 1),
            (Family::D, _) => (1 << (n - 1)) * fact(n),
            (Family::E, 6) => 51_840,
            (Family::E, 7) => 2_903_040,
            (Family::E, _) => 696_729_600,
        }
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A multiset of ADE types. Display gives the canonical form: factors sorted
/// by (family, rank) with multiplicities merged; the empty label prints as "∅".
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct SubsystemConfig {
    factors: BTreeMap<AdeType, u32>,
}

impl SubsystemConfig {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_factors(types: impl IntoIterator<Item = AdeType>) -> Self {
        let mut factors = BTreeMap::new();
        for t in types {
            *factors.entry(t).or_insert(0) += 1;
        }
        Self { factors }
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// (type, multiplicity) in canonical order.
    pub fn factors(&self) -> impl Iterator<Item = (AdeType, u32)> + '_ {
        self.factors.iter().map(|(&t, &m)| (t, m))
    }

    /// Irreducible factors with repetition, in canonical order.
    pub fn components(&self) -> Vec<AdeType> {
        self.factors()
            .flat_map(|(t, m)| std::iter::repeat_n(t, m as usize))
            .collect()
    }

    pub fn factor_count(&self) -> u32 {
        self.factors.values().sum()
    }

    pub fn rank(&self) -> u32 {
        self.factors().map(|(t, m)| t.rank * m).sum()
    }

    pub fn root_count(&self) -> u64 {
        self.factors()
            .map(|(t, m)| t.root_count() * u64::from(m))
            .sum()
    }

    pub fn weyl_order(&self) -> u64 {
        self.factors().map(|(t, m)| t.weyl_order().pow(m)).product()
    }
}

impl fmt::Display for SubsystemConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("∅");
        }
        for (i, (t, m)) in self.factors().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            if m > 1 {
                write!(f, "{m}")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl Serialize for SubsystemConfig {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Grammar: terms `(\d*)(A|D|E)(\d+)` joined by `+`, in any order. "∅", "I"
/// and the empty string denote the empty configuration.
impl FromStr for SubsystemConfig {
    type Err = AtlasError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" || s == "I" {
            return Ok(Self::empty());
        }
        let mut types = Vec::new();
        for term in s.split('+') {
            let term = term.trim();
            let bad = || AtlasError::Parse(format!("malformed term {term:?} in {s:?}"));
            let pos = term.find(['A', 'D', 'E']).ok_or_else(bad)?;
            let (mult, rest) = term.split_at(pos);
            let mult: u32 = if mult.is_empty() {
                1
            } else if mult.bytes().all(|b| b.is_ascii_digit()) {
                mult.parse().map_err(|_| bad())?
            } else {
                return Err(bad());
            };
            let family = match &rest[..1] {
                "A" => Family::A,
                "D" => Family::D,
                _ => Family::E,
            };
            let digits = &rest[1..];
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let rank: u32 = digits.parse().map_err(|_| bad())?;
            if mult == 0 {
                return Err(bad());
            }
            let t = AdeType::new(family, rank)?;
            types.extend(std::iter::repeat_n(t, mult as usize));
        }
        Ok(Self::from_factors(types))
    }
}
