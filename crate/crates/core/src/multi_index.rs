//! Multi-indices: finitely supported maps from arity to multiplicity.
//!
//! A multi-index `β` is written as the monomial `z^β = Π_k z_k^{β(k)}`. Read
//! as a tree profile, `β(k)` counts the nodes with exactly `k` children. The
//! index is *populated* when `Σ_k (1 − k) β(k) = 1`, i.e. nodes minus edges
//! equals one, which is exactly when some rooted tree has that profile.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::factorial;

/// A monomial `z^β` stored as sorted sparse `(arity, multiplicity)` pairs.
///
/// Multiplicities are always positive; the empty sequence is `z^0`.
/// Ordering is lexicographic on the dense vector `(β(0), β(1), ...)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiIndex {
    entries: Vec<(usize, usize)>,
}

impl MultiIndex {
    /// The empty multi-index `z^0`.
    pub fn empty() -> Self {
        Self::default()
    }

    /// The single letter `z_k`.
    pub fn letter(k: usize) -> Self {
        Self { entries: vec![(k, 1)] }
    }

    /// Builds from `(arity, multiplicity)` pairs, summing repeats and dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Self {
        let mut map = BTreeMap::new();
        for (k, m) in pairs {
            *map.entry(k).or_insert(0) += m;
        }
        Self {
            entries: map.into_iter().filter(|&(_, m)| m > 0).collect(),
        }
    }

    /// Builds from a dense vector: `dense[k] = β(k)`.
    pub fn from_dense(dense: &[usize]) -> Self {
        Self::from_pairs(dense.iter().copied().enumerate())
    }

    pub fn to_dense(&self) -> Vec<usize> {
        let mut v = vec![0; self.max_arity().map_or(0, |k| k + 1)];
        for &(k, m) in &self.entries {
            v[k] = m;
        }
        v
    }

    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    /// Multiplicity `β(k)`.
    pub fn get(&self, k: usize) -> usize {
        self.entries
            .binary_search_by_key(&k, |&(a, _)| a)
            .map_or(0, |i| self.entries[i].1)
    }

    /// `|β| = Σ β(k)`, the number of letters (tree nodes).
    pub fn length(&self) -> usize {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ k β(k)`, the number of edges of any tree with this profile.
    pub fn edges(&self) -> usize {
        self.entries.iter().map(|&(k, m)| k * m).sum()
    }

    /// The population bracket `[β] = Σ (1 − k) β(k)`.
    pub fn bracket(&self) -> i64 {
        self.entries.iter().map(|&(k, m)| (1 - k as i64) * m as i64).sum()
    }

    pub fn is_populated(&self) -> bool {
        !self.is_empty() && self.bracket() == 1
    }

    pub fn ensure_populated(&self) -> Result<()> {
        if self.is_populated() {
            Ok(())
        } else {
            Err(Error::NotPopulated(self.clone()))
        }
    }

    pub fn max_arity(&self) -> Option<usize> {
        self.entries.last().map(|&(k, _)| k)
    }

    /// Letters with repetition, in increasing arity.
    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().flat_map(|&(k, m)| std::iter::repeat_n(k, m))
    }

    /// Monomial product `z^β · z^γ`.
    pub fn mul(&self, other: &MultiIndex) -> MultiIndex {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() && j < other.entries.len() {
            let (a, b) = (self.entries[i], other.entries[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.entries[i..]);
        out.extend_from_slice(&other.entries[j..]);
        MultiIndex { entries: out }
    }

    /// `z^β / z^γ` when `γ ≤ β` letterwise.
    pub fn checked_div(&self, other: &MultiIndex) -> Option<MultiIndex> {
        let mut out = Vec::with_capacity(self.entries.len());
        for &(k, m) in &self.entries {
            let o = other.get(k);
            if o > m {
                return None;
            }
            if m > o {
                out.push((k, m - o));
            }
        }
        if other.entries.iter().any(|&(k, _)| self.get(k) == 0) {
            return None;
        }
        Some(MultiIndex { entries: out })
    }

    pub fn divides(&self, other: &MultiIndex) -> bool {
        self.entries.iter().all(|&(k, m)| other.get(k) >= m)
    }

    /// Adds one copy of `z_k`.
    pub fn with_letter(&self, k: usize) -> MultiIndex {
        self.mul(&MultiIndex::letter(k))
    }

    /// Removes one copy of `z_k`, if present.
    pub fn without_letter(&self, k: usize) -> Option<MultiIndex> {
        let pos = self.entries.binary_search_by_key(&k, |&(a, _)| a).ok()?;
        let mut entries = self.entries.clone();
        if entries[pos].1 == 1 {
            entries.remove(pos);
        } else {
            entries[pos].1 -= 1;
        }
        Some(MultiIndex { entries })
    }

    /// `S(z^β) = Π (k!)^{β(k)}`.
    pub fn symmetry_factor(&self) -> BigInt {
        self.entries
            .iter()
            .fold(BigInt::one(), |acc, &(k, m)| acc * num_traits::pow(factorial(k), m))
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        let top = self.max_arity().max(other.max_arity()).map_or(0, |k| k + 1);
        for k in 0..top {
            match self.get(k).cmp(&other.get(k)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for (i, &(k, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if m == 1 {
                write!(f, "z{k}")?;
            } else {
                write!(f, "z{k}^{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for MultiIndex {
    type Err = Error;

    /// Parses the text form `z0^2 z1 z2`; `1` (or an empty string) is `z^0`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(MultiIndex::empty());
        }
        let mut pairs = Vec::new();
        for tok in s.split_whitespace() {
            let bad = || Error::Parse(format!("bad multi-index factor {tok:?}"));
            let body = tok.strip_prefix('z').ok_or_else(bad)?;
            let (k, m) = match body.split_once('^') {
                Some((k, m)) => (k, m.parse::<usize>().map_err(|_| bad())?),
                None => (body, 1),
            };
            let k = k.parse::<usize>().map_err(|_| bad())?;
            pairs.push((k, m));
        }
        Ok(MultiIndex::from_pairs(pairs))
    }
}

impl Serialize for MultiIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.entries.len()))?;
        for &(k, m) in &self.entries {
            map.serialize_entry(&k.to_string(), &m)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for MultiIndex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, usize>::deserialize(d)?;
        let mut pairs = Vec::with_capacity(raw.len());
        for (k, m) in raw {
            let k = k
                .parse::<usize>()
                .map_err(|_| serde::de::Error::custom(format!("arity key {k:?} is not an integer")))?;
            pairs.push((k, m));
        }
        Ok(MultiIndex::from_pairs(pairs))
    }
}
