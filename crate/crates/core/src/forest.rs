//! Forests: commutative juxtaposition of multi-indices without merging.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::multi_index::MultiIndex;
use crate::rational::factorial;

/// A finite multiset of non-empty multi-indices.
///
/// Stored as sorted `(component, repetition)` pairs. The empty forest is the
/// unit of the forest product and is distinct from the multi-index `z^0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Forest {
    components: Vec<(MultiIndex, usize)>,
}

impl Forest {
    pub fn empty() -> Self {
        Self::default()
    }

    /// One-component forest.
    ///
    /// # Panics
    /// If `m` is the empty multi-index.
    pub fn single(m: MultiIndex) -> Self {
        Self::from_components([m])
    }

    /// Collects components, counting repeats.
    ///
    /// # Panics
    /// If any component is the empty multi-index.
    pub fn from_components<I: IntoIterator<Item = MultiIndex>>(items: I) -> Self {
        Self::from_reps(items.into_iter().map(|m| (m, 1)))
    }

    pub fn from_reps<I: IntoIterator<Item = (MultiIndex, usize)>>(items: I) -> Self {
        let mut map: BTreeMap<MultiIndex, usize> = BTreeMap::new();
        for (m, r) in items {
            assert!(!m.is_empty(), "forest components must be non-empty");
            *map.entry(m).or_insert(0) += r;
        }
        Self {
            components: map.into_iter().filter(|&(_, r)| r > 0).collect(),
        }
    }

    /// Distinct components with their repetition counts.
    pub fn distinct(&self) -> &[(MultiIndex, usize)] {
        &self.components
    }

    /// Components with repetition, in canonical order.
    pub fn components(&self) -> impl Iterator<Item = &MultiIndex> + '_ {
        self.components.iter().flat_map(|(m, r)| std::iter::repeat_n(m, *r))
    }

    pub fn component_count(&self) -> usize {
        self.components.iter().map(|(_, r)| r).sum()
    }

    /// Total number of letters over all components.
    pub fn length(&self) -> usize {
        self.components.iter().map(|(m, r)| r * m.length()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn all_populated(&self) -> bool {
        self.components.iter().all(|(m, _)| m.is_populated())
    }

    /// The merged monomial `Π z^{β_j}`.
    pub fn product(&self) -> MultiIndex {
        self.components.iter().fold(MultiIndex::empty(), |acc, (m, r)| {
            (0..*r).fold(acc, |acc, _| acc.mul(m))
        })
    }

    /// Multiset union (the forest product).
    pub fn union(&self, other: &Forest) -> Forest {
        Forest::from_reps(self.components.iter().chain(other.components.iter()).cloned())
    }

    /// `S(F) = Π r_j! · S(β_j)^{r_j}`.
    pub fn symmetry_factor(&self) -> BigInt {
        self.components.iter().fold(BigInt::one(), |acc, (m, r)| {
            acc * factorial(*r) * num_traits::pow(m.symmetry_factor(), *r)
        })
    }

    /// Every split of the components (viewed as labelled) into two parts.
    ///
    /// Yields `(first, second, count)` where `count = Π_j C(r_j, s_j)` is the
    /// number of labelled subsets realising the split.
    pub fn splits(&self) -> Vec<(Forest, Forest, BigInt)> {
        let mut out = vec![(Vec::new(), Vec::new(), BigInt::one())];
        for (m, r) in &self.components {
            let mut next = Vec::with_capacity(out.len() * (r + 1));
            for (left, right, count) in &out {
                for s in 0..=*r {
                    let mut l: Vec<(MultiIndex, usize)> = left.clone();
                    let mut rr: Vec<(MultiIndex, usize)> = right.clone();
                    if s > 0 {
                        l.push((m.clone(), s));
                    }
                    if r - s > 0 {
                        rr.push((m.clone(), r - s));
                    }
                    next.push((l, rr, count * binomial(*r, s)));
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|(l, r, c)| (Forest { components: l }, Forest { components: r }, c))
            .collect()
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    factorial(n) / (factorial(k) * factorial(n - k))
}

impl From<MultiIndex> for Forest {
    fn from(m: MultiIndex) -> Self {
        Forest::single(m)
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.components().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct ForestEntry {
    index: MultiIndex,
    rep: usize,
}

impl Serialize for Forest {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<ForestEntry> = self
            .components
            .iter()
            .map(|(m, r)| ForestEntry {
                index: m.clone(),
                rep: *r,
            })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Forest {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<ForestEntry>::deserialize(d)?;
        if v.iter().any(|e| e.index.is_empty()) {
            return Err(serde::de::Error::custom("forest components must be non-empty"));
        }
        Ok(Forest::from_reps(v.into_iter().map(|e| (e.index, e.rep))))
    }
}
