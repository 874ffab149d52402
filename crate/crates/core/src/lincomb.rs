//! Finite formal linear combinations with exact rational coefficients.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::multi_index::MultiIndex;
use crate::rational::{self, Rational};

/// `Σ c_b · b` over a basis `B`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Rational>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element itself, with coefficient one.
    pub fn basis(b: B) -> Self {
        Self::term(b, Rational::one())
    }

    pub fn term(b: B, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
    }

    pub fn add_term(&mut self, b: B, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += scale · other`.
    pub fn add_scaled(&mut self, other: &LinComb<B>, scale: &Rational) {
        if scale.is_zero() {
            return;
        }
        for (b, c) in &other.terms {
            self.add_term(b.clone(), c * scale);
        }
    }

    pub fn coeff(&self, b: &B) -> Rational {
        self.terms.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, B, Rational> {
        self.terms.iter()
    }

    pub fn basis_elements(&self) -> impl Iterator<Item = &B> + '_ {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, s);
        out
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<C: Ord + Clone, F>(&self, mut f: F) -> LinComb<C>
    where
        F: FnMut(&B) -> LinComb<C>,
    {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_scaled(&f(b), c);
        }
        out
    }

    /// Relabels the basis; colliding images are summed.
    pub fn map_basis<C: Ord + Clone, F: FnMut(&B) -> C>(&self, mut f: F) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_term(f(b), c.clone());
        }
        out
    }

    /// Bilinear extension of a basis-level product.
    pub fn bilinear<C: Ord + Clone, D: Ord + Clone, F>(&self, other: &LinComb<C>, mut f: F) -> LinComb<D>
    where
        F: FnMut(&B, &C) -> LinComb<D>,
    {
        let mut out = LinComb::zero();
        for (x, cx) in &self.terms {
            for (y, cy) in &other.terms {
                out.add_scaled(&f(x, y), &(cx * cy));
            }
        }
        out
    }

    pub fn into_terms(self) -> BTreeMap<B, Rational> {
        self.terms
    }
}

impl LinComb<MultiIndex> {
    /// Product induced by the monomial product of multi-indices.
    pub fn monomial_product(&self, other: &LinComb<MultiIndex>) -> LinComb<MultiIndex> {
        self.bilinear(other, |a, b| LinComb::basis(a.mul(b)))
    }
}

impl<B: Ord + Clone> FromIterator<(B, Rational)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (B, Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (b, c) in iter {
            out.add_term(b, c);
        }
        out
    }
}

impl<'a, B: Ord> IntoIterator for &'a LinComb<B> {
    type Item = (&'a B, &'a Rational);
    type IntoIter = btree_map::Iter<'a, B, Rational>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<B: Ord + Clone> Add for LinComb<B> {
    type Output = LinComb<B>;

    fn add(mut self, rhs: LinComb<B>) -> LinComb<B> {
        for (b, c) in rhs.terms {
            self.add_term(b, c);
        }
        self
    }
}

impl<B: Ord + Clone> Sub for LinComb<B> {
    type Output = LinComb<B>;

    fn sub(mut self, rhs: LinComb<B>) -> LinComb<B> {
        for (b, c) in rhs.terms {
            self.add_term(b, -c);
        }
        self
    }
}

impl<B: Ord + Clone> Neg for LinComb<B> {
    type Output = LinComb<B>;

    fn neg(self) -> LinComb<B> {
        self.scale(&-Rational::one())
    }
}

impl<B: Ord + fmt::Display> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{mag} {b}")?;
            }
        }
        Ok(())
    }
}

impl<B: Ord + fmt::Debug> fmt::Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(b, c)| (b, c.to_string())))
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr<B> {
    basis: B,
    #[serde(with = "rational::serde_str")]
    coeff: Rational,
}

impl<B: Ord + Clone + Serialize> Serialize for LinComb<B> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermRepr<B>> = self
            .terms
            .iter()
            .map(|(b, c)| TermRepr {
                basis: b.clone(),
                coeff: c.clone(),
            })
            .collect();
        v.serialize(s)
    }
}

impl<'de, B: Ord + Clone + Deserialize<'de>> Deserialize<'de> for LinComb<B> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<TermRepr<B>>::deserialize(d)?;
        Ok(v.into_iter().map(|t| (t.basis, t.coeff)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn mi(s: &str) -> MultiIndex {
        s.parse().unwrap()
    }

    #[test]
    fn cancellation_drops_terms() {
        let mut x = LinComb::term(mi("z0"), int(2));
        x.add_term(mi("z0"), int(-2));
        assert!(x.is_zero());
        assert_eq!(x.coeff(&mi("z0")), int(0));
    }

    #[test]
    fn display() {
        let x: LinComb<MultiIndex> = [
            (mi("z0^2 z1^2 z2"), int(5)),
            (mi("z0^3 z2^2"), int(1)),
            (mi("z0^3 z1 z3"), rat(-1, 2)),
        ]
        .into_iter()
        .collect();
        assert_eq!(x.to_string(), "5 z0^2 z1^2 z2 + z0^3 z2^2 - 1/2 z0^3 z1 z3");
    }

    #[test]
    fn json_form() {
        let x = LinComb::term(mi("z0 z1"), rat(3, 4));
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"[{"basis":{"0":1,"1":1},"coeff":"3/4"}]"#);
        let back: LinComb<MultiIndex> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }
}
