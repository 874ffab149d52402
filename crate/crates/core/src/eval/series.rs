//! Power series in `h` truncated at a fixed order.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Coefficient rings for [`TruncSeries`].
pub trait Coeff: Clone + PartialEq + Zero + One {
    fn mul_ref(&self, other: &Self) -> Self;
}

impl Coeff for Rational {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl Coeff for Poly {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

/// `Σ_{n ≤ N} c_n h^n`; every operation truncates at `N`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> TruncSeries<T> {
    /// Pads with zeros or drops terms beyond `order`.
    pub fn new(order: usize, mut coeffs: Vec<T>) -> Self {
        coeffs.resize(order + 1, T::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn constant(order: usize, c: T) -> Self {
        Self::new(order, vec![c])
    }

    /// `c · h^n` (zero when `n` exceeds the order).
    pub fn monomial(order: usize, c: T, n: usize) -> Self {
        let mut s = Self::zero(order);
        if n <= order {
            s.coeffs[n] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &T {
        &self.coeffs[n]
    }

    pub fn set_coeff(&mut self, n: usize, c: T) {
        self.coeffs[n] = c;
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(order, self.coeffs.iter().take(order + 1).cloned().collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::new(
            order,
            (0..=order)
                .map(|n| self.coeffs[n].clone() + other.coeffs[n].clone())
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![T::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] = out[i + j].clone() + a.mul_ref(b);
            }
        }
        Self::new(order, out)
    }

    pub fn pow(&self, n: usize) -> Self {
        (0..n).fold(Self::constant(self.order(), T::one()), |acc, _| acc.mul(self))
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.order(), self.coeffs.iter().map(|x| x.mul_ref(c)).collect())
    }

    /// `h^k · self`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(self.order(), coeffs)
    }

    pub fn map<U: Coeff, F: FnMut(&T) -> U>(&self, f: F) -> TruncSeries<U> {
        TruncSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl TruncSeries<Rational> {
    /// `∫_0^h`, raising the order by one.
    pub fn integrate(&self) -> Self {
        let mut coeffs = vec![Rational::zero()];
        for (n, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / Rational::from_integer((n + 1).into()));
        }
        Self { coeffs }
    }

    /// `p(self)` by Horner's rule.
    pub fn apply_poly(&self, p: &Poly) -> Self {
        p.coeffs().iter().rev().fold(Self::zero(self.order()), |acc, c| {
            acc.mul(self).add(&Self::constant(self.order(), c.clone()))
        })
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(rational::to_f64).collect()
    }
}

impl TruncSeries<Poly> {
    /// `Σ_n h^n c_n(y(h))` for a point series `y(h)`.
    pub fn eval_at_series(&self, y: &TruncSeries<Rational>) -> TruncSeries<Rational> {
        let order = self.order().min(y.order());
        let y = y.truncate(order);
        let mut out = TruncSeries::zero(order);
        for (n, c) in self.coeffs.iter().enumerate().take(order + 1) {
            out = out.add(&y.apply_poly(c).shift_up(n));
        }
        out
    }

    /// Evaluates every coefficient at `y`.
    pub fn eval_at(&self, y: &Rational) -> TruncSeries<Rational> {
        self.map(|p| p.eval(y))
    }

    /// Differentiates every coefficient in `y`.
    pub fn derive_y(&self) -> Self {
        self.map(Poly::derive)
    }
}

impl<T: Coeff + fmt::Display> fmt::Display for TruncSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c}) h")?,
                _ => write!(f, "({c}) h^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(h^{})", self.order() + 1)
    }
}

impl<T: Coeff + fmt::Display> fmt::Debug for TruncSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    order: usize,
    #[serde(with = "rational::serde_str_vec")]
    coeffs: Vec<Rational>,
}

impl Serialize for TruncSeries<Rational> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesRepr {
            order: self.order(),
            coeffs: self.coeffs.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TruncSeries<Rational> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = SeriesRepr::deserialize(d)?;
        if r.coeffs.len() != r.order + 1 {
            return Err(serde::de::Error::custom(format!(
                "order {} needs {} coefficients, found {}",
                r.order,
                r.order + 1,
                r.coeffs.len()
            )));
        }
        Ok(TruncSeries::new(r.order, r.coeffs))
    }
}

/// Fails unless `available ≥ requested`.
pub(crate) fn check_order(requested: usize, available: usize) -> Result<()> {
    if requested > available {
        Err(Error::Truncation { requested, available })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn s(c: &[i64]) -> TruncSeries<Rational> {
        TruncSeries::new(c.len() - 1, c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn truncated_product() {
        // (1 + h)(1 - h) = 1 - h^2
        assert_eq!(s(&[1, 1, 0]).mul(&s(&[1, -1, 0])), s(&[1, 0, -1]));
        // 1/(1-h) squared truncated
        assert_eq!(s(&[1, 1, 1]).pow(2), s(&[1, 2, 3]));
    }

    #[test]
    fn integrate_and_horner() {
        assert_eq!(s(&[1, 1]).integrate().coeffs(), &[int(0), int(1), rat(1, 2)]);
        let y = s(&[1, 1, 0, 0]);
        let p = Poly::new(vec![int(0), int(0), int(1)]);
        assert_eq!(y.apply_poly(&p), s(&[1, 2, 1, 0]));
    }

    #[test]
    fn poly_coefficients_at_a_series() {
        // coefficient polys: y at h^0 and y^2 at h^1, at y = 1 + h
        let b = TruncSeries::new(2, vec![Poly::y(), Poly::y().pow(2)]);
        assert_eq!(b.eval_at_series(&s(&[1, 1, 0])), s(&[1, 2, 2]));
    }

    #[test]
    fn json_form() {
        let x = TruncSeries::new(2, vec![int(1), rat(1, 2)]);
        let j = serde_json::to_string(&x).unwrap();
        assert_eq!(j, r#"{"order":2,"coeffs":["1","1/2","0"]}"#);
        assert_eq!(serde_json::from_str::<TruncSeries<Rational>>(&j).unwrap(), x);
        assert!(serde_json::from_str::<TruncSeries<Rational>>(r#"{"order":2,"coeffs":["1"]}"#).is_err());
    }
}
