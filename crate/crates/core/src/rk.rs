//! Runge–Kutta methods as characters.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::characters::{exact_solution_character, Character};
use crate::error::{Error, Result};
use crate::multi_index::MultiIndex;
use crate::rational::{self, rat, Rational};
use crate::trees::{pushforward_character, RootedTree};

/// A Butcher tableau `(A, b, c)` with `s` stages.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ButcherTableau {
    #[serde(with = "matrix_str")]
    pub a: Vec<Vec<Rational>>,
    #[serde(with = "rational::serde_str_vec")]
    pub b: Vec<Rational>,
    #[serde(with = "rational::serde_str_vec")]
    pub c: Vec<Rational>,
}

mod matrix_str {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(m: &[Vec<Rational>], s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = m
            .iter()
            .map(|r| r.iter().map(rational::format_rational).collect())
            .collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vec<Rational>>, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(d)?;
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|x| rational::parse_rational(x).map_err(serde::de::Error::custom))
                    .collect()
            })
            .collect()
    }
}

impl ButcherTableau {
    /// Checks shapes; returns warnings for rows with `c_i ≠ Σ_j a_ij`.
    pub fn validate(&self) -> Result<Vec<String>> {
        let s = self.b.len();
        if s == 0 {
            return Err(Error::InvalidTableau("no stages".into()));
        }
        if self.c.len() != s || self.a.len() != s || self.a.iter().any(|r| r.len() != s) {
            return Err(Error::InvalidTableau(format!(
                "expected a {s}x{s} matrix and {s}-vectors b, c"
            )));
        }
        let mut warnings = Vec::new();
        for (i, row) in self.a.iter().enumerate() {
            let sum: Rational = row.iter().fold(Rational::zero(), |acc, x| acc + x);
            if sum != self.c[i] {
                warnings.push(format!("row {i}: c = {} but the row sums to {sum}", self.c[i]));
            }
        }
        Ok(warnings)
    }

    pub fn stages(&self) -> usize {
        self.b.len()
    }

    pub fn euler() -> Self {
        Self {
            a: vec![vec![Rational::zero()]],
            b: vec![Rational::one()],
            c: vec![Rational::zero()],
        }
    }

    pub fn implicit_midpoint() -> Self {
        Self {
            a: vec![vec![rat(1, 2)]],
            b: vec![Rational::one()],
            c: vec![rat(1, 2)],
        }
    }

    /// The classical fourth-order method.
    pub fn rk4() -> Self {
        let z = Rational::zero;
        let h = || rat(1, 2);
        Self {
            a: vec![
                vec![z(), z(), z(), z()],
                vec![h(), z(), z(), z()],
                vec![z(), h(), z(), z()],
                vec![z(), z(), Rational::one(), z()],
            ],
            b: vec![rat(1, 6), rat(1, 3), rat(1, 3), rat(1, 6)],
            c: vec![z(), h(), h(), Rational::one()],
        }
    }

    /// Elementary weight `Φ(t) = Σ_i b_i g_i(t)` with `g_i(•) = 1` and
    /// `g_i(B₊(t_1..t_n)) = Π_j Σ_k a_ik g_k(t_j)`.
    pub fn elementary_weight(&self, t: &RootedTree) -> Rational {
        let mut memo = HashMap::new();
        let g = self.stage_weights(t, &mut memo);
        self.b.iter().zip(&g).fold(Rational::zero(), |acc, (b, x)| acc + b * x)
    }

    fn stage_weights(&self, t: &RootedTree, memo: &mut HashMap<RootedTree, Vec<Rational>>) -> Vec<Rational> {
        if let Some(v) = memo.get(t) {
            return v.clone();
        }
        let s = self.stages();
        let mut g = vec![Rational::one(); s];
        for child in t.children() {
            let inner = self.stage_weights(child, memo);
            for (i, gi) in g.iter_mut().enumerate() {
                let ag: Rational = self.a[i]
                    .iter()
                    .zip(&inner)
                    .fold(Rational::zero(), |acc, (a, x)| acc + a * x);
                *gi *= ag;
            }
        }
        memo.insert(t.clone(), g.clone());
        g
    }

    /// The method's multi-index character through `order`, pushed forward
    /// from the tree coefficients `α(t) = t! Φ(t)`.
    pub fn character(&self, order: usize) -> Result<Character> {
        self.validate()?;
        pushforward_character(
            |t| Rational::from_integer(t.factorial()) * self.elementary_weight(t),
            order,
        )
    }
}

/// How far a character agrees with the exact flow.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderReport {
    /// Largest `p` with agreement on every populated index of length `≤ p`.
    pub order: usize,
    /// Orders checked.
    pub checked_up_to: usize,
    /// Indices of length `order + 1` where the character differs, if that
    /// length was checked.
    pub failing: Vec<MultiIndex>,
}

pub fn order_report(a: &Character) -> Result<OrderReport> {
    let n = a.order();
    let exact = exact_solution_character(n)?;
    let order = a.agreement_order(&exact).unwrap_or(0);
    let mut failing = Vec::new();
    if order < n {
        for m in crate::enumerate::enumerate_populated(order + 1)? {
            if a.value(&m)? != exact.value(&m)? {
                failing.push(m);
            }
        }
    }
    Ok(OrderReport {
        order,
        checked_up_to: n,
        failing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn builtin_orders() {
        let e = ButcherTableau::euler().character(4).unwrap();
        assert_eq!(e, Character::euler(4));
        assert_eq!(order_report(&e).unwrap().order, 1);
        let m = ButcherTableau::implicit_midpoint().character(4).unwrap();
        assert_eq!(order_report(&m).unwrap().order, 2);
        let rk4 = ButcherTableau::rk4().character(5).unwrap();
        let report = order_report(&rk4).unwrap();
        assert_eq!(report.order, 4);
        assert!(!report.failing.is_empty());
    }

    #[test]
    fn weights_on_small_trees() {
        let rk4 = ButcherTableau::rk4();
        assert_eq!(rk4.elementary_weight(&RootedTree::leaf()), int(1));
        assert_eq!(rk4.elementary_weight(&RootedTree::chain(2)), rat(1, 2));
        assert_eq!(rk4.elementary_weight(&RootedTree::corolla(2)), rat(1, 3));
        assert_eq!(rk4.elementary_weight(&RootedTree::chain(3)), rat(1, 6));
    }

    #[test]
    fn validation() {
        let mut t = ButcherTableau::rk4();
        assert!(t.validate().unwrap().is_empty());
        t.c[1] = int(1);
        assert_eq!(t.validate().unwrap().len(), 1);
        t.b.pop();
        assert!(t.validate().is_err());
    }

    #[test]
    fn json_round_trip() {
        let t = ButcherTableau::implicit_midpoint();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"a":[["1/2"]],"b":["1"],"c":["1/2"]}"#);
        assert_eq!(serde_json::from_str::<ButcherTableau>(&s).unwrap(), t);
        assert!(serde_json::from_str::<ButcherTableau>(r#"{"a":[["x"]],"b":["1"],"c":["0"]}"#).is_err());
    }
}
