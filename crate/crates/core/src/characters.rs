//! Characters: coefficient tables of multi-index B-series, and the
//! composition and substitution laws acting on them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::enumerate::GradedBasis;
use crate::error::{Error, Result};
use crate::forest::Forest;
use crate::lincomb::LinComb;
use crate::multi_index::MultiIndex;
use crate::products::{star1, star2};
use crate::rational::{self, Rational};

/// Values on populated multi-indices up to a truncation order, plus the
/// value at `z^0`.
///
/// Extended multiplicatively to forests, with the empty forest sent to 1
/// whatever the value at `z^0` is.
#[derive(Clone, PartialEq, Eq)]
pub struct Character {
    order: usize,
    empty: Rational,
    values: BTreeMap<MultiIndex, Rational>,
}

impl Character {
    /// # Panics
    /// If an index is not populated or longer than `order`; see
    /// [`Character::try_new`] for the checked version.
    pub fn new<I>(order: usize, empty: Rational, values: I) -> Self
    where
        I: IntoIterator<Item = (MultiIndex, Rational)>,
    {
        Self::try_new(order, empty, values).expect("valid character data")
    }

    pub fn try_new<I>(order: usize, empty: Rational, values: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiIndex, Rational)>,
    {
        let mut map = BTreeMap::new();
        for (m, v) in values {
            m.ensure_populated()?;
            if m.length() > order {
                return Err(Error::Truncation {
                    requested: m.length(),
                    available: order,
                });
            }
            if !v.is_zero() {
                map.insert(m, v);
            }
        }
        Ok(Self {
            order,
            empty,
            values: map,
        })
    }

    /// The unit of composition: 1 at `z^0`, zero elsewhere. `B(a, h, f, y) = y`.
    pub fn identity(order: usize) -> Self {
        Self::new(order, Rational::one(), [])
    }

    /// The unit of substitution: 1 at `z_0` only.
    pub fn delta_z0(order: usize) -> Self {
        Self::new(order, Rational::zero(), [(MultiIndex::letter(0), Rational::one())])
    }

    /// Explicit Euler, `y + h f(y)`.
    pub fn euler(order: usize) -> Self {
        Self::new(order, Rational::one(), [(MultiIndex::letter(0), Rational::one())])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn empty_value(&self) -> &Rational {
        &self.empty
    }

    /// Non-zero values, in canonical order.
    pub fn values(&self) -> impl Iterator<Item = (&MultiIndex, &Rational)> + '_ {
        self.values.iter()
    }

    /// `a(z^β)`. `z^0` gives the empty value; indices above the truncation
    /// order or not populated are errors.
    pub fn value(&self, m: &MultiIndex) -> Result<Rational> {
        if m.is_empty() {
            return Ok(self.empty.clone());
        }
        if m.length() > self.order {
            return Err(Error::Truncation {
                requested: m.length(),
                available: self.order,
            });
        }
        m.ensure_populated()?;
        Ok(self.values.get(m).cloned().unwrap_or_else(Rational::zero))
    }

    /// `a(F) = Π_j a(β_j)^{r_j}`; the empty forest gives 1.
    pub fn forest_value(&self, f: &Forest) -> Result<Rational> {
        let mut out = Rational::one();
        for (m, r) in f.distinct() {
            let v = self.value(m)?;
            out *= num_traits::pow(v, *r);
        }
        Ok(out)
    }

    /// The same character cut down to `order`.
    pub fn truncate(&self, order: usize) -> Self {
        Self {
            order: order.min(self.order),
            empty: self.empty.clone(),
            values: self
                .values
                .iter()
                .filter(|(m, _)| m.length() <= order)
                .map(|(m, v)| (m.clone(), v.clone()))
                .collect(),
        }
    }

    /// Largest `p ≤ order` such that `self` and `other` agree on `z^0` and on
    /// every populated index of length at most `p`. `None` if they already
    /// differ at `z^0`.
    pub fn agreement_order(&self, other: &Character) -> Option<usize> {
        if self.empty != other.empty {
            return None;
        }
        let top = self.order.min(other.order);
        let mut first_diff = top + 1;
        for m in self.values.keys().chain(other.values.keys()) {
            if m.length() <= top && self.values.get(m) != other.values.get(m) {
                first_diff = first_diff.min(m.length());
            }
        }
        Some(first_diff - 1)
    }
}

/// The character of the exact flow.
///
/// `a(z^β) = (1/|β|) Σ Π_i a(β_i)`, summed over letters `z_k` of `β` and
/// ordered `k`-tuples of populated `β_i` with `z_k Π_i z^{β_i} = z^β`;
/// `a(z_0) = 1` and the value at `z^0` is 1.
pub fn exact_solution_character(order: usize) -> Result<Character> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    let basis = GradedBasis::new(order);
    let mut values: BTreeMap<MultiIndex, Rational> = BTreeMap::new();
    for n in 1..=order {
        for beta in basis.indices(n) {
            let mut memo = HashMap::new();
            let mut sum = Rational::zero();
            for &(k, _) in beta.entries() {
                let rest = beta.without_letter(k).expect("letter present");
                sum += ordered_tuples(&rest, k, &values, &mut memo);
            }
            let v = sum / Rational::from_integer(n.into());
            values.insert(beta.clone(), v);
        }
    }
    Character::try_new(order, Rational::one(), values)
}

/// `Σ Π_i a(β_i)` over ordered `k`-tuples of populated indices whose
/// product is `rest`.
fn ordered_tuples(
    rest: &MultiIndex,
    k: usize,
    values: &BTreeMap<MultiIndex, Rational>,
    memo: &mut HashMap<(MultiIndex, usize), Rational>,
) -> Rational {
    if k == 0 {
        return if rest.is_empty() {
            Rational::one()
        } else {
            Rational::zero()
        };
    }
    if rest.length() < k {
        return Rational::zero();
    }
    if let Some(v) = memo.get(&(rest.clone(), k)) {
        return v.clone();
    }
    let mut sum = Rational::zero();
    for d in divisors(rest) {
        if let Some(a) = values.get(&d) {
            let quotient = rest.checked_div(&d).expect("divisor");
            let tail = ordered_tuples(&quotient, k - 1, values, memo);
            sum += a * tail;
        }
    }
    memo.insert((rest.clone(), k), sum.clone());
    sum
}

/// All non-empty monomial divisors of `m`.
fn divisors(m: &MultiIndex) -> Vec<MultiIndex> {
    let mut out = vec![Vec::new()];
    for &(k, mult) in m.entries() {
        let mut next = Vec::new();
        for prefix in &out {
            for e in 0..=mult {
                let mut p: Vec<(usize, usize)> = prefix.clone();
                if e > 0 {
                    p.push((k, e));
                }
                next.push(p);
            }
        }
        out = next;
    }
    out.into_iter()
        .map(MultiIndex::from_pairs)
        .filter(|d| !d.is_empty())
        .collect()
}

fn sym(m: &MultiIndex) -> Rational {
    Rational::from_integer(m.symmetry_factor())
}

fn forest_sym(f: &Forest) -> Rational {
    Rational::from_integer(f.symmetry_factor())
}

/// Composition law `b ⋆₂ a`, the character of `B(a)` evaluated after `B(b)`.
///
/// `(b ⋆₂ a)(μ) = a(z^0) b(μ) + Σ_{α, F} b(F) a(α) ⟨F ⋆₂ α, μ⟩ / (S(F) S(α))`,
/// over populated `α` and forests `F` (the empty one included). Requires
/// `b(z^0) = 1`; the result is truncated at the smaller input order.
pub fn compose(b: &Character, a: &Character) -> Result<Character> {
    if !b.empty.is_one() {
        return Err(Error::Hypothesis(format!(
            "composition needs b(z^0) = 1, got {}",
            rational::format_rational(&b.empty)
        )));
    }
    let order = b.order.min(a.order);
    let basis = GradedBasis::new(order);
    let mut out: LinComb<MultiIndex> = LinComb::zero();
    for (mu, v) in b.values() {
        if mu.length() <= order {
            out.add_term(mu.clone(), &a.empty * v);
        }
    }
    for alpha in basis.indices_up_to(order) {
        let a_alpha = a.value(alpha)?;
        if a_alpha.is_zero() {
            continue;
        }
        for forest in basis.forests_up_to(order - alpha.length()) {
            let b_f = b.forest_value(forest)?;
            if b_f.is_zero() {
                continue;
            }
            let weight = &a_alpha * b_f / (forest_sym(forest) * sym(alpha));
            for (mu, c) in &star2(forest, alpha) {
                out.add_term(mu.clone(), &weight * c * sym(mu));
            }
        }
    }
    Character::try_new(order, &a.empty * &b.empty, out.into_terms())
}

/// Substitution law `b ⋆₁ a`: the character of `B(a)` with its vector field
/// replaced by `h⁻¹ B(b)`.
///
/// `(b ⋆₁ a)(γ) = Σ_{β, F} b(F) a(β) ⟨F ⋆₁ β, γ⟩ / (S(F) S(β))`, over
/// populated `β` and forests `F` with exactly `|β|` components, so that every
/// letter of `β` is replaced. Requires `b(z^0) = 0`; the value at `z^0` is
/// `a(z^0)`.
pub fn substitute(b: &Character, a: &Character) -> Result<Character> {
    if !b.empty.is_zero() {
        return Err(Error::Hypothesis(format!(
            "substitution needs b(z^0) = 0, got {}",
            rational::format_rational(&b.empty)
        )));
    }
    let order = b.order.min(a.order);
    let basis = GradedBasis::new(order);
    let mut out: LinComb<MultiIndex> = LinComb::zero();
    for beta in basis.indices_up_to(order) {
        let a_beta = a.value(beta)?;
        if a_beta.is_zero() {
            continue;
        }
        for forest in basis.forests_up_to(order) {
            if forest.component_count() != beta.length() {
                continue;
            }
            let b_f = b.forest_value(forest)?;
            if b_f.is_zero() {
                continue;
            }
            let weight = &a_beta * b_f / (forest_sym(forest) * sym(beta));
            for (gamma, c) in &star1(forest, beta) {
                out.add_term(gamma.clone(), &weight * c * sym(gamma));
            }
        }
    }
    Character::try_new(order, a.empty.clone(), out.into_terms())
}

/// A basis element tagged with its power of `h`.
pub type Graded<B> = (usize, B);

/// `M_b(x) = w · x + Σ_F b(F)/S(F) · h^{|F|} (F ⋆₁ x)` over non-empty
/// forests `F` of length at most the order of `b`.
///
/// The weight `w` of the identity term is a parameter because the natural
/// candidates (0, 1, `b(z^0)`) lead to different operators.
pub fn m_b(b: &Character, x: &MultiIndex, identity_weight: &Rational) -> Result<LinComb<Graded<MultiIndex>>> {
    let basis = GradedBasis::new(b.order);
    let mut out = LinComb::term((0, x.clone()), identity_weight.clone());
    for forest in basis.forests_up_to(b.order).filter(|f| !f.is_empty()) {
        let b_f = b.forest_value(forest)?;
        if b_f.is_zero() {
            continue;
        }
        let weight = b_f / forest_sym(forest);
        let grade = forest.length();
        out.add_scaled(&star1(forest, x).map_basis(|m| (grade, m.clone())), &weight);
    }
    Ok(out)
}

/// [`m_b`] on forests, extended multiplicatively over components.
pub fn m_b_forest(b: &Character, x: &Forest, identity_weight: &Rational) -> Result<LinComb<Graded<Forest>>> {
    let mut out = LinComb::basis((0, Forest::empty()));
    for m in x.components() {
        let factor = m_b(b, m, identity_weight)?;
        out = out.bilinear(&factor, |(g1, f), (g2, m)| {
            LinComb::basis((g1 + g2, f.union(&Forest::single(m.clone()))))
        });
    }
    Ok(out)
}

/// Graded [`star2`] on `M_b` images.
fn graded_star2(left: &LinComb<Graded<Forest>>, right: &LinComb<Graded<MultiIndex>>) -> LinComb<Graded<MultiIndex>> {
    left.bilinear(right, |(g1, f), (g2, m)| {
        star2(f, m).map_basis(|mu| (g1 + g2, mu.clone()))
    })
}

/// Outcome of comparing `M_b(F ⋆₂ β)` with `M_b(F) ⋆₂ M_b(β)`.
#[derive(Debug, Clone)]
pub struct MorphismCheck {
    pub holds: bool,
    /// Right side minus left side, restricted to complete grades.
    pub defect: LinComb<Graded<MultiIndex>>,
}

/// Checks `M_b(F ⋆₂ β) = M_b(F) ⋆₂ M_b(β)` through `h^{order of b}`.
///
/// Grades up to the order of `b` are complete on both sides; higher grades
/// are dropped before comparing.
pub fn m_b_morphism_check(
    b: &Character,
    forest: &Forest,
    beta: &MultiIndex,
    identity_weight: &Rational,
) -> Result<MorphismCheck> {
    let mut lhs = LinComb::zero();
    for (mu, c) in &star2(forest, beta) {
        lhs.add_scaled(&m_b(b, mu, identity_weight)?, c);
    }
    let rhs = graded_star2(
        &m_b_forest(b, forest, identity_weight)?,
        &m_b(b, beta, identity_weight)?,
    );
    let cut = |x: LinComb<Graded<MultiIndex>>| -> LinComb<Graded<MultiIndex>> {
        x.into_terms().into_iter().filter(|((g, _), _)| *g <= b.order).collect()
    };
    let defect = cut(rhs) - cut(lhs);
    Ok(MorphismCheck {
        holds: defect.is_zero(),
        defect,
    })
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "order {}: 1 -> {}", self.order, self.empty)?;
        for (m, v) in &self.values {
            write!(f, ", {m} -> {v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct ValueRepr {
    index: MultiIndex,
    #[serde(with = "rational::serde_str")]
    coeff: Rational,
}

#[derive(Serialize, Deserialize)]
struct CharacterRepr {
    order: usize,
    #[serde(with = "rational::serde_str")]
    empty: Rational,
    values: Vec<ValueRepr>,
}

impl Serialize for Character {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CharacterRepr {
            order: self.order,
            empty: self.empty.clone(),
            values: self
                .values
                .iter()
                .map(|(m, v)| ValueRepr {
                    index: m.clone(),
                    coeff: v.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Character {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = CharacterRepr::deserialize(d)?;
        let mut seen = std::collections::BTreeSet::new();
        for v in &r.values {
            if !seen.insert(v.index.clone()) {
                return Err(serde::de::Error::custom(format!("duplicate index {}", v.index)));
            }
        }
        Character::try_new(r.order, r.empty, r.values.into_iter().map(|v| (v.index, v.coeff)))
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn mi(s: &str) -> MultiIndex {
        s.parse().unwrap()
    }

    fn chr(order: usize, empty: i64, vals: &[(&str, Rational)]) -> Character {
        Character::new(order, int(empty), vals.iter().map(|(m, v)| (mi(m), v.clone())))
    }

    #[test]
    fn exact_values() {
        let a = exact_solution_character(5).unwrap();
        assert_eq!(a.value(&mi("z0")).unwrap(), int(1));
        assert_eq!(a.value(&mi("z0 z1")).unwrap(), rat(1, 2));
        assert_eq!(a.value(&mi("z0 z1^2")).unwrap(), rat(1, 6));
        assert_eq!(a.value(&mi("z0^2 z2")).unwrap(), rat(1, 3));
        assert_eq!(a.value(&mi("z0^2 z1 z2")).unwrap(), rat(1, 3));
        assert_eq!(a.value(&MultiIndex::empty()).unwrap(), int(1));
        assert!(exact_solution_character(0).is_err());
    }

    #[test]
    fn truncation_is_an_error() {
        let a = exact_solution_character(2).unwrap();
        assert_eq!(
            a.value(&mi("z0 z1^2")),
            Err(Error::Truncation {
                requested: 3,
                available: 2
            })
        );
        assert!(a.value(&mi("z1")).is_err());
        assert_eq!(a.forest_value(&Forest::empty()).unwrap(), int(1));
    }

    #[test]
    fn forest_values_multiply() {
        let a = exact_solution_character(3).unwrap();
        let f = Forest::from_components([mi("z0 z1"), mi("z0 z1"), mi("z0")]);
        assert_eq!(a.forest_value(&f).unwrap(), rat(1, 4));
        let s = Character::delta_z0(3);
        assert_eq!(s.forest_value(&Forest::empty()).unwrap(), int(1));
    }

    #[test]
    fn composition_examples() {
        let e = Character::euler(3);
        let ee = compose(&e, &e).unwrap();
        assert_eq!(ee.value(&mi("z0")).unwrap(), int(2));
        assert_eq!(ee.value(&mi("z0 z1")).unwrap(), int(1));

        let a = chr(2, 1, &[("z0", rat(2, 3)), ("z0 z1", rat(-1, 5))]);
        let b = chr(2, 1, &[("z0", rat(3, 7)), ("z0 z1", rat(4, 9))]);
        let ba = compose(&b, &a).unwrap();
        assert_eq!(ba.value(&mi("z0")).unwrap(), rat(3, 7) + rat(2, 3));
        assert_eq!(
            ba.value(&mi("z0 z1")).unwrap(),
            rat(4, 9) + rat(2, 3) * rat(3, 7) + rat(-1, 5)
        );
        assert_eq!(compose(&Character::identity(2), &a).unwrap(), a);
        assert!(compose(&Character::delta_z0(2), &a).is_err());
    }

    #[test]
    fn substitution_examples() {
        let a = chr(2, 1, &[("z0", rat(2, 3)), ("z0 z1", rat(-1, 5))]);
        let b = chr(2, 0, &[("z0", rat(3, 7)), ("z0 z1", rat(4, 9))]);
        let ba = substitute(&b, &a).unwrap();
        assert_eq!(ba.value(&mi("z0")).unwrap(), rat(2, 3) * rat(3, 7));
        assert_eq!(
            ba.value(&mi("z0 z1")).unwrap(),
            rat(2, 3) * rat(4, 9) + rat(-1, 5) * rat(9, 49)
        );
        assert_eq!(ba.empty_value(), &int(1));
        assert_eq!(substitute(&Character::delta_z0(2), &a).unwrap(), a);
        assert!(substitute(&Character::euler(2), &a).is_err());
    }

    #[test]
    fn m_b_examples() {
        let b = chr(3, 0, &[("z0", rat(1, 2)), ("z0^2 z2", rat(3, 1))]);
        let z0 = mi("z0");
        let plain = m_b(&b, &z0, &int(0)).unwrap();
        let expected: LinComb<Graded<MultiIndex>> = [((1, mi("z0")), rat(1, 2)), ((3, mi("z0^2 z2")), rat(3, 2))]
            .into_iter()
            .collect();
        assert_eq!(plain, expected);
        let with_id = m_b(&b, &z0, &int(1)).unwrap();
        assert_eq!(with_id.coeff(&(0, z0.clone())), int(1));
        assert_eq!(with_id.len(), 3);
        let zero = Character::new(3, int(0), []);
        let x = mi("z0^2 z1 z2");
        assert_eq!(m_b(&zero, &x, &int(1)).unwrap(), LinComb::basis((0, x)));
    }

    #[test]
    fn m_b_morphism_needs_the_identity_term() {
        let b = chr(
            3,
            0,
            &[("z0", rat(1, 2)), ("z0 z1", rat(2, 3)), ("z0^2 z2", rat(-1, 4))],
        );
        let f = Forest::single(mi("z0"));
        let z0 = mi("z0");
        assert!(m_b_morphism_check(&b, &f, &z0, &int(1)).unwrap().holds);
        assert!(!m_b_morphism_check(&b, &f, &z0, &int(0)).unwrap().holds);
    }

    #[test]
    fn json_round_trip() {
        let a = exact_solution_character(3).unwrap();
        let s = serde_json::to_string(&a).unwrap();
        assert!(s.starts_with(r#"{"order":3,"empty":"1","values":[{"index":{"0":1},"coeff":"1"}"#));
        let back: Character = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        let bad = r#"{"order":1,"empty":"1","values":[{"index":{"0":1,"1":1},"coeff":"1"}]}"#;
        assert!(serde_json::from_str::<Character>(bad).is_err());
        let unpopulated = r#"{"order":3,"empty":"1","values":[{"index":{"1":1},"coeff":"1"}]}"#;
        assert!(serde_json::from_str::<Character>(unpopulated).is_err());
    }

    #[test]
    fn agreement_order() {
        let exact = exact_solution_character(4).unwrap();
        assert_eq!(Character::euler(4).agreement_order(&exact), Some(1));
        assert_eq!(exact.agreement_order(&exact), Some(4));
        assert_eq!(Character::delta_z0(4).agreement_order(&exact), None);
    }
}
