//! The derivation `D` and the products built from it.
//!
//! * `x ▷ y = x · D(y)` is the (left pre-Lie, right-commutative) Novikov
//!   product on populated multi-indices.
//! * `F ⋆₂ α = (Π_j β_j) · Dⁿ α` grafts every component of the forest `F`
//!   onto the target; lifted to forest targets it becomes the associative
//!   [`grossman_larson`] product.
//! * `β ▶ α` and `F ⋆₁ α` replace letters `z_k` of the target by
//!   arity-raised copies `D^k β` of the inserted multi-indices.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::forest::Forest;
use crate::lincomb::LinComb;
use crate::multi_index::MultiIndex;
use crate::rational::{factorial, Rational};

/// `D(z^β) = Σ_k β(k) · z^β z_{k+1} / z_k`.
pub fn derive_monomial(m: &MultiIndex) -> LinComb<MultiIndex> {
    let mut out = LinComb::zero();
    for &(k, mult) in m.entries() {
        let shifted = m.without_letter(k).expect("letter present").with_letter(k + 1);
        out.add_term(shifted, Rational::from_integer(BigInt::from(mult)));
    }
    out
}

/// `Dⁿ(x)`, extended linearly.
pub fn derive(x: &LinComb<MultiIndex>, n: usize) -> LinComb<MultiIndex> {
    (0..n).fold(x.clone(), |acc, _| acc.map_linear(derive_monomial))
}

pub fn derive_monomial_n(m: &MultiIndex, n: usize) -> LinComb<MultiIndex> {
    derive(&LinComb::basis(m.clone()), n)
}

/// `D` acting on a forest as a derivation of the forest product.
pub fn derive_forest(f: &Forest) -> LinComb<Forest> {
    let mut out = LinComb::zero();
    for (beta, r) in f.distinct() {
        let rest: Vec<MultiIndex> = {
            let mut seen = false;
            f.components()
                .filter(|m| {
                    if !seen && *m == beta {
                        seen = true;
                        false
                    } else {
                        true
                    }
                })
                .cloned()
                .collect()
        };
        for (gamma, c) in &derive_monomial(beta) {
            let forest = Forest::from_components(rest.iter().cloned().chain([gamma.clone()]));
            out.add_term(forest, c * Rational::from_integer(BigInt::from(*r)));
        }
    }
    out
}

pub fn derive_forest_n(x: &LinComb<Forest>, n: usize) -> LinComb<Forest> {
    (0..n).fold(x.clone(), |acc, _| acc.map_linear(derive_forest))
}

/// `z^β ▷ z^{β'} = z^β · D(z^{β'})`.
pub fn pre_lie(left: &MultiIndex, right: &MultiIndex) -> LinComb<MultiIndex> {
    derive_monomial(right).map_basis(|m| left.mul(m))
}

pub fn pre_lie_lin(x: &LinComb<MultiIndex>, y: &LinComb<MultiIndex>) -> LinComb<MultiIndex> {
    x.bilinear(y, pre_lie)
}

/// `F ⋆₂ z^α = (Π_j z^{β_j}) · Dⁿ z^α` with `n` the component count of `F`.
///
/// The empty forest acts as the identity. A non-empty forest grafted onto
/// `z^0` gives zero here; the convention `F ⋆₂ z^0 = F` lives at forest
/// level in [`grossman_larson`], where the empty target is the empty forest.
pub fn star2(left: &Forest, right: &MultiIndex) -> LinComb<MultiIndex> {
    if left.is_empty() {
        return LinComb::basis(right.clone());
    }
    let prefix = left.product();
    derive_monomial_n(right, left.component_count()).map_basis(|m| prefix.mul(m))
}

/// Bilinear extension of [`star2`].
pub fn star2_lin(left: &LinComb<Forest>, right: &LinComb<MultiIndex>) -> LinComb<MultiIndex> {
    left.bilinear(right, star2)
}

/// `F ⋆₂ (α_1 ⋯ α_m)`: every component of `F` is grafted onto some
/// component of the target, Leibniz-distributed over the target components.
pub fn star2_onto_forest(left: &Forest, right: &Forest) -> LinComb<Forest> {
    distribute_over(left, right, star2)
}

/// The associative forest product: `F ⋆ G = Σ_{F = F₁F₂} F₁ · (F₂ ⋆₂ G)`,
/// summed over labelled splits of `F`. Components of `F₁` stay as separate
/// components; those of `F₂` are all grafted onto `G`.
pub fn grossman_larson(left: &Forest, right: &Forest) -> LinComb<Forest> {
    let mut out = LinComb::zero();
    for (stay, graft, count) in left.splits() {
        let grafted = star2_onto_forest(&graft, right);
        let scale = Rational::from_integer(count);
        out.add_scaled(&grafted.map_basis(|g| stay.union(g)), &scale);
    }
    out
}

pub fn grossman_larson_lin(left: &LinComb<Forest>, right: &LinComb<Forest>) -> LinComb<Forest> {
    left.bilinear(right, grossman_larson)
}

/// `z^β ▶ z^α = Σ_k (D^k z^β)(∂_{z_k} z^α)`.
pub fn insert(beta: &MultiIndex, alpha: &MultiIndex) -> LinComb<MultiIndex> {
    star1(&Forest::single(beta.clone()), alpha)
}

/// `z^β ▶ (α_1 ⋯ α_m)` by the Leibniz rule over target components.
pub fn insert_into_forest(beta: &MultiIndex, alpha: &Forest) -> LinComb<Forest> {
    star1_forest(&Forest::single(beta.clone()), alpha)
}

/// Simultaneous insertion
/// `F ⋆₁ z^α = Σ_{k_1..k_n} (Π_j D^{k_j} z^{β_j}) · (Π_j ∂_{z_{k_j}}) z^α`.
///
/// Each component of `F` replaces a distinct letter of the target, so the
/// result vanishes once `F` has more components than `z^α` has letters.
pub fn star1(left: &Forest, right: &MultiIndex) -> LinComb<MultiIndex> {
    let betas: Vec<&MultiIndex> = left.components().collect();
    if betas.is_empty() {
        return LinComb::basis(right.clone());
    }
    if betas.len() > right.length() {
        return LinComb::zero();
    }
    let top = right.max_arity().unwrap_or(0);
    let derivs: Vec<Vec<LinComb<MultiIndex>>> = betas
        .iter()
        .map(|b| {
            let mut v = vec![LinComb::basis((*b).clone())];
            for _ in 0..top {
                let next = derive(v.last().expect("non-empty"), 1);
                v.push(next);
            }
            v
        })
        .collect();

    let mut out = LinComb::zero();
    star1_rec(
        &derivs,
        0,
        right.clone(),
        BigInt::one(),
        LinComb::basis(MultiIndex::empty()),
        &mut out,
    );
    out
}

fn star1_rec(
    derivs: &[Vec<LinComb<MultiIndex>>],
    j: usize,
    remaining: MultiIndex,
    coeff: BigInt,
    acc: LinComb<MultiIndex>,
    out: &mut LinComb<MultiIndex>,
) {
    if acc.is_zero() {
        return;
    }
    if j == derivs.len() {
        let scale = Rational::from_integer(coeff);
        out.add_scaled(&acc.map_basis(|m| m.mul(&remaining)), &scale);
        return;
    }
    for &(k, mult) in remaining.entries() {
        let rest = remaining.without_letter(k).expect("letter present");
        let next = acc.monomial_product(&derivs[j][k]);
        star1_rec(derivs, j + 1, rest, &coeff * BigInt::from(mult), next, out);
    }
}

/// [`star1`] with a forest target, Leibniz-distributed over its components.
pub fn star1_forest(left: &Forest, right: &Forest) -> LinComb<Forest> {
    distribute_over(left, right, star1)
}

pub fn star1_lin(left: &LinComb<Forest>, right: &LinComb<MultiIndex>) -> LinComb<MultiIndex> {
    left.bilinear(right, star1)
}

/// Sums `Π_i op(S_i, α_i)` over every assignment of the (labelled)
/// components of `left` to the components `α_i` of `right`.
fn distribute_over<F>(left: &Forest, right: &Forest, op: F) -> LinComb<Forest>
where
    F: Fn(&Forest, &MultiIndex) -> LinComb<MultiIndex>,
{
    let targets: Vec<&MultiIndex> = right.components().collect();
    let mut out = LinComb::zero();
    for (bins, count) in assignments(left, targets.len()) {
        let mut acc: LinComb<Vec<MultiIndex>> = LinComb::basis(Vec::new());
        for (bin, alpha) in bins.iter().zip(&targets) {
            let part = op(bin, alpha);
            acc = acc.bilinear(&part, |prefix, m| {
                let mut v = prefix.clone();
                v.push(m.clone());
                LinComb::basis(v)
            });
            if acc.is_zero() {
                break;
            }
        }
        let scale = Rational::from_integer(count);
        out.add_scaled(&acc.map_basis(|v| Forest::from_components(v.iter().cloned())), &scale);
    }
    out
}

/// All ways of placing the labelled components of `forest` into `m`
/// labelled bins, grouped by bin contents with their multiplicities.
/// Per-target bins of `(index, multiplicity)`, with the number of labelled
/// ways to fill them.
type Bins = (Vec<Vec<(MultiIndex, usize)>>, BigInt);

fn assignments(forest: &Forest, m: usize) -> Vec<(Vec<Forest>, BigInt)> {
    if m == 0 {
        return if forest.is_empty() {
            vec![(Vec::new(), BigInt::one())]
        } else {
            Vec::new()
        };
    }
    let mut out: Vec<Bins> = vec![(vec![Vec::new(); m], BigInt::one())];
    for (beta, r) in forest.distinct() {
        let mut next = Vec::new();
        for composition in compositions(*r, m) {
            let ways = composition.iter().fold(factorial(*r), |acc, &c| acc / factorial(c));
            for (bins, count) in &out {
                let mut bins = bins.clone();
                for (bin, &c) in bins.iter_mut().zip(&composition) {
                    if c > 0 {
                        bin.push((beta.clone(), c));
                    }
                }
                next.push((bins, count * &ways));
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|(bins, c)| (bins.into_iter().map(Forest::from_reps).collect(), c))
        .collect()
}

/// Weak compositions of `n` into `parts` non-negative parts.
fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in compositions(n - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `⟨z^α, z^β⟩ = δ_{α,β} S(z^α)`.
pub fn inner_product(x: &MultiIndex, y: &MultiIndex) -> Rational {
    if x == y {
        Rational::from_integer(x.symmetry_factor())
    } else {
        Rational::zero()
    }
}

/// The forest pairing `⟨F, G⟩ = δ_{F,G} S(F)`.
pub fn forest_inner_product(x: &Forest, y: &Forest) -> Rational {
    if x == y {
        Rational::from_integer(x.symmetry_factor())
    } else {
        Rational::zero()
    }
}

/// Bilinear extension of [`inner_product`].
pub fn pairing(x: &LinComb<MultiIndex>, y: &LinComb<MultiIndex>) -> Rational {
    x.iter()
        .map(|(b, c)| c * y.coeff(b) * Rational::from_integer(b.symmetry_factor()))
        .fold(Rational::zero(), |a, b| a + b)
}
