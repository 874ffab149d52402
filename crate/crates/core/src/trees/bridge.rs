//! The node-arity map from trees to multi-indices, its constructive right
//! inverse, and pushforward of tree characters.

use std::collections::{BTreeMap, VecDeque};

use num_traits::Zero;

use super::{enumerate_trees, RootedTree};
use crate::characters::Character;
use crate::error::Result;
use crate::forest::Forest;
use crate::lincomb::LinComb;
use crate::multi_index::MultiIndex;
use crate::rational::Rational;

/// `Ψ(t)`: the multi-index counting vertices of `t` by number of children.
pub fn psi(t: &RootedTree) -> MultiIndex {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    let mut stack = vec![t];
    while let Some(node) = stack.pop() {
        *counts.entry(node.children().len()).or_insert(0) += 1;
        stack.extend(node.children());
    }
    MultiIndex::from_pairs(counts)
}

pub fn psi_forest(trees: &[RootedTree]) -> Forest {
    Forest::from_components(trees.iter().map(psi))
}

/// Linear extension of `Ψ`.
pub fn psi_lin(x: &LinComb<RootedTree>) -> LinComb<MultiIndex> {
    x.map_basis(psi)
}

/// A tree with `Ψ(t) = β`, built greedily.
///
/// The root takes the largest arity. Open slots are then filled in
/// first-in-first-out order, always with the smallest remaining non-zero
/// arity, and `z_0` letters go in last. Non-zero arities never close the
/// last open slot, so the construction cannot get stuck.
pub fn corolla_witness(beta: &MultiIndex) -> Result<RootedTree> {
    beta.ensure_populated()?;
    let mut pool: BTreeMap<usize, usize> = beta.entries().iter().copied().collect();
    let root_arity = beta.max_arity().expect("populated index is non-empty");
    take(&mut pool, root_arity);

    // arena of child lists; slots hold the id of a node with a free child slot
    let mut children: Vec<Vec<usize>> = vec![Vec::new()];
    let mut slots: VecDeque<usize> = std::iter::repeat_n(0, root_arity).collect();
    while let Some(parent) = slots.pop_front() {
        let arity = pool.keys().copied().find(|&k| k != 0).unwrap_or(0);
        take(&mut pool, arity);
        let id = children.len();
        children.push(Vec::new());
        children[parent].push(id);
        slots.extend(std::iter::repeat_n(id, arity));
    }
    debug_assert!(pool.is_empty());
    let arena = super::Arena { children };
    Ok(arena.to_tree(0))
}

fn take(pool: &mut BTreeMap<usize, usize>, k: usize) {
    let n = pool.get_mut(&k).expect("letter available");
    *n -= 1;
    if *n == 0 {
        pool.remove(&k);
    }
}

/// Multi-index character of a tree B-series with coefficients `alpha`:
/// `a(μ) = S(μ) · Σ_{Ψ(t)=μ} α(t) / (σ(t) t!)`, with empty value 1.
pub fn pushforward_character<F>(mut alpha: F, order: usize) -> Result<Character>
where
    F: FnMut(&RootedTree) -> Rational,
{
    let mut values: BTreeMap<MultiIndex, Rational> = BTreeMap::new();
    for n in 1..=order {
        for t in enumerate_trees(n)? {
            let w = alpha(&t);
            if w.is_zero() {
                continue;
            }
            let denom = Rational::from_integer(t.sigma() * t.factorial());
            *values.entry(psi(&t)).or_insert_with(Rational::zero) += w / denom;
        }
    }
    let values = values.into_iter().map(|(mu, v)| {
        let s = Rational::from_integer(mu.symmetry_factor());
        (mu, v * s)
    });
    Ok(Character::new(order, num_traits::One::one(), values))
}
