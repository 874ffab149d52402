//! Non-planar rooted trees and their link to multi-indices.

mod aromatic;
mod bridge;

pub use aromatic::AromaticTree;
pub use bridge::{corolla_witness, psi, psi_forest, psi_lin, pushforward_character};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::rational::{factorial, Rational};

/// A rooted tree in canonical form: children sorted, recursively.
///
/// The text form writes each node as `[children]`, so `[]` is the single
/// node, `[[]]` the two-node chain and `[[][]]` the cherry.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RootedTree {
    children: Vec<RootedTree>,
}

impl RootedTree {
    pub fn leaf() -> Self {
        Self::default()
    }

    /// `B₊(t_1, …, t_n)`: a new root above the given subtrees.
    pub fn graft_root<I: IntoIterator<Item = RootedTree>>(children: I) -> Self {
        let mut children: Vec<_> = children.into_iter().collect();
        children.sort();
        Self { children }
    }

    /// Chain (ladder) with `n ≥ 1` nodes.
    pub fn chain(n: usize) -> Self {
        assert!(n >= 1);
        (1..n).fold(Self::leaf(), |t, _| Self::graft_root([t]))
    }

    /// Root with `k` leaf children.
    pub fn corolla(k: usize) -> Self {
        Self::graft_root(std::iter::repeat_n(Self::leaf(), k))
    }

    pub fn children(&self) -> &[RootedTree] {
        &self.children
    }

    /// Number of vertices `|t|`.
    pub fn order(&self) -> usize {
        1 + self.children.iter().map(RootedTree::order).sum::<usize>()
    }

    /// `t! = |t| · Π t_i!`.
    pub fn factorial(&self) -> BigInt {
        self.children
            .iter()
            .fold(BigInt::from(self.order()), |acc, c| acc * c.factorial())
    }

    /// Order of the automorphism group: `σ(t) = Π_c m_c! σ(c)^{m_c}` over
    /// distinct child classes `c` with multiplicity `m_c`.
    pub fn sigma(&self) -> BigInt {
        let mut out = BigInt::one();
        let mut i = 0;
        while i < self.children.len() {
            let mut j = i;
            while j < self.children.len() && self.children[j] == self.children[i] {
                j += 1;
            }
            let m = j - i;
            out *= factorial(m) * num_traits::pow(self.children[i].sigma(), m);
            i = j;
        }
        out
    }

    /// `t₁ ↷ t₂`: graft the root of `self` onto every vertex of `target`.
    pub fn graft_onto(&self, target: &RootedTree) -> LinComb<RootedTree> {
        graft_forest(std::slice::from_ref(self), target)
    }
}

/// All rooted trees with `order` vertices, in canonical order.
pub fn enumerate_trees(order: usize) -> Result<Vec<RootedTree>> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    let mut by_order: Vec<Vec<RootedTree>> = vec![Vec::new(), vec![RootedTree::leaf()]];
    for n in 2..=order {
        let pool: Vec<RootedTree> = by_order[1..n].iter().flatten().cloned().collect();
        let mut out = Vec::new();
        child_multisets(&pool, 0, n - 1, &mut Vec::new(), &mut out);
        out.sort();
        by_order.push(out);
    }
    Ok(by_order.swap_remove(order))
}

fn child_multisets(
    pool: &[RootedTree],
    start: usize,
    remaining: usize,
    current: &mut Vec<RootedTree>,
    out: &mut Vec<RootedTree>,
) {
    if remaining == 0 {
        out.push(RootedTree::graft_root(current.iter().cloned()));
        return;
    }
    for i in start..pool.len() {
        let n = pool[i].order();
        if n <= remaining {
            current.push(pool[i].clone());
            child_multisets(pool, i, remaining - n, current, out);
            current.pop();
        }
    }
}

/// Arena form: node 0 is the root, `children[v]` lists child ids.
#[derive(Debug, Clone, Default)]
pub(crate) struct Arena {
    pub children: Vec<Vec<usize>>,
}

impl Arena {
    pub fn from_tree(t: &RootedTree) -> Self {
        fn push(t: &RootedTree, arena: &mut Arena) -> usize {
            let id = arena.children.len();
            arena.children.push(Vec::new());
            for c in &t.children {
                let cid = push(c, arena);
                arena.children[id].push(cid);
            }
            id
        }
        let mut arena = Arena::default();
        push(t, &mut arena);
        arena
    }

    pub fn to_tree(&self, root: usize) -> RootedTree {
        RootedTree::graft_root(self.children[root].iter().map(|&c| self.to_tree(c)))
    }
}

/// All-grafted product of a tree forest onto a tree: every tree of `forest`
/// is attached by a new edge to some vertex of `target`, summed over all
/// such attachments.
pub fn graft_forest(forest: &[RootedTree], target: &RootedTree) -> LinComb<RootedTree> {
    let base = Arena::from_tree(target);
    let vertices = base.children.len();
    let mut out = LinComb::zero();
    let mut choice = vec![0usize; forest.len()];
    loop {
        let mut arena = base.clone();
        for (t, &v) in forest.iter().zip(&choice) {
            let sub = Arena::from_tree(t);
            let offset = arena.children.len();
            for kids in sub.children {
                arena.children.push(kids.into_iter().map(|c| c + offset).collect());
            }
            arena.children[v].push(offset);
        }
        out.add_term(arena.to_tree(0), Rational::one());

        // odometer over vertex choices
        let mut i = 0;
        loop {
            if i == choice.len() {
                return out;
            }
            choice[i] += 1;
            if choice[i] < vertices {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Multisets of trees with `order` vertices in total, as sorted lists.
pub fn enumerate_tree_forests(order: usize) -> Vec<Vec<RootedTree>> {
    let mut pool = Vec::new();
    for n in 1..=order {
        pool.extend(enumerate_trees(n).expect("n >= 1"));
    }
    let mut out = Vec::new();
    tree_multisets(&pool, 0, order, &mut Vec::new(), &mut out);
    out
}

fn tree_multisets(
    pool: &[RootedTree],
    start: usize,
    remaining: usize,
    current: &mut Vec<RootedTree>,
    out: &mut Vec<Vec<RootedTree>>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    for i in start..pool.len() {
        let n = pool[i].order();
        if n <= remaining {
            current.push(pool[i].clone());
            tree_multisets(pool, i, remaining - n, current, out);
            current.pop();
        }
    }
}

/// Grossman–Larson product of a tree forest with a single tree: each tree
/// of `forest` either stays a separate component or is grafted onto a
/// vertex of `target`. Forests are returned as sorted lists.
pub fn grossman_larson_trees(forest: &[RootedTree], target: &RootedTree) -> LinComb<Vec<RootedTree>> {
    let mut out = LinComb::zero();
    for mask in 0u64..(1u64 << forest.len()) {
        let (mut stay, mut graft) = (Vec::new(), Vec::new());
        for (i, t) in forest.iter().enumerate() {
            if mask & (1 << i) != 0 {
                graft.push(t.clone());
            } else {
                stay.push(t.clone());
            }
        }
        for (t, c) in &graft_forest(&graft, target) {
            let mut v = stay.clone();
            v.push(t.clone());
            v.sort();
            out.add_term(v, c.clone());
        }
    }
    out
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for c in &self.children {
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RootedTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes: Vec<u8> = s.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
        let mut stack: Vec<Vec<RootedTree>> = Vec::new();
        let mut result = None;
        for (i, b) in bytes.iter().enumerate() {
            match b {
                b'[' => {
                    if result.is_some() {
                        return Err(Error::Parse(format!("trailing input in tree {s:?}")));
                    }
                    stack.push(Vec::new());
                }
                b']' => {
                    let kids = stack
                        .pop()
                        .ok_or_else(|| Error::Parse(format!("unbalanced ']' at {i} in {s:?}")))?;
                    let t = RootedTree::graft_root(kids);
                    match stack.last_mut() {
                        Some(parent) => parent.push(t),
                        None => result = Some(t),
                    }
                }
                _ => return Err(Error::Parse(format!("unexpected byte in tree {s:?}"))),
            }
        }
        if !stack.is_empty() {
            return Err(Error::Parse(format!("unbalanced '[' in tree {s:?}")));
        }
        result.ok_or_else(|| Error::Parse("empty tree text".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn t(s: &str) -> RootedTree {
        s.parse().unwrap()
    }

    #[test]
    fn counts() {
        let counts: Vec<usize> = (1..=8).map(|n| enumerate_trees(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 9, 20, 48, 115]);
        assert_eq!(enumerate_trees(1).unwrap(), vec![RootedTree::leaf()]);
        assert!(enumerate_trees(0).is_err());
    }

    #[test]
    fn factorial_and_sigma() {
        let chain3 = RootedTree::chain(3);
        assert_eq!(chain3.factorial(), BigInt::from(6));
        assert_eq!(chain3.sigma(), BigInt::from(1));
        let cherry = RootedTree::corolla(2);
        assert_eq!(cherry.factorial(), BigInt::from(3));
        assert_eq!(cherry.sigma(), BigInt::from(2));
        assert_eq!(RootedTree::leaf().factorial(), BigInt::from(1));
        assert_eq!(RootedTree::leaf().sigma(), BigInt::from(1));
        // two identical cherries under a root
        assert_eq!(t("[[[][]][[][]]]").sigma(), BigInt::from(8));
    }

    #[test]
    fn grafting_examples() {
        let leaf = RootedTree::leaf();
        assert_eq!(leaf.graft_onto(&leaf), LinComb::basis(t("[[]]")));
        let expected: LinComb<RootedTree> = [(t("[[[]]]"), int(1)), (t("[[][]]"), int(1))].into_iter().collect();
        assert_eq!(leaf.graft_onto(&t("[[]]")), expected);
        let chain2 = t("[[]]");
        let expected: LinComb<RootedTree> = [(t("[[[[]]]]"), int(1)), (t("[[[]][]]"), int(1))].into_iter().collect();
        assert_eq!(chain2.graft_onto(&chain2), expected);
    }

    #[test]
    fn coinciding_grafts_accumulate() {
        // both leaves of the cherry give the same tree
        let got = RootedTree::leaf().graft_onto(&RootedTree::corolla(2));
        let expected: LinComb<RootedTree> = [(t("[[][][]]"), int(1)), (t("[[[]][]]"), int(2))].into_iter().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn tree_forests_and_gl() {
        assert_eq!(enumerate_tree_forests(3).len(), 4);
        assert_eq!(enumerate_tree_forests(4).len(), 9);
        let leaf = RootedTree::leaf();
        let gl = grossman_larson_trees(std::slice::from_ref(&leaf), &leaf);
        let expected: LinComb<Vec<RootedTree>> =
            [(vec![leaf.clone(), leaf.clone()], int(1)), (vec![t("[[]]")], int(1))]
                .into_iter()
                .collect();
        assert_eq!(gl, expected);
    }

    #[test]
    fn text_round_trip() {
        for n in 1..=6 {
            for tree in enumerate_trees(n).unwrap() {
                assert_eq!(tree.to_string().parse::<RootedTree>().unwrap(), tree);
            }
        }
        assert!("[[]".parse::<RootedTree>().is_err());
        assert!("[]]".parse::<RootedTree>().is_err());
        assert!("[][]".parse::<RootedTree>().is_err());
        assert!("".parse::<RootedTree>().is_err());
    }
}
