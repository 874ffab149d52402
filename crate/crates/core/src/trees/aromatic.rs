//! Aromatic trees and their incoming-arrow profile.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multi_index::MultiIndex;

/// A directed graph on nodes `0..nodes` with `nodes − 1` arrows and at most
/// one outgoing arrow per node. Loops and cycles (aromas) are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Raw")]
pub struct AromaticTree {
    nodes: usize,
    arrows: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct Raw {
    nodes: usize,
    arrows: Vec<(usize, usize)>,
}

impl TryFrom<Raw> for AromaticTree {
    type Error = Error;

    fn try_from(r: Raw) -> Result<Self> {
        AromaticTree::new(r.nodes, r.arrows)
    }
}

impl AromaticTree {
    pub fn new(nodes: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        let g = Self { nodes, arrows };
        g.validate()?;
        Ok(g)
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn validate(&self) -> Result<()> {
        if self.nodes == 0 {
            return Err(Error::InvalidAromatic("no nodes".into()));
        }
        if self.arrows.len() + 1 != self.nodes {
            return Err(Error::InvalidAromatic(format!(
                "{} nodes need {} arrows, found {}",
                self.nodes,
                self.nodes - 1,
                self.arrows.len()
            )));
        }
        let mut out_degree = vec![0usize; self.nodes];
        for &(s, t) in &self.arrows {
            if s >= self.nodes || t >= self.nodes {
                return Err(Error::InvalidAromatic(format!("arrow ({s}, {t}) out of range")));
            }
            out_degree[s] += 1;
            if out_degree[s] > 1 {
                return Err(Error::InvalidAromatic(format!("node {s} has two outgoing arrows")));
            }
        }
        Ok(())
    }

    /// `κ(j)` = number of nodes with exactly `j` incoming arrows.
    pub fn kappa(&self) -> Result<MultiIndex> {
        self.validate()?;
        let mut incoming = vec![0usize; self.nodes];
        for &(_, t) in &self.arrows {
            incoming[t] += 1;
        }
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for d in incoming {
            *counts.entry(d).or_insert(0) += 1;
        }
        Ok(MultiIndex::from_pairs(counts))
    }
}
