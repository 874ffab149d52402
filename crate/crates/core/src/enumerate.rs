//! Graded bases: populated multi-indices and forests of a given length.

use crate::error::{Error, Result};
use crate::forest::Forest;
use crate::multi_index::MultiIndex;

/// All populated multi-indices of length `order`, in canonical order.
///
/// The non-zero arities of a populated index of length `n` form a partition
/// of its `n − 1` edges; the remaining letters are `z_0`. The count is
/// therefore the partition number `p(n − 1)`.
pub fn enumerate_populated(order: usize) -> Result<Vec<MultiIndex>> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    let mut out: Vec<MultiIndex> = partitions(order - 1)
        .into_iter()
        .map(|parts| {
            let leaves = order - parts.len();
            MultiIndex::from_pairs(parts.into_iter().map(|k| (k, 1)).chain([(0, leaves)]))
        })
        .collect();
    out.sort();
    Ok(out)
}

/// All forests of populated multi-indices with total length `order`, ordered
/// by component count and then canonically.
pub fn enumerate_forests(order: usize) -> Result<Vec<Forest>> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    let mut pool = Vec::new();
    for n in 1..=order {
        pool.extend(enumerate_populated(n)?);
    }
    let mut out = Vec::new();
    multisets(&pool, 0, order, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.component_count().cmp(&b.component_count()).then_with(|| a.cmp(b)));
    Ok(out)
}

fn multisets(
    pool: &[MultiIndex],
    start: usize,
    remaining: usize,
    current: &mut Vec<MultiIndex>,
    out: &mut Vec<Forest>,
) {
    if remaining == 0 {
        out.push(Forest::from_components(current.iter().cloned()));
        return;
    }
    for i in start..pool.len() {
        let len = pool[i].length();
        if len <= remaining {
            current.push(pool[i].clone());
            multisets(pool, i, remaining - len, current, out);
            current.pop();
        }
    }
}

/// Integer partitions of `n` as non-increasing part lists.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            cur.push(part);
            rec(n - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Populated indices and forests up to a fixed order, computed once.
#[derive(Debug, Clone)]
pub struct GradedBasis {
    order: usize,
    indices: Vec<Vec<MultiIndex>>,
    forests: Vec<Vec<Forest>>,
}

impl GradedBasis {
    pub fn new(order: usize) -> Self {
        let mut indices = vec![Vec::new()];
        let mut forests = vec![vec![Forest::empty()]];
        for n in 1..=order {
            indices.push(enumerate_populated(n).expect("n >= 1"));
            forests.push(enumerate_forests(n).expect("n >= 1"));
        }
        Self {
            order,
            indices,
            forests,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Populated indices of length exactly `n` (empty for `n = 0`).
    pub fn indices(&self, n: usize) -> &[MultiIndex] {
        self.indices.get(n).map_or(&[], |v| v.as_slice())
    }

    /// Forests of length exactly `n`; `n = 0` holds the empty forest only.
    pub fn forests(&self, n: usize) -> &[Forest] {
        self.forests.get(n).map_or(&[], |v| v.as_slice())
    }

    pub fn indices_up_to(&self, n: usize) -> impl Iterator<Item = &MultiIndex> + '_ {
        (1..=n.min(self.order)).flat_map(move |k| self.indices(k).iter())
    }

    /// Forests of length `0..=n`, starting with the empty forest.
    pub fn forests_up_to(&self, n: usize) -> impl Iterator<Item = &Forest> + '_ {
        (0..=n.min(self.order)).flat_map(move |k| self.forests(k).iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[MultiIndex]) -> Vec<String> {
        v.iter().map(|m| m.to_string()).collect()
    }

    #[test]
    fn populated_examples() {
        assert_eq!(names(&enumerate_populated(1).unwrap()), ["z0"]);
        assert_eq!(names(&enumerate_populated(3).unwrap()), ["z0 z1^2", "z0^2 z2"]);
        assert_eq!(
            names(&enumerate_populated(5).unwrap()),
            ["z0 z1^4", "z0^2 z1^2 z2", "z0^3 z2^2", "z0^3 z1 z3", "z0^4 z4"]
        );
        assert_eq!(enumerate_populated(0), Err(Error::ZeroOrder));
    }

    /// Brute force: every dense vector with entries summing to `n` whose
    /// arities are below `n`, filtered by the two linear constraints.
    fn brute_populated(n: usize) -> Vec<MultiIndex> {
        fn rec(k: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
            if k == n {
                if left == 0 {
                    let m = MultiIndex::from_dense(cur);
                    if m.edges() + 1 == n {
                        out.push(m);
                    }
                }
                return;
            }
            for c in 0..=left {
                cur.push(c);
                rec(k + 1, n, left - c, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(0, n, n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    #[test]
    fn populated_matches_brute_force() {
        for n in 1..=8 {
            assert_eq!(enumerate_populated(n).unwrap(), brute_populated(n), "order {n}");
        }
    }

    #[test]
    fn partition_counts() {
        let p: Vec<usize> = (0..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(p, [1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn forest_examples() {
        let f2: Vec<String> = enumerate_forests(2).unwrap().iter().map(|f| f.to_string()).collect();
        assert_eq!(f2, ["{z0 z1}", "{z0, z0}"]);
        let f3: Vec<String> = enumerate_forests(3).unwrap().iter().map(|f| f.to_string()).collect();
        assert_eq!(f3, ["{z0 z1^2}", "{z0^2 z2}", "{z0, z0 z1}", "{z0, z0, z0}"]);
        assert_eq!(enumerate_forests(1).unwrap().len(), 1);
        assert!(enumerate_forests(0).is_err());
    }

    #[test]
    fn graded_basis_is_consistent() {
        let b = GradedBasis::new(5);
        assert_eq!(b.forests(0), &[Forest::empty()]);
        assert_eq!(b.indices_up_to(5).count(), 1 + 1 + 2 + 3 + 5);
        assert!(b.forests_up_to(4).all(|f| f.length() <= 4 && f.all_populated()));
    }
}
