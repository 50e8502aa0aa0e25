//! Bitmask view of a small multigraph for subset enumeration.

use super::{MultiGraph, VertexId, VertexSubset};
use crate::error::{Error, Result};

/// Vertices are indexed in ascending id order, so ascending bit order is
/// lexicographic order on ids.
pub(crate) struct DenseView {
    pub ids: Vec<VertexId>,
    pub degree: Vec<u64>,
    adj: Vec<Vec<(usize, u64)>>,
    nbr: Vec<u64>,
    pub total_volume: u64,
}

impl DenseView {
    pub fn new(g: &MultiGraph, cap: usize) -> Result<Self> {
        let n = g.vertex_count();
        if n > cap || n > 63 {
            return Err(Error::TooLarge { vertices: n, cap: cap.min(63) });
        }
        let ids: Vec<VertexId> = g.vertices().collect();
        let index = |v: VertexId| ids.binary_search(&v).unwrap();
        let mut adj = vec![Vec::new(); n];
        let mut nbr = vec![0u64; n];
        let mut degree = vec![0u64; n];
        for (i, &v) in ids.iter().enumerate() {
            for (w, m) in g.neighbors(v) {
                if w == v {
                    degree[i] += 2 * m as u64;
                } else {
                    let j = index(w);
                    degree[i] += m as u64;
                    adj[i].push((j, m as u64));
                    nbr[i] |= 1 << j;
                }
            }
        }
        let total_volume = degree.iter().sum();
        Ok(DenseView { ids, degree, adj, nbr, total_volume })
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn volume(&self, mask: u64) -> u64 {
        bits(mask).map(|i| self.degree[i]).sum()
    }

    pub fn cut(&self, mask: u64) -> u64 {
        bits(mask)
            .flat_map(|i| self.adj[i].iter())
            .filter(|(j, _)| mask & (1 << j) == 0)
            .map(|(_, m)| m)
            .sum()
    }

    /// Whether the subgraph induced on `mask` is connected (false for the empty mask).
    pub fn is_connected(&self, mask: u64) -> bool {
        if mask == 0 {
            return false;
        }
        let mut reached = mask & mask.wrapping_neg();
        let mut frontier = reached;
        while frontier != 0 {
            let mut next = 0;
            for i in bits(frontier) {
                next |= self.nbr[i];
            }
            frontier = next & mask & !reached;
            reached |= frontier;
        }
        reached == mask
    }

    pub fn subset(&self, mask: u64) -> VertexSubset {
        bits(mask).map(|i| self.ids[i]).collect()
    }

}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Visits the subsets of `{0..n}` of sizes `sizes` by increasing cardinality and
/// lexicographically within a cardinality, stopping at the first mask for
/// which `visit` returns true.
pub(crate) fn find_in_order(
    n: usize,
    sizes: std::ops::RangeInclusive<usize>,
    mut visit: impl FnMut(u64) -> bool,
) -> Option<u64> {
    for k in sizes {
        if k == 0 || k > n {
            continue;
        }
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let mask = idx.iter().fold(0u64, |m, &i| m | (1 << i));
            if visit(mask) {
                return Some(mask);
            }
            // advance to the next combination
            let mut i = k;
            while i > 0 && idx[i - 1] == n - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_cardinality_then_lex() {
        let mut seen = Vec::new();
        find_in_order(4, 1..=3, |m| {
            seen.push(bits(m).collect::<Vec<_>>());
            false
        });
        assert_eq!(seen.len(), 4 + 6 + 4);
        assert_eq!(seen[0], vec![0]);
        assert_eq!(seen[4], vec![0, 1]);
        assert_eq!(seen[5], vec![0, 2]);
        assert_eq!(seen[9], vec![2, 3]);
        assert_eq!(seen[10], vec![0, 1, 2]);
        assert_eq!(seen[13], vec![1, 2, 3]);
    }

    #[test]
    fn connectivity_by_mask() {
        let g = MultiGraph::from_edges([(0, 1), (1, 2), (3, 3)]);
        let d = DenseView::new(&g, 10).unwrap();
        assert!(d.is_connected(0b0111));
        assert!(!d.is_connected(0b0101));
        assert!(d.is_connected(0b1000));
        assert!(!d.is_connected(0));
        assert_eq!(d.degree[3], 2);
        assert_eq!(d.cut(0b0001), 1);
        assert_eq!(d.volume(0b1111), 2 * g.edge_count() as u64);
    }
}
