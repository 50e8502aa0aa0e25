use crate::error::Result;
use crate::multigraph::dense::{find_in_order, DenseView};
use crate::multigraph::{MultiGraph, VertexSubset, ENUMERATION_LIMIT};

/// Quantities of a candidate set `X` in the searched graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CandidateStats {
    pub size: usize,
    pub boundary: u64,
    pub volume: u64,
    pub complement_volume: u64,
}

/// Strategy for locating a low-expansion set.
///
/// Implementations offer nonempty proper sets `X` with `G[X]` connected and
/// `vol(X) <= vol(X̄)` to `accept` and return the first accepted one.
/// Completeness (returning `None` only when no such set is accepted) is what
/// the extraction guarantees rest on; only [`ExhaustiveSearch`] provides it.
pub trait SubsetSearch {
    fn find(
        &self,
        g: &MultiGraph,
        accept: &mut dyn FnMut(&CandidateStats) -> bool,
    ) -> Result<Option<VertexSubset>>;
}

/// Visits every connected set by increasing size, lexicographically within a size.
#[derive(Clone, Copy, Debug)]
pub struct ExhaustiveSearch {
    pub cap: usize,
}

impl Default for ExhaustiveSearch {
    fn default() -> Self {
        ExhaustiveSearch { cap: ENUMERATION_LIMIT }
    }
}

impl SubsetSearch for ExhaustiveSearch {
    fn find(
        &self,
        g: &MultiGraph,
        accept: &mut dyn FnMut(&CandidateStats) -> bool,
    ) -> Result<Option<VertexSubset>> {
        let dense = DenseView::new(g, self.cap)?;
        let n = dense.len();
        if n < 2 {
            return Ok(None);
        }
        let found = find_in_order(n, 1..=n - 1, |mask| {
            let volume = dense.volume(mask);
            let complement_volume = dense.total_volume - volume;
            if volume > complement_volume || !dense.is_connected(mask) {
                return false;
            }
            accept(&CandidateStats {
                size: mask.count_ones() as usize,
                boundary: dense.cut(mask),
                volume,
                complement_volume,
            })
        });
        Ok(found.map(|mask| dense.subset(mask)))
    }
}
