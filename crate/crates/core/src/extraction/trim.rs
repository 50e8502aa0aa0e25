use serde::{Deserialize, Serialize};

use super::search::{ExhaustiveSearch, SubsetSearch};
use super::trace::{lines, StepCase, StepRecord};
use super::ensure_kappa_range;
use crate::error::{Error, Result};
use crate::multigraph::{MultiGraph, VertexSubset};
use crate::rational::{int, Rational};

/// Record of a trimming run: the removed sets in order plus the running
/// totals `Δ` (sum of `diff`) and `O` (sum of `out`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrimTrace {
    pub steps: Vec<StepRecord>,
    pub diff_total: u64,
    pub out_total: u64,
    /// `vol_G` of the union of all removed sets.
    pub removed_volume: u64,
    pub final_kept: VertexSubset,
}

impl TrimTrace {
    pub fn to_lines(&self) -> String {
        lines(&self.steps)
    }

    /// `O/2 + Δ <= ε e(G)`.
    pub fn error_term_holds(&self, host_edges: usize, epsilon: Rational) -> bool {
        int(self.out_total) + int(2 * self.diff_total) <= epsilon * int(2 * host_edges as u64)
    }

    /// `vol_G(removed) <= (3/κ)(O + 2Δ)`.
    pub fn removed_volume_holds(&self, kappa: Rational) -> bool {
        kappa * int(self.removed_volume) <= int(3 * (self.out_total + 2 * self.diff_total))
    }

    /// The guaranteed size `(1 - 6ε/κ) e(G)` of the output.
    pub fn edge_bound(host_edges: usize, kappa: Rational, epsilon: Rational) -> Rational {
        (Rational::from_integer(1) - Rational::from_integer(6) * epsilon / kappa) * int(host_edges as u64)
    }
}

/// A nonempty connected `X` with `vol(X) <= vol(X̄)` and `e(X, X̄) < (κ/3) vol(X)`,
/// or `None` when `h` is a κ/3-expander.
pub fn find_bad_set(h: &MultiGraph, kappa: Rational) -> Result<Option<VertexSubset>> {
    find_bad_set_with(h, kappa, &ExhaustiveSearch::default())
}

fn find_bad_set_with(
    h: &MultiGraph,
    kappa: Rational,
    search: &dyn SubsetSearch,
) -> Result<Option<VertexSubset>> {
    let third = kappa / Rational::from_integer(3);
    search.find(h, &mut |s| int(s.boundary) < third * int(s.volume))
}

/// Trims `h`, a subgraph of the κ-expander `g`, down to a κ/3-expander
/// induced in `h`.
///
/// While the current graph `H_i` has a bad set (see [`find_bad_set`]) it is
/// removed. Vertices of degree zero in `H_i` have no defined expansion and are
/// removed as one step once no bad set remains. The output satisfies
/// `e(H*) >= (1 - 6ε/κ) e(g)` whenever `e(h) >= (1 - ε) e(g)` with `ε < κ/6`.
pub fn trim_to_expander(g: &MultiGraph, h: &MultiGraph, kappa: Rational) -> Result<(MultiGraph, TrimTrace)> {
    trim_to_expander_with(g, h, kappa, &ExhaustiveSearch::default())
}

pub fn trim_to_expander_with(
    g: &MultiGraph,
    h: &MultiGraph,
    kappa: Rational,
    search: &dyn SubsetSearch,
) -> Result<(MultiGraph, TrimTrace)> {
    ensure_kappa_range(kappa)?;
    if !h.is_subgraph_of(g) {
        return Err(Error::precondition("h is not a subgraph of g"));
    }

    let mut current = h.clone();
    let mut removed = VertexSubset::new();
    let mut steps = Vec::new();
    let (mut diff_total, mut out_total) = (0, 0);

    loop {
        let (set, case) = match find_bad_set_with(&current, kappa, search)? {
            Some(x) => (x, StepCase::Bad),
            None => {
                let isolated: VertexSubset = current
                    .vertices()
                    .filter(|&v| current.degree_unchecked(v) == 0)
                    .collect();
                if isolated.is_empty() {
                    break;
                }
                (isolated, StepCase::Isolated)
            }
        };

        let down = current.cut_size(&set)? as u64;
        let up = h.edges_between(&set, &removed)? as u64;
        let diff = (g.edges_within(&set)? - h.edges_within(&set)?) as u64;
        let out = (g.cut_size(&set)? - h.cut_size(&set)?) as u64;
        diff_total += diff;
        out_total += out;
        steps.push(StepRecord { index: steps.len() + 1, case, set: set.clone(), down, up, diff, out });

        current = current.without_vertices(&set);
        removed = removed.union(&set);
    }

    let trace = TrimTrace {
        steps,
        diff_total,
        out_total,
        removed_volume: g.volume(&removed)? as u64,
        final_kept: current.vertex_set(),
    };
    Ok((current, trace))
}
