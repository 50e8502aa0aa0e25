use serde::{Deserialize, Serialize};

use super::search::{ExhaustiveSearch, SubsetSearch};
use super::trace::{lines, StepCase, StepRecord};
use super::{ensure_kappa_range, heavy_vertex_factor, heavy_vertex_set, resolve_threshold};
use crate::coloring::EdgeColoredGraph;
use crate::error::{Error, Result};
use crate::multigraph::{MultiGraph, VertexSubset};
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedTrace {
    pub steps: Vec<StepRecord>,
    /// `S`: the sum of `up` over all steps after step 0.
    pub up_total: u64,
    /// Red volume of the heavy set removed at step 0.
    pub heavy_red_volume: u64,
    pub final_kept: VertexSubset,
}

impl InducedTrace {
    pub fn to_lines(&self) -> String {
        lines(&self.steps)
    }

    /// `up >= 2 down` for every step after step 0; returns the first failing step.
    pub fn first_up_down_violation(&self) -> Option<&StepRecord> {
        self.steps.iter().skip(1).find(|s| s.up < 2 * s.down)
    }

    /// `S <= 2 vol_red(X₀)`.
    pub fn up_total_holds(&self) -> bool {
        self.up_total <= 2 * self.heavy_red_volume
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedCore {
    /// `G*`, an induced subgraph of the input with the colouring restricted.
    pub graph: EdgeColoredGraph,
    pub big_m: u64,
    pub trace: InducedTrace,
}

impl InducedCore {
    /// `(1 - ε(1 + 3/κ)) e(red(G))`.
    pub fn edge_bound(red_edges: usize, kappa: Rational, epsilon: Rational) -> Rational {
        let one = Rational::from_integer(1);
        (one - epsilon * (one + Rational::from_integer(3) / kappa)) * int(red_edges as u64)
    }
}

/// Extracts an induced subgraph `G*` of the edge-coloured graph `g` whose red
/// part is a κ/3-expander and in which every vertex has
/// `deg(v) <= 3M d_red(v)`.
///
/// Step 0 removes the heavy vertices `{v : deg(v) >= M d_red(v)}` with
/// `M = ⌈1/(αε)⌉`. Every later step removes, in this priority:
///
/// 1. a set `X` with `vol_{G_i}(X) >= 3M vol_{H_i}(X)`;
/// 2. a set `X` with `vol_{H_i}(X) <= vol_{H_i}(X̄)` and
///    `e_{H_i}(X, X̄) <= (κ/3) vol_{H_i}(X)`,
///
/// where `G_i` is the current graph and `H_i = red(G_i)`. When neither exists
/// `G_i` is returned. The case-1 condition is a sum of per-vertex terms, so a
/// qualifying set exists exactly when a qualifying vertex does; the first such
/// vertex in id order is taken, which is also the first qualifying set in
/// size-then-lexicographic order.
pub fn extract_induced_core(
    g: &EdgeColoredGraph,
    kappa: Rational,
    epsilon: Rational,
    alpha: Rational,
) -> Result<InducedCore> {
    extract_induced_core_with(g, kappa, epsilon, alpha, None, &ExhaustiveSearch::default())
}

/// As [`extract_induced_core`], optionally with a factor `big_m` at least the derived one.
pub fn extract_induced_core_with_threshold(
    g: &EdgeColoredGraph,
    kappa: Rational,
    epsilon: Rational,
    alpha: Rational,
    big_m: Option<u64>,
) -> Result<InducedCore> {
    extract_induced_core_with(g, kappa, epsilon, alpha, big_m, &ExhaustiveSearch::default())
}

pub(crate) fn extract_induced_core_with(
    g: &EdgeColoredGraph,
    kappa: Rational,
    epsilon: Rational,
    alpha: Rational,
    big_m: Option<u64>,
    search: &dyn SubsetSearch,
) -> Result<InducedCore> {
    ensure_kappa_range(kappa)?;
    let big_m = resolve_threshold(heavy_vertex_factor(epsilon, alpha)?, big_m)?;
    let full = g.graph();
    let red = g.red();
    if int(red.edge_count() as u64) < alpha * int(full.edge_count() as u64) {
        return Err(Error::precondition(format!(
            "e(red(G)) = {} is below alpha = {alpha} times e(G) = {}",
            red.edge_count(),
            full.edge_count()
        )));
    }

    let record = |index: usize, case: StepCase, set: VertexSubset, removed: &VertexSubset, remaining: &MultiGraph| -> Result<StepRecord> {
        let rest: VertexSubset = remaining.vertices().filter(|v| !set.contains(*v)).collect();
        Ok(StepRecord {
            index,
            case,
            down: red.edges_between(&set, &rest)? as u64,
            up: red.edges_between(&set, removed)? as u64,
            diff: (full.edges_within(&set)? - red.edges_within(&set)?) as u64,
            out: (full.cut_size(&set)? - red.cut_size(&set)?) as u64,
            set,
        })
    };

    let heavy = heavy_vertex_set(g, big_m);
    let heavy_red_volume = red.volume(&heavy)? as u64;
    let mut steps = vec![record(0, StepCase::Heavy, heavy.clone(), &VertexSubset::new(), full)?];
    let mut removed = heavy;
    let mut current = full.without_vertices(&removed);
    let mut current_red = red.without_vertices(&removed);
    let threshold = 3 * big_m;
    let third = kappa / Rational::from_integer(3);

    loop {
        if current.vertex_count() == 0 {
            break;
        }
        let case1 = current.vertices().find(|&v| {
            current.degree_unchecked(v) as u64 >= threshold * current_red.degree_unchecked(v) as u64
        });
        let (set, case) = if let Some(v) = case1 {
            (VertexSubset::from_iter([v]), StepCase::Case1)
        } else if let Some(x) = search.find(&current_red, &mut |s| int(s.boundary) <= third * int(s.volume))? {
            (x, StepCase::Case2)
        } else {
            break;
        };
        steps.push(record(steps.len(), case, set.clone(), &removed, &current)?);
        removed = removed.union(&set);
        current = current.without_vertices(&set);
        current_red = current_red.without_vertices(&set);
    }

    let up_total = steps.iter().skip(1).map(|s| s.up).sum();
    let final_kept = current.vertex_set();
    Ok(InducedCore {
        graph: g.induced_subgraph(&final_kept)?,
        big_m,
        trace: InducedTrace { steps, up_total, heavy_red_volume, final_kept },
    })
}
