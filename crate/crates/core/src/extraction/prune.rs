use serde::{Deserialize, Serialize};

use super::{path_length_threshold, resolve_threshold};
use crate::coloring::VertexColoredGraph;
use crate::error::{Error, Result};
use crate::multigraph::VertexSubset;
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PruneOutcome {
    /// The kept component `C_M`.
    pub component: VertexColoredGraph,
    pub big_m: u64,
    /// Number of blue paths deleted (those with more than `M` edges).
    pub long_paths: usize,
    pub summary: PruneSummary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PruneSummary {
    pub big_m: u64,
    pub long_paths: usize,
    pub removed_blue: VertexSubset,
    pub component_count: usize,
    pub kept_vertices: VertexSubset,
    /// `e(red(G))` and `e(red(C_M))`.
    pub red_edges_before: usize,
    pub red_edges_after: usize,
}

/// Deletes the blue vertices of every blue path with more than `M` edges
/// (at least `M` blue vertices) and returns the component whose `red()` has
/// the most edges; ties go to the component with the smallest vertex.
///
/// When `red(g)` is a κ-expander and `e(red(g)) >= α e(g)`, the kept component
/// satisfies `e(red(C_M)) >= (1 - ε) e(red(g))`. The edge ratio is checked
/// here; expansion of `red(g)` is the caller's responsibility.
pub fn prune_long_blue_paths(
    g: &VertexColoredGraph,
    kappa: Rational,
    epsilon: Rational,
    alpha: Rational,
) -> Result<PruneOutcome> {
    prune_with_threshold(g, kappa, epsilon, alpha, None)
}

/// As [`prune_long_blue_paths`], optionally with a threshold `big_m` at
/// least the derived one.
pub fn prune_with_threshold(
    g: &VertexColoredGraph,
    kappa: Rational,
    epsilon: Rational,
    alpha: Rational,
    big_m: Option<u64>,
) -> Result<PruneOutcome> {
    let big_m = resolve_threshold(path_length_threshold(kappa, epsilon, alpha)?, big_m)?;
    let red_before = g.graph().edge_count() - g.blue_vertices().len();
    if int(red_before as u64) < alpha * int(g.graph().edge_count() as u64) {
        return Err(Error::precondition(format!(
            "e(red(G)) = {red_before} is below alpha = {alpha} times e(G) = {}",
            g.graph().edge_count()
        )));
    }

    let long: Vec<_> = g
        .maximal_blue_paths()
        .iter()
        .filter(|p| p.edge_length() as u64 > big_m)
        .collect();
    let removed_blue: VertexSubset = long.iter().flat_map(|p| p.blue.iter().copied()).collect();
    let pruned = g.graph().without_vertices(&removed_blue);

    let components = pruned.connected_components();
    let mut best: Option<(usize, &VertexSubset)> = None;
    for comp in &components {
        let blue_inside = comp.iter().filter(|v| g.is_blue(*v)).count();
        let red_edges = pruned.edges_within(comp)? - blue_inside;
        if best.is_none_or(|(b, _)| red_edges > b) {
            best = Some((red_edges, comp));
        }
    }
    let (red_after, kept) = match best {
        Some((e, c)) => (e, c.clone()),
        None => (0, VertexSubset::new()),
    };
    let component = g.induced_subgraph(&kept)?;

    Ok(PruneOutcome {
        component,
        big_m,
        long_paths: long.len(),
        summary: PruneSummary {
            big_m,
            long_paths: long.len(),
            removed_blue,
            component_count: components.len(),
            kept_vertices: kept,
            red_edges_before: red_before,
            red_edges_after: red_after,
        },
    })
}
