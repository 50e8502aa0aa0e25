//! The deletion procedures that turn a large near-expander into an expander.
//!
//! * [`trim_to_expander`] repeatedly removes a low-expansion set from a large
//!   subgraph of a κ-expander until a κ/3-expander is left.
//! * [`prune_long_blue_paths`] drops long subdivided edges from a
//!   vertex-coloured graph and keeps the best remaining component.
//! * [`extract_induced_core`] removes heavy vertices (many blue edges per red
//!   edge) and then low-expansion sets from an edge-coloured graph.

mod induced;
mod prune;
mod search;
mod trace;
mod trim;

use num_traits::Signed;

use crate::coloring::EdgeColoredGraph;
use crate::error::{Error, Result};
use crate::multigraph::VertexSubset;
use crate::rational::{ceil, ensure_positive, next_integer_above, Rational};

pub use induced::{extract_induced_core, extract_induced_core_with_threshold, InducedCore, InducedTrace};
pub use prune::{prune_long_blue_paths, prune_with_threshold, PruneOutcome, PruneSummary};
pub use search::{CandidateStats, ExhaustiveSearch, SubsetSearch};
pub use trace::{StepCase, StepRecord};
pub use trim::{find_bad_set, trim_to_expander, trim_to_expander_with, TrimTrace};

/// Blue-path threshold `M`: the smallest integer with
/// `M > ((1 - α) / α) · (1 + 1/κ) / ε`.
///
/// Every pruned path carries at least `M` of the `e(G) - e(red(G)) <= ((1 - α)/α) e(red(G))`
/// blue vertices, so at most `ε e(red(G)) / (1 + 1/κ)` paths are pruned.
pub fn path_length_threshold(kappa: Rational, epsilon: Rational, alpha: Rational) -> Result<u64> {
    ensure_positive("kappa", kappa)?;
    ensure_positive("epsilon", epsilon)?;
    ensure_positive("alpha", alpha)?;
    let one = Rational::from_integer(1);
    if alpha > one {
        return Err(Error::precondition(format!("alpha must be at most 1, got {alpha}")));
    }
    let bound = (one - alpha) / alpha * (one + one / kappa) / epsilon;
    Ok(next_integer_above(bound) as u64)
}

/// Heavy-vertex factor `M = ⌈1 / (α ε)⌉`, the smallest integer with `1/(Mα) <= ε`.
pub fn heavy_vertex_factor(epsilon: Rational, alpha: Rational) -> Result<u64> {
    ensure_positive("epsilon", epsilon)?;
    ensure_positive("alpha", alpha)?;
    Ok(ceil(Rational::from_integer(1) / (alpha * epsilon)).max(1) as u64)
}

/// Expansion kept after replacing every edge of a κ-expander by a path of at most `m` edges.
pub fn subdivision_expansion_bound(kappa: Rational, m: u64) -> Result<Rational> {
    if m < 1 {
        return Err(Error::precondition("M must be at least 1"));
    }
    Ok(kappa / Rational::from_integer(2 * m as i128 - 1))
}

/// Expansion kept after adding edges that multiply no degree by more than `m`.
pub fn edge_addition_expansion_bound(kappa: Rational, m: u64) -> Result<Rational> {
    if m < 1 {
        return Err(Error::precondition("M must be at least 1"));
    }
    Ok(kappa / Rational::from_integer(m as i128))
}

/// `{v : deg(v) >= m · d_red(v)}`. Vertices with no red edges are always included.
pub fn heavy_vertex_set(g: &EdgeColoredGraph, m: u64) -> VertexSubset {
    g.graph()
        .vertices()
        .filter(|&v| {
            let deg = g.graph().degree_unchecked(v) as u64;
            let red = g.red_degree(v).expect("vertex of g") as u64;
            deg >= m * red
        })
        .collect()
}

/// `M` itself, or a caller-chosen `m >= M`. A larger value keeps every bound
/// that depends on `M` being large enough.
pub(crate) fn resolve_threshold(derived: u64, chosen: Option<u64>) -> Result<u64> {
    match chosen {
        Some(m) if m < derived => Err(Error::precondition(format!(
            "M = {m} is below the derived threshold {derived}"
        ))),
        Some(m) => Ok(m),
        None => Ok(derived),
    }
}

pub(crate) fn ensure_kappa_range(kappa: Rational) -> Result<()> {
    if !kappa.is_positive() || kappa > Rational::from_integer(1) {
        return Err(Error::precondition(format!("kappa must lie in (0, 1], got {kappa}")));
    }
    Ok(())
}
