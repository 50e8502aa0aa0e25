//! Multigraphs with loops and parallel edges, and their expansion metrics.
//!
//! Degrees count a loop twice. Vertex ids are opaque and never renumbered,
//! so a [`VertexSubset`] stays meaningful across every subgraph derived from
//! the same host.

mod cheeger;
pub(crate) mod dense;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{ratio, Rational};

pub use cheeger::{cheeger_constant, is_kappa_expander, ExpanderCheck, ENUMERATION_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

/// A set of vertex ids. The complement is always taken relative to a host graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSubset(BTreeSet<VertexId>);

impl VertexSubset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: VertexId) -> bool {
        self.0.remove(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn as_set(&self) -> &BTreeSet<VertexId> {
        &self.0
    }

    /// `V(host) \ self`.
    pub fn complement_in(&self, host: &MultiGraph) -> VertexSubset {
        host.vertices().filter(|v| !self.contains(*v)).collect()
    }

    pub fn union(&self, other: &VertexSubset) -> VertexSubset {
        self.0.union(&other.0).copied().collect()
    }

    pub fn is_subset(&self, other: &VertexSubset) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &VertexSubset) -> bool {
        self.0.is_disjoint(&other.0)
    }
}

impl FromIterator<VertexId> for VertexSubset {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        VertexSubset(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[u32; N]> for VertexSubset {
    fn from(ids: [u32; N]) -> Self {
        ids.into_iter().map(VertexId).collect()
    }
}

impl fmt::Display for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// A vertex set together with the quantities that fix its edge expansion.
///
/// `h_value = boundary_edges / min_side_volume`. The one exception is a set
/// with an empty boundary (a union of components), whose value is `0` even
/// when the smaller side has zero volume.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionCertificate {
    pub witness_set: VertexSubset,
    pub boundary_edges: u64,
    pub min_side_volume: u64,
    #[serde(with = "crate::rational::serde_string")]
    pub h_value: Rational,
}

impl ExpansionCertificate {
    pub(crate) fn new(witness_set: VertexSubset, boundary_edges: u64, min_side_volume: u64) -> Self {
        let h_value = if boundary_edges == 0 {
            Rational::from_integer(0)
        } else {
            ratio(boundary_edges, min_side_volume)
        };
        ExpansionCertificate {
            witness_set,
            boundary_edges,
            min_side_volume,
            h_value,
        }
    }
}

/// An undirected multigraph. Loops and parallel edges are allowed.
///
/// Adjacency is stored symmetrically; a loop at `v` is recorded once under
/// `adj[v][v]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiGraph {
    adj: BTreeMap<VertexId, BTreeMap<VertexId, usize>>,
    edge_count: usize,
}

impl MultiGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from `(u, v)` pairs; endpoints are added as needed.
    pub fn from_edges<I>(edges: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut g = MultiGraph::new();
        for (u, v) in edges {
            g.add_edge(VertexId(u), VertexId(v));
        }
        g
    }

    pub fn add_vertex(&mut self, v: VertexId) -> bool {
        if self.adj.contains_key(&v) {
            false
        } else {
            self.adj.insert(v, BTreeMap::new());
            true
        }
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) {
        self.add_edges(u, v, 1);
    }

    /// Adds `count` parallel copies of the edge `uv`, creating missing endpoints.
    pub fn add_edges(&mut self, u: VertexId, v: VertexId, count: usize) {
        self.add_vertex(u);
        self.add_vertex(v);
        if count == 0 {
            return;
        }
        *self.adj.get_mut(&u).unwrap().entry(v).or_insert(0) += count;
        if u != v {
            *self.adj.get_mut(&v).unwrap().entry(u).or_insert(0) += count;
        }
        self.edge_count += count;
    }

    /// Removes `count` copies of `uv`. Fails if fewer are present.
    pub fn remove_edges(&mut self, u: VertexId, v: VertexId, count: usize) -> Result<()> {
        let present = self.multiplicity(u, v);
        if present < count {
            return Err(Error::precondition(format!(
                "cannot remove {count} copies of edge {u}-{v}, only {present} present"
            )));
        }
        if count == 0 {
            return Ok(());
        }
        let mut dec = |a: VertexId, b: VertexId| {
            let row = self.adj.get_mut(&a).unwrap();
            let m = row.get_mut(&b).unwrap();
            *m -= count;
            if *m == 0 {
                row.remove(&b);
            }
        };
        dec(u, v);
        if u != v {
            dec(v, u);
        }
        self.edge_count -= count;
        Ok(())
    }

    pub fn remove_vertex(&mut self, v: VertexId) -> Result<()> {
        let row = self.adj.remove(&v).ok_or(Error::UnknownVertex(v))?;
        for (w, m) in row {
            self.edge_count -= m;
            if w != v {
                let other = self.adj.get_mut(&w).unwrap();
                other.remove(&v);
            }
        }
        Ok(())
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSubset {
        self.vertices().collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// `e(G)`: the number of edges counted with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        self.adj
            .get(&u)
            .and_then(|row| row.get(&v))
            .copied()
            .unwrap_or(0)
    }

    pub fn loops(&self, v: VertexId) -> usize {
        self.multiplicity(v, v)
    }

    /// Neighbours of `v` with edge multiplicities; a loop appears as `(v, loops)`.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = (VertexId, usize)> + '_ {
        self.adj
            .get(&v)
            .into_iter()
            .flat_map(|row| row.iter().map(|(w, m)| (*w, *m)))
    }

    /// Every edge class once as `(u, v, multiplicity)` with `u <= v`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, usize)> + '_ {
        self.adj.iter().flat_map(|(u, row)| {
            row.range(*u..).map(move |(v, m)| (*u, *v, *m))
        })
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    fn check_subset(&self, x: &VertexSubset) -> Result<()> {
        x.iter().try_for_each(|v| self.check_vertex(v))
    }

    /// Non-loop incident edges plus twice the loops at `v`.
    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.degree_unchecked(v))
    }

    pub(crate) fn degree_unchecked(&self, v: VertexId) -> usize {
        self.neighbors(v)
            .map(|(w, m)| if w == v { 2 * m } else { m })
            .sum()
    }

    /// `vol(X)`, the sum of degrees over `x`.
    pub fn volume(&self, x: &VertexSubset) -> Result<usize> {
        self.check_subset(x)?;
        Ok(x.iter().map(|v| self.degree_unchecked(v)).sum())
    }

    /// `e(X, X̄)`: edges with exactly one endpoint in `x`, with multiplicity.
    pub fn cut_size(&self, x: &VertexSubset) -> Result<usize> {
        self.check_subset(x)?;
        Ok(self.edges_between_unchecked(x, |w| !x.contains(w)))
    }

    /// `e(X, Y)` for disjoint `x` and `y`.
    pub fn edges_between(&self, x: &VertexSubset, y: &VertexSubset) -> Result<usize> {
        self.check_subset(x)?;
        self.check_subset(y)?;
        if !x.is_disjoint(y) {
            return Err(Error::precondition("edges_between needs disjoint sets"));
        }
        Ok(self.edges_between_unchecked(x, |w| y.contains(w)))
    }

    fn edges_between_unchecked(&self, x: &VertexSubset, other: impl Fn(VertexId) -> bool) -> usize {
        x.iter()
            .flat_map(|v| self.neighbors(v))
            .filter(|(w, _)| other(*w))
            .map(|(_, m)| m)
            .sum()
    }

    /// `e(X)`: edges with both endpoints in `x`, loops included.
    pub fn edges_within(&self, x: &VertexSubset) -> Result<usize> {
        self.check_subset(x)?;
        let twice: usize = x
            .iter()
            .flat_map(|v| self.neighbors(v).map(move |(w, m)| (v, w, m)))
            .filter(|(_, w, _)| x.contains(*w))
            .map(|(v, w, m)| if v == w { 2 * m } else { m })
            .sum();
        Ok(twice / 2)
    }

    /// Exact `h_G(X) = e(X, X̄) / min(vol X, vol X̄)`.
    pub fn edge_expansion(&self, x: &VertexSubset) -> Result<Rational> {
        self.check_subset(x)?;
        if x.is_empty() || x.len() == self.vertex_count() {
            return Err(Error::Degenerate(
                "edge expansion needs a nonempty proper subset".into(),
            ));
        }
        let vol_x = self.volume(x)?;
        let vol_rest = 2 * self.edge_count - vol_x;
        let min_side = vol_x.min(vol_rest);
        if min_side == 0 {
            return Err(Error::Degenerate(format!(
                "the smaller side of {x} has zero volume"
            )));
        }
        Ok(ratio(self.cut_size(x)? as u64, min_side as u64))
    }

    /// `G[keep]`: all edges with both endpoints kept, multiplicities and loops preserved.
    pub fn induced_subgraph(&self, keep: &VertexSubset) -> Result<MultiGraph> {
        self.check_subset(keep)?;
        Ok(self.induced_unchecked(|v| keep.contains(v)))
    }

    pub(crate) fn induced_unchecked(&self, keep: impl Fn(VertexId) -> bool) -> MultiGraph {
        let mut g = MultiGraph::new();
        for v in self.vertices().filter(|v| keep(*v)) {
            g.add_vertex(v);
        }
        for (u, v, m) in self.edges() {
            if keep(u) && keep(v) {
                g.add_edges(u, v, m);
            }
        }
        g
    }

    /// `G - X`.
    pub fn without_vertices(&self, removed: &VertexSubset) -> MultiGraph {
        self.induced_unchecked(|v| !removed.contains(v))
    }

    /// Replaces a loop-free degree-2 vertex and its two edges by one edge
    /// joining its neighbours (a loop if they coincide).
    pub fn smooth_vertex(&self, v: VertexId) -> Result<MultiGraph> {
        if self.degree(v)? != 2 || self.loops(v) > 0 {
            return Err(Error::precondition(format!(
                "vertex {v} must have degree 2 and no loop to be smoothed"
            )));
        }
        let ends: Vec<VertexId> = self
            .neighbors(v)
            .flat_map(|(w, m)| std::iter::repeat(w).take(m))
            .collect();
        let mut g = self.clone();
        g.remove_vertex(v)?;
        g.add_edge(ends[0], ends[1]);
        Ok(g)
    }

    /// Whether `self` can be obtained from `host` by deleting vertices and edges.
    pub fn is_subgraph_of(&self, host: &MultiGraph) -> bool {
        self.vertices().all(|v| host.contains_vertex(v))
            && self.edges().all(|(u, v, m)| host.multiplicity(u, v) >= m)
    }

    /// Whether `self` equals `host[V(self)]`.
    pub fn is_induced_subgraph_of(&self, host: &MultiGraph) -> bool {
        self.vertices().all(|v| host.contains_vertex(v))
            && host.induced_unchecked(|v| self.contains_vertex(v)) == *self
    }

    /// Connected components, each listed in ascending order, ordered by their
    /// smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSubset> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.vertices() {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = VertexSubset::new();
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for (w, _) in self.neighbors(v) {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Renames vertices through `map`; vertices missing from `map` are an error.
    pub fn relabel(&self, map: &BTreeMap<VertexId, VertexId>) -> Result<MultiGraph> {
        let image = |v: VertexId| map.get(&v).copied().ok_or(Error::UnknownVertex(v));
        let mut g = MultiGraph::new();
        for v in self.vertices() {
            if !g.add_vertex(image(v)?) {
                return Err(Error::precondition("relabelling map is not injective"));
            }
        }
        for (u, v, m) in self.edges() {
            g.add_edges(image(u)?, image(v)?, m);
        }
        Ok(g)
    }
}

/// Checks the volume transfer from an induced subgraph to its host: for
/// `H' = H[sub]` and `X ⊆ sub`, `vol_{H'}(X) <= vol_{H'}(sub \ X)` must imply
/// `vol_H(X) <= vol_H(V(H) \ X)`. Returns whether the implication holds.
pub fn vol_monotone_check(h: &MultiGraph, sub: &VertexSubset, x: &VertexSubset) -> Result<bool> {
    if !x.is_subset(sub) {
        return Err(Error::precondition("X must be contained in the induced subgraph"));
    }
    let inner = h.induced_subgraph(sub)?;
    let inner_rest: VertexSubset = sub.iter().filter(|v| !x.contains(*v)).collect();
    let premise = inner.volume(x)? <= inner.volume(&inner_rest)?;
    let conclusion = h.volume(x)? <= h.volume(&x.complement_in(h))?;
    Ok(!premise || conclusion)
}

#[cfg(test)]
pub(crate) mod test_graphs {
    use super::MultiGraph;

    pub fn complete(n: u32) -> MultiGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        MultiGraph::from_edges(edges)
    }

    pub fn cycle(n: u32) -> MultiGraph {
        MultiGraph::from_edges((0..n).map(|i| (i, (i + 1) % n)))
    }
}

#[cfg(test)]
mod tests {
    use super::test_graphs::*;
    use super::*;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    #[test]
    fn degree_counts_loops_twice() {
        assert_eq!(complete(3).degree(v(0)).unwrap(), 2);
        let looped = MultiGraph::from_edges([(0, 0)]);
        assert_eq!(looped.degree(v(0)).unwrap(), 2);
        let triple = MultiGraph::from_edges([(0, 1), (0, 1), (1, 0)]);
        assert_eq!(triple.degree(v(0)).unwrap(), 3);
        assert_eq!(triple.degree(v(1)).unwrap(), 3);
        assert!(matches!(triple.degree(v(9)), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn volume_and_cut() {
        let k4 = complete(4);
        let c6 = cycle(6);
        assert_eq!(k4.volume(&k4.vertex_set()).unwrap(), 12);
        assert_eq!(k4.volume(&[0].into()).unwrap(), 3);
        assert_eq!(c6.volume(&[0, 1, 2].into()).unwrap(), 6);
        assert_eq!(k4.cut_size(&[0, 1].into()).unwrap(), 4);
        assert_eq!(c6.cut_size(&[0, 1, 2].into()).unwrap(), 2);
        assert_eq!(c6.cut_size(&VertexSubset::new()).unwrap(), 0);
        assert!(k4.volume(&[7].into()).is_err());
    }

    #[test]
    fn loops_never_cut() {
        let g = MultiGraph::from_edges([(0, 0), (0, 1), (1, 1), (1, 1)]);
        assert_eq!(g.cut_size(&[0].into()).unwrap(), 1);
        assert_eq!(g.edges_within(&[1].into()).unwrap(), 2);
        assert_eq!(g.volume(&g.vertex_set()).unwrap(), 2 * g.edge_count());
    }

    #[test]
    fn edge_expansion_values() {
        let k4 = complete(4);
        assert_eq!(k4.edge_expansion(&[0].into()).unwrap(), Rational::from_integer(1));
        assert_eq!(k4.edge_expansion(&[0, 1].into()).unwrap(), Rational::new(2, 3));
        assert_eq!(
            cycle(6).edge_expansion(&[0, 1, 2].into()).unwrap(),
            Rational::new(1, 3)
        );
    }

    #[test]
    fn edge_expansion_degenerate() {
        let mut g = MultiGraph::from_edges([(0, 1)]);
        g.add_vertex(v(2));
        assert!(matches!(g.edge_expansion(&[2].into()), Err(Error::Degenerate(_))));
        assert!(matches!(g.edge_expansion(&VertexSubset::new()), Err(Error::Degenerate(_))));
        assert!(matches!(g.edge_expansion(&g.vertex_set()), Err(Error::Degenerate(_))));
    }

    #[test]
    fn induced_subgraph_cases() {
        let k4 = complete(4);
        let k3 = k4.induced_subgraph(&[0, 1, 2].into()).unwrap();
        assert_eq!(k3, complete(3));
        assert_eq!(k4.induced_subgraph(&k4.vertex_set()).unwrap(), k4);
        let looped = MultiGraph::from_edges([(0, 0), (0, 1)]);
        let kept = looped.induced_subgraph(&[0].into()).unwrap();
        assert_eq!(kept.loops(v(0)), 1);
        assert_eq!(kept.edge_count(), 1);
    }

    #[test]
    fn smoothing() {
        let path = MultiGraph::from_edges([(0, 1), (1, 2)]);
        assert_eq!(path.smooth_vertex(v(1)).unwrap(), MultiGraph::from_edges([(0, 2)]));

        let tri = complete(3);
        let smoothed = tri.smooth_vertex(v(1)).unwrap();
        assert_eq!(smoothed.multiplicity(v(0), v(2)), 2);

        let two_cycle = MultiGraph::from_edges([(0, 1), (1, 0)]);
        let looped = two_cycle.smooth_vertex(v(1)).unwrap();
        assert_eq!(looped.loops(v(0)), 1);
        assert_eq!(looped.vertex_count(), 1);

        assert!(complete(4).smooth_vertex(v(0)).is_err());
        assert!(MultiGraph::from_edges([(0, 0)]).smooth_vertex(v(0)).is_err());
    }

    #[test]
    fn subgraph_relations() {
        let k4 = complete(4);
        let mut minus = k4.clone();
        minus.remove_edges(v(0), v(1), 1).unwrap();
        assert!(minus.is_subgraph_of(&k4));
        assert!(!minus.is_induced_subgraph_of(&k4));
        assert!(complete(3).is_induced_subgraph_of(&k4));
        assert!(!k4.is_subgraph_of(&minus));
    }

    #[test]
    fn remove_vertex_updates_counts() {
        let mut g = MultiGraph::from_edges([(0, 0), (0, 1), (0, 1), (1, 2)]);
        g.remove_vertex(v(0)).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.degree(v(1)).unwrap(), 1);
    }

    #[test]
    fn components_in_order() {
        let mut g = MultiGraph::from_edges([(5, 6), (0, 1), (1, 2)]);
        g.add_vertex(v(3));
        let comps = g.connected_components();
        assert_eq!(comps, vec![[0, 1, 2].into(), [3].into(), [5, 6].into()]);
    }
}
