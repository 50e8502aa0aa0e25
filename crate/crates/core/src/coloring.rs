//! Vertex- and edge-coloured multigraphs and their `red()` reductions.
//!
//! In a vertex-coloured graph some loop-free degree-2 vertices are blue and
//! `red()` smooths all of them. In an edge-coloured graph some edges are blue
//! and `red()` deletes them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multigraph::{MultiGraph, VertexId, VertexSubset};

/// A maximal run of consecutive blue vertices and the two black vertices it joins.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BluePath {
    pub blue: Vec<VertexId>,
    /// Black neighbours of the first and last blue vertex; equal for a path
    /// that leaves and returns to the same black vertex.
    pub ends: (VertexId, VertexId),
}

impl BluePath {
    /// Number of blue vertices.
    pub fn size(&self) -> usize {
        self.blue.len()
    }

    /// Number of edges from one black end to the other (`size + 1`).
    pub fn edge_length(&self) -> usize {
        self.blue.len() + 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexColoredGraph {
    graph: MultiGraph,
    blue: VertexSubset,
    paths: Vec<BluePath>,
}

impl VertexColoredGraph {
    /// Checks that every blue vertex has degree 2 without a loop and that no
    /// cycle consists of blue vertices only.
    pub fn new(graph: MultiGraph, blue: VertexSubset) -> Result<Self> {
        for v in blue.iter() {
            if !graph.contains_vertex(v) {
                return Err(Error::InvalidColoring(format!("blue vertex {v} is not in the graph")));
            }
            if graph.loops(v) > 0 || graph.degree_unchecked(v) != 2 {
                return Err(Error::InvalidColoring(format!(
                    "blue vertex {v} must have degree 2 and no loop"
                )));
            }
        }
        let paths = trace_blue_paths(&graph, &blue)?;
        Ok(VertexColoredGraph { graph, blue, paths })
    }

    /// A colouring with no blue vertices.
    pub fn uncolored(graph: MultiGraph) -> Self {
        VertexColoredGraph { graph, blue: VertexSubset::new(), paths: Vec::new() }
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn blue_vertices(&self) -> &VertexSubset {
        &self.blue
    }

    pub fn is_blue(&self, v: VertexId) -> bool {
        self.blue.contains(v)
    }

    pub fn black_vertices(&self) -> VertexSubset {
        self.graph.vertices().filter(|v| !self.is_blue(*v)).collect()
    }

    /// `G[keep]` with the colouring restricted to `keep`.
    pub fn induced_subgraph(&self, keep: &VertexSubset) -> Result<VertexColoredGraph> {
        let graph = self.graph.induced_subgraph(keep)?;
        let blue = self.blue.iter().filter(|v| keep.contains(*v)).collect();
        VertexColoredGraph::new(graph, blue)
    }

    pub fn maximal_blue_paths(&self) -> &[BluePath] {
        &self.paths
    }

    /// Smooths every blue vertex.
    pub fn red(&self) -> MultiGraph {
        self.red_with_provenance().0
    }

    /// Like [`red`](Self::red), also listing each edge created by collapsing a
    /// blue path together with the path it replaces.
    pub fn red_with_provenance(&self) -> (MultiGraph, Vec<BluePath>) {
        let mut g = self.graph.without_vertices(&self.blue);
        for p in &self.paths {
            g.add_edge(p.ends.0, p.ends.1);
        }
        (g, self.paths.clone())
    }
}

fn trace_blue_paths(graph: &MultiGraph, blue: &VertexSubset) -> Result<Vec<BluePath>> {
    let slots = |v: VertexId| -> [VertexId; 2] {
        let mut it = graph
            .neighbors(v)
            .flat_map(|(w, m)| std::iter::repeat(w).take(m));
        [it.next().unwrap(), it.next().unwrap()]
    };
    // Walks away from `start` through `first` until a black vertex is reached.
    let walk = |start: VertexId, first: VertexId| -> Result<(Vec<VertexId>, VertexId)> {
        let mut run = Vec::new();
        let (mut prev, mut cur) = (start, first);
        while blue.contains(cur) {
            if cur == start || run.len() > blue.len() {
                return Err(Error::InvalidColoring(format!(
                    "blue vertex {start} lies on a cycle of blue vertices"
                )));
            }
            run.push(cur);
            let [a, b] = slots(cur);
            let next = if a == prev { b } else { a };
            prev = cur;
            cur = next;
        }
        Ok((run, cur))
    };

    let mut assigned = VertexSubset::new();
    let mut paths = Vec::new();
    for v in blue.iter() {
        if assigned.contains(v) {
            continue;
        }
        let [a, b] = slots(v);
        let (left, left_end) = walk(v, a)?;
        let (right, right_end) = walk(v, b)?;
        let mut run: Vec<VertexId> = left.into_iter().rev().collect();
        run.push(v);
        run.extend(right);
        let mut ends = (left_end, right_end);
        if ends.0 > ends.1 || (ends.0 == ends.1 && run.first() > run.last()) {
            run.reverse();
            ends = (ends.1, ends.0);
        }
        for &u in &run {
            assigned.insert(u);
        }
        paths.push(BluePath { blue: run, ends });
    }
    Ok(paths)
}

/// `red()` of a vertex-coloured graph.
pub fn red_vertex(vc: &VertexColoredGraph) -> MultiGraph {
    vc.red()
}

pub fn maximal_blue_paths(vc: &VertexColoredGraph) -> Vec<BluePath> {
    vc.maximal_blue_paths().to_vec()
}

/// Inverts `red()` on an induced subgraph: given the black vertex set of an
/// induced subgraph `H` of `red(g)`, deletes every black vertex outside it and
/// every blue path touching a deleted black vertex. The result `H*` is an
/// induced subgraph of `g` with `red(H*) = H`.
pub fn lift(g: &VertexColoredGraph, h_vertices: &VertexSubset) -> Result<VertexColoredGraph> {
    for v in h_vertices.iter() {
        if !g.graph.contains_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
        if g.is_blue(v) {
            return Err(Error::precondition(format!(
                "lift target contains blue vertex {v}"
            )));
        }
    }
    let deleted_black = |v: VertexId| !h_vertices.contains(v);
    let mut removed: VertexSubset = g
        .graph
        .vertices()
        .filter(|v| !g.is_blue(*v) && deleted_black(*v))
        .collect();
    for p in &g.paths {
        if deleted_black(p.ends.0) || deleted_black(p.ends.1) {
            for &b in &p.blue {
                removed.insert(b);
            }
        }
    }
    let keep = removed.complement_in(&g.graph);
    g.induced_subgraph(&keep)
}

/// A multigraph with a sub-multiset of its edges coloured blue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoredGraph {
    graph: MultiGraph,
    blue: BTreeMap<(VertexId, VertexId), usize>,
}

impl EdgeColoredGraph {
    /// `blue` maps an edge class (either orientation) to its blue multiplicity.
    pub fn new(graph: MultiGraph, blue: BTreeMap<(VertexId, VertexId), usize>) -> Result<Self> {
        let mut normalized: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
        for ((u, v), k) in blue {
            if k > 0 {
                *normalized.entry((u.min(v), u.max(v))).or_insert(0) += k;
            }
        }
        for (&(u, v), &k) in &normalized {
            let total = graph.multiplicity(u, v);
            if k > total {
                return Err(Error::InvalidColoring(format!(
                    "edge {u}-{v} has {k} blue copies but multiplicity {total}"
                )));
            }
        }
        Ok(EdgeColoredGraph { graph, blue: normalized })
    }

    pub fn uncolored(graph: MultiGraph) -> Self {
        EdgeColoredGraph { graph, blue: BTreeMap::new() }
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn blue_edges(&self) -> impl Iterator<Item = ((VertexId, VertexId), usize)> + '_ {
        self.blue.iter().map(|(k, v)| (*k, *v))
    }

    pub fn blue_multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        self.blue.get(&(u.min(v), u.max(v))).copied().unwrap_or(0)
    }

    pub fn blue_edge_count(&self) -> usize {
        self.blue.values().sum()
    }

    /// Deletes all blue edges.
    pub fn red(&self) -> MultiGraph {
        let mut g = self.graph.clone();
        for (&(u, v), &k) in &self.blue {
            g.remove_edges(u, v, k).expect("blue edges are present");
        }
        g
    }

    /// `d_red(v)`: the degree of `v` once blue edges are deleted.
    pub fn red_degree(&self, v: VertexId) -> Result<usize> {
        let deg = self.graph.degree(v)?;
        let blue: usize = self
            .blue
            .range((v, VertexId(0))..=(v, VertexId(u32::MAX)))
            .chain(self.blue.iter().filter(|((a, b), _)| *b == v && *a != v))
            .map(|(&(a, b), &k)| if a == b { 2 * k } else { k })
            .sum();
        Ok(deg - blue)
    }

    /// `G[keep]` with the blue multiset restricted to edges inside `keep`.
    pub fn induced_subgraph(&self, keep: &VertexSubset) -> Result<EdgeColoredGraph> {
        let graph = self.graph.induced_subgraph(keep)?;
        let blue = self
            .blue
            .iter()
            .filter(|((u, v), _)| keep.contains(*u) && keep.contains(*v))
            .map(|(k, v)| (*k, *v))
            .collect();
        Ok(EdgeColoredGraph { graph, blue })
    }
}

pub fn red_edge(ec: &EdgeColoredGraph) -> MultiGraph {
    ec.red()
}

pub fn red_degree(ec: &EdgeColoredGraph, v: VertexId) -> Result<usize> {
    ec.red_degree(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::test_graphs::*;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    fn colored(edges: &[(u32, u32)], blue: &[u32]) -> Result<VertexColoredGraph> {
        VertexColoredGraph::new(
            MultiGraph::from_edges(edges.iter().copied()),
            blue.iter().map(|&b| v(b)).collect(),
        )
    }

    #[test]
    fn red_without_blue_is_identity() {
        let g = complete(4);
        assert_eq!(VertexColoredGraph::uncolored(g.clone()).red(), g);
        assert_eq!(colored(&[(0, 1), (1, 2)], &[]).unwrap().red(), MultiGraph::from_edges([(0, 1), (1, 2)]));
    }

    #[test]
    fn red_collapses_chains() {
        let vc = colored(&[(0, 1), (1, 2), (2, 3)], &[1, 2]).unwrap();
        assert_eq!(vc.red(), MultiGraph::from_edges([(0, 3)]));
    }

    #[test]
    fn red_of_six_cycle_with_blue_arc() {
        // 0-1-2-3-4-5-0 with 1 and 2 blue: the arc 0-1-2-3 becomes one edge.
        let vc = colored(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)], &[1, 2]).unwrap();
        let red = vc.red();
        let expected = MultiGraph::from_edges([(0, 3), (3, 4), (4, 5), (5, 0)]);
        assert_eq!(red, expected);
        // same result as smoothing one vertex at a time, in either order
        let g = vc.graph();
        let a = g.smooth_vertex(v(1)).unwrap().smooth_vertex(v(2)).unwrap();
        let b = g.smooth_vertex(v(2)).unwrap().smooth_vertex(v(1)).unwrap();
        assert_eq!(a, expected);
        assert_eq!(b, expected);
    }

    #[test]
    fn blue_path_returning_to_same_vertex_makes_loop() {
        let vc = colored(&[(0, 1), (1, 2), (2, 0), (0, 3)], &[1, 2]).unwrap();
        let red = vc.red();
        assert_eq!(red.loops(v(0)), 1);
        assert_eq!(red.edge_count(), vc.graph().edge_count() - 2);
    }

    #[test]
    fn invalid_colorings_rejected() {
        assert!(colored(&[(0, 1), (1, 2), (1, 3)], &[1]).is_err());
        assert!(colored(&[(0, 1), (1, 1)], &[1]).is_err());
        // an all-blue triangle
        assert!(colored(&[(0, 1), (1, 2), (2, 0)], &[0, 1, 2]).is_err());
        // an all-blue digon
        assert!(colored(&[(0, 1), (0, 1)], &[0, 1]).is_err());
        assert!(colored(&[(0, 1)], &[5]).is_err());
    }

    #[test]
    fn maximal_paths() {
        assert!(colored(&[(0, 1)], &[]).unwrap().maximal_blue_paths().is_empty());
        let single = colored(&[(0, 1), (1, 2)], &[1]).unwrap();
        assert_eq!(single.maximal_blue_paths()[0].size(), 1);
        // runs of sizes 2 and 5 between black vertices 0, 10 and 20
        let mut edges = vec![(0, 1), (1, 2), (2, 10)];
        edges.extend([(10, 11), (11, 12), (12, 13), (13, 14), (14, 15), (15, 20)]);
        let vc = colored(&edges, &[1, 2, 11, 12, 13, 14, 15]).unwrap();
        let mut sizes: Vec<usize> = vc.maximal_blue_paths().iter().map(BluePath::size).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 5]);
        let five = vc.maximal_blue_paths().iter().find(|p| p.size() == 5).unwrap();
        assert_eq!(five.ends, (v(10), v(20)));
        assert_eq!(five.blue, vec![v(11), v(12), v(13), v(14), v(15)]);
    }

    #[test]
    fn lift_cases() {
        // black 0,3 joined by blue 1,2; black 3-4 direct
        let vc = colored(&[(0, 1), (1, 2), (2, 3), (3, 4)], &[1, 2]).unwrap();
        let all_black = vc.black_vertices();
        assert_eq!(lift(&vc, &all_black).unwrap(), vc);
        let empty = lift(&vc, &VertexSubset::new()).unwrap();
        assert_eq!(empty.graph().vertex_count(), 0);
        // keep 0, delete 3: the whole blue path goes
        let lifted = lift(&vc, &[0, 4].into()).unwrap();
        assert_eq!(lifted.graph().vertex_set(), VertexSubset::from([0, 4]));
        assert!(lifted.blue_vertices().is_empty());
        assert!(lift(&vc, &[1].into()).is_err());
    }

    #[test]
    fn red_edge_and_degrees() {
        let k4 = complete(4);
        let none = EdgeColoredGraph::uncolored(k4.clone());
        assert_eq!(none.red(), k4);
        assert_eq!(none.red_degree(v(0)).unwrap(), 3);

        let all: BTreeMap<_, _> = k4.edges().map(|(a, b, m)| ((a, b), m)).collect();
        let all_blue = EdgeColoredGraph::new(k4.clone(), all).unwrap();
        assert_eq!(all_blue.red().edge_count(), 0);
        assert_eq!(all_blue.red().vertex_count(), 4);
        assert_eq!(all_blue.red_degree(v(2)).unwrap(), 0);

        let one = EdgeColoredGraph::new(k4.clone(), BTreeMap::from([((v(1), v(0)), 1)])).unwrap();
        let mut expected = k4.clone();
        expected.remove_edges(v(0), v(1), 1).unwrap();
        assert_eq!(one.red(), expected);
        assert_eq!(one.red_degree(v(0)).unwrap(), 2);
        assert_eq!(one.red_degree(v(1)).unwrap(), 2);
        assert_eq!(one.red_degree(v(2)).unwrap(), 3);
    }

    #[test]
    fn blue_loops_count_twice() {
        let g = MultiGraph::from_edges([(0, 0), (0, 1)]);
        let ec = EdgeColoredGraph::new(g, BTreeMap::from([((v(0), v(0)), 1)])).unwrap();
        assert_eq!(ec.red_degree(v(0)).unwrap(), 1);
        assert!(EdgeColoredGraph::new(complete(3), BTreeMap::from([((v(0), v(1)), 2)])).is_err());
    }
}
