//! Topological-minor witnesses: branch vertices plus one path per minor edge.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coloring::{EdgeColoredGraph, VertexColoredGraph};
use crate::error::{Error, Result};
use crate::multigraph::{MultiGraph, VertexId, VertexSubset};

/// One copy of an edge of the minor, written `u-v#k` (`k` counts parallel copies from 0).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeKey {
    pub u: VertexId,
    pub v: VertexId,
    pub copy: usize,
}

impl EdgeKey {
    pub fn new(u: VertexId, v: VertexId, copy: usize) -> Self {
        EdgeKey { u: u.min(v), v: u.max(v), copy }
    }
}

impl fmt::Display for EdgeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}#{}", self.u, self.v, self.copy)
    }
}

impl FromStr for EdgeKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { line: 0, message: format!("invalid edge key `{s}`, expected `u-v#k`") };
        let (pair, copy) = s.split_once('#').ok_or_else(bad)?;
        let (u, v) = pair.split_once('-').ok_or_else(bad)?;
        let u = u.trim().parse().map_err(|_| bad())?;
        let v = v.trim().parse().map_err(|_| bad())?;
        let copy = copy.trim().parse().map_err(|_| bad())?;
        Ok(EdgeKey { u: VertexId(u), v: VertexId(v), copy })
    }
}

/// Certificate that `H` is a topological minor of `G`.
///
/// `paths[k]` runs from the image of `k.u` to the image of `k.v` and lists
/// every vertex, endpoints included.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TopoMinorWitness {
    pub branch_map: BTreeMap<VertexId, VertexId>,
    pub paths: BTreeMap<EdgeKey, Vec<VertexId>>,
}

#[derive(Serialize, Deserialize)]
struct WitnessFile {
    branch_map: BTreeMap<String, u32>,
    paths: BTreeMap<String, Vec<u32>>,
}

impl TopoMinorWitness {
    /// `H = G`, every vertex its own branch vertex and every edge its own path.
    pub fn identity(g: &MultiGraph) -> Self {
        let branch_map = g.vertices().map(|v| (v, v)).collect();
        let mut paths = BTreeMap::new();
        for (u, v, m) in g.edges() {
            for k in 0..m {
                paths.insert(EdgeKey::new(u, v, k), vec![u, v]);
            }
        }
        TopoMinorWitness { branch_map, paths }
    }

    /// Parses the JSON witness format. A key `v-u#k` with `v > u` has its
    /// path reversed so that it starts at the image of `u`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: WitnessFile = serde_json::from_str(text)?;
        let mut w = TopoMinorWitness::default();
        for (h, g) in file.branch_map {
            let h: u32 = h.trim().parse().map_err(|_| Error::Parse {
                line: 0,
                message: format!("branch_map key `{h}` is not a vertex id"),
            })?;
            w.branch_map.insert(VertexId(h), VertexId(g));
        }
        for (key, path) in file.paths {
            let raw: EdgeKey = key.parse()?;
            let mut path: Vec<VertexId> = path.into_iter().map(VertexId).collect();
            if raw.u > raw.v {
                path.reverse();
            }
            let key = EdgeKey::new(raw.u, raw.v, raw.copy);
            if w.paths.insert(key, path).is_some() {
                return Err(Error::Parse { line: 0, message: format!("duplicate path for edge {key}") });
            }
        }
        Ok(w)
    }

    pub fn to_json(&self) -> String {
        let file = WitnessFile {
            branch_map: self.branch_map.iter().map(|(h, g)| (h.to_string(), g.0)).collect(),
            paths: self
                .paths
                .iter()
                .map(|(k, p)| (k.to_string(), p.iter().map(|v| v.0).collect()))
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("witness serializes")
    }

    /// `H` with every vertex renamed to its branch vertex.
    pub fn minor_in_host(&self, h: &MultiGraph) -> Result<MultiGraph> {
        h.relabel(&self.branch_map)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessViolation {
    UnmappedVertex(VertexId),
    UnknownMinorVertex(VertexId),
    ImageNotInHost { minor: VertexId, image: VertexId },
    NotInjective(VertexId),
    MissingPath(EdgeKey),
    UnknownEdge(EdgeKey),
    TooShort(EdgeKey),
    WrongEndpoint { key: EdgeKey, expected: VertexId, found: VertexId },
    VertexNotInHost { key: EdgeKey, vertex: VertexId },
    InternalIsBranch { key: EdgeKey, vertex: VertexId },
    SharedInternal { vertex: VertexId, first: EdgeKey, second: EdgeKey },
    MissingEdge { key: EdgeKey, u: VertexId, v: VertexId },
}

impl fmt::Display for WitnessViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use WitnessViolation::*;
        match self {
            UnmappedVertex(v) => write!(f, "minor vertex {v} has no branch vertex"),
            UnknownMinorVertex(v) => write!(f, "branch_map names {v}, which is not in the minor"),
            ImageNotInHost { minor, image } => write!(f, "branch vertex {image} of {minor} is not in the host"),
            NotInjective(v) => write!(f, "host vertex {v} is the image of two minor vertices"),
            MissingPath(k) => write!(f, "no path for minor edge {k}"),
            UnknownEdge(k) => write!(f, "path given for {k}, which is not an edge of the minor"),
            TooShort(k) => write!(f, "path for {k} has fewer than two vertices"),
            WrongEndpoint { key, expected, found } => {
                write!(f, "path for {key} ends at {found} instead of branch vertex {expected}")
            }
            VertexNotInHost { key, vertex } => write!(f, "path for {key} uses {vertex}, not in the host"),
            InternalIsBranch { key, vertex } => {
                write!(f, "path for {key} passes through branch vertex {vertex}")
            }
            SharedInternal { vertex, first, second } => {
                write!(f, "internal vertex {vertex} is shared by the paths for {first} and {second}")
            }
            MissingEdge { key, u, v } => {
                write!(f, "path for {key} uses edge {u}-{v} more often than the host has it")
            }
        }
    }
}

/// Checks `w` against `g` and `h`; returns the first violation found.
pub fn validate_witness(g: &MultiGraph, h: &MultiGraph, w: &TopoMinorWitness) -> Option<WitnessViolation> {
    use WitnessViolation::*;
    for v in h.vertices() {
        if !w.branch_map.contains_key(&v) {
            return Some(UnmappedVertex(v));
        }
    }
    let mut images = BTreeSet::new();
    for (&minor, &image) in &w.branch_map {
        if !h.contains_vertex(minor) {
            return Some(UnknownMinorVertex(minor));
        }
        if !g.contains_vertex(image) {
            return Some(ImageNotInHost { minor, image });
        }
        if !images.insert(image) {
            return Some(NotInjective(image));
        }
    }
    for (u, v, m) in h.edges() {
        for k in 0..m {
            let key = EdgeKey::new(u, v, k);
            if !w.paths.contains_key(&key) {
                return Some(MissingPath(key));
            }
        }
    }

    let mut owner: BTreeMap<VertexId, EdgeKey> = BTreeMap::new();
    let mut used: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
    for (&key, path) in &w.paths {
        if key.copy >= h.multiplicity(key.u, key.v) {
            return Some(UnknownEdge(key));
        }
        if path.len() < 2 {
            return Some(TooShort(key));
        }
        let (start, end) = (w.branch_map[&key.u], w.branch_map[&key.v]);
        if path[0] != start {
            return Some(WrongEndpoint { key, expected: start, found: path[0] });
        }
        if *path.last().unwrap() != end {
            return Some(WrongEndpoint { key, expected: end, found: *path.last().unwrap() });
        }
        for &x in path {
            if !g.contains_vertex(x) {
                return Some(VertexNotInHost { key, vertex: x });
            }
        }
        for &x in &path[1..path.len() - 1] {
            if images.contains(&x) {
                return Some(InternalIsBranch { key, vertex: x });
            }
            if let Some(&first) = owner.get(&x) {
                return Some(SharedInternal { vertex: x, first, second: key });
            }
            owner.insert(x, key);
        }
        for pair in path.windows(2) {
            let (a, b) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            let count = used.entry((a, b)).or_insert(0);
            *count += 1;
            if *count > g.multiplicity(a, b) {
                return Some(MissingEdge { key, u: a, v: b });
            }
        }
    }
    None
}

/// The subgraph of `g` formed by the witness, with path-internal vertices
/// coloured blue. Its `red()` is `h` renamed into host ids.
pub fn witness_to_vertex_colored(
    g: &MultiGraph,
    h: &MultiGraph,
    w: &TopoMinorWitness,
) -> Result<VertexColoredGraph> {
    if let Some(violation) = validate_witness(g, h, w) {
        return Err(Error::precondition(format!("invalid witness: {violation}")));
    }
    let mut sub = MultiGraph::new();
    for &image in w.branch_map.values() {
        sub.add_vertex(image);
    }
    let mut blue = VertexSubset::new();
    for path in w.paths.values() {
        for &x in &path[1..path.len() - 1] {
            blue.insert(x);
        }
        for pair in path.windows(2) {
            sub.add_edge(pair[0], pair[1]);
        }
    }
    VertexColoredGraph::new(sub, blue)
}

/// `g[V(h)]` with every edge outside `h` coloured blue; its `red()` is `h`.
pub fn subgraph_to_edge_colored(g: &MultiGraph, h: &MultiGraph) -> Result<EdgeColoredGraph> {
    if !h.is_subgraph_of(g) {
        return Err(Error::precondition("h is not a subgraph of g"));
    }
    let induced = g.induced_subgraph(&h.vertex_set())?;
    let blue = induced
        .edges()
        .map(|(u, v, m)| ((u, v), m - h.multiplicity(u, v)))
        .filter(|(_, k)| *k > 0)
        .collect();
    EdgeColoredGraph::new(induced, blue)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    fn k4() -> MultiGraph {
        MultiGraph::from_edges([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    /// K4 on minor ids 0..3 mapped to host 10..13, edge 0-1 routed through 20, 21.
    fn subdivided() -> (MultiGraph, MultiGraph, TopoMinorWitness) {
        let h = k4();
        let mut w = TopoMinorWitness::default();
        for i in 0..4 {
            w.branch_map.insert(v(i), v(10 + i));
        }
        let mut g = MultiGraph::new();
        for (a, b, _) in h.edges() {
            let path = if (a, b) == (v(0), v(1)) {
                vec![v(10), v(20), v(21), v(11)]
            } else {
                vec![v(a.0 + 10), v(b.0 + 10)]
            };
            for pair in path.windows(2) {
                g.add_edge(pair[0], pair[1]);
            }
            w.paths.insert(EdgeKey::new(a, b, 0), path);
        }
        g.add_edge(v(12), v(30));
        (g, h, w)
    }

    #[test]
    fn identity_witness_is_valid() {
        let g = k4();
        let w = TopoMinorWitness::identity(&g);
        assert_eq!(validate_witness(&g, &g, &w), None);
        let g1 = witness_to_vertex_colored(&g, &g, &w).unwrap();
        assert_eq!(g1.graph(), &g);
        assert!(g1.blue_vertices().is_empty());
    }

    #[test]
    fn subdivided_edge_turns_blue() {
        let (g, h, w) = subdivided();
        assert_eq!(validate_witness(&g, &h, &w), None);
        let g1 = witness_to_vertex_colored(&g, &h, &w).unwrap();
        assert_eq!(g1.blue_vertices(), &VertexSubset::from([20, 21]));
        assert!(!g1.graph().contains_vertex(v(30)));
        assert_eq!(g1.red(), w.minor_in_host(&h).unwrap());
    }

    #[test]
    fn shared_internal_vertex_reported() {
        let (mut g, h, mut w) = subdivided();
        g.add_edge(v(12), v(20));
        g.add_edge(v(20), v(13));
        w.paths.insert(EdgeKey::new(v(2), v(3), 0), vec![v(12), v(20), v(13)]);
        match validate_witness(&g, &h, &w) {
            Some(WitnessViolation::SharedInternal { vertex, .. }) => assert_eq!(vertex, v(20)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn wrong_endpoint_reported() {
        let (g, h, mut w) = subdivided();
        w.paths.insert(EdgeKey::new(v(2), v(3), 0), vec![v(12), v(30)]);
        assert!(matches!(
            validate_witness(&g, &h, &w),
            Some(WitnessViolation::WrongEndpoint { found, .. }) if found == v(30)
        ));
    }

    #[test]
    fn overused_edge_reported() {
        let g = MultiGraph::from_edges([(0, 1)]);
        let h = MultiGraph::from_edges([(0, 1), (0, 1)]);
        let mut w = TopoMinorWitness::identity(&h);
        w.paths.insert(EdgeKey::new(v(0), v(1), 1), vec![v(0), v(1)]);
        assert!(matches!(validate_witness(&g, &h, &w), Some(WitnessViolation::MissingEdge { .. })));
        assert!(witness_to_vertex_colored(&g, &h, &w).is_err());
    }

    #[test]
    fn json_round_trip_and_reversed_keys() {
        let (g, h, w) = subdivided();
        let back = TopoMinorWitness::from_json(&w.to_json()).unwrap();
        assert_eq!(back, w);
        let text = r#"{"branch_map": {"0": 10, "1": 11}, "paths": {"1-0#0": [11, 10]}}"#;
        let parsed = TopoMinorWitness::from_json(text).unwrap();
        assert_eq!(parsed.paths[&EdgeKey::new(v(0), v(1), 0)], vec![v(10), v(11)]);
        assert!(TopoMinorWitness::from_json(r#"{"branch_map": {}, "paths": {"0-1": [0, 1]}}"#).is_err());
        let _ = (g, h);
    }

    #[test]
    fn edge_colored_from_subgraph() {
        let g = k4();
        assert_eq!(subgraph_to_edge_colored(&g, &g).unwrap().blue_edge_count(), 0);
        let tree = MultiGraph::from_edges([(0, 1), (0, 2), (0, 3)]);
        let ec = subgraph_to_edge_colored(&g, &tree).unwrap();
        assert_eq!(ec.blue_edge_count(), 3);
        assert_eq!(ec.red(), tree);
        let partial = MultiGraph::from_edges([(0, 1), (1, 2)]);
        let ec = subgraph_to_edge_colored(&g, &partial).unwrap();
        assert!(!ec.graph().contains_vertex(v(3)));
        assert!(subgraph_to_edge_colored(&tree, &g).is_err());
    }
}
