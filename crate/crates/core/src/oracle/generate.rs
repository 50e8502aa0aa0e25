//! Seeded instance generators. Every graph uses vertex ids `0..n` and is a
//! pure function of its [`InstanceSpec`].

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::brute::{brute_force_cheeger, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::multigraph::{ExpansionCertificate, MultiGraph, VertexId};
use crate::rational::Rational;

/// Attempts before a generator gives up.
pub const MAX_ATTEMPTS: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GeneratorKind {
    /// Simple connected `degree`-regular graph from the configuration model.
    RandomRegular { vertices: u32, degree: u32 },
    /// `K_clique` with every edge replaced by a path of `1..=max_path_edges` edges.
    SubdividedExpander { clique: u32, max_path_edges: u32 },
    /// Two copies of `K_blob` joined by `bridges` random edges.
    BlobPair { blob: u32, bridges: u32 },
    /// `K_core` with `pendants` hanging paths of `pendant_length` vertices each.
    AdversarialPendant { core: u32, pendants: u32, pendant_length: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    #[serde(flatten)]
    pub kind: GeneratorKind,
    pub seed: u64,
    /// Vertex cap for the brute-force Cheeger computation.
    #[serde(default = "default_cap")]
    pub cap: usize,
}

fn default_cap() -> usize {
    DEFAULT_CAP
}

impl InstanceSpec {
    pub fn new(kind: GeneratorKind, seed: u64) -> Self {
        InstanceSpec { kind, seed, cap: DEFAULT_CAP }
    }

}

/// A generated graph with its exact Cheeger constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifiedExpander {
    pub spec: InstanceSpec,
    pub graph: MultiGraph,
    pub kappa: Rational,
    pub certificate: ExpansionCertificate,
    pub attempts: usize,
}

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn complete_graph(n: u32) -> MultiGraph {
    let mut g = MultiGraph::new();
    for i in 0..n {
        g.add_vertex(VertexId(i));
        for j in i + 1..n {
            g.add_edge(VertexId(i), VertexId(j));
        }
    }
    g
}

/// Generates the graph described by `spec` and brute-forces its Cheeger
/// constant. Disconnected draws are rejected and redrawn from the same stream.
pub fn generate_verified_expander(spec: &InstanceSpec) -> Result<VerifiedExpander> {
    let mut rng = rng_for(spec.seed);
    let fail = |attempts, reason: String| Error::Generation { attempts, reason };
    validate(spec).map_err(|r| fail(0, r))?;
    for attempt in 1..=MAX_ATTEMPTS {
        let Some(graph) = draw(&spec.kind, &mut rng) else { continue };
        if !graph.is_connected() {
            continue;
        }
        let (kappa, certificate) = brute_force_cheeger(&graph, spec.cap)?;
        return Ok(VerifiedExpander { spec: *spec, graph, kappa, certificate, attempts: attempt });
    }
    Err(fail(MAX_ATTEMPTS, "no connected draw".into()))
}

fn validate(spec: &InstanceSpec) -> std::result::Result<(), String> {
    match spec.kind {
        GeneratorKind::RandomRegular { vertices, degree } => {
            if degree < 2 || degree >= vertices {
                return Err(format!("need 2 <= degree < vertices, got degree {degree} on {vertices}"));
            }
            if (vertices as u64 * degree as u64) % 2 == 1 {
                return Err("vertices * degree must be even".into());
            }
        }
        GeneratorKind::SubdividedExpander { clique, max_path_edges } => {
            if clique < 3 || max_path_edges < 1 {
                return Err("need clique >= 3 and max_path_edges >= 1".into());
            }
        }
        GeneratorKind::BlobPair { blob, bridges } => {
            if blob < 2 || bridges < 1 {
                return Err("need blob >= 2 and bridges >= 1".into());
            }
        }
        GeneratorKind::AdversarialPendant { core, pendant_length, .. } => {
            if core < 3 || pendant_length < 1 {
                return Err("need core >= 3 and pendant_length >= 1".into());
            }
        }
    }
    Ok(())
}

fn draw(kind: &GeneratorKind, rng: &mut ChaCha8Rng) -> Option<MultiGraph> {
    match *kind {
        GeneratorKind::RandomRegular { vertices, degree } => {
            let mut points: Vec<u32> = (0..vertices).flat_map(|v| std::iter::repeat_n(v, degree as usize)).collect();
            points.shuffle(rng);
            let mut g = MultiGraph::new();
            for pair in points.chunks(2) {
                let (u, v) = (VertexId(pair[0]), VertexId(pair[1]));
                if u == v || g.multiplicity(u, v) > 0 {
                    return None;
                }
                g.add_edge(u, v);
            }
            Some(g)
        }
        GeneratorKind::SubdividedExpander { clique, max_path_edges } => {
            let lengths: Vec<u32> = (0..clique * (clique - 1) / 2)
                .map(|_| rng.gen_range(1..=max_path_edges))
                .collect();
            Some(subdivide_with_lengths(&complete_graph(clique), &lengths).0)
        }
        GeneratorKind::BlobPair { blob, bridges } => {
            let mut g = complete_graph(blob);
            let other = complete_graph(blob);
            for (u, v, _) in other.edges() {
                g.add_edge(VertexId(u.0 + blob), VertexId(v.0 + blob));
            }
            for _ in 0..bridges {
                let u = rng.gen_range(0..blob);
                let v = blob + rng.gen_range(0..blob);
                g.add_edge(VertexId(u), VertexId(v));
            }
            Some(g)
        }
        GeneratorKind::AdversarialPendant { core, pendants, pendant_length } => {
            let mut g = complete_graph(core);
            let mut next = core;
            for _ in 0..pendants {
                let mut prev = VertexId(rng.gen_range(0..core));
                for _ in 0..pendant_length {
                    g.add_edge(prev, VertexId(next));
                    prev = VertexId(next);
                    next += 1;
                }
            }
            Some(g)
        }
    }
}

/// Replaces the `i`-th edge copy of `g` (in `edges()` order, copies
/// consecutive) by a path with `lengths[i]` edges. New vertices get fresh ids
/// above every id of `g`. Returns the graph and, per edge copy, its full path.
pub fn subdivide_with_lengths(g: &MultiGraph, lengths: &[u32]) -> (MultiGraph, Vec<Vec<VertexId>>) {
    let mut out = MultiGraph::new();
    for v in g.vertices() {
        out.add_vertex(v);
    }
    let mut next = g.vertices().last().map_or(0, |v| v.0 + 1);
    let mut paths = Vec::new();
    let mut i = 0;
    for (u, v, m) in g.edges() {
        for _ in 0..m {
            let len = lengths.get(i).copied().unwrap_or(1).max(1);
            i += 1;
            let mut path = vec![u];
            for _ in 1..len {
                path.push(VertexId(next));
                next += 1;
            }
            path.push(v);
            for pair in path.windows(2) {
                out.add_edge(pair[0], pair[1]);
            }
            paths.push(path);
        }
    }
    (out, paths)
}
