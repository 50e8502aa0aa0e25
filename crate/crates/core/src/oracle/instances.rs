//! Seeded instance families for the acceptance suites. Each builder is a pure
//! function of its seed.

use rand::seq::{index, SliceRandom};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::brute::{brute_force_cheeger, DEFAULT_CAP};
use super::generate::{
    generate_verified_expander, rng_for, subdivide_with_lengths, GeneratorKind, InstanceSpec,
    VerifiedExpander,
};
use crate::coloring::{EdgeColoredGraph, VertexColoredGraph};
use crate::error::Result;
use crate::extraction::path_length_threshold;
use crate::multigraph::{MultiGraph, VertexId, VertexSubset};
use crate::pipeline::{EdgeKey, TopoMinorWitness};
use crate::rational::{int, ratio, Rational};

/// A random-regular expander with an even vertex count in `min..=max`.
pub fn random_expander(rng: &mut ChaCha8Rng, min: u32, max: u32) -> Result<VerifiedExpander> {
    let choices: Vec<u32> = (min..=max).filter(|n| n % 2 == 0).collect();
    let vertices = *choices.choose(rng).expect("range holds an even count");
    let degree = if vertices > 5 { rng.gen_range(3..=4) } else { 3 };
    let spec = InstanceSpec::new(GeneratorKind::RandomRegular { vertices, degree }, rng.gen());
    generate_verified_expander(&spec)
}

/// A small expander: `K4`, `K5` or a random 3-regular graph on 6 or 8 vertices.
pub fn small_expander(rng: &mut ChaCha8Rng, max_vertices: u32) -> Result<VerifiedExpander> {
    let mut kinds = vec![(4, None), (5, None)];
    for n in [6, 8] {
        if n <= max_vertices {
            kinds.push((n, Some(3)));
        }
    }
    let (n, degree) = *kinds.choose(rng).unwrap();
    let kind = match degree {
        Some(degree) => GeneratorKind::RandomRegular { vertices: n, degree },
        // a clique is the regular graph of degree n - 1; subdividing with unit lengths is the identity
        None => GeneratorKind::SubdividedExpander { clique: n, max_path_edges: 1 },
    };
    generate_verified_expander(&InstanceSpec::new(kind, rng.gen()))
}

/// Subdivides edge copies with the given lengths and records the witness that
/// `g` is a topological minor of the result (identity branch map).
pub fn subdivision_witness(g: &MultiGraph, lengths: &[u32]) -> (MultiGraph, TopoMinorWitness) {
    let (out, paths) = subdivide_with_lengths(g, lengths);
    let mut witness = TopoMinorWitness { branch_map: g.vertices().map(|v| (v, v)).collect(), ..Default::default() };
    let mut paths = paths.into_iter();
    for (u, v, m) in g.edges() {
        for k in 0..m {
            witness.paths.insert(EdgeKey::new(u, v, k), paths.next().expect("one path per copy"));
        }
    }
    (out, witness)
}

/// Random path lengths in `1..=max_edges`, shortened to 1 once the vertex
/// budget `cap` would be exceeded.
fn capped_lengths(rng: &mut ChaCha8Rng, g: &MultiGraph, max_edges: u32, cap: usize) -> Vec<u32> {
    let mut room = cap.saturating_sub(g.vertex_count());
    (0..g.edge_count())
        .map(|_| {
            let len = rng.gen_range(1..=max_edges);
            if (len - 1) as usize <= room {
                room -= (len - 1) as usize;
                len
            } else {
                1
            }
        })
        .collect()
}

/// A verified expander `g` and a subgraph `h` missing fewer than `(κ/6) e(g)` edges.
#[derive(Clone, Debug)]
pub struct DeletionInstance {
    pub base: VerifiedExpander,
    pub h: MultiGraph,
    pub deleted: usize,
}

impl DeletionInstance {
    /// `ε = 1 - e(h)/e(g)`.
    pub fn epsilon(&self) -> Rational {
        ratio(self.deleted as u64, self.base.graph.edge_count() as u64)
    }
}

pub fn deletion_instance(seed: u64) -> Result<DeletionInstance> {
    let mut rng = rng_for(seed);
    let base = random_expander(&mut rng, 8, 14)?;
    let e = base.graph.edge_count();
    // largest k with k < (κ/6) e
    let bound = base.kappa * int(e as u64) / int(6);
    let k_max = (bound.ceil().to_integer() - 1).max(0) as usize;
    let deleted = rng.gen_range(0..=k_max);
    let copies: Vec<(VertexId, VertexId)> =
        base.graph.edges().flat_map(|(u, v, m)| std::iter::repeat_n((u, v), m)).collect();
    let mut h = base.graph.clone();
    for i in index::sample(&mut rng, copies.len(), deleted) {
        let (u, v) = copies[i];
        h.remove_edges(u, v, 1)?;
    }
    Ok(DeletionInstance { base, h, deleted })
}

/// A verified expander with each edge replaced by a path of at most `max_path_edges` edges.
#[derive(Clone, Debug)]
pub struct SubdivisionInstance {
    pub base: VerifiedExpander,
    pub graph: MultiGraph,
    pub witness: TopoMinorWitness,
    pub max_path_edges: u32,
}

pub fn subdivision_instance(seed: u64, max_path_edges: u32, cap: usize) -> Result<SubdivisionInstance> {
    let mut rng = rng_for(seed);
    let base = small_expander(&mut rng, 8)?;
    let lengths = capped_lengths(&mut rng, &base.graph, max_path_edges, cap);
    let (graph, witness) = subdivision_witness(&base.graph, &lengths);
    Ok(SubdivisionInstance { base, graph, witness, max_path_edges })
}

/// A verified expander plus random edges (loops and parallels allowed) that
/// raise no degree above `factor` times its original value.
#[derive(Clone, Debug)]
pub struct AugmentationInstance {
    pub base: VerifiedExpander,
    pub graph: MultiGraph,
    pub factor: u32,
    pub added: usize,
}

pub fn augmentation_instance(seed: u64, factor: u32) -> Result<AugmentationInstance> {
    let mut rng = rng_for(seed);
    let base = random_expander(&mut rng, 6, 12)?;
    let mut graph = base.graph.clone();
    let ids: Vec<VertexId> = graph.vertices().collect();
    let limit = |v: VertexId| factor as usize * base.graph.degree(v).expect("vertex of base");
    let mut added = 0;
    for _ in 0..4 * ids.len() {
        let u = *ids.choose(&mut rng).unwrap();
        let v = *ids.choose(&mut rng).unwrap();
        let fits = if u == v {
            graph.degree(u)? + 2 <= limit(u)
        } else {
            graph.degree(u)? < limit(u) && graph.degree(v)? < limit(v)
        };
        if fits {
            graph.add_edge(u, v);
            added += 1;
        }
    }
    Ok(AugmentationInstance { base, graph, factor, added })
}

/// A subdivided expander in which a few planted blue paths are long enough to
/// be pruned. `alpha = e(red)/e(G)` exactly.
#[derive(Clone, Debug)]
pub struct PlantedPathInstance {
    pub base: VerifiedExpander,
    pub colored: VertexColoredGraph,
    pub epsilon: Rational,
    pub alpha: Rational,
    pub big_m: u64,
    pub planted: usize,
}

pub fn planted_path_instance(seed: u64) -> Result<PlantedPathInstance> {
    let mut rng = rng_for(seed);
    let one = Rational::from_integer(1);
    loop {
        let base = random_expander(&mut rng, 8, 12)?;
        let e = base.graph.edge_count();
        // at most `p` paths can exceed the threshold when `p (1 + 1/κ) < ε e`
        let mut options = Vec::new();
        for epsilon in [ratio(1, 2), ratio(1, 3), ratio(1, 4)] {
            let room = epsilon * int(e as u64) / (one + one / base.kappa);
            let p_max = (room.ceil().to_integer() - 1).clamp(0, 3) as usize;
            if p_max > 0 {
                options.push((epsilon, p_max));
            }
        }
        let Some(&(epsilon, p_max)) = options.choose(&mut rng) else { continue };
        let planted = rng.gen_range(1..=p_max);
        let chosen: Vec<usize> = index::sample(&mut rng, e, planted).into_vec();
        let short: Vec<u32> = (0..e).map(|_| rng.gen_range(1..=2)).collect();

        let mut long = 4u32;
        loop {
            let lengths: Vec<u32> =
                (0..e).map(|i| if chosen.contains(&i) { long } else { short[i] }).collect();
            let blue: u64 = lengths.iter().map(|&l| (l - 1) as u64).sum();
            let alpha = ratio(e as u64, e as u64 + blue);
            let big_m = path_length_threshold(base.kappa, epsilon, alpha)?;
            if long as u64 > big_m {
                let (graph, witness) = subdivision_witness(&base.graph, &lengths);
                let blue: VertexSubset = witness
                    .paths
                    .values()
                    .flat_map(|p| p[1..p.len() - 1].iter().copied())
                    .collect();
                let colored = VertexColoredGraph::new(graph, blue)?;
                return Ok(PlantedPathInstance { base, colored, epsilon, alpha, big_m, planted });
            }
            long *= 2;
        }
    }
}

/// A random vertex-coloured multigraph and a random set of its black vertices.
#[derive(Clone, Debug)]
pub struct LiftInstance {
    pub colored: VertexColoredGraph,
    pub keep: VertexSubset,
}

pub fn lift_instance(seed: u64) -> Result<LiftInstance> {
    let mut rng = rng_for(seed);
    let n = rng.gen_range(3..=8u32);
    let mut base = MultiGraph::new();
    for v in 0..n {
        base.add_vertex(VertexId(v));
    }
    for _ in 0..rng.gen_range(n..=3 * n) {
        base.add_edge(VertexId(rng.gen_range(0..n)), VertexId(rng.gen_range(0..n)));
    }
    let lengths: Vec<u32> = (0..base.edge_count()).map(|_| rng.gen_range(1..=4)).collect();
    let (graph, witness) = subdivision_witness(&base, &lengths);
    let blue: VertexSubset = witness.paths.values().flat_map(|p| p[1..p.len() - 1].iter().copied()).collect();
    let keep = base.vertices().filter(|_| rng.gen_bool(0.5)).collect();
    Ok(LiftInstance { colored: VertexColoredGraph::new(graph, blue)?, keep })
}

/// An expander with random blue edges inside it and a blue-dense cluster
/// hanging off it by a few red edges. `kappa` is the exact Cheeger constant of
/// the red part and `alpha = e(red)/e(G)`.
#[derive(Clone, Debug)]
pub struct ClusterInstance {
    pub colored: EdgeColoredGraph,
    pub kappa: Rational,
    pub epsilon: Rational,
    pub alpha: Rational,
}

pub fn cluster_instance(seed: u64) -> Result<ClusterInstance> {
    let mut rng = rng_for(seed);
    let base = random_expander(&mut rng, 6, 10)?;
    let n = base.graph.vertex_count() as u32;
    let cluster = rng.gen_range(2..=4u32).min(DEFAULT_CAP as u32 - n);
    let mut red = base.graph.clone();
    for c in n..n + cluster {
        let anchor = VertexId(rng.gen_range(0..n));
        red.add_edge(VertexId(c), anchor);
    }
    let mut graph = red.clone();
    let mut blue = std::collections::BTreeMap::new();
    let mut add_blue = |g: &mut MultiGraph, u: VertexId, v: VertexId, k: usize| {
        g.add_edges(u, v, k);
        *blue.entry((u.min(v), u.max(v))).or_insert(0) += k;
    };
    // dense blue cluster
    for a in n..n + cluster {
        for b in a + 1..n + cluster {
            add_blue(&mut graph, VertexId(a), VertexId(b), rng.gen_range(2..=5));
        }
    }
    // sparse blue noise on the expander
    for _ in 0..rng.gen_range(0..=n) {
        let u = VertexId(rng.gen_range(0..n));
        let v = VertexId(rng.gen_range(0..n));
        add_blue(&mut graph, u, v, 1);
    }
    let colored = EdgeColoredGraph::new(graph, blue)?;
    let (kappa, _) = brute_force_cheeger(&red, DEFAULT_CAP)?;
    let alpha = ratio(red.edge_count() as u64, colored.graph().edge_count() as u64);
    let scale = *[ratio(1, 2), ratio(1, 4), ratio(1, 8)].choose(&mut rng).unwrap();
    let epsilon = scale / (Rational::from_integer(1) + int(3) / kappa);
    Ok(ClusterInstance { colored, kappa, epsilon, alpha })
}

/// A host containing a verified expander as a topological minor: its edges
/// are subdivided (the witness is recorded) and spurious edges and vertices
/// are added. `alpha = e(H)/e(G)` and `alpha_prime = alpha/2`.
#[derive(Clone, Debug)]
pub struct MinorInstance {
    pub minor: VerifiedExpander,
    pub host: MultiGraph,
    pub witness: TopoMinorWitness,
    pub alpha: Rational,
    pub alpha_prime: Rational,
    pub spurious: usize,
}

pub fn minor_instance(seed: u64, cap: usize) -> Result<MinorInstance> {
    let mut rng = rng_for(seed);
    let minor = small_expander(&mut rng, 8)?;
    let lengths = capped_lengths(&mut rng, &minor.graph, 2, cap.saturating_sub(2));
    let (mut host, witness) = subdivision_witness(&minor.graph, &lengths);
    let e_h = minor.graph.edge_count();
    let spurious = rng.gen_range(1..=(e_h / 2).max(1));
    let mut next = host.vertices().last().map_or(0, |v| v.0 + 1);
    for _ in 0..spurious {
        let ids: Vec<VertexId> = host.vertices().collect();
        let u = *ids.choose(&mut rng).unwrap();
        if host.vertex_count() < cap && rng.gen_bool(0.3) {
            host.add_edge(u, VertexId(next));
            next += 1;
        } else {
            let v = *ids.choose(&mut rng).unwrap();
            host.add_edge(u, v);
        }
    }
    let alpha = ratio(e_h as u64, host.edge_count() as u64);
    Ok(MinorInstance { minor, host, witness, alpha, alpha_prime: alpha / int(2), spurious })
}

/// Generator specs whose outputs have at most 8 vertices, `count` of them,
/// cycling through every generator kind.
pub fn small_generator_specs(count: usize) -> Vec<InstanceSpec> {
    let kinds = [
        GeneratorKind::RandomRegular { vertices: 4, degree: 3 },
        GeneratorKind::RandomRegular { vertices: 6, degree: 3 },
        GeneratorKind::RandomRegular { vertices: 8, degree: 3 },
        GeneratorKind::RandomRegular { vertices: 6, degree: 4 },
        GeneratorKind::RandomRegular { vertices: 8, degree: 4 },
        GeneratorKind::RandomRegular { vertices: 7, degree: 2 },
        GeneratorKind::SubdividedExpander { clique: 3, max_path_edges: 2 },
        GeneratorKind::SubdividedExpander { clique: 3, max_path_edges: 3 },
        GeneratorKind::BlobPair { blob: 3, bridges: 1 },
        GeneratorKind::BlobPair { blob: 4, bridges: 2 },
        GeneratorKind::AdversarialPendant { core: 4, pendants: 2, pendant_length: 2 },
        GeneratorKind::AdversarialPendant { core: 5, pendants: 3, pendant_length: 1 },
    ];
    (0..count).map(|i| InstanceSpec::new(kinds[i % kinds.len()], (i / kinds.len()) as u64)).collect()
}

