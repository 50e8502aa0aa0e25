use serde::{Deserialize, Serialize};

use super::StagePlan;
use crate::extraction::{InducedTrace, PruneSummary, TrimTrace};
use crate::multigraph::{ExpansionCertificate, MultiGraph, VertexId};
use crate::rational::Rational;

pub const REPORT_SCHEMA: &str = "expander-extract/pipeline-report/v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PipelineKind {
    MinorToSubgraph,
    SubgraphToInduced,
    MinorToInduced,
}

impl PipelineKind {
    pub fn relation(self) -> Relation {
        match self {
            PipelineKind::MinorToSubgraph => Relation::Subgraph,
            _ => Relation::Induced,
        }
    }
}

/// How the output graph sits inside the host.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Subgraph,
    Induced,
}

/// The output graph, with edges as `[u, v, multiplicity]` and `u <= v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputGraph {
    pub relation: Relation,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<(VertexId, VertexId, usize)>,
    pub edge_count: usize,
}

impl OutputGraph {
    pub fn new(relation: Relation, g: &MultiGraph) -> Self {
        OutputGraph {
            relation,
            vertices: g.vertices().collect(),
            edges: g.edges().collect(),
            edge_count: g.edge_count(),
        }
    }

    pub fn to_graph(&self) -> MultiGraph {
        let mut g = MultiGraph::new();
        for &v in &self.vertices {
            g.add_vertex(v);
        }
        for &(u, v, m) in &self.edges {
            g.add_edges(u, v, m);
        }
        g
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageReport {
    pub name: String,
    pub plan: StagePlan,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub prune: Option<PruneSummary>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trim: Option<TrimTrace>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub induced: Option<InducedTrace>,
    pub output_vertices: usize,
    pub output_edges: usize,
}

/// Machine-readable outcome of a pipeline run. All rationals are strings `p/q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineReport {
    pub schema: String,
    pub kind: PipelineKind,
    pub host_edges: usize,
    pub minor_edges: usize,
    #[serde(with = "crate::rational::serde_string")]
    pub kappa: Rational,
    #[serde(with = "crate::rational::serde_string")]
    pub alpha: Rational,
    #[serde(with = "crate::rational::serde_string")]
    pub alpha_prime: Rational,
    /// Guaranteed expansion of the output.
    #[serde(with = "crate::rational::serde_string")]
    pub kappa_prime: Rational,
    pub stages: Vec<StageReport>,
    pub output: OutputGraph,
    /// Exact Cheeger constant of the output with its witness, when verification was requested.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<ExpansionCertificate>,
}

impl PipelineReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> crate::Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}
