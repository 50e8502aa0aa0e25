//! Independent re-check of a pipeline report against its inputs.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::brute::brute_force_cheeger;
use crate::error::Result;
use crate::multigraph::MultiGraph;
use crate::pipeline::{PipelineReport, Relation};
use crate::rational::{int, Rational};

/// The postcondition a report failed, in checking order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Clause {
    /// The report's recorded input sizes do not match the graphs given.
    Input,
    /// The output is not a subgraph (or not induced) in the host.
    Relation,
    /// `e(H*) < α′ e(G)`.
    Size,
    /// The Cheeger constant of the output is below the reported `κ′`.
    Expansion,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Clause::Input => "input",
            Clause::Relation => "relation",
            Clause::Size => "size",
            Clause::Expansion => "expansion",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub clause: Option<Clause>,
    pub detail: String,
    /// Brute-force Cheeger constant of the output, when it was computed.
    #[serde(with = "crate::rational::serde_string::option", skip_serializing_if = "Option::is_none", default)]
    pub cheeger: Option<Rational>,
}

impl Verdict {
    fn fail(clause: Clause, detail: String) -> Self {
        Verdict { passed: false, clause: Some(clause), detail, cheeger: None }
    }
}

/// Rechecks `report` from scratch: relation of the output to `g`, its edge
/// count against `α′ e(g)`, and its brute-force Cheeger constant against `κ′`.
/// An output with fewer than two vertices has no proper subset and passes the
/// expansion clause vacuously. Errors only when the output exceeds `cap`.
pub fn verify_report(g: &MultiGraph, h: &MultiGraph, report: &PipelineReport, cap: usize) -> Result<Verdict> {
    if report.host_edges != g.edge_count() || report.minor_edges != h.edge_count() {
        return Ok(Verdict::fail(
            Clause::Input,
            format!(
                "report records e(G) = {}, e(H) = {}; inputs have {} and {}",
                report.host_edges,
                report.minor_edges,
                g.edge_count(),
                h.edge_count()
            ),
        ));
    }

    let out = &report.output;
    for &v in &out.vertices {
        if !g.contains_vertex(v) {
            return Ok(Verdict::fail(Clause::Relation, format!("output vertex {v} is not in G")));
        }
    }
    let mut listed = 0usize;
    for &(u, v, m) in &out.edges {
        if out.vertices.binary_search(&u).is_err() || out.vertices.binary_search(&v).is_err() {
            return Ok(Verdict::fail(Clause::Relation, format!("output edge {u}-{v} leaves the vertex list")));
        }
        let available = g.multiplicity(u, v);
        if m > available {
            return Ok(Verdict::fail(
                Clause::Relation,
                format!("output has {m} copies of {u}-{v}, G has {available}"),
            ));
        }
        if out.relation == Relation::Induced && m != available {
            return Ok(Verdict::fail(
                Clause::Relation,
                format!("output has {m} copies of {u}-{v} but the induced subgraph has {available}"),
            ));
        }
        listed += m;
    }
    if out.relation == Relation::Induced {
        // every host edge inside the vertex set must appear
        let inside: usize = g
            .edges()
            .filter(|(u, v, _)| out.vertices.binary_search(u).is_ok() && out.vertices.binary_search(v).is_ok())
            .map(|(_, _, m)| m)
            .sum();
        if inside != listed {
            return Ok(Verdict::fail(
                Clause::Relation,
                format!("G has {inside} edges inside the output vertices, the output lists {listed}"),
            ));
        }
    }
    if listed != out.edge_count {
        return Ok(Verdict::fail(
            Clause::Relation,
            format!("edge_count {} disagrees with the {listed} listed edges", out.edge_count),
        ));
    }

    let need = report.alpha_prime * int(g.edge_count() as u64);
    if int(listed as u64) < need {
        return Ok(Verdict::fail(Clause::Size, format!("e(H*) = {listed} is below alpha' e(G) = {need}")));
    }

    let graph = out.to_graph();
    let mut verdict = Verdict { passed: true, clause: None, detail: "all clauses hold".into(), cheeger: None };
    if graph.vertex_count() >= 2 {
        let (value, cert) = brute_force_cheeger(&graph, cap)?;
        verdict.cheeger = Some(value);
        if value < report.kappa_prime {
            return Ok(Verdict {
                cheeger: Some(value),
                ..Verdict::fail(
                    Clause::Expansion,
                    format!(
                        "cheeger(H*) = {value} < kappa' = {}, witnessed by {}",
                        report.kappa_prime, cert.witness_set
                    ),
                )
            });
        }
    }
    Ok(verdict)
}
