//! Text formats: edge lists and coloured edge lists.
//!
//! One edge per line as `u v`; a loop is `u u`; parallel edges are repeated
//! lines; a single token declares an isolated vertex; `#` starts a comment
//! line. Coloured files additionally accept `!blue-vertex v` and
//! `!blue-edge u v k`.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::coloring::{EdgeColoredGraph, VertexColoredGraph};
use crate::error::{Error, Result};
use crate::multigraph::{MultiGraph, VertexId, VertexSubset};

fn parse_id(token: &str, line: usize) -> Result<VertexId> {
    token.parse::<u32>().map(VertexId).map_err(|_| Error::Parse {
        line,
        message: format!("vertex id `{token}` is not a non-negative integer"),
    })
}

/// Parsed contents of a (possibly coloured) edge-list file.
#[derive(Debug, Default)]
pub struct ColoredEdgeList {
    pub graph: MultiGraph,
    pub blue_vertices: VertexSubset,
    pub blue_edges: BTreeMap<(VertexId, VertexId), usize>,
}

fn parse_lines(text: &str, allow_directives: bool) -> Result<ColoredEdgeList> {
    let mut out = ColoredEdgeList::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if let Some(directive) = tokens[0].strip_prefix('!') {
            if !allow_directives {
                return Err(Error::Parse {
                    line,
                    message: format!("directive `!{directive}` not allowed in a plain edge list"),
                });
            }
            match (directive, tokens.len()) {
                ("blue-vertex", 2) => {
                    let v = parse_id(tokens[1], line)?;
                    out.blue_vertices.insert(v);
                }
                ("blue-edge", 4) => {
                    let u = parse_id(tokens[1], line)?;
                    let v = parse_id(tokens[2], line)?;
                    let k: usize = tokens[3].parse().map_err(|_| Error::Parse {
                        line,
                        message: format!("blue multiplicity `{}` is not a count", tokens[3]),
                    })?;
                    *out.blue_edges.entry((u.min(v), u.max(v))).or_insert(0) += k;
                }
                _ => {
                    return Err(Error::Parse {
                        line,
                        message: format!("malformed directive `{trimmed}`"),
                    })
                }
            }
            continue;
        }
        match tokens.as_slice() {
            [v] => {
                out.graph.add_vertex(parse_id(v, line)?);
            }
            [u, v] => {
                let (u, v) = (parse_id(u, line)?, parse_id(v, line)?);
                out.graph.add_edge(u, v);
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected `u v` or `v`, found {} tokens", tokens.len()),
                })
            }
        }
    }
    Ok(out)
}

pub fn parse_edge_list(text: &str) -> Result<MultiGraph> {
    parse_lines(text, false).map(|p| p.graph)
}

/// Parses a coloured edge list, accepting both directive kinds.
pub fn parse_colored(text: &str) -> Result<ColoredEdgeList> {
    parse_lines(text, true)
}

pub fn parse_vertex_colored(text: &str) -> Result<VertexColoredGraph> {
    let parsed = parse_colored(text)?;
    if !parsed.blue_edges.is_empty() {
        return Err(Error::InvalidColoring("vertex-coloured input has blue edges".into()));
    }
    VertexColoredGraph::new(parsed.graph, parsed.blue_vertices)
}

pub fn parse_edge_colored(text: &str) -> Result<EdgeColoredGraph> {
    let parsed = parse_colored(text)?;
    if !parsed.blue_vertices.is_empty() {
        return Err(Error::InvalidColoring("edge-coloured input has blue vertices".into()));
    }
    EdgeColoredGraph::new(parsed.graph, parsed.blue_edges)
}

/// Writes `g` in edge-list form: isolated vertices first, then edges in order.
pub fn write_edge_list(g: &MultiGraph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        if g.neighbors(v).next().is_none() {
            writeln!(out, "{v}").unwrap();
        }
    }
    for (u, v, m) in g.edges() {
        for _ in 0..m {
            writeln!(out, "{u} {v}").unwrap();
        }
    }
    out
}

pub fn write_vertex_colored(g: &VertexColoredGraph) -> String {
    let mut out = write_edge_list(g.graph());
    for v in g.blue_vertices().iter() {
        writeln!(out, "!blue-vertex {v}").unwrap();
    }
    out
}

pub fn write_edge_colored(g: &EdgeColoredGraph) -> String {
    let mut out = write_edge_list(g.graph());
    for ((u, v), k) in g.blue_edges() {
        writeln!(out, "!blue-edge {u} {v} {k}").unwrap();
    }
    out
}
