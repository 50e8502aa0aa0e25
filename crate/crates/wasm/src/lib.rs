//! Browser bindings for the demo page in `www/`.
//!
//! Each export takes and returns JSON strings. The `*_json` functions hold the
//! logic and are plain Rust so they can be tested natively; errors come back
//! as `Err(message)`.

use expander_extract::extraction::trim_to_expander;
use expander_extract::io::{parse_edge_list, write_edge_list};
use expander_extract::multigraph::cheeger_constant;
use expander_extract::oracle::{generate_verified_expander, InstanceSpec};
use expander_extract::rational::parse_rational;
use expander_extract::MultiGraph;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn graph_value(g: &MultiGraph) -> Value {
    let edges: Vec<Value> = g.edges().map(|(u, v, m)| json!([u, v, m])).collect();
    json!({ "vertices": g.vertices().collect::<Vec<_>>(), "edges": edges })
}

fn text(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// `spec` is an instance spec such as `{"kind":"blob-pair","blob":4,"bridges":1,"seed":3}`.
pub fn generate_json(spec: &str) -> Result<String, String> {
    let spec: InstanceSpec = serde_json::from_str(spec).map_err(text)?;
    let inst = generate_verified_expander(&spec).map_err(text)?;
    Ok(json!({
        "edge_list": write_edge_list(&inst.graph),
        "graph": graph_value(&inst.graph),
        "kappa": inst.kappa.to_string(),
        "witness": inst.certificate.witness_set,
    })
    .to_string())
}

/// Exact Cheeger constant of an edge list, with an attaining set.
pub fn cheeger_json(edge_list: &str) -> Result<String, String> {
    let g = parse_edge_list(edge_list).map_err(text)?;
    let (value, cert) = cheeger_constant(&g).map_err(text)?;
    Ok(json!({
        "graph": graph_value(&g),
        "cheeger": value.to_string(),
        "witness": cert.witness_set,
        "boundary_edges": cert.boundary_edges,
        "min_side_volume": cert.min_side_volume,
    })
    .to_string())
}

/// Trims the subgraph of `edge_list` with the edges in `deleted` (an edge list
/// of copies to drop) removed.
pub fn trim_json(edge_list: &str, deleted: &str, kappa: &str) -> Result<String, String> {
    let g = parse_edge_list(edge_list).map_err(text)?;
    let gone = parse_edge_list(deleted).map_err(text)?;
    let kappa = parse_rational(kappa).map_err(text)?;
    let mut h = g.clone();
    for (u, v, m) in gone.edges() {
        h.remove_edges(u, v, m).map_err(text)?;
    }
    let (core, trace) = trim_to_expander(&g, &h, kappa).map_err(text)?;
    Ok(json!({
        "kept": core.vertices().collect::<Vec<_>>(),
        "kept_edges": core.edge_count(),
        "steps": trace.to_lines().lines().collect::<Vec<_>>(),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn generate(spec: &str) -> Result<String, JsValue> {
    generate_json(spec).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn cheeger(edge_list: &str) -> Result<String, JsValue> {
    cheeger_json(edge_list).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn trim(edge_list: &str, deleted: &str, kappa: &str) -> Result<String, JsValue> {
    trim_json(edge_list, deleted, kappa).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    const K4: &str = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn cheeger_of_k4() {
        let v = parse(&cheeger_json(K4).unwrap());
        assert_eq!(v["cheeger"], "2/3");
        assert_eq!(v["witness"], json!([0, 1]));
    }

    #[test]
    fn generate_round_trips_through_cheeger() {
        let out = parse(&generate_json(r#"{"kind":"blob-pair","blob":4,"bridges":1,"seed":3}"#).unwrap());
        assert_eq!(out["kappa"], "1/13");
        let again = parse(&cheeger_json(out["edge_list"].as_str().unwrap()).unwrap());
        assert_eq!(again["cheeger"], out["kappa"]);
    }

    #[test]
    fn trim_after_deleting_edges() {
        let mut k8 = String::new();
        for a in 0..8 {
            for b in a + 1..8 {
                k8.push_str(&format!("{a} {b}\n"));
            }
        }
        let mut gone = String::new();
        for a in 0..4 {
            for b in 4..8 {
                if (a, b) != (3, 4) {
                    gone.push_str(&format!("{a} {b}\n"));
                }
            }
        }
        let out = parse(&trim_json(&k8, &gone, "4/7").unwrap());
        assert_eq!(out["kept"], json!([4, 5, 6, 7]));
        assert_eq!(out["steps"][0], "step 1 case bad X={0,1,2,3} down=1 up=0 diff=0 out=15");
    }

    #[test]
    fn errors_are_messages() {
        assert!(cheeger_json("0 x").unwrap_err().contains("line 1"));
        assert!(trim_json(K4, "0 1\n0 1\n", "1/2").is_err());
        assert!(generate_json("{}").is_err());
    }
}
