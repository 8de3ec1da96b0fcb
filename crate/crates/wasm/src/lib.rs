//! Browser bindings. Every function returns a JSON string.

use hook_specht::structure::composition_series;
use hook_specht::{Field, HookSpechtModule, Params, Rationals};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Keeps the page responsive.
pub const MAX_N: usize = 10;

fn params(e: u32, k1: i32, k2: i32, n: usize, m: usize) -> Result<Params, String> {
    if n > MAX_N {
        return Err(format!("n is limited to {MAX_N} here"));
    }
    Params::new(e, (k1 as i64, k2 as i64), n, m).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct Node {
    index: usize,
    legs: Vec<usize>,
    residues: Vec<u32>,
}

#[derive(Serialize)]
struct Edge {
    from: usize,
    to: usize,
    generator: String,
    coefficient: String,
}

#[derive(Serialize)]
struct Graph {
    params: Params,
    dim: usize,
    nodes: Vec<Node>,
    edges: Vec<Edge>,
}

fn nodes(module: &HookSpechtModule<Rationals>) -> Vec<Node> {
    (0..module.dim())
        .map(|k| Node {
            index: k,
            legs: module.leg_set(k).entries().to_vec(),
            residues: module.residue_seq(k).0.clone(),
        })
        .collect()
}

pub fn basis_json(e: u32, k1: i32, k2: i32, n: usize, m: usize) -> Result<String, String> {
    let module = HookSpechtModule::new(Rationals, params(e, k1, k2, n, m)?);
    serde_json::to_string(&nodes(&module)).map_err(|e| e.to_string())
}

/// Nonzero entries of the ψ and y matrices as labelled edges `from → to`.
pub fn action_graph_json(e: u32, k1: i32, k2: i32, n: usize, m: usize) -> Result<String, String> {
    let p = params(e, k1, k2, n, m)?;
    let module = HookSpechtModule::new(Rationals, p);
    let field = Rationals;
    let mut edges = Vec::new();
    for (g, mat) in module.matrices().labelled() {
        let label = g.to_string();
        if label.starts_with('e') {
            continue;
        }
        for (from, col) in mat.columns().iter().enumerate() {
            for (to, x) in col.entries() {
                edges.push(Edge { from, to: *to, generator: label.clone(), coefficient: field.format(x) });
            }
        }
    }
    let graph = Graph { params: p, dim: module.dim(), nodes: nodes(&module), edges };
    serde_json::to_string(&graph).map_err(|e| e.to_string())
}

pub fn composition_series_json(e: u32, k1: i32, k2: i32, n: usize, m: usize, seed: u32) -> Result<String, String> {
    let p = params(e, k1, k2, n, m)?;
    let report = composition_series(&Rationals, &p, seed as u64).map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn basis(e: u32, k1: i32, k2: i32, n: usize, m: usize) -> Result<String, JsError> {
    basis_json(e, k1, k2, n, m).map_err(|s| JsError::new(&s))
}

#[wasm_bindgen(js_name = actionGraph)]
pub fn action_graph(e: u32, k1: i32, k2: i32, n: usize, m: usize) -> Result<String, JsError> {
    action_graph_json(e, k1, k2, n, m).map_err(|s| JsError::new(&s))
}

#[wasm_bindgen(js_name = compositionSeries)]
pub fn composition_series_js(e: u32, k1: i32, k2: i32, n: usize, m: usize, seed: u32) -> Result<String, JsError> {
    composition_series_json(e, k1, k2, n, m, seed).map_err(|s| JsError::new(&s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_has_one_edge_per_nonzero() {
        let v: serde_json::Value = serde_json::from_str(&action_graph_json(3, 0, 0, 4, 1).unwrap()).unwrap();
        assert_eq!(v["dim"], 4);
        let edges = v["edges"].as_array().unwrap();
        // y_2 v(2) = v(1)
        assert!(edges.iter().any(|e| e["generator"] == "y2" && e["from"] == 1 && e["to"] == 0));
        assert!(edges.iter().all(|e| e["coefficient"] != "0"));
    }

    #[test]
    fn series_and_basis() {
        let v: serde_json::Value = serde_json::from_str(&composition_series_json(3, 0, 2, 6, 3, 1).unwrap()).unwrap();
        assert_eq!(v["factor_dims"], serde_json::json!([6, 4, 4, 6]));
        let b: serde_json::Value = serde_json::from_str(&basis_json(3, -3, 1, 5, 0).unwrap()).unwrap();
        assert_eq!(b[0]["residues"], serde_json::json!([0, 1, 2, 0, 1]));
    }

    #[test]
    fn rejects_large_or_bad_input() {
        assert!(basis_json(3, 0, 0, 11, 2).is_err());
        assert!(basis_json(2, 0, 0, 4, 2).is_err());
        assert!(composition_series_json(3, 0, 0, 4, 5, 0).is_err());
    }
}
