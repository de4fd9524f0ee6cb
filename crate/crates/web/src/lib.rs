//! WebAssembly bindings for the demo page in `www/`. Each export returns a
//! JSON string; the `*_json` functions behind them are plain Rust so they
//! can be tested natively.

use std::time::Duration;

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use rank3::autsolve::{automorphism_group_with, SolverOptions};
use rank3::families::FamilyId;
use rank3::gf::FiniteField;
use rank3::graphs::to_graph6;

/// Graphs above this size are returned without an edge list.
pub const MAX_DRAWN_VERTICES: usize = 400;

pub fn construct_json(descriptor: &str) -> Result<Value, String> {
    let id: FamilyId = descriptor.parse().map_err(|e| format!("{e}"))?;
    let g = id.graph().map_err(|e| format!("{e}"))?;
    let n = g.order();
    let edges: Option<Vec<[usize; 2]>> = (n <= MAX_DRAWN_VERTICES).then(|| g.edges().map(|(u, v)| [u, v]).collect());
    Ok(json!({
        "descriptor": id.to_string(),
        "n": n,
        "edge_count": g.edge_count(),
        "params": g.srg_params().ok().map(|p| p.to_string()),
        "graph6": to_graph6(&g),
        "edges": edges,
    }))
}

/// The cosets of the `e`-th powers in GF(q)*, as lists of element indices,
/// plus the powers of the primitive element in order.
pub fn residue_classes_json(q: u32, e: u32) -> Result<Value, String> {
    let (p, d) = rank3::arith::prime_power(q.into()).ok_or(format!("{q} is not a prime power"))?;
    let f = FiniteField::new(p, d).map_err(|e| format!("{e}"))?;
    let classes = f.power_residue_classes(e).map_err(|e| format!("{e}"))?;
    let idx: Vec<Vec<u32>> = classes.iter().map(|c| c.iter().map(|x| x.index()).collect()).collect();
    let powers: Vec<u32> = (0..u64::from(q) - 1).map(|k| f.omega_pow(k)).collect();
    Ok(json!({ "q": q, "e": e, "classes": idx, "powers": powers }))
}

pub fn automorphisms_json(descriptor: &str, budget_ms: u32) -> Result<Value, String> {
    let id: FamilyId = descriptor.parse().map_err(|e| format!("{e}"))?;
    let g = id.graph().map_err(|e| format!("{e}"))?;
    let opts = SolverOptions::with_budget(Duration::from_millis(budget_ms.into()));
    let r = automorphism_group_with(&g, &opts).map_err(|e| format!("{e}"))?;
    let orbits = r.generators.orbits();
    Ok(json!({
        "order": r.order.to_string(),
        "generators": r.generators.gens().len(),
        "orbit_count": orbits.len(),
        "base": r.base,
        "nodes": r.stats.nodes,
        "elapsed_ms": r.stats.elapsed_ms,
    }))
}

fn export(v: Result<Value, String>) -> Result<String, JsError> {
    v.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn construct(descriptor: &str) -> Result<String, JsError> {
    export(construct_json(descriptor))
}

#[wasm_bindgen(js_name = residueClasses)]
pub fn residue_classes(q: u32, e: u32) -> Result<String, JsError> {
    export(residue_classes_json(q, e))
}

#[wasm_bindgen]
pub fn automorphisms(descriptor: &str, budget_ms: u32) -> Result<String, JsError> {
    export(automorphisms_json(descriptor, budget_ms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construct_small_graph() {
        let v = construct_json("paley:13").unwrap();
        assert_eq!(v["n"], 13);
        assert_eq!(v["params"], "SRG(13,6,2,3)");
        assert_eq!(v["edges"].as_array().unwrap().len(), 39);
        assert!(construct_json("paley:7").is_err());
    }

    #[test]
    fn large_graphs_omit_edges() {
        let v = construct_json("hq:2:5").unwrap();
        assert!(v["edges"].is_null());
        assert_eq!(v["edge_count"], 1024 * 93 / 2);
    }

    #[test]
    fn residue_classes_of_gf9() {
        let v = residue_classes_json(9, 2).unwrap();
        let classes = v["classes"].as_array().unwrap();
        assert_eq!(classes.len(), 2);
        assert!(classes.iter().all(|c| c.as_array().unwrap().len() == 4));
        assert_eq!(v["powers"].as_array().unwrap().len(), 8);
        assert!(residue_classes_json(10, 2).is_err());
    }

    #[test]
    fn automorphisms_of_peisert49() {
        let v = automorphisms_json("peisert:49", 10_000).unwrap();
        assert_eq!(v["order"], "3528");
        assert_eq!(v["orbit_count"], 1);
    }
}
