//! Browser bindings: every export takes and returns JSON text.

use qg_core::counting::elementary_symmetric;
use qg_core::gorenstein::{self, generator_counts, turan_hilbert};
use qg_core::lefschetz::{counterexample_search, unimodality_certificate, SearchMode, DEFAULT_SEARCH_CAP};
use qg_core::SimplicialComplex;
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest order vector accepted by the page (keeps the `u64` formulas exact).
const MAX_PARTS: usize = 12;

fn parse_orders(text: &str) -> Result<Vec<u64>, String> {
    let orders = text
        .split(',')
        .map(|s| s.trim().parse::<u64>().map_err(|_| format!("not a part size: {:?}", s.trim())))
        .collect::<Result<Vec<_>, _>>()?;
    if orders.len() < 2 || orders.len() > MAX_PARTS {
        return Err(format!("need 2 to {MAX_PARTS} parts, got {}", orders.len()));
    }
    if let Some(a) = orders.iter().find(|&&a| !(2..=1000).contains(&a)) {
        return Err(format!("part sizes must lie in 2..=1000, got {a}"));
    }
    Ok(orders)
}

/// Hilbert vector of the Turan algebra split into its face part `e_k` and
/// representative part `e_(d-k)`.
pub fn turan_json(orders: &str) -> Result<String, String> {
    let orders = parse_orders(orders)?;
    let d = orders.len() + 1;
    let h = turan_hilbert(&orders).map_err(|e| e.to_string())?;
    let e: Vec<u128> = (0..=d).map(|k| if k < d { elementary_symmetric(&orders, k).unwrap_or(0) } else { 0 }).collect();
    let cert = unimodality_certificate(&h);
    Ok(json!({
        "orders": orders,
        "hilbert": h,
        "faces": e.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "reps": (0..=d).map(|k| e[d - k].to_string()).collect::<Vec<_>>(),
        "codimension": h.get(1),
        "unimodal": cert.unimodal,
        "totally_nonunimodal": cert.totally_nonunimodal,
    })
    .to_string())
}

/// Summary of a complex given in the `{"m": .., "facets": [..]}` format.
pub fn analyze_json(complex: &str) -> Result<String, String> {
    let c = SimplicialComplex::from_json_str(complex).map_err(|e| e.to_string())?;
    let summary = gorenstein::summarize(&c);
    let fv = c.f_vector();
    let d = c.d();
    let cert = unimodality_certificate(&summary.hilbert);
    Ok(json!({
        "summary": summary,
        "faces": (0..=d).map(|k| fv.e(k)).collect::<Vec<_>>(),
        "reps": (0..=d).map(|k| fv.e(d - k)).collect::<Vec<_>>(),
        "generator_counts": generator_counts(&c),
        "unimodal": cert.unimodal,
        "totally_nonunimodal": cert.totally_nonunimodal,
    })
    .to_string())
}

/// Smallest totally non-unimodal Turan algebra of socle degree `d`.
pub fn hunt_json(d: usize, any: bool) -> Result<String, String> {
    let mode = if any { SearchMode::Any } else { SearchMode::Equal };
    let found = counterexample_search(d, mode, DEFAULT_SEARCH_CAP).map_err(|e| e.to_string())?;
    serde_json::to_string(&found).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn turan(orders: &str) -> Result<String, JsError> {
    turan_json(orders).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn analyze(complex: &str) -> Result<String, JsError> {
    analyze_json(complex).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn hunt(d: usize, any: bool) -> Result<String, JsError> {
    hunt_json(d, any).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    #[test]
    fn turan_split() {
        let v: Value = serde_json::from_str(&turan_json("6, 6, 6").unwrap()).unwrap();
        assert_eq!(v["hilbert"], json!([1, 234, 216, 234, 1]));
        assert_eq!(v["faces"], json!(["1", "18", "108", "216", "0"]));
        assert_eq!(v["totally_nonunimodal"], true);
        assert!(turan_json("1,2").is_err());
        assert!(turan_json("6").is_err());
        assert!(turan_json("a,b").is_err());
    }

    #[test]
    fn analyze_hollow_triangle() {
        let v: Value = serde_json::from_str(&analyze_json(r#"{"m": 6, "facets": [[0,1,3],[1,2,4],[0,2,5]]}"#).unwrap()).unwrap();
        assert_eq!(v["summary"]["presented_by_quadrics"], false);
        assert_eq!(v["summary"]["hilbert"], json!([1, 9, 18, 9, 1]));
        assert!(analyze_json("{").is_err());
    }

    #[test]
    fn hunt_degree_four() {
        let v: Value = serde_json::from_str(&hunt_json(4, false).unwrap()).unwrap();
        assert_eq!(v["orders"], json!([6, 6, 6]));
        assert!(hunt_json(3, false).is_err());
    }
}
