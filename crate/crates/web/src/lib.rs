//! Browser bindings: curve samples, the quotient diagram and the group
//! comparison, each returned as a JSON string.

use serde_json::json;
use wasm_bindgen::prelude::*;

use wirtlab::diagram::serialize_diagram;
use wirtlab::hypocycloid::{folded_arcs, hypo_point, hypo_stats, quotient_diagram, verify_case, HypoParams};
use wirtlab::presentation::TargetSet;

/// Points of `C_{k,l}` over one period plus its singularity counts.
pub fn curve_json(k: u32, l: u32, samples: usize) -> Result<String, String> {
    let p = HypoParams::new(k, l).map_err(|e| e.to_string())?;
    let n = samples.max(16);
    let pts: Vec<(f64, f64)> =
        (0..=n).map(|i| hypo_point(&p, std::f64::consts::TAU * i as f64 / n as f64)).collect();
    Ok(json!({ "schema": 1, "k": k, "l": l, "points": pts, "stats": hypo_stats(&p) }).to_string())
}

/// Diagram text of the quotient curve and polylines of its real picture.
pub fn quotient_json(k: u32) -> Result<String, String> {
    let dg = quotient_diagram(k).map_err(|e| e.to_string())?;
    let arcs = folded_arcs(k, 200, 3.0).map_err(|e| e.to_string())?;
    let events: Vec<f64> = dg.events.iter().map(|e| *e.x.numer() as f64 / *e.x.denom() as f64).collect();
    let line_x = *dg.line_x.numer() as f64 / *dg.line_x.denom() as f64;
    Ok(json!({ "schema": 1, "k": k, "diagram": serialize_diagram(&dg), "arcs": arcs, "events": events, "line_x": line_x })
        .to_string())
}

/// Profiles of the orbifold group and the semidirect product under S3, S4.
pub fn verify_json(k: u32) -> Result<String, String> {
    let r = verify_case(k, &TargetSet::default()).map_err(|e| e.to_string())?;
    serde_json::to_string(&r).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn hypocycloid(k: u32, l: u32, samples: usize) -> Result<String, JsValue> {
    curve_json(k, l, samples).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn quotient(k: u32) -> Result<String, JsValue> {
    quotient_json(k).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn verify(k: u32) -> Result<String, JsValue> {
    verify_json(k).map_err(|e| JsValue::from_str(&e))
}
