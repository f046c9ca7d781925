//! Three engine operations for a static web page. Each returns a JSON
//! document; errors come back as plain messages.

use wasm_bindgen::prelude::*;

use fmcalc::varieties::SurfaceContext;
use fmcalc_cli::commands::{cmd_search_orthogonal, cmd_transform, cmd_verlinde};

/// Search bounds above this are refused to keep the page responsive.
pub const MAX_BOUND: i64 = 6;

pub fn transform_json(vector: &str, kernel: &str) -> Result<String, String> {
    cmd_transform(&SurfaceContext::abelian(), vector, kernel, true).map_err(|e| e.message)
}

pub fn verlinde_json(v: &str, w: &str, side: &str) -> Result<String, String> {
    cmd_verlinde(&SurfaceContext::abelian(), v, w, side, true).map_err(|e| e.message)
}

pub fn search_json(max_rank: i64, max_chi: i64, max_m: i64) -> Result<String, String> {
    if [max_rank, max_chi, max_m].iter().any(|&b| b > MAX_BOUND) {
        return Err(format!("bounds above {MAX_BOUND} are not served here; use the command-line tool"));
    }
    cmd_search_orthogonal(max_rank, max_chi, max_m, true).map_err(|e| e.message)
}

#[wasm_bindgen]
pub fn transform(vector: &str, kernel: &str) -> Result<String, JsValue> {
    transform_json(vector, kernel).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn verlinde(v: &str, w: &str, side: &str) -> Result<String, JsValue> {
    verlinde_json(v, w, side).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn search_orthogonal(max_rank: i32, max_chi: i32, max_m: i32) -> Result<String, JsValue> {
    search_json(max_rank.into(), max_chi.into(), max_m.into()).map_err(|e| JsValue::from_str(&e))
}
