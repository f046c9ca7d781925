use fmcalc_demo::{search_json, transform_json, verlinde_json, MAX_BOUND};
use serde_json::Value;

#[test]
fn transform_returns_json() {
    let v: Value = serde_json::from_str(&transform_json("1:(σ+5f):5", "rsdagger").unwrap()).unwrap();
    assert_eq!(v["output"]["sigma"], "-1");
    assert_eq!(v["output"]["f"], "5");
    assert!(transform_json("nope", "rs").unwrap_err().contains("parse error"));
}

#[test]
fn verlinde_both_sides() {
    let plus: Value = serde_json::from_str(&verlinde_json("3:(σ+3f):-1", "3:(σ+3f):-1", "plus").unwrap()).unwrap();
    assert_eq!(plus["count"], "8316");
    let minus: Value = serde_json::from_str(&verlinde_json("3:(σ+3f):-1", "3:(σ+3f):-1", "minus").unwrap()).unwrap();
    assert_eq!(minus["count"], "924");
    assert!(verlinde_json("3:(σ+3f):-1", "3:(σ+4f):-1", "plus").is_err());
}

#[test]
fn search_is_bounded() {
    let v: Value = serde_json::from_str(&search_json(3, 2, 5).unwrap()).unwrap();
    let pairs = v["pairs"].as_array().unwrap();
    assert!(pairs.iter().any(|p| p["v"] == "3:(1σ+3f):-1" && p["w"] == "3:(1σ+3f):-1"));
    assert_eq!(v["total"], pairs.len().to_string());
    assert!(search_json(MAX_BOUND + 1, 1, 1).is_err());
}
