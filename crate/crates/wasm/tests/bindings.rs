//! The binding functions, exercised natively.

use crosskit_wasm::{evaluate_json, gap_profile_json, pair_names_json, render_svg};

#[test]
fn lists_catalog_pairs() {
    let names: Vec<String> = serde_json::from_str(&pair_names_json()).unwrap();
    assert_eq!(names, ["octagon_pair", "hexagon_pair", "ellipse_pair", "disk_pair"]);
}

#[test]
fn evaluates_the_unmoved_hexagon() {
    let v: serde_json::Value = serde_json::from_str(&evaluate_json("hexagon_pair", 0.0, 0.0, 0.0).unwrap()).unwrap();
    let p = &v["pairs"][0]["report"]["predicates"];
    assert_eq!((p["lambda"].as_bool(), p["rho"].as_bool()), (Some(true), Some(false)));
    assert!(v["text"].as_str().unwrap().contains("(β,λ,ρ,ε,τ) = (F,T,F,T,T)"));
}

#[test]
fn moving_l_apart_removes_crossings() {
    let v: serde_json::Value = serde_json::from_str(&evaluate_json("ellipse_pair", 0.0, 6.0, 0.0).unwrap()).unwrap();
    assert_eq!(v["pairs"][0]["report"]["predicates"]["tau"], false);
}

#[test]
fn renders_and_profiles() {
    let svg = render_svg("octagon_pair", 0.0, 0.0, 0.0).unwrap();
    assert_eq!(svg.matches("class=\"support\"").count(), 4);
    let v: serde_json::Value = serde_json::from_str(&gap_profile_json("octagon_pair", 0.0, 0.0, 0.0, 360).unwrap()).unwrap();
    assert_eq!(v["gaps"].as_array().unwrap().len(), 361);
    assert_eq!(v["lines_deg"].as_array().unwrap().len(), 4);
}

#[test]
fn unknown_pair_is_an_error() {
    assert!(render_svg("nope", 0.0, 0.0, 0.0).is_err());
}
