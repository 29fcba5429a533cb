//! Browser bindings: pick a catalog pair, move `L`, and get the figure, the
//! crossing report and the support-gap curve.

use std::f64::consts::TAU;

use serde::Serialize;
use wasm_bindgen::prelude::*;

use crosskit_core::body::ConvexBody;
use crosskit_core::constructions::PairName;
use crosskit_core::report::{PairReport, ReportDocument};
use crosskit_core::svg::{render, SvgOptions};
use crosskit_core::tangency::{common_supporting_lines, support_gap, SearchConfig};
use crosskit_core::{pt, Direction, Error, RigidMotion};

/// Grid used by the demo; coarser than the CLI default to stay interactive.
const DEMO_GRID: usize = 2048;

fn pose(name: &str, rotate_deg: f64, dx: f64, dy: f64) -> Result<(ConvexBody, ConvexBody), Error> {
    let pair = PairName::parse(name).ok_or_else(|| Error::Precondition(format!("unknown pair {name:?}")))?;
    let np = pair.build();
    let m = RigidMotion::new(rotate_deg.to_radians(), pt(dx, dy), false);
    Ok((np.d, np.l.apply_motion(&m)))
}

fn config() -> SearchConfig {
    SearchConfig::with_grid(DEMO_GRID)
}

/// Names of the catalog pairs, as a JSON array.
pub fn pair_names_json() -> String {
    let names: Vec<&str> = PairName::ALL.iter().map(|n| n.as_str()).collect();
    serde_json::to_string(&names).expect("names serialize")
}

/// SVG figure with the common supporting lines and shaded differences.
pub fn render_svg(name: &str, rotate_deg: f64, dx: f64, dy: f64) -> Result<String, Error> {
    let (d, l) = pose(name, rotate_deg, dx, dy)?;
    let lines = common_supporting_lines(&d, &l, &config()).lines;
    Ok(render(&[&d, &l], &lines, &SvgOptions::default()))
}

/// Crossing report as JSON, with its plain-text rendering under `"text"`.
pub fn evaluate_json(name: &str, rotate_deg: f64, dx: f64, dy: f64) -> Result<String, Error> {
    let (d, l) = pose(name, rotate_deg, dx, dy)?;
    let cfg = config();
    let mut doc = ReportDocument::new(cfg);
    doc.pairs.push(PairReport::evaluate(name, &d, &l, &cfg, None)?);
    let mut value = serde_json::to_value(&doc).expect("reports serialize");
    value["text"] = doc.to_text().into();
    Ok(value.to_string())
}

#[derive(Serialize)]
struct Profile {
    alphas_deg: Vec<f64>,
    gaps: Vec<f64>,
    lines_deg: Vec<f64>,
}

/// `Δ(α)` at `samples` directions plus the directions of the common lines.
pub fn gap_profile_json(name: &str, rotate_deg: f64, dx: f64, dy: f64, samples: usize) -> Result<String, Error> {
    let (d, l) = pose(name, rotate_deg, dx, dy)?;
    let n = samples.clamp(16, 1 << 14);
    let alphas: Vec<f64> = (0..=n).map(|i| TAU * i as f64 / n as f64).collect();
    let profile = Profile {
        gaps: alphas.iter().map(|&a| support_gap(&d, &l, Direction::new(a))).collect(),
        alphas_deg: alphas.iter().map(|a| a.to_degrees()).collect(),
        lines_deg: common_supporting_lines(&d, &l, &config())
            .lines
            .iter()
            .map(|t| t.alpha().to_degrees())
            .collect(),
    };
    Ok(serde_json::to_string(&profile).expect("profile serializes"))
}

fn js(e: Error) -> JsError {
    JsError::new(&e.to_string())
}

#[wasm_bindgen(js_name = pairNames)]
pub fn pair_names() -> String {
    pair_names_json()
}

#[wasm_bindgen(js_name = renderSvg)]
pub fn render_svg_js(name: &str, rotate_deg: f64, dx: f64, dy: f64) -> Result<String, JsError> {
    render_svg(name, rotate_deg, dx, dy).map_err(js)
}

#[wasm_bindgen(js_name = evaluate)]
pub fn evaluate_js(name: &str, rotate_deg: f64, dx: f64, dy: f64) -> Result<String, JsError> {
    evaluate_json(name, rotate_deg, dx, dy).map_err(js)
}

#[wasm_bindgen(js_name = gapProfile)]
pub fn gap_profile_js(name: &str, rotate_deg: f64, dx: f64, dy: f64, samples: usize) -> Result<String, JsError> {
    gap_profile_json(name, rotate_deg, dx, dy, samples).map_err(js)
}
