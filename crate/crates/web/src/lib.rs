//! wasm-bindgen entry points for the browser demo in `www/`.
//!
//! Each export returns a JSON string. The `*_json` functions carry the logic
//! and are plain Rust so they can be tested natively.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use permlab::bounds::sweep;
use permlab::graphs::{maximal_graph, Policy};
use permlab::labels::{CollisionTable, TableMode};
use permlab::witness::WitnessConfig;

/// Largest `n` the demo draws or tabulates; keeps the page responsive.
pub const MAX_GRAPH_N: u32 = 60;
pub const MAX_SERIES_N: u32 = 400;
pub const MAX_CLASSES_N: u32 = 300;

#[derive(Serialize)]
struct GraphView {
    n: u32,
    edge_count: usize,
    complete_edges: u64,
    edges: Vec<EdgeView>,
    missing: Vec<(u32, u32)>,
}

#[derive(Serialize)]
struct EdgeView {
    u: u32,
    v: u32,
    label: String,
}

#[derive(Serialize)]
struct SeriesPoint {
    n: u32,
    lower: usize,
    lower_formula: i64,
    exact: Option<usize>,
    upper: u64,
    complete: u64,
}

#[derive(Serialize)]
struct ClassView {
    value: String,
    pairs: Vec<(u32, u32)>,
}

#[derive(Serialize)]
struct ClassesView {
    n: u32,
    distinct: usize,
    pairs: usize,
    collisions: Vec<ClassView>,
}

fn check_range(what: &str, n: u32, min: u32, max: u32) -> Result<(), String> {
    if (min..=max).contains(&n) {
        Ok(())
    } else {
        Err(format!("{what} must be in {min}..={max}, got {n}"))
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

/// A maximal permutation graph under `policy` (`lex-min`, `lex-max` or `random`).
pub fn maximal_graph_json(n: u32, policy: &str, seed: u64) -> Result<String, String> {
    check_range("n", n, 2, MAX_GRAPH_N)?;
    let policy = match policy {
        "lex-min" => Policy::LexMin,
        "lex-max" => Policy::LexMax,
        "random" => Policy::SeededRandom(seed),
        other => return Err(format!("unknown policy `{other}`")),
    };
    let g = maximal_graph(n, policy).map_err(|e| e.to_string())?;
    let edges = g.edges().map(|(u, v)| EdgeView { u, v, label: g.induced_label(u, v).to_string() }).collect();
    let missing = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)).collect();
    to_json(&GraphView {
        n,
        edge_count: g.edge_count(),
        complete_edges: n as u64 * (n as u64 - 1) / 2,
        edges,
        missing,
    })
}

/// Lower bound, exact count and upper bound for every `n` in `from..=to`.
pub fn bound_series_json(from: u32, to: u32, s_min: u32, strict_tops: bool) -> Result<String, String> {
    check_range("from", from, 3, MAX_SERIES_N)?;
    check_range("to", to, from, MAX_SERIES_N)?;
    check_range("s_min", s_min, 2, 3)?;
    let reports = sweep(from, to, WitnessConfig::new(s_min, strict_tops), MAX_SERIES_N).map_err(|e| e.to_string())?;
    let points: Vec<_> = reports
        .iter()
        .map(|r| SeriesPoint {
            n: r.n,
            lower: r.lower_union,
            lower_formula: r.lower_formula,
            exact: r.exact,
            upper: r.upper,
            complete: r.n as u64 * (r.n as u64 - 1) / 2,
        })
        .collect();
    to_json(&points)
}

/// Collision classes of size at least `min_size` among labels on `n` vertices.
pub fn collision_classes_json(n: u32, min_size: usize) -> Result<String, String> {
    check_range("n", n, 2, MAX_CLASSES_N)?;
    let table = CollisionTable::build(n, TableMode::Exact).map_err(|e| e.to_string())?;
    let collisions = table
        .classes_by_value()
        .into_iter()
        .filter(|(_, c)| c.size() >= min_size)
        .map(|(value, c)| ClassView { value: value.to_string(), pairs: c.pairs().iter().map(|p| (p.low, p.high)).collect() })
        .collect();
    to_json(&ClassesView { n, distinct: table.distinct_count(), pairs: table.pair_total(), collisions })
}

#[wasm_bindgen(js_name = maximalGraph)]
pub fn maximal_graph_js(n: u32, policy: &str, seed: u64) -> Result<String, JsError> {
    maximal_graph_json(n, policy, seed).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = boundSeries)]
pub fn bound_series_js(from: u32, to: u32, s_min: u32, strict_tops: bool) -> Result<String, JsError> {
    bound_series_json(from, to, s_min, strict_tops).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = collisionClasses)]
pub fn collision_classes_js(n: u32, min_size: usize) -> Result<String, JsError> {
    collision_classes_json(n, min_size).map_err(|e| JsError::new(&e))
}
