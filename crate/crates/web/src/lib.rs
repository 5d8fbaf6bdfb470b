//! Browser bindings: measure a group, lay out its subgroup lattice, and
//! tabulate several groups at once. Every export takes a family spec such
//! as `q 8 x c 3` and returns JSON.

use cdlat_core::graph::HasseDiagram;
use cdlat_core::sweep::analyze;
use cdlat_core::{FamilySpec, Group, Limits};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Smaller than the native caps so the page stays responsive.
pub const WEB_LIMITS: Limits = Limits {
    max_order: 512,
    max_subgroups: 5_000,
};

#[derive(Serialize)]
struct Measure {
    group: String,
    order: usize,
    total_subgroups: usize,
    m_star: u64,
    cd_size: usize,
    delta: usize,
    nilpotent: bool,
}

#[derive(Serialize)]
struct Row {
    spec: String,
    #[serde(flatten)]
    result: RowResult,
}

#[derive(Serialize)]
#[serde(untagged)]
enum RowResult {
    Ok(Measure),
    Err { error: String },
}

fn build(spec: &str) -> Result<Group, String> {
    spec.parse::<FamilySpec>()
        .and_then(|s| s.build(&WEB_LIMITS))
        .map_err(|e| e.to_string())
}

fn measure(spec: &str) -> Result<Measure, String> {
    let g = build(spec)?;
    let a = analyze(&g, &WEB_LIMITS).map_err(|e| e.to_string())?;
    Ok(Measure {
        group: g.name().unwrap_or(spec).to_string(),
        order: g.order(),
        total_subgroups: a.report.total_subgroups,
        m_star: a.report.m_star,
        cd_size: a.report.cd_size(),
        delta: a.report.delta,
        nilpotent: a.nilpotent,
    })
}

fn to_json(value: &impl Serialize) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

pub fn measure_json(spec: &str) -> Result<String, String> {
    to_json(&measure(spec)?)
}

/// Nodes carry order, measure and CD membership; edges are cover relations.
pub fn lattice_json(spec: &str) -> Result<String, String> {
    let g = build(spec)?;
    let a = analyze(&g, &WEB_LIMITS).map_err(|e| e.to_string())?;
    to_json(&HasseDiagram::new(&a.lattice, &a.report))
}

/// One spec per non-empty line; failing rows carry an `error` field.
pub fn delta_table_json(specs: &str) -> Result<String, String> {
    let rows: Vec<Row> = specs
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|spec| Row {
            spec: spec.to_string(),
            result: match measure(spec) {
                Ok(m) => RowResult::Ok(m),
                Err(error) => RowResult::Err { error },
            },
        })
        .collect();
    to_json(&rows)
}

#[wasm_bindgen(js_name = measure)]
pub fn measure_js(spec: &str) -> Result<String, JsError> {
    measure_json(spec).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = lattice)]
pub fn lattice_js(spec: &str) -> Result<String, JsError> {
    lattice_json(spec).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = deltaTable)]
pub fn delta_table_js(specs: &str) -> Result<String, JsError> {
    delta_table_json(specs).map_err(|e| JsError::new(&e))
}
