//! Browser bindings. Each export takes plain arguments and returns a JSON
//! string; errors come back as a thrown string.

use rdd_core::families::{predict, verify_family, PredictedEnergy};
use rdd_core::verify::{analyze, ledger_for, GraphAnalysis, LedgerRow};
use rdd_core::{generate, Family, FamilySpec, Graph, JacobiOptions, RomanDominatingFunction};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest sweep the page may request in one call.
pub const MAX_SWEEP_LEN: usize = 40;

#[derive(Serialize)]
struct Analysis<'a> {
    n: usize,
    edges: &'a [(usize, usize)],
    gamma: usize,
    gamma_r: usize,
    rdf: &'a RomanDominatingFunction,
    matrix: Vec<Vec<i64>>,
    eigenvalues: &'a [f64],
    energy: f64,
    charpoly: String,
    ledger: &'a [LedgerRow],
}

fn analysis_json(name: &str, g: &Graph) -> Result<String, String> {
    let a: GraphAnalysis = analyze(g, JacobiOptions::default()).map_err(|e| e.to_string())?;
    let ledger = ledger_for(name, &a, 1e-9);
    let report = Analysis {
        n: g.vertex_count(),
        edges: g.edges(),
        gamma: a.invariants.gamma,
        gamma_r: a.invariants.gamma_r,
        rdf: &a.rdf,
        matrix: a.matrix.rows(),
        eigenvalues: &a.spectrum.eigenvalues,
        energy: a.spectrum.energy,
        charpoly: a.charpoly.to_string(),
        ledger: &ledger,
    };
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

fn spec(family: &str, param: usize) -> Result<FamilySpec, String> {
    let family: Family = family
        .parse()
        .map_err(|e: rdd_core::GraphError| e.to_string())?;
    FamilySpec::new(family, param).map_err(|e| e.to_string())
}

/// Full analysis of an edge-list text.
pub fn analyze_edge_list_json(text: &str) -> Result<String, String> {
    let g = Graph::parse_edge_list(text).map_err(|e| e.to_string())?;
    analysis_json("input", &g)
}

/// Full analysis of one family member.
pub fn family_analysis_json(family: &str, param: usize) -> Result<String, String> {
    let spec = spec(family, param)?;
    let g = generate(spec).map_err(|e| e.to_string())?;
    analysis_json(&spec.to_string(), &g)
}

#[derive(Serialize)]
struct SweepPoint {
    param: usize,
    n: usize,
    gamma_r: usize,
    energy: f64,
    energy_min: f64,
    energy_max: f64,
    /// Closed-form value, or the interval for families that only have bounds.
    predicted: Option<f64>,
    predicted_lower: Option<f64>,
    predicted_upper: Option<f64>,
    holds: Option<bool>,
}

/// Computed energy against the closed form for `from..=to`.
pub fn family_sweep_json(family: &str, from: usize, to: usize) -> Result<String, String> {
    if to < from || to - from >= MAX_SWEEP_LEN {
        return Err(format!("sweep range must hold 1..={MAX_SWEEP_LEN} values"));
    }
    let mut points = Vec::new();
    for param in from..=to {
        let spec = spec(family, param)?;
        let report = verify_family(spec, 1e-8).map_err(|e| e.to_string())?;
        let (predicted, lower, upper) = match predict(spec).ok().map(|p| p.energy) {
            Some(PredictedEnergy::Exact(c)) => (Some(c.value()), None, None),
            Some(PredictedEnergy::Interval { lower, upper }) => {
                (None, Some(lower as f64), Some(upper as f64))
            }
            None => (None, None, None),
        };
        points.push(SweepPoint {
            param,
            n: report.vertices,
            gamma_r: report.gamma_r_computed,
            energy: report.energy_computed,
            energy_min: report.energy_range.0,
            energy_max: report.energy_range.1,
            predicted,
            predicted_lower: lower,
            predicted_upper: upper,
            holds: report.energy_ok,
        });
    }
    serde_json::to_string(&points).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn analyze_edge_list(text: &str) -> Result<String, JsValue> {
    analyze_edge_list_json(text).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn family_analysis(family: &str, param: usize) -> Result<String, JsValue> {
    family_analysis_json(family, param).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn family_sweep(family: &str, from: usize, to: usize) -> Result<String, JsValue> {
    family_sweep_json(family, from, to).map_err(|e| JsValue::from_str(&e))
}
