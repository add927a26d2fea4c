//! Browser bindings for the demo page in `www/`.
//!
//! Three operations, each returning a JSON string the page parses:
//! [`explore`] (graph + extremal colourings + stated values for one
//! instance), [`adjudicate`] (the discrepancy records for one
//! instance), and [`sweep`] (convergence data for a family range).
//! Build with `wasm-pack build --target web`; the crate also compiles
//! natively so the workspace test suite covers it.

use wasm_bindgen::prelude::*;

use chromyc::closed_forms;
use chromyc::harness::{self, HarnessConfig};
use chromyc::rational::{Rat, Rounding};
use chromyc::stats::{self, SummaryMode};
use chromyc::{Family, FamilyInstance, Graph};

fn instance(family: &str, n: u32, a: u32, b: u32) -> Result<FamilyInstance, String> {
    let family: Family = family.parse().map_err(|e: chromyc::FamilyError| e.to_string())?;
    if family == Family::CompleteBipartite {
        FamilyInstance::bipartite(a, b).map_err(|e| e.to_string())
    } else {
        FamilyInstance::simple(family, n).map_err(|e| e.to_string())
    }
}

fn rat_json(r: Rat) -> serde_json::Value {
    serde_json::json!({
        "num": r.numer() as i64,
        "den": r.denom() as i64,
        "text": r.to_string(),
        "decimal": r.decimal(6, Rounding::HalfEven),
    })
}

fn summary_json(g: &Graph, mode: SummaryMode) -> Result<serde_json::Value, String> {
    let summary = match mode {
        SummaryMode::Chi => stats::chi_summary(g),
        SummaryMode::ChiPlus => stats::chi_plus_summary(g),
    }
    .map_err(|e| e.to_string())?;
    Ok(serde_json::json!({
        "k": summary.k,
        "omega": summary.omega,
        "mean": rat_json(summary.mean),
        "variance": rat_json(summary.variance),
        "distribution": summary.distribution.sizes(),
        "multiplicity": summary.multiplicity,
    }))
}

fn claims_json(fam: &FamilyInstance, mode: SummaryMode) -> serde_json::Value {
    let mean = closed_forms::mean(fam, mode).ok();
    let variance = closed_forms::variance(fam, mode).ok();
    let dist = closed_forms::stated_distribution(fam, mode).ok();
    serde_json::json!({
        "mean": mean.map(|c| rat_json(c.value)),
        "variance": variance.map(|c| rat_json(c.value)),
        "distribution": dist.as_ref().map(|c| c.value.sizes().to_vec()),
        "source": dist.map(|c| c.source),
    })
}

/// Graph, extremal colourings and stated closed-form values for the
/// Mycielskian of one family member.
#[wasm_bindgen]
pub fn explore(family: &str, n: u32, a: u32, b: u32) -> Result<String, JsValue> {
    explore_impl(family, n, a, b).map_err(|e| JsValue::from_str(&e))
}

fn explore_impl(family: &str, n: u32, a: u32, b: u32) -> Result<String, String> {
    let fam = instance(family, n, a, b)?;
    let base = fam.build().map_err(|e| e.to_string())?;
    let g = fam.with_mycielskian(true).build().map_err(|e| e.to_string())?;
    let chi = summary_json(&g, SummaryMode::Chi)?;
    let chi_plus = summary_json(&g, SummaryMode::ChiPlus)?;
    let chi_witness = stats::chi_summary(&g).map_err(|e| e.to_string())?;
    let witness = chromyc::extremal_coloring(&g, chi_witness.k, chromyc::OptMode::Min)
        .map_err(|e| e.to_string())?;
    let value = serde_json::json!({
        "family": fam.family.name(),
        "parameters": fam.parameter_string(),
        "base_order": base.vertex_count(),
        "vertices": g.vertex_count(),
        "edges": g.edges().collect::<Vec<(u32, u32)>>(),
        "coloring": witness.witness.assignments(),
        "chi": chi,
        "chi_plus": chi_plus,
        "claims": {
            "chi": claims_json(&fam, SummaryMode::Chi),
            "chi_plus": claims_json(&fam, SummaryMode::ChiPlus),
        },
    });
    Ok(value.to_string())
}

/// Discrepancy records for the Mycielskian of one family member.
#[wasm_bindgen]
pub fn adjudicate(family: &str, n: u32, a: u32, b: u32) -> Result<String, JsValue> {
    let fam = instance(family, n, a, b).map_err(|e| JsValue::from_str(&e))?;
    let records = harness::verify_instance(&fam, &HarnessConfig::default())
        .map_err(|e| JsValue::from_str(&e.to_string()))?;
    serde_json::to_string(&records).map_err(|e| JsValue::from_str(&e.to_string()))
}

/// Convergence sweep rows for a single-parameter family.
#[wasm_bindgen]
pub fn sweep(family: &str, lo: u32, hi: u32, mode: &str) -> Result<String, JsValue> {
    let family: Family = family
        .parse()
        .map_err(|e: chromyc::FamilyError| JsValue::from_str(&e.to_string()))?;
    let mode = match mode {
        "chi" => SummaryMode::Chi,
        "chi-plus" | "chi_plus" => SummaryMode::ChiPlus,
        other => return Err(JsValue::from_str(&format!("unknown mode {other:?}"))),
    };
    let rows = harness::sweep(family, lo, hi, mode, &HarnessConfig::default())
        .map_err(|e| JsValue::from_str(&e.to_string()))?;
    let value: Vec<serde_json::Value> = rows
        .iter()
        .map(|row| {
            serde_json::json!({
                "n": row.n,
                "paper_mean": row.paper_mean.map(rat_json),
                "paper_variance": row.paper_variance.map(rat_json),
                "solver_mean": row.solver_mean.map(rat_json),
                "solver_variance": row.solver_variance.map(rat_json),
                "gap_to_limit": row.gap_to_limit.map(rat_json),
            })
        })
        .collect();
    Ok(serde_json::Value::Array(value).to_string())
}
