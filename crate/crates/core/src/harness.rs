//! Adjudication of the published closed forms against first-principles
//! recomputation and the exact solvers.
//!
//! Every claim is compared three ways, because two different kinds of
//! error occur and conflating them would destroy the report's value:
//!
//! * `paper_value`: the printed formula or proof distribution, verbatim;
//! * `definition_value`: the pmf definition applied to the claim's own
//!   distribution (catches printed formulas that contradict their own
//!   proof);
//! * `solver_value`: the true extremum over all proper surjective
//!   colourings (catches constructions that are not extremal at all).
//!
//! A record is `MATCH` only when all three agree exactly. Instances too
//! large for the solver get `UNDECIDED_EXTREMALITY` instead of a guess.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::closed_forms::{self, FormulaError};
use crate::coloring::{chromatic_number, extremal_coloring, SolveError};
use crate::family::{Family, FamilyError, FamilyInstance};
use crate::graph::Graph;
use crate::oracle::oracle_extremal_with_limit;
use crate::rational::{Rat, Rounding};
use crate::stats::{ColorDistribution, StatsError, SummaryMode};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Stats(#[from] StatsError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// Size cutoffs for ground-truth computation.
#[derive(Clone, Copy, Debug)]
pub struct HarnessConfig {
    /// Exhaustive-oracle cutoff (vertices of the Mycielskian).
    pub oracle_limit: u32,
    /// Branch-and-bound cutoff for solver_value population.
    pub solver_limit: u32,
}

impl Default for HarnessConfig {
    fn default() -> HarnessConfig {
        HarnessConfig { oracle_limit: 13, solver_limit: 25 }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Match,
    PaperInternalInconsistency,
    NotExtremal,
    Both,
    UndecidedExtremality,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuantityKind {
    Mean,
    Variance,
    Omega,
    Distribution,
}

impl QuantityKind {
    pub fn name(&self) -> &'static str {
        match self {
            QuantityKind::Mean => "mean",
            QuantityKind::Variance => "variance",
            QuantityKind::Omega => "omega",
            QuantityKind::Distribution => "distribution",
        }
    }
}

/// A compared value: a rational or a class-size vector.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Rational(Rat),
    SizeVector(Vec<u32>),
}

impl Value {
    fn render(&self) -> String {
        match self {
            Value::Rational(r) => r.to_string(),
            Value::SizeVector(v) => {
                v.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(",")
            }
        }
    }
}

/// One adjudication of a published value against ground truth.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DiscrepancyRecord {
    pub family: String,
    pub parameters: String,
    pub mode: SummaryMode,
    pub quantity: QuantityKind,
    pub paper_value: Value,
    pub definition_value: Value,
    pub solver_value: Option<Value>,
    pub status: Status,
    pub notes: String,
}

fn classify(paper: &Value, definition: &Value, solver: Option<&Value>) -> Status {
    let pd = paper == definition;
    match (pd, solver.map(|s| s == definition)) {
        (true, Some(true)) => Status::Match,
        (false, Some(true)) => Status::PaperInternalInconsistency,
        (true, Some(false)) => Status::NotExtremal,
        (false, Some(false)) => Status::Both,
        (true, None) => Status::UndecidedExtremality,
        (false, None) => Status::PaperInternalInconsistency,
    }
}

struct SolverSide {
    omega: u64,
    mean: Rat,
    variance: Rat,
    theta: Vec<u32>,
    provenance: String,
}

fn solve_side(
    g: &Graph,
    mode: SummaryMode,
    config: &HarnessConfig,
) -> Result<Option<SolverSide>, HarnessError> {
    let n = g.vertex_count();
    if n > config.solver_limit {
        return Ok(None);
    }
    let k = chromatic_number(g);
    let result = extremal_coloring(g, k, mode.opt_mode())?;
    let dist = ColorDistribution::new(result.size_vector.clone(), n)?;
    let mut provenance = "solver=branch-and-bound".to_string();
    if n <= config.oracle_limit {
        let oracle = oracle_extremal_with_limit(g, k, mode.opt_mode(), config.oracle_limit)?;
        assert_eq!(oracle.result.omega, result.omega, "oracle and solver disagree on omega");
        assert_eq!(
            oracle.result.size_vector, result.size_vector,
            "oracle and solver disagree on the tie-broken size vector"
        );
        provenance.push_str(&format!(
            ", cross-checked by oracle (multiplicity {})",
            oracle.result.multiplicity.unwrap_or(0)
        ));
    }
    Ok(Some(SolverSide {
        omega: result.omega,
        mean: dist.mean(),
        variance: dist.variance(),
        theta: result.size_vector.into_vec(),
        provenance,
    }))
}

/// Adjudicate all four quantities in both modes for one family member.
/// Returns eight records in a fixed order (χ then χ⁺; mean, variance,
/// omega, distribution).
pub fn verify_instance(
    fam: &FamilyInstance,
    config: &HarnessConfig,
) -> Result<Vec<DiscrepancyRecord>, HarnessError> {
    let g = fam.with_mycielskian(true).build()?;
    let n = g.vertex_count();
    let mut records = Vec::with_capacity(8);

    for mode in [SummaryMode::Chi, SummaryMode::ChiPlus] {
        let dist_claim = closed_forms::stated_distribution(fam, mode)?;
        let mean_claim = closed_forms::mean(fam, mode)?;
        let var_claim = closed_forms::variance(fam, mode)?;

        let claimed = ColorDistribution::new(dist_claim.value.clone(), n)?;
        let mean_def = claimed.mean();
        let var_def = claimed.variance();
        let omega_def: u64 = claimed
            .theta()
            .sizes()
            .iter()
            .enumerate()
            .map(|(i, &t)| (i as u64 + 1) * t as u64)
            .sum();
        let omega_paper = mean_claim.value * Rat::int(n as i128);

        let solver = solve_side(&g, mode, config)?;
        let solver_note = solver
            .as_ref()
            .map(|s| s.provenance.clone())
            .unwrap_or_else(|| "solver skipped (instance above solver limit)".to_string());

        let mut push = |quantity: QuantityKind, paper: Value, definition: Value, solver_v: Option<Value>, source: &str| {
            let status = classify(&paper, &definition, solver_v.as_ref());
            records.push(DiscrepancyRecord {
                family: fam.family.name().to_string(),
                parameters: fam.parameter_string(),
                mode,
                quantity,
                paper_value: paper,
                definition_value: definition,
                solver_value: solver_v,
                status,
                notes: format!("{source}; {solver_note}"),
            });
        };

        push(
            QuantityKind::Mean,
            Value::Rational(mean_claim.value),
            Value::Rational(mean_def),
            solver.as_ref().map(|s| Value::Rational(s.mean)),
            &mean_claim.source,
        );
        push(
            QuantityKind::Variance,
            Value::Rational(var_claim.value),
            Value::Rational(var_def),
            solver.as_ref().map(|s| Value::Rational(s.variance)),
            &var_claim.source,
        );
        push(
            QuantityKind::Omega,
            Value::Rational(omega_paper),
            Value::Rational(Rat::int(omega_def as i128)),
            solver.as_ref().map(|s| Value::Rational(Rat::int(s.omega as i128))),
            &format!("{} (omega = stated mean x order)", mean_claim.source),
        );
        push(
            QuantityKind::Distribution,
            Value::SizeVector(dist_claim.value.sizes().to_vec()),
            Value::SizeVector(dist_claim.value.sizes().to_vec()),
            solver.as_ref().map(|s| Value::SizeVector(s.theta.clone())),
            &dist_claim.source,
        );
    }
    Ok(records)
}

/// One row of a convergence sweep.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: u32,
    pub paper_mean: Option<Rat>,
    pub paper_variance: Option<Rat>,
    pub solver_mean: Option<Rat>,
    pub solver_variance: Option<Rat>,
    /// `|paper mean − stated limit|`, χ mode on families with a limit.
    pub gap_to_limit: Option<Rat>,
}

/// Sweep a single-parameter family over `lo..=hi`. Paper columns are
/// empty where no closed form applies, solver columns where the
/// instance exceeds the solver limit.
pub fn sweep(
    family: Family,
    lo: u32,
    hi: u32,
    mode: SummaryMode,
    config: &HarnessConfig,
) -> Result<Vec<SweepRow>, HarnessError> {
    if family == Family::CompleteBipartite {
        return Err(HarnessError::Family(FamilyError::PartsRequired));
    }
    let limit = match (mode, closed_forms::limit_values(family)) {
        (SummaryMode::Chi, Ok((mean_limit, _))) => Some(mean_limit),
        _ => None,
    };
    let mut rows = Vec::new();
    for n in lo..=hi {
        let fam = FamilyInstance::simple(family, n)?;
        let paper_mean = closed_forms::mean(&fam, mode).ok().map(|c| c.value);
        let paper_variance = closed_forms::variance(&fam, mode).ok().map(|c| c.value);
        let g = fam.with_mycielskian(true).build()?;
        let solver = solve_side(&g, mode, config)?;
        rows.push(SweepRow {
            n,
            paper_mean,
            paper_variance,
            solver_mean: solver.as_ref().map(|s| s.mean),
            solver_variance: solver.as_ref().map(|s| s.variance),
            gap_to_limit: match (limit, paper_mean) {
                (Some(l), Some(m)) => Some((m - l).abs()),
                _ => None,
            },
        });
    }
    Ok(rows)
}

fn rat_cells(r: Option<Rat>) -> (String, String) {
    match r {
        Some(r) => (r.to_string(), r.decimal(6, Rounding::HalfEven)),
        None => (String::new(), String::new()),
    }
}

/// RFC-4180 CSV for sweep rows: exact `num/den` plus 6-digit decimals.
pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "n",
        "paper_mean",
        "paper_mean_decimal",
        "paper_variance",
        "paper_variance_decimal",
        "solver_mean",
        "solver_mean_decimal",
        "solver_variance",
        "solver_variance_decimal",
        "gap_to_limit",
        "gap_to_limit_decimal",
    ])
    .unwrap();
    for row in rows {
        let (pm, pmd) = rat_cells(row.paper_mean);
        let (pv, pvd) = rat_cells(row.paper_variance);
        let (sm, smd) = rat_cells(row.solver_mean);
        let (sv, svd) = rat_cells(row.solver_variance);
        let (gap, gapd) = rat_cells(row.gap_to_limit);
        w.write_record([row.n.to_string(), pm, pmd, pv, pvd, sm, smd, sv, svd, gap, gapd])
            .unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}

/// CSV rendering of discrepancy records (same fields as the JSON form).
pub fn records_csv(records: &[DiscrepancyRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "family",
        "parameters",
        "mode",
        "quantity",
        "paper_value",
        "definition_value",
        "solver_value",
        "status",
        "notes",
    ])
    .unwrap();
    for r in records {
        w.write_record([
            r.family.clone(),
            r.parameters.clone(),
            match r.mode {
                SummaryMode::Chi => "chi".to_string(),
                SummaryMode::ChiPlus => "chi_plus".to_string(),
            },
            r.quantity.name().to_string(),
            r.paper_value.render(),
            r.definition_value.render(),
            r.solver_value.as_ref().map(|v| v.render()).unwrap_or_default(),
            serde_json::to_value(r.status).unwrap().as_str().unwrap().to_string(),
            r.notes.clone(),
        ])
        .unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}

/// Aggregated non-MATCH records over a set of instances, plus a short
/// human-readable summary.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ErrataReport {
    pub records: Vec<DiscrepancyRecord>,
    pub summary: String,
}

/// Run [`verify_instance`] over `instances` and keep everything that is
/// not a clean MATCH. Instances are processed in sorted order (family,
/// size, parts) so the report is schedule-independent.
pub fn errata_report(
    instances: &[FamilyInstance],
    config: &HarnessConfig,
) -> Result<ErrataReport, HarnessError> {
    let mut sorted: Vec<FamilyInstance> = instances.to_vec();
    sorted.sort_by_key(|f| (f.family, f.n, f.parts));
    let mut records = Vec::new();
    for fam in &sorted {
        records.extend(
            verify_instance(fam, config)?.into_iter().filter(|r| r.status != Status::Match),
        );
    }
    let mut counts = std::collections::BTreeMap::new();
    for r in &records {
        *counts.entry(r.status).or_insert(0u32) += 1;
    }
    let mut summary = format!(
        "{} non-matching record(s) across {} instance(s).",
        records.len(),
        sorted.len()
    );
    for (status, count) in counts {
        summary.push_str(&format!(
            " {}: {count}.",
            serde_json::to_value(status).unwrap().as_str().unwrap()
        ));
    }
    Ok(ErrataReport { records, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(f: Family, n: u32) -> FamilyInstance {
        FamilyInstance::simple(f, n).unwrap()
    }

    fn record(
        records: &[DiscrepancyRecord],
        mode: SummaryMode,
        quantity: QuantityKind,
    ) -> &DiscrepancyRecord {
        records.iter().find(|r| r.mode == mode && r.quantity == quantity).unwrap()
    }

    #[test]
    fn smallest_path_matches_everywhere_in_chi() {
        let records = verify_instance(&inst(Family::Path, 2), &HarnessConfig::default()).unwrap();
        assert_eq!(records.len(), 8);
        for q in [QuantityKind::Mean, QuantityKind::Variance, QuantityKind::Omega, QuantityKind::Distribution] {
            assert_eq!(record(&records, SummaryMode::Chi, q).status, Status::Match, "{q:?}");
        }
        let mean = record(&records, SummaryMode::Chi, QuantityKind::Mean);
        assert_eq!(mean.paper_value, Value::Rational(Rat::new(9, 5)));
        let omega = record(&records, SummaryMode::Chi, QuantityKind::Omega);
        assert_eq!(omega.solver_value, Some(Value::Rational(Rat::int(9))));
    }

    #[test]
    fn p3_mean_is_not_extremal() {
        let records = verify_instance(&inst(Family::Path, 3), &HarnessConfig::default()).unwrap();
        let mean = record(&records, SummaryMode::Chi, QuantityKind::Mean);
        assert_eq!(mean.status, Status::NotExtremal);
        assert_eq!(mean.paper_value, Value::Rational(Rat::new(12, 7)));
        assert_eq!(mean.definition_value, Value::Rational(Rat::new(12, 7)));
        assert_eq!(mean.solver_value, Some(Value::Rational(Rat::new(11, 7))));
    }

    #[test]
    fn k3_variance_is_internally_inconsistent() {
        let records =
            verify_instance(&inst(Family::Complete, 3), &HarnessConfig::default()).unwrap();
        let var = record(&records, SummaryMode::Chi, QuantityKind::Variance);
        assert_eq!(var.status, Status::PaperInternalInconsistency);
        assert_eq!(var.paper_value, Value::Rational(Rat::new(80, 21)));
        assert_eq!(var.definition_value, Value::Rational(Rat::new(8, 7)));
    }

    #[test]
    fn oversize_instances_are_undecided() {
        let config = HarnessConfig { solver_limit: 5, ..HarnessConfig::default() };
        let records = verify_instance(&inst(Family::Path, 4), &config).unwrap();
        let mean = record(&records, SummaryMode::Chi, QuantityKind::Mean);
        assert_eq!(mean.status, Status::UndecidedExtremality);
        assert!(mean.solver_value.is_none());
        assert!(mean.notes.contains("solver skipped"));
    }

    #[test]
    fn sweep_paths_gap_identity() {
        let rows =
            sweep(Family::Path, 2, 12, SummaryMode::Chi, &HarnessConfig::default()).unwrap();
        assert_eq!(rows.len(), 11);
        for row in &rows {
            let n = row.n as i128;
            assert_eq!(row.gap_to_limit, Some(Rat::new(1, 2 * (4 * n + 2))));
        }
        // solver columns populated inside the limit
        assert!(rows[0].solver_mean.is_some());
        assert_eq!(rows[0].solver_mean, rows[0].paper_mean);
    }

    #[test]
    fn sweep_csv_shape() {
        let rows = sweep(Family::Path, 2, 3, SummaryMode::Chi, &HarnessConfig::default()).unwrap();
        let text = sweep_csv(&rows);
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "n,paper_mean,paper_mean_decimal,paper_variance,paper_variance_decimal,solver_mean,solver_mean_decimal,solver_variance,solver_variance_decimal,gap_to_limit,gap_to_limit_decimal"
        );
        assert!(lines.next().unwrap().starts_with("2,9/5,1.800000,14/25,0.560000,"));
    }

    #[test]
    fn cycle_sweep_starts_at_the_claimed_maximum() {
        let rows =
            sweep(Family::Cycle, 3, 6, SummaryMode::Chi, &HarnessConfig::default()).unwrap();
        assert_eq!(rows[0].paper_mean, Some(Rat::int(2)));
        assert_eq!(rows[0].gap_to_limit, Some(Rat::new(1, 4)));
        for row in &rows {
            assert!(row.paper_mean.unwrap() <= Rat::int(2));
        }
    }

    #[test]
    fn errata_over_small_ranges_is_nonempty_and_round_trips() {
        let mut instances = vec![];
        for n in 2..=6 {
            instances.push(inst(Family::Path, n));
        }
        for n in 3..=5 {
            instances.push(inst(Family::Cycle, n));
        }
        for n in 2..=4 {
            instances.push(inst(Family::Complete, n));
        }
        for (a, b) in [(2, 1), (2, 2), (3, 1)] {
            instances.push(FamilyInstance::bipartite(a, b).unwrap());
        }
        let report = errata_report(&instances, &HarnessConfig::default()).unwrap();
        assert!(!report.records.is_empty());
        assert!(report.records.iter().any(|r| {
            r.family == "path"
                && r.parameters == "n=3"
                && r.quantity == QuantityKind::Mean
                && r.status == Status::NotExtremal
        }));
        let json = serde_json::to_string(&report).unwrap();
        let back: ErrataReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);

        let empty = errata_report(&[], &HarnessConfig::default()).unwrap();
        assert!(empty.records.is_empty());
        assert!(empty.summary.starts_with("0 non-matching"));
    }
}
