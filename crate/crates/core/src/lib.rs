//! Exact colouring statistics for Mycielskian graphs.
//!
//! The crate has three layers:
//!
//! * graph machinery: standard-family generators, the Mycielskian and
//!   graph-power operators, and an edge-list text format
//!   ([`graph`], [`family`], [`edgelist`]);
//! * exact solvers: chromatic number plus minimum-/maximum-sum proper
//!   colourings under a fixed palette, with an independent brute-force
//!   oracle ([`coloring`], [`oracle`]) and exact-rational colour
//!   distributions, means and variances ([`stats`], [`rational`]);
//! * adjudication: literal evaluators for a set of published closed-form
//!   claims about these parameters ([`closed_forms`]) and a harness that
//!   compares each claim against first-principles recomputation and
//!   against the solvers, producing discrepancy reports and convergence
//!   sweeps ([`harness`]).
//!
//! All statistics are exact rationals end to end; decimal strings are a
//! presentation concern with an explicit rounding mode.

pub mod closed_forms;
pub mod coloring;
pub mod edgelist;
pub mod family;
pub mod graph;
pub mod harness;
pub mod oracle;
pub mod rational;
pub mod stats;

pub use coloring::{
    canonical_sum, chromatic_number, clique_lower_bound, extremal_coloring, greedy_coloring,
    greedy_upper_bound, ClassSizeVector, Coloring, ExtremalResult, OptMode, SolveError,
};
pub use edgelist::{parse_edgelist, write_edgelist, ParseError};
pub use family::{Family, FamilyError, FamilyInstance};
pub use graph::{diameter, graph_power, is_independent_set, mycielskian, Graph, GraphError};
pub use oracle::{oracle_extremal, oracle_extremal_with_limit, OracleOutcome, ORACLE_VERTEX_LIMIT};
pub use rational::{Rat, Rounding};
pub use stats::{
    chi_plus_summary, chi_summary, ChromaticSummary, ColorDistribution, StatsError, SummaryMode,
};
