//! Command-line front end: generation, solving, statistics, formula
//! evaluation, verification and convergence sweeps.
//!
//! Exit codes: 0 success, 1 usage/validation error, 2 computation-time
//! error (infeasible palette, solver/oracle limits, unreadable input).
//! Output bytes are a deterministic function of argv.

use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use chromyc::closed_forms;
use chromyc::harness::{self, HarnessConfig};
use chromyc::rational::Rounding;
use chromyc::stats::{self, ColorDistribution, SummaryMode};
use chromyc::{
    graph_power, parse_edgelist, write_edgelist, Family, FamilyInstance, Graph, Rat,
};

#[derive(Parser)]
#[command(name = "chromyc", version, about = "Exact colouring statistics for Mycielskian graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a family graph (optionally its Mycielskian or a power)
    Gen(GenArgs),
    /// Solve for an extremal colouring and emit its summary as JSON
    Color(ColorArgs),
    /// Evaluate mean/variance of a user-supplied colouring
    Stats(StatsArgs),
    /// Evaluate a published closed-form value
    Formula(FormulaArgs),
    /// Adjudicate published values against ground truth
    Verify(VerifyArgs),
    /// Convergence sweep over a family, as CSV
    Sweep(SweepArgs),
}

#[derive(Args)]
struct FamilySelection {
    /// path|cycle|complete|complete_bipartite|wheel|fan
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<u32>,
    /// First part size (complete_bipartite only)
    #[arg(long)]
    a: Option<u32>,
    /// Second part size (complete_bipartite only)
    #[arg(long)]
    b: Option<u32>,
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    fam: FamilySelection,
    /// Apply the Mycielskian to the generated graph
    #[arg(long)]
    mycielskian: bool,
    /// Replace the graph by its r-th power
    #[arg(long)]
    power: Option<u32>,
    /// edgelist|json
    #[arg(long, default_value = "edgelist")]
    format: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ColorArgs {
    /// Edge-list file to colour (alternative to --family)
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    a: Option<u32>,
    #[arg(long)]
    b: Option<u32>,
    #[arg(long)]
    mycielskian: bool,
    #[arg(long)]
    power: Option<u32>,
    /// chi|chi-plus
    #[arg(long)]
    mode: String,
    /// Palette size (defaults to the chromatic number)
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct StatsArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Colouring file: one "vertex colour" pair per line
    #[arg(long)]
    coloring: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FormulaArgs {
    #[command(flatten)]
    fam: FamilySelection,
    /// chi|chi-plus
    #[arg(long)]
    mode: String,
    /// mean|variance|distribution
    #[arg(long)]
    quantity: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    fam: FamilySelection,
    /// Inclusive range LO..HI (alternative to --n)
    #[arg(long = "n-range")]
    n_range: Option<String>,
    /// json|csv
    #[arg(long, default_value = "json")]
    report: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    fam: FamilySelection,
    /// Inclusive range LO..HI
    #[arg(long = "n-range")]
    n_range: String,
    /// chi|chi-plus
    #[arg(long)]
    mode: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

enum CliError {
    Usage(String),
    Compute(String),
}

impl CliError {
    fn usage(msg: impl ToString) -> CliError {
        CliError::Usage(msg.to_string())
    }

    fn compute(msg: impl ToString) -> CliError {
        CliError::Compute(msg.to_string())
    }
}

fn main() {
    std::process::exit(run(std::env::args_os()));
}

fn run<I: IntoIterator<Item = std::ffi::OsString>>(args: I) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return 0;
        }
        Err(e) => {
            let first = e.to_string().lines().next().unwrap_or("invalid arguments").to_string();
            eprintln!("{first}");
            return 1;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(CliError::Compute(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Gen(args) => cmd_gen(args),
        Cmd::Color(args) => cmd_color(args),
        Cmd::Stats(args) => cmd_stats(args),
        Cmd::Formula(args) => cmd_formula(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Sweep(args) => cmd_sweep(args),
    }
}

fn parse_family(name: &str) -> Result<Family, CliError> {
    name.parse::<Family>().map_err(CliError::usage)
}

fn build_instance(
    family: Family,
    n: Option<u32>,
    a: Option<u32>,
    b: Option<u32>,
) -> Result<FamilyInstance, CliError> {
    if family == Family::CompleteBipartite {
        let (a, b) = match (a, b) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(CliError::usage("complete_bipartite needs --a and --b")),
        };
        let inst = FamilyInstance::bipartite(a, b).map_err(CliError::usage)?;
        if let Some(n) = n {
            if n != a + b {
                return Err(CliError::usage(format!("--n {n} contradicts --a {a} --b {b}")));
            }
        }
        Ok(inst)
    } else {
        if a.is_some() || b.is_some() {
            return Err(CliError::usage("--a/--b only apply to complete_bipartite"));
        }
        let n = n.ok_or_else(|| CliError::usage(format!("{family} needs --n")))?;
        FamilyInstance::simple(family, n).map_err(CliError::usage)
    }
}

fn instance_from(sel: &FamilySelection) -> Result<FamilyInstance, CliError> {
    let family = parse_family(&sel.family)?;
    build_instance(family, sel.n, sel.a, sel.b)
}

fn parse_mode(mode: &str) -> Result<SummaryMode, CliError> {
    match mode {
        "chi" => Ok(SummaryMode::Chi),
        "chi-plus" => Ok(SummaryMode::ChiPlus),
        other => Err(CliError::usage(format!("--mode must be chi or chi-plus, got {other:?}"))),
    }
}

fn parse_range(text: &str) -> Result<(u32, u32), CliError> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| CliError::usage(format!("--n-range must look like LO..HI, got {text:?}")))?;
    let lo: u32 = lo.trim().parse().map_err(|_| CliError::usage("bad range lower bound"))?;
    let hi: u32 = hi.trim().parse().map_err(|_| CliError::usage("bad range upper bound"))?;
    if lo > hi {
        return Err(CliError::usage(format!("empty range {lo}..{hi}")));
    }
    Ok((lo, hi))
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::compute(format!("cannot write {}: {e}", path.display()))),
        None => {
            std::io::stdout()
                .write_all(content.as_bytes())
                .map_err(|e| CliError::compute(format!("cannot write stdout: {e}")))
        }
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::compute(format!("cannot read {}: {e}", path.display())))?;
    parse_edgelist(&text).map_err(CliError::compute)
}

fn cmd_gen(args: GenArgs) -> Result<(), CliError> {
    let inst = instance_from(&args.fam)?.with_mycielskian(args.mycielskian);
    let mut g = inst.build().map_err(CliError::usage)?;
    if let Some(r) = args.power {
        g = graph_power(&g, r).map_err(CliError::usage)?;
    }
    let content = match args.format.as_str() {
        "edgelist" => write_edgelist(&g),
        "json" => {
            let edges: Vec<(u32, u32)> = g.edges().collect();
            let value = serde_json::json!({ "n": g.vertex_count(), "edges": edges });
            format!("{}\n", serde_json::to_string_pretty(&value).expect("graph serializes"))
        }
        other => return Err(CliError::usage(format!("--format must be edgelist or json, got {other:?}"))),
    };
    emit(&args.out, &content)
}

fn cmd_color(args: ColorArgs) -> Result<(), CliError> {
    let mode = parse_mode(&args.mode)?;
    let (g, family, n) = match (&args.input, &args.family) {
        (Some(_), Some(_)) => {
            return Err(CliError::usage("give --in or --family, not both"));
        }
        (Some(path), None) => (read_graph(path)?, None, None),
        (None, Some(name)) => {
            let family = parse_family(name)?;
            let inst = build_instance(family, args.n, args.a, args.b)?
                .with_mycielskian(args.mycielskian);
            let mut g = inst.build().map_err(CliError::usage)?;
            if let Some(r) = args.power {
                g = graph_power(&g, r).map_err(CliError::usage)?;
            }
            (g, Some(family.name().to_string()), Some(inst.n))
        }
        (None, None) => return Err(CliError::usage("give --in PATH or --family flags")),
    };
    let summary = match args.k {
        Some(k) => stats::summary_with_palette(&g, mode, k),
        None => match mode {
            SummaryMode::Chi => stats::chi_summary(&g),
            SummaryMode::ChiPlus => stats::chi_plus_summary(&g),
        },
    }
    .map_err(CliError::compute)?;
    let json = summary.to_json(family, n);
    let content = format!("{}\n", serde_json::to_string_pretty(&json).expect("summary serializes"));
    emit(&args.out, &content)
}

fn cmd_stats(args: StatsArgs) -> Result<(), CliError> {
    let g = read_graph(&args.input)?;
    let text = std::fs::read_to_string(&args.coloring)
        .map_err(|e| CliError::compute(format!("cannot read {}: {e}", args.coloring.display())))?;
    let n = g.vertex_count();
    let mut assign = vec![0u32; n as usize];
    let mut seen = vec![false; n as usize];
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut it = trimmed.split_whitespace();
        let (v, c) = match (
            it.next().and_then(|t| t.parse::<u32>().ok()),
            it.next().and_then(|t| t.parse::<u32>().ok()),
            it.next(),
        ) {
            (Some(v), Some(c), None) => (v, c),
            _ => {
                return Err(CliError::compute(format!(
                    "colouring line {line}: expected \"vertex colour\", got {trimmed:?}"
                )))
            }
        };
        if v < 1 || v > n {
            return Err(CliError::compute(format!(
                "colouring line {line}: vertex {v} out of range 1..={n}"
            )));
        }
        if seen[v as usize - 1] {
            return Err(CliError::compute(format!("colouring line {line}: vertex {v} repeated")));
        }
        seen[v as usize - 1] = true;
        assign[v as usize - 1] = c;
    }
    if let Some(missing) = seen.iter().position(|s| !s) {
        return Err(CliError::compute(format!("vertex {} has no colour", missing + 1)));
    }
    let coloring = chromyc::Coloring::validated(&g, assign).map_err(CliError::compute)?;
    let dist = ColorDistribution::new(coloring.class_sizes(), n).map_err(CliError::compute)?;
    let json = stats::SummaryJson {
        family: None,
        n: None,
        vertices: n,
        k: coloring.k(),
        omega: coloring.omega(),
        mean: dist.mean(),
        variance: dist.variance(),
        distribution: dist.theta().sizes().to_vec(),
        multiplicity: None,
        mode: "user".to_string(),
    };
    let content = format!("{}\n", serde_json::to_string_pretty(&json).expect("summary serializes"));
    emit(&args.out, &content)
}

fn format_rat(r: Rat) -> String {
    format!("{} ({})", r, r.decimal(6, Rounding::HalfEven))
}

fn cmd_formula(args: FormulaArgs) -> Result<(), CliError> {
    let inst = instance_from(&args.fam)?;
    let mode = parse_mode(&args.mode)?;
    let content = match args.quantity.as_str() {
        "mean" => format!("{}\n", format_rat(closed_forms::mean(&inst, mode).map_err(CliError::usage)?.value)),
        "variance" => {
            format!("{}\n", format_rat(closed_forms::variance(&inst, mode).map_err(CliError::usage)?.value))
        }
        "distribution" => {
            let theta = closed_forms::stated_distribution(&inst, mode)
                .map_err(CliError::usage)?
                .value;
            let parts: Vec<String> = theta.sizes().iter().map(|t| t.to_string()).collect();
            format!("[{}]\n", parts.join(", "))
        }
        other => {
            return Err(CliError::usage(format!(
                "--quantity must be mean, variance or distribution, got {other:?}"
            )))
        }
    };
    emit(&args.out, &content)
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    let family = parse_family(&args.fam.family)?;
    let config = HarnessConfig::default();
    let instances: Vec<FamilyInstance> = match (&args.n_range, args.fam.n) {
        (Some(_), Some(_)) => return Err(CliError::usage("give --n or --n-range, not both")),
        (Some(range), None) => {
            if family == Family::CompleteBipartite {
                return Err(CliError::usage("complete_bipartite takes --a/--b, not --n-range"));
            }
            let (lo, hi) = parse_range(range)?;
            (lo..=hi)
                .map(|n| build_instance(family, Some(n), None, None))
                .collect::<Result<_, _>>()?
        }
        (None, _) => vec![build_instance(family, args.fam.n, args.fam.a, args.fam.b)?],
    };
    let mut records = Vec::new();
    for inst in &instances {
        records
            .extend(harness::verify_instance(inst, &config).map_err(CliError::compute)?);
    }
    let content = match args.report.as_str() {
        "json" => format!(
            "{}\n",
            serde_json::to_string_pretty(&records).expect("records serialize")
        ),
        "csv" => harness::records_csv(&records),
        other => return Err(CliError::usage(format!("--report must be json or csv, got {other:?}"))),
    };
    emit(&args.out, &content)
}

fn cmd_sweep(args: SweepArgs) -> Result<(), CliError> {
    let family = parse_family(&args.fam.family)?;
    if args.fam.a.is_some() || args.fam.b.is_some() {
        return Err(CliError::usage("sweep does not take --a/--b"));
    }
    let mode = parse_mode(&args.mode)?;
    let (lo, hi) = parse_range(&args.n_range)?;
    let rows = harness::sweep(family, lo, hi, mode, &HarnessConfig::default())
        .map_err(CliError::compute)?;
    emit(&args.out, &harness::sweep_csv(&rows))
}
