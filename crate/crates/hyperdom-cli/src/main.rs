//! `hyperdom`: construct hypergraph families, solve domination variants
//! exactly, run the constructive distance dominator, tabulate tree radii
//! and theorem bounds, search extremal orders, and run the verification
//! suite.
//!
//! Exit codes: 0 success / all checks passed, 1 failure, 2 usage error.
//! The env var HYPERDOM_BUDGET overrides the solver node budget.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use hyperdom::constructions;
use hyperdom::domination::{
    brute_force_oracle_with, min_dominating_with, DominationVariant, SolverConfig,
};
use hyperdom::extremal::{n_min, theorem_bounds, ExtremalQuery, SearchConfig};
use hyperdom::hypergraph::Hypergraph;
use hyperdom::matching::{
    auxiliary_graph, connected_maximal_matching, distance_dominating_via_matching,
    dominator_size_bound,
};
use hyperdom::tree::r_j_table;
use hyperdom::verify::{run_suite, Suite};

#[derive(Parser)]
#[command(
    name = "hyperdom",
    version,
    about = "Exact domination laboratory for uniform hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a hypergraph family and print it in the text format.
    Construct(ConstructArgs),
    /// Compute a domination number exactly.
    Solve(SolveArgs),
    /// Build a distance-l dominating set via the connected matching.
    Dominate(DominateArgs),
    /// Tabulate r_j(n) over all unlabeled trees.
    Radius(RadiusArgs),
    /// Find the minimum order reaching a domination target.
    Search(SearchArgs),
    /// Print the closed-form bound table.
    Bounds(BoundsArgs),
    /// Run the verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Disjoint,
    Projective,
    Padded,
    Cycle,
    Spider,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Edge size (disjoint, cycle, spider, padded target).
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    gamma: Option<usize>,
    #[arg(long)]
    l: Option<u32>,
    /// Field order (projective).
    #[arg(long)]
    q: Option<u64>,
    /// Dimension (projective).
    #[arg(long)]
    d: Option<u32>,
    /// Block size (projective).
    #[arg(long)]
    t: Option<usize>,
    /// Domination multiplicity (padded).
    #[arg(long)]
    s: Option<u32>,
    /// Output file (stdout if omitted).
    #[arg(long, short)]
    out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantName {
    Plain,
    Sdom,
    Stuple,
    Dist,
}

fn variant_of(name: VariantName, param: u32) -> DominationVariant {
    match name {
        VariantName::Plain => DominationVariant::Plain,
        VariantName::Sdom => DominationVariant::SDominating(param),
        VariantName::Stuple => DominationVariant::STuple(param),
        VariantName::Dist => DominationVariant::Distance(param),
    }
}

#[derive(Args)]
struct SolveArgs {
    /// Hypergraph file in the text format.
    input: std::path::PathBuf,
    #[arg(long, value_enum)]
    variant: VariantName,
    /// s or l, depending on the variant.
    #[arg(long, default_value_t = 1)]
    param: u32,
    /// Use the brute-force oracle instead of branch and bound.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct DominateArgs {
    input: std::path::PathBuf,
    #[arg(long)]
    l: u32,
}

#[derive(Args)]
struct RadiusArgs {
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    #[arg(long, default_value_t = 3)]
    j_max: usize,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    gamma: usize,
    #[arg(long, value_enum, default_value = "plain")]
    variant: VariantName,
    #[arg(long, default_value_t = 1)]
    param: u32,
    #[arg(long)]
    connected: bool,
    /// Enumeration budget (candidate steps).
    #[arg(long)]
    budget: Option<u64>,
    /// Collect every extremal witness class at the found order.
    #[arg(long)]
    extremal: bool,
    /// Largest order to try (defaults to k * gamma).
    #[arg(long)]
    max_n: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    k: u64,
    #[arg(long)]
    gamma: u64,
    #[arg(long, default_value_t = 1)]
    s: u64,
    #[arg(long, default_value_t = 2)]
    l: u64,
    #[arg(long, value_enum, default_value = "tsv")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Fast,
    Full,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Fast => Suite::Fast,
            SuiteArg::Full => Suite::Full,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "fast")]
    suite: SuiteArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print the JSON report instead of the table.
    #[arg(long)]
    json: bool,
    /// Also write the JSON report to a file.
    #[arg(long)]
    json_out: Option<std::path::PathBuf>,
}

fn budget_from_env() -> Option<u64> {
    std::env::var("HYPERDOM_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
}

fn solver_config() -> SolverConfig {
    match budget_from_env() {
        Some(node_budget) => SolverConfig { node_budget },
        None => SolverConfig::default(),
    }
}

fn run() -> Result<ExitCode, String> {
    match Cli::parse().command {
        Command::Construct(args) => construct(args),
        Command::Solve(args) => solve(args),
        Command::Dominate(args) => dominate(args),
        Command::Radius(args) => {
            if args.n_max > 10 {
                return Err("radius tables are capped at --n-max 10".into());
            }
            print!("{}", r_j_table(args.n_max, args.j_max).to_tsv());
            Ok(ExitCode::SUCCESS)
        }
        Command::Search(args) => search(args),
        Command::Bounds(args) => {
            let report = theorem_bounds(args.k, args.gamma, args.s, args.l);
            match args.format {
                Format::Tsv => print!("{}", report.to_tsv()),
                Format::Json => println!("{}", report.to_json()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let report = run_suite(args.suite.into(), args.seed, budget_from_env());
            if args.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.render_table());
            }
            if let Some(path) = args.json_out {
                std::fs::write(&path, format!("{}\n", report.to_json()))
                    .map_err(|e| format!("writing {}: {e}", path.display()))?;
            }
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
    }
}

fn require<T>(value: Option<T>, flag: &str, family: &str) -> Result<T, String> {
    value.ok_or_else(|| format!("--{flag} is required for --family {family}"))
}

fn construct(args: ConstructArgs) -> Result<ExitCode, String> {
    let h = match args.family {
        Family::Disjoint => constructions::disjoint_edges(
            require(args.k, "k", "disjoint")?,
            require(args.gamma, "gamma", "disjoint")?,
        )
        .map_err(|e| e.to_string())?,
        Family::Projective => {
            let (h, _) = constructions::projective_design(
                require(args.q, "q", "projective")?,
                require(args.d, "d", "projective")?,
                require(args.t, "t", "projective")?,
            )
            .map_err(|e| e.to_string())?;
            h
        }
        Family::Padded => {
            let (h, _) = constructions::padded_projective(
                require(args.k, "k", "padded")?,
                require(args.gamma, "gamma", "padded")? as u32,
                args.s.unwrap_or(1),
            )
            .map_err(|e| e.to_string())?;
            h
        }
        Family::Cycle => constructions::construction1(
            require(args.k, "k", "cycle")?,
            require(args.gamma, "gamma", "cycle")?,
            require(args.l, "l", "cycle")?,
        )
        .map_err(|e| e.to_string())?,
        Family::Spider => {
            let (h, _) = constructions::construction2(
                require(args.k, "k", "spider")?,
                require(args.gamma, "gamma", "spider")?,
                require(args.l, "l", "spider")?,
            )
            .map_err(|e| e.to_string())?;
            h
        }
    };
    match args.out {
        Some(path) => {
            let mut file = std::fs::File::create(&path)
                .map_err(|e| format!("creating {}: {e}", path.display()))?;
            file.write_all(h.to_text().as_bytes())
                .map_err(|e| e.to_string())?;
        }
        None => print!("{}", h.to_text()),
    }
    Ok(ExitCode::SUCCESS)
}

fn read_hypergraph(path: &std::path::Path) -> Result<Hypergraph, String> {
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))?;
    Hypergraph::from_text(&text).map_err(|e| e.to_string())
}

fn solve(args: SolveArgs) -> Result<ExitCode, String> {
    let h = read_hypergraph(&args.input)?;
    if args.param < 1 {
        return Err("--param must be at least 1".into());
    }
    let variant = variant_of(args.variant, args.param);
    let config = solver_config();
    let result = if args.oracle {
        brute_force_oracle_with(&h, variant, &config)
    } else {
        min_dominating_with(&h, variant, &config)
    }
    .map_err(|e| e.to_string())?;
    for warning in &result.warnings {
        eprintln!("warning: {warning}");
    }
    println!(
        "{}",
        json!({
            "value": result.value,
            "witness": result.witness.to_vec(),
            "nodes": result.nodes_explored,
        })
    );
    Ok(ExitCode::SUCCESS)
}

fn dominate(args: DominateArgs) -> Result<ExitCode, String> {
    let h = read_hypergraph(&args.input)?;
    let witness = distance_dominating_via_matching(&h, args.l).map_err(|e| e.to_string())?;
    let matching = connected_maximal_matching(&h).map_err(|e| e.to_string())?;
    let aux = auxiliary_graph(&h, &matching);
    let k = h.uniform_k().ok_or("input must be k-uniform")?;
    let bound = dominator_size_bound(h.n(), k, matching.edge_indices.len(), args.l);
    println!(
        "{}",
        json!({
            "matching": matching.edge_indices,
            "aux_edges": aux.edges.iter().map(|&(i, j, w)| json!([i, j, w])).collect::<Vec<_>>(),
            "witness": witness.to_vec(),
            "size": witness.len(),
            "bound": bound,
        })
    );
    Ok(ExitCode::SUCCESS)
}

fn search(args: SearchArgs) -> Result<ExitCode, String> {
    if args.param < 1 {
        return Err("--param must be at least 1".into());
    }
    let mut cfg = SearchConfig {
        collect_extremal: args.extremal,
        max_n: args.max_n,
        solver: solver_config(),
        ..SearchConfig::default()
    };
    if let Some(budget) = args.budget.or_else(budget_from_env) {
        cfg.candidate_budget = budget;
    }
    let query = ExtremalQuery {
        variant: variant_of(args.variant, args.param),
        k: args.k,
        gamma_target: args.gamma,
        require_connected: args.connected,
    };
    let record = n_min(&query, &cfg).map_err(|e| e.to_string())?;
    println!(
        "{}",
        json!({
            "n_min": record.n_min,
            "witness": record.witness.to_json(),
            "refutations": record.refutations.iter().map(|r| json!({
                "n": r.n,
                "canonical_candidates": r.canonical_candidates,
                "raw_candidates": r.raw_candidates,
            })).collect::<Vec<_>>(),
            "extremal": record.extremal.as_ref().map(|list| {
                list.iter().map(|h| h.to_json()).collect::<Vec<_>>()
            }),
            "exhaustive": record.exhaustive,
        })
    );
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}
