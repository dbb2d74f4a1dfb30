//! `bso`: run the optimizers, benchmark them against each other and solve the
//! engineering design problems from the command line.
//!
//! Exit codes: 0 success, 1 internal error, 2 usage error, 3 no feasible solution.

mod config;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bso_core::catalog::{self, build_problem, parse_problem_list, ProblemId};
use bso_core::harness::{
    collect_trials_parallel, compare_report, export_convergence, load_literature,
};
use bso_core::{ConstrainedId, ConstrainedProblem, Error, RunRecord64, TrialSummary};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use config::{merge, read_file, Overrides};

#[derive(Debug)]
pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        Self { code: 1, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(m) | Error::NotFound(m) => Self::usage(m),
            other => Self::internal(other.to_string()),
        }
    }
}

fn write_json(path: &Path, value: &Value) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::internal(e.to_string()))?;
    fs::write(path, text + "\n").map_err(|e| CliError::internal(format!("cannot write {}: {e}", path.display())))
}

fn create_dir(dir: &Path) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::internal(format!("cannot create {}: {e}", dir.display())))
}

#[derive(Parser)]
#[command(name = "bso", version, about = "Beetle swarm optimization toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one optimizer once on one problem.
    Run(RunArgs),
    /// Repeated trials of several optimizers on several problems, with a comparison report.
    Bench(BenchArgs),
    /// Solve the pressure vessel (pv) or Himmelblau (hb) design problem.
    Constrained(ConstrainedArgs),
}

#[derive(Args)]
struct RunArgs {
    /// bso, pso or bas.
    #[arg(long)]
    algo: Option<String>,
    /// Problem id: F1..F23, pv or hb.
    #[arg(long)]
    problem: Option<String>,
    #[arg(long)]
    iters: Option<usize>,
    #[arg(long)]
    pop: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Dimension override for F1..F13.
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Flat JSON config file; flags take precedence over it.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value = "bso,pso")]
    algos: String,
    /// Comma-separated ids; ranges such as F1..F13 are allowed.
    #[arg(long, default_value = "F1..F23")]
    problems: String,
    #[arg(long, default_value_t = 30)]
    trials: usize,
    /// Base seed; trial i uses seed + i.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    iters: Option<usize>,
    #[arg(long)]
    pop: Option<usize>,
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long, default_value = "bench-out")]
    out: PathBuf,
    /// JSON array of published summaries to include as literature columns.
    #[arg(long)]
    literature: Option<PathBuf>,
    /// Print the problem catalog as JSON and exit.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct ConstrainedArgs {
    #[arg(long)]
    problem: String,
    #[arg(long, default_value_t = 1000)]
    iters: usize,
    #[arg(long, default_value_t = 50)]
    pop: usize,
    #[arg(long, default_value_t = 30)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Directory for result.json; nothing is written when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn cmd_run(args: RunArgs) -> Result<(), CliError> {
    let file = match &args.config {
        Some(path) => read_file(path)?,
        None => Map::new(),
    };
    let flags = Overrides {
        algorithm: args.algo,
        problem: args.problem,
        n_trials: None,
        seed: args.seed,
        out: args.out,
        dim: args.dim,
        iters: args.iters,
        pop: args.pop,
    };
    let eff = merge(file, flags, "F1", "run-out", false)?;
    let id: ProblemId = eff.problem.parse()?;
    let algorithm = eff.algorithm()?;
    let problem = build_problem::<f64>(id, eff.dim, eff.penalty())?;
    let record = algorithm.run(problem.as_ref())?;

    create_dir(&eff.out)?;
    export_convergence(&record, eff.out.join("curve.csv"))?;
    let mut summary = json!({
        "algorithm": record.algorithm,
        "problem": record.problem,
        "seed": record.seed,
        "iterations": record.iterations(),
        "best_f": record.best_f,
        "best_x": record.best_x,
        "wall_time_s": record.wall_time_s,
        "stalled": record.stalled,
        "run_config": record.config,
        "config": eff.to_flat_json(),
    });
    if let ProblemId::Constrained(c) = id {
        summary["assessment"] = assessment_json(c, &record, &eff.penalty())?;
    }
    write_json(&eff.out.join("run.json"), &summary)?;
    println!(
        "{} on {}: best_f = {:e} after {} iterations (seed {})",
        record.algorithm,
        record.problem,
        record.best_f,
        record.iterations(),
        record.seed
    );
    println!("wrote {} and {}", eff.out.join("run.json").display(), eff.out.join("curve.csv").display());
    Ok(())
}

fn assessment_json(id: ConstrainedId, record: &RunRecord64, penalty: &bso_core::PenaltyConfig64) -> Result<Value, CliError> {
    let a = ConstrainedProblem::<f64>::new(id).assess(&record.best_x, penalty);
    serde_json::to_value(a).map_err(|e| CliError::internal(e.to_string()))
}

fn cmd_bench(args: BenchArgs) -> Result<(), CliError> {
    if args.list {
        let text = serde_json::to_string_pretty(&catalog::catalog()).map_err(|e| CliError::internal(e.to_string()))?;
        println!("{text}");
        return Ok(());
    }
    if args.trials == 0 {
        return Err(CliError::usage("--trials must be at least 1"));
    }
    let problems = parse_problem_list(&args.problems)?;
    let mut algorithms = Vec::new();
    let mut configs = Map::new();
    for name in args.algos.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let flags = Overrides {
            algorithm: Some(name.to_string()),
            seed: Some(args.seed),
            dim: args.dim,
            iters: args.iters,
            pop: if name.eq_ignore_ascii_case("bas") { None } else { args.pop },
            ..Default::default()
        };
        let eff = merge(Map::new(), flags, "F1", "", true)?;
        configs.insert(eff.algorithm.clone(), eff.tunables.clone());
        algorithms.push((eff.algorithm.clone(), eff.algorithm()?, eff.penalty()));
    }
    if algorithms.is_empty() {
        return Err(CliError::usage("no algorithms given"));
    }
    let literature = match &args.literature {
        Some(path) => load_literature(path)?,
        None => Vec::new(),
    };

    let mut jobs = Vec::new();
    for (name, alg, penalty) in &algorithms {
        for &id in &problems {
            let problem = build_problem::<f64>(id, args.dim.filter(|_| is_scalable(id)), *penalty)?;
            jobs.push((name.clone(), alg.clone(), id, problem));
        }
    }
    let summaries: Vec<TrialSummary> = jobs
        .par_iter()
        .map(|(_, alg, _, problem)| {
            let records = collect_trials_parallel(alg, problem.as_ref(), args.trials, args.seed)?;
            TrialSummary::from_records(&records).map_err(CliError::from)
        })
        .collect::<Result<_, _>>()?;

    create_dir(&args.out)?;
    let mut all = summaries.clone();
    all.extend(literature);
    let report = compare_report(&all, &args.out)?;
    write_json(
        &args.out.join("summaries.json"),
        &serde_json::to_value(&summaries).map_err(|e| CliError::internal(e.to_string()))?,
    )?;
    write_json(
        &args.out.join("config.json"),
        &json!({
            "algorithms": configs,
            "problems": problems.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "n_trials": args.trials,
            "base_seed": args.seed,
            "dim": args.dim,
        }),
    )?;
    print!("{}", report.to_text());
    println!("wrote report.json, report.txt, summaries.json and config.json to {}", args.out.display());
    Ok(())
}

fn is_scalable(id: ProblemId) -> bool {
    matches!(id, ProblemId::Benchmark(b) if b.is_scalable())
}

/// Outcome of `constrained`: the best feasible run if any, otherwise the least penalized one.
fn cmd_constrained(args: ConstrainedArgs) -> Result<bool, CliError> {
    let id: ConstrainedId = args.problem.parse()?;
    if args.trials == 0 {
        return Err(CliError::usage("--trials must be at least 1"));
    }
    let flags = Overrides {
        algorithm: Some("bso".into()),
        problem: Some(id.to_string()),
        seed: Some(args.seed),
        iters: Some(args.iters),
        pop: Some(args.pop),
        n_trials: Some(args.trials),
        ..Default::default()
    };
    let eff = merge(Map::new(), flags, "PV", "", true)?;
    let penalty = eff.penalty();
    let inner = ConstrainedProblem::<f64>::new(id);
    let problem = build_problem::<f64>(ProblemId::Constrained(id), None, penalty)?;
    let records = collect_trials_parallel(&eff.algorithm()?, problem.as_ref(), args.trials, args.seed)?;
    let assessed: Vec<_> = records.iter().map(|r| (r, inner.assess(&r.best_x, &penalty))).collect();
    let n_feasible = assessed.iter().filter(|(_, a)| a.feasible).count();
    let pick = if n_feasible > 0 {
        assessed
            .iter()
            .filter(|(_, a)| a.feasible)
            .min_by(|x, y| x.1.objective.total_cmp(&y.1.objective))
    } else {
        assessed.iter().min_by(|x, y| x.1.penalized.total_cmp(&y.1.penalized))
    };
    let (record, best) = pick.expect("at least one trial");

    let dim = inner.space().dim();
    let ng = best.constraints.len();
    let mut header: Vec<String> = (1..=dim).map(|i| format!("x{i}")).collect();
    header.extend((1..=ng).map(|j| format!("g{j}(x)")));
    header.push("f*".into());
    let mut row: Vec<String> = best.x.iter().map(|v| format!("{v:.6}")).collect();
    row.extend(best.constraints.iter().map(|g| format!("{g:.4}")));
    row.push(format!("{:.4}", best.objective));
    let widths: Vec<usize> = header.iter().zip(&row).map(|(h, r)| h.len().max(r.len())).collect();
    let line = |cells: &[String]| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    println!("{} ({} trials, K = {}, n = {}, base seed {})", id, args.trials, args.iters, args.pop, args.seed);
    println!("{}", line(&header));
    println!("{}", line(&row));
    println!(
        "raw objective {:.6}, penalized {:.6}, feasible {} ({} of {} runs feasible, best from seed {})",
        best.objective, best.penalized, best.feasible, n_feasible, args.trials, record.seed
    );

    if let Some(out) = &args.out {
        create_dir(out)?;
        let result = json!({
            "problem": id.to_string(),
            "n_trials": args.trials,
            "feasible_runs": n_feasible,
            "best_seed": record.seed,
            "best": best,
            "config": eff.to_flat_json(),
        });
        write_json(&out.join("result.json"), &result)?;
    }
    if n_feasible == 0 {
        eprintln!("no feasible solution found; the least penalized point is shown above");
    }
    Ok(n_feasible > 0)
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(text) = std::env::var("BSO_THREADS") else {
        return Ok(());
    };
    let n: usize = text
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::usage(format!("BSO_THREADS must be a positive integer, got {text:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::internal(e.to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = configure_threads().and_then(|()| match cli.command {
        Command::Run(a) => cmd_run(a).map(|()| true),
        Command::Bench(a) => cmd_bench(a).map(|()| true),
        Command::Constrained(a) => cmd_constrained(a),
    });
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}

