//! `logmaj`: command-line harness for the bound-verification library.
//!
//! Exit codes: 0 when every evaluated check is satisfied, 1 when any
//! violation is recorded, 2 on usage, parse, or precondition errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use logmaj_core::campaign::{registry, run_campaign, CampaignConfig, CampaignReport};
use logmaj_core::generators::Field;
use logmaj_core::report::Report;

mod verify;

#[derive(Parser)]
#[command(
    name = "logmaj",
    version,
    about = "Randomized verification of eigenvalue and singular-value product bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every registered check with its anchor and preconditions
    List,
    /// Run one check over seeded random instances
    Check {
        /// Registered check name (see `logmaj list`)
        #[arg(long)]
        name: String,
        /// Matrix dimension
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Number of random trials
        #[arg(long, default_value_t = 100)]
        trials: u64,
        /// Master seed for the trial streams
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Overrides both the bound and identity tolerances
        #[arg(long)]
        tol: Option<f64>,
        /// Contraction margin for generated strict contractions
        #[arg(long)]
        delta: Option<f64>,
        /// Draw complex instances (the default)
        #[arg(long, conflicts_with = "real")]
        complex: bool,
        /// Draw real instances
        #[arg(long)]
        real: bool,
    },
    /// Evaluate one check on matrices read from JSON files
    Verify {
        /// Registered check name
        #[arg(long)]
        name: String,
        /// First input (matrix JSON; a vector for scalar_product_bound)
        #[arg(long)]
        a: Option<PathBuf>,
        /// Second input (matrix JSON; the isometry or frame where applicable)
        #[arg(long)]
        b: Option<PathBuf>,
        /// Shape-dependent parameter: subsequence "1,3,4" for indexed
        /// checks, single k for k-checks, "i,j" for pairwise_bound, m for
        /// partial_isometry_reduction
        #[arg(long)]
        index: Option<String>,
        /// Overrides the check's default tolerance
        #[arg(long)]
        tol: Option<f64>,
        /// Emit reports as a JSON array instead of text
        #[arg(long)]
        json: bool,
    },
    /// Run a campaign and write the JSON report
    Campaign {
        /// Campaign config JSON (defaults to the full campaign)
        #[arg(long)]
        config: Option<PathBuf>,
        /// Output path for the report JSON
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (defaults to the rayon global pool)
        #[arg(long)]
        workers: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<bool, String> {
    match command {
        Command::List => {
            println!("{:<28} {:<58} PRECONDITIONS", "NAME", "ANCHOR");
            for def in registry() {
                println!("{:<28} {:<58} {}", def.name, def.anchor, def.preconditions);
            }
            println!("\n{} checks registered", registry().len());
            Ok(true)
        }
        Command::Check {
            name,
            n,
            trials,
            seed,
            tol,
            delta,
            complex: _,
            real,
        } => run_check(name, n, trials, seed, tol, delta, real),
        Command::Verify {
            name,
            a,
            b,
            index,
            tol,
            json,
        } => run_verify(verify::VerifyArgs { name, a, b, index, tol }, json),
        Command::Campaign {
            config,
            out,
            workers,
        } => run_campaign_command(config, out, workers),
    }
}

fn run_check(
    name: String,
    n: usize,
    trials: u64,
    seed: u64,
    tol: Option<f64>,
    delta: Option<f64>,
    real: bool,
) -> Result<bool, String> {
    let mut cfg = CampaignConfig {
        checks: vec![name.clone()],
        dims: vec![n],
        trials,
        master_seed: seed,
        ..CampaignConfig::default()
    };
    if let Some(t) = tol {
        cfg.tolerance = t;
        cfg.identity_tolerance = t;
    }
    if let Some(d) = delta {
        cfg.delta = d;
    }
    if real {
        cfg.field = Field::Real;
    }
    let report = run_campaign(&cfg, None).map_err(|e| e.to_string())?;
    print_campaign_summary(&report);
    if name == "reproduce_counterexamples" {
        println!("\nfixed instances:");
        for r in logmaj_core::bounds::counterexample_reports(cfg.tolerance)
            .map_err(|e| e.to_string())?
        {
            print_report(&r);
        }
    }
    campaign_verdict(&report)
}

fn run_verify(args: verify::VerifyArgs, json: bool) -> Result<bool, String> {
    let output = verify::dispatch(&args)?;
    if json {
        let all: Vec<&Report> = output.reports.iter().chain(&output.details).collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&all).map_err(|e| e.to_string())?
        );
    } else {
        for report in &output.reports {
            print_report(report);
        }
        if !output.details.is_empty() {
            println!("\nfixed instances (informational):");
            for report in &output.details {
                print_report(report);
            }
        }
    }
    Ok(output.reports.iter().all(|r| r.satisfied()))
}

fn run_campaign_command(
    config: Option<PathBuf>,
    out: Option<PathBuf>,
    workers: Option<usize>,
) -> Result<bool, String> {
    let cfg: CampaignConfig = match &config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            serde_json::from_str(&text)
                .map_err(|e| format!("cannot parse {}: {e}", path.display()))?
        }
        None => CampaignConfig::default(),
    };
    let report = run_campaign(&cfg, workers).map_err(|e| e.to_string())?;
    print_campaign_summary(&report);
    println!("wall time: {:.2}s", report.wall_time_seconds);
    if let Some(path) = &out {
        fs::write(path, report.to_json_string())
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
        println!("report written to {}", path.display());
    }
    campaign_verdict(&report)
}

fn campaign_verdict(report: &CampaignReport) -> Result<bool, String> {
    let failures = report.total_generation_failures();
    if failures > 0 {
        return Err(format!("{failures} trial(s) failed to evaluate"));
    }
    Ok(report.total_violations() == 0)
}

fn print_campaign_summary(report: &CampaignReport) {
    println!(
        "{:<28} {:>8} {:>10} {:>7}  {:>13}  {:>13}",
        "CHECK", "TRIALS", "REPORTS", "VIOL", "MIN MARGIN", "MAX RESIDUAL"
    );
    for check in &report.checks {
        let margin = check
            .min_margin
            .map(|v| format!("{v:.3e}"))
            .unwrap_or_else(|| "-".to_string());
        let residual = check
            .max_identity_residual
            .map(|v| format!("{v:.3e}"))
            .unwrap_or_else(|| "-".to_string());
        println!(
            "{:<28} {:>8} {:>10} {:>7}  {:>13}  {:>13}",
            check.name,
            check.trials_run,
            check.evaluations,
            check.violation_count,
            margin,
            residual
        );
        for failure in &check.generation_failures {
            println!(
                "    failure: n={} trial={} seed={}: {}",
                failure.n, failure.trial, failure.seed, failure.error
            );
        }
        for violation in &check.violations {
            println!(
                "    violation: {} n={} trial={} seed={} indices={:?} value={:.6e}",
                violation.report_name,
                violation.n,
                violation.trial,
                violation.seed,
                violation.indices,
                violation.value
            );
        }
    }
}

fn print_report(report: &Report) {
    match report {
        Report::Bound(b) => {
            let verdict = if b.satisfied { "satisfied" } else { "VIOLATED" };
            let mut chain = format!("{:.9e}", b.lhs);
            for term in &b.rhs_terms {
                chain.push_str(&format!(" >= {term:.9e}"));
            }
            println!("{}: {verdict}", b.check_name);
            println!("  chain:  {chain}");
            println!("  margin: {:.3e}  (tolerance {:.1e})", b.margin, b.tolerance);
        }
        Report::Identity(i) => {
            let verdict = if i.satisfied { "satisfied" } else { "VIOLATED" };
            println!("{}: {verdict}", i.check_name);
            println!(
                "  residual: {:.3e}  (scale {:.3e}, tolerance {:.1e})",
                i.residual, i.scale, i.tolerance
            );
        }
    }
}
