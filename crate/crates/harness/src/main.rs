use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use indexmap::IndexMap;
use mhs_core::indexcore::hoffman_dual;
use mhs_core::{Index, Status, VerificationReport};
use mhs_harness::config::{parse_list, parse_q_points};
use mhs_harness::{emit_report, plan, plan_group, run_tasks, Format, Group, PrimeRange, Summary, SweepConfig};

#[derive(Parser)]
#[command(
    name = "mhs",
    version,
    about = "Exact checks of identities for multiple harmonic sums and finite MZVs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one group of verifiers: classical, q, connector or fmzv
    Verify {
        group: Group,
        #[command(flatten)]
        opts: SweepOpts,
    },
    /// Run every group
    Sweep {
        #[command(flatten)]
        opts: SweepOpts,
    },
    /// Print derived objects
    Show {
        #[command(subcommand)]
        what: Show,
    },
}

#[derive(Subcommand)]
enum Show {
    /// Hoffman dual of an index such as 1,1,2
    Dual { index: Index },
}

#[derive(Args)]
struct SweepOpts {
    /// Largest index weight to enumerate
    #[arg(long)]
    max_weight: Option<u32>,
    /// Largest total Ohno shift
    #[arg(long)]
    max_e: Option<u32>,
    /// Largest truncation N for finite sums
    #[arg(long = "max-N")]
    max_n: Option<u64>,
    /// Series truncation order for connected sums
    #[arg(long)]
    order: Option<usize>,
    /// Comma-separated sample points, e.g. 1/2,2/3
    #[arg(long)]
    q: Option<String>,
    /// Inclusive prime window, e.g. 5..97
    #[arg(long)]
    primes: Option<PrimeRange>,
    /// Comma-separated identity IDs or group names
    #[arg(long)]
    only: Option<String>,
    /// Also write the full report to this path
    #[arg(long)]
    report: Option<PathBuf>,
    /// Report format: json or csv
    #[arg(long, default_value = "json")]
    format: Format,
    /// Flat key = value file; flags override its values
    #[arg(long)]
    config: Option<PathBuf>,
    /// Omit timings so repeated runs give byte-identical reports
    #[arg(long)]
    deterministic: bool,
}

impl SweepOpts {
    fn config(&self) -> anyhow::Result<SweepConfig> {
        let mut cfg = match &self.config {
            Some(path) => SweepConfig::load(path)?,
            None => SweepConfig::default(),
        };
        if let Some(v) = self.max_weight {
            cfg.max_weight = v;
        }
        if let Some(v) = self.max_e {
            cfg.max_e = v;
        }
        if let Some(v) = self.max_n {
            cfg.max_n = v;
        }
        if let Some(v) = self.order {
            cfg.series_order = v;
        }
        if let Some(v) = &self.q {
            cfg.q_points = parse_q_points(v).map_err(|e| anyhow::anyhow!("--q: {e}"))?;
        }
        if let Some(v) = self.primes {
            cfg.prime_range = v;
        }
        if let Some(v) = &self.only {
            cfg.only = parse_list(v);
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

fn print_summary(reports: &[VerificationReport]) {
    let mut by_id: IndexMap<&str, Summary> = IndexMap::new();
    for r in reports {
        let s = by_id.entry(r.identity.as_str()).or_default();
        match r.status {
            Status::Pass => s.pass += 1,
            Status::Fail => s.fail += 1,
            Status::Skipped => s.skipped += 1,
        }
    }
    for (id, s) in &by_id {
        println!(
            "{id:<20} pass {:>6}  fail {:>4}  skipped {:>5}",
            s.pass, s.fail, s.skipped
        );
    }
    for r in reports.iter().filter(|r| r.status == Status::Fail).take(20) {
        println!("{r}");
    }
    let total = Summary::of(reports);
    println!(
        "total: {} reports, {} pass, {} fail, {} skipped",
        reports.len(),
        total.pass,
        total.fail,
        total.skipped
    );
}

fn run(opts: &SweepOpts, group: Option<Group>) -> anyhow::Result<ExitCode> {
    let cfg = opts.config()?;
    let tasks = match group {
        Some(g) => plan_group(&cfg, g),
        None => plan(&cfg),
    };
    let reports = run_tasks(&tasks);
    if let Some(path) = &opts.report {
        emit_report(&reports, opts.format, path, !opts.deterministic)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    print_summary(&reports);
    Ok(ExitCode::from(Summary::of(&reports).exit_code() as u8))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verify { group, opts } => run(opts, Some(*group)),
        Command::Sweep { opts } => run(opts, None),
        Command::Show {
            what: Show::Dual { index },
        } => hoffman_dual(index)
            .map(|d| {
                println!("{d}");
                ExitCode::SUCCESS
            })
            .map_err(Into::into),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(2)
    })
}
