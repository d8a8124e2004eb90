//! `verify` — run the algebra verification suites and report results.
//!
//! One line per check goes to stdout; diagnostics go to stderr. With
//! `--json PATH` the full report array is also written to a file, byte
//! identical across runs with the same configuration. Exit code 0 means
//! every check passed, 1 means at least one failed, 2 means the invocation
//! itself was malformed.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use trigrade::report::reports_to_json;
use trigrade::suites::{run, Backend, RunConfig, SUITE_NAMES};

#[derive(Parser)]
#[command(
    name = "verify",
    about = "Run the cubic-algebra verification suites",
    long_about = None
)]
struct Cli {
    /// Suite to run: one of the registered suites, or "all".
    suite: String,

    /// Matrix backend for sampled checks: "exact" or "float". Exact
    /// identities run in either mode; "float" adds the sampled checks.
    #[arg(long, default_value = "float")]
    backend: String,

    /// Number of sampled group elements per randomized check.
    #[arg(long, default_value_t = 100)]
    samples: u32,

    /// Seed for all sampling; each sample derives seed XOR index.
    #[arg(long, default_value_t = 42)]
    seed: u64,

    /// Tolerance for sampled floating identities (tighter bounds scale
    /// with it: closure uses tolerance/10, sampler self-checks 1e-3×).
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,

    /// Write the JSON report array to this path.
    #[arg(long)]
    json: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    let backend = match Backend::parse(&cli.backend) {
        Some(b) => b,
        None => {
            eprintln!(
                "unknown backend {:?}: expected \"exact\" or \"float\"",
                cli.backend
            );
            return ExitCode::from(2);
        }
    };
    if cli.samples == 0 || cli.tolerance.is_nan() || cli.tolerance <= 0.0 {
        eprintln!("--samples must be at least 1 and --tolerance positive");
        return ExitCode::from(2);
    }

    let config = RunConfig {
        backend,
        samples: cli.samples,
        seed: cli.seed,
        tolerance: cli.tolerance,
    };
    let reports = match run(&cli.suite, &config) {
        Some(r) => r,
        None => {
            eprintln!(
                "unknown suite {:?}: expected one of {} or \"all\"",
                cli.suite,
                SUITE_NAMES
                    .iter()
                    .map(|s| format!("{s:?}"))
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            return ExitCode::from(2);
        }
    };

    for report in &reports {
        println!("{}", report.render_line());
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    println!(
        "{} checks, {} passed, {} failed (suite={}, backend={}, samples={}, seed={}, tolerance={:e})",
        reports.len(),
        reports.len() - failed,
        failed,
        cli.suite,
        backend.name(),
        cli.samples,
        cli.seed,
        cli.tolerance
    );

    if let Some(path) = &cli.json {
        if let Err(err) = std::fs::write(path, reports_to_json(&reports)) {
            eprintln!("cannot write {}: {err}", path.display());
            return ExitCode::from(2);
        }
    }

    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
