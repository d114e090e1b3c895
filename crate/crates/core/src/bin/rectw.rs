use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rectw::cli::{gen_cache, run_suite, Suite, SuiteConfig};
use rectw::{Error, Instance};

#[derive(Parser)]
#[command(name = "rectw", version, about = "Rectangular W-superalgebra and affine super Yangian checks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the W-generators of an instance and write the JSON cache.
    Gen {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a check suite and write a JSON report.
    Check {
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        cutoff: u32,
        #[arg(long)]
        c_zero: bool,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        mutate: Option<String>,
        #[arg(long)]
        report: PathBuf,
        /// W cache to load, or to write if missing or stale.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
}

fn fail(e: Error) -> ExitCode {
    eprintln!("{e}");
    ExitCode::from(if matches!(e, Error::Config(_)) { 2 } else { 1 })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match cli.cmd {
        Cmd::Gen { m, n, l, out } => match gen_cache(Instance { m, n, l }, &out) {
            Ok(c) => {
                println!("wrote {} generators to {}", c.generators.len(), out.display());
                ExitCode::SUCCESS
            }
            Err(e) => fail(e),
        },
        Cmd::Check { suite, m, n, l, cutoff, c_zero, jobs, mutate, report, cache } => {
            let cfg = SuiteConfig { suite, m, n, l, cutoff, c_zero, jobs, mutate };
            let run = match run_suite(&cfg, cache.as_deref()) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            let json = serde_json::to_string_pretty(&run).expect("report serializes");
            if let Err(e) = std::fs::write(&report, json) {
                return fail(e.into());
            }
            for c in run.checks.iter().filter(|c| !c.passed()).take(20) {
                eprintln!("FAIL {}: {}", c.id, c.residual.as_deref().unwrap_or(""));
            }
            for s in &run.summary.skipped {
                eprintln!("skipped {s}");
            }
            println!("{}: {}/{} passed in {} ms", cfg.suite, run.summary.passed, run.summary.total, run.summary.millis);
            if run.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
