use clap::{Args, Parser, Subcommand};
use slncert::suite::{parse_checks, run_suite, show, SuiteConfig};
use slncert::Error;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "slncert", about = "Exact verification of invariant-algebra certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the check suite and print or write the report.
    Verify(VerifyArgs),
    /// Print a named polynomial or matrix with its leading term.
    Show(ShowArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Matrix size (2..=5).
    #[arg(long)]
    n: u8,
    /// Odd exponent > 1.
    #[arg(long)]
    l: u32,
    /// Odd prime for mod-p checks; l must then be a power of p.
    #[arg(long)]
    p: Option<u64>,
    /// Comma-separated subset of invariants, leading_terms, jacobian,
    /// symfun, groebner, closure; or all.
    #[arg(long, default_value = "all")]
    checks: String,
    /// Seed for sampled checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker thread count (defaults to the number of cores).
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Args)]
struct ShowArgs {
    /// One of s, delta, d, f, F, M.
    #[arg(long)]
    expr: String,
    /// Matrix size (2..=5).
    #[arg(long)]
    n: u8,
    /// Odd exponent, required for f and F.
    #[arg(long)]
    l: Option<u32>,
    /// Index, required for s, delta, f, and F.
    #[arg(long)]
    k: Option<u8>,
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Verify(args) => {
            let config = SuiteConfig {
                n: args.n,
                l: args.l,
                p: args.p,
                checks: parse_checks(&args.checks)?,
                seed: args.seed,
                workers: args.workers,
                output_path: args.out,
            };
            let report = run_suite(&config)?;
            let text = report.render();
            match &config.output_path {
                Some(path) => std::fs::write(path, &text)
                    .map_err(|e| Error::InvalidConfig(format!("cannot write {}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            Ok(report.passed())
        }
        Command::Show(args) => {
            println!("{}", show(&args.expr, args.n, args.l, args.k)?);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
