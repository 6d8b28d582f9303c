use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use vecr_core::arith::{parse_rat, Rat};
use vecr_core::checks::{self, Format, RunConfig};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

/// Runs exact slice-truncated checks on the enveloping algebra of polynomial
/// vector fields on the line.
#[derive(Parser, Debug)]
#[command(name = "vecr-verify", version)]
struct Args {
    /// Suite to run; repeat for several. Defaults to all.
    #[arg(long = "suite", value_name = "NAME")]
    suites: Vec<String>,

    /// Degree cutoff.
    #[arg(long, default_value_t = 3)]
    max_degree: usize,

    /// Weight cutoff.
    #[arg(long, default_value_t = 8, allow_negative_numbers = true)]
    max_weight: i64,

    /// λ sample as p/q; repeat for several. Replaces the defaults.
    #[arg(long = "lambda", value_name = "P/Q", value_parser = parse_lambda, allow_negative_numbers = true)]
    lambdas: Vec<Rat>,

    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,

    /// Stop after the first failing check.
    #[arg(long)]
    fail_fast: bool,

    /// Print the check ids with descriptions and exit.
    #[arg(long)]
    list: bool,
}

fn parse_lambda(s: &str) -> Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if args.list {
        for c in checks::list_checks() {
            println!("{:<40} {}", c.id, c.description);
        }
        return ExitCode::SUCCESS;
    }
    let mut cfg = RunConfig {
        max_degree: args.max_degree,
        max_weight: args.max_weight,
        fail_fast: args.fail_fast,
        format: match args.format {
            OutputFormat::Text => Format::Text,
            OutputFormat::Json => Format::Json,
        },
        ..RunConfig::default()
    };
    if !args.suites.is_empty() {
        cfg.suites = args.suites;
    }
    if !args.lambdas.is_empty() {
        cfg.lambda_samples = args.lambdas;
    }
    if let Err(e) = cfg.validate() {
        eprintln!("vecr-verify: {e}");
        return ExitCode::from(2);
    }
    eprintln!(
        "vecr-verify: suites {}, degree ≤ {}, weight ≤ {}",
        cfg.suites.join(","),
        cfg.max_degree,
        cfg.max_weight
    );
    let reports = match checks::run(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("vecr-verify: {e}");
            return ExitCode::from(2);
        }
    };
    println!("{}", checks::render(&reports, cfg.format));
    if checks::all_passed(&reports) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
