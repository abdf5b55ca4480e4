use clap::{Parser, Subcommand};
use endcore::cli::{self, Report};
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact-arithmetic VN-core verifier and coend construction engine.
#[derive(Parser)]
#[command(name = "endcore", version, about)]
struct Cli {
    /// Emit the machine-readable JSON report instead of the text rendering.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full check suite for a JSON document (any kind).
    Check {
        /// Path to the document.
        file: PathBuf,
    },
    /// Enumerate unital VN-cores in Set on a labeled carrier and compare
    /// against the independent group-table oracle.
    Enumerate {
        /// Carrier size (1..=4).
        #[arg(long)]
        size: usize,
        /// Write the full census as JSON to this path.
        #[arg(long)]
        census: Option<PathBuf>,
    },
    /// Run the coend pipeline for a "tannaka" document.
    Tannaka {
        /// Path to the document.
        file: PathBuf,
        /// Stop after computing the coend (required for presentations
        /// without monoidal/functor data).
        #[arg(long)]
        coend_only: bool,
        /// Write the JSON report to this path.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Run every built-in example and aggregate the results.
    Examples {
        /// Only run examples whose name contains this substring.
        #[arg(long)]
        only: Option<String>,
        /// Add the sign-flipped Ue fixture (its targeted checks fail).
        #[arg(long)]
        perturb: bool,
    },
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let outcome = match &args.command {
        Command::Check { file } => cli::cmd_check(file),
        Command::Enumerate { size, census } => cli::cmd_enumerate(*size, census.as_deref()),
        Command::Tannaka { file, coend_only, report } => {
            cli::cmd_tannaka(file, *coend_only, report.as_deref())
        }
        Command::Examples { only, perturb } => Ok(cli::cmd_examples(only.as_deref(), *perturb)),
    };
    match outcome {
        Ok(report) => {
            render(&report, args.json);
            ExitCode::from(report.exit_code() as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn render(report: &Report, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(report).expect("report serializes")
        );
    } else {
        print!("{report}");
    }
}
