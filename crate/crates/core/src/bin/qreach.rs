use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qreach::cli_io::{parse_document, run_command, Command, DocumentOptions};
use qreach::Config;

/// Reachability analysis for finite-dimensional quantum control systems.
#[derive(Parser)]
#[command(name = "qreach", version)]
struct Cli {
    /// JSON analysis document
    document: PathBuf,
    #[command(subcommand)]
    command: Cmd,
    #[arg(long, global = true)]
    tolerance_rank: Option<f64>,
    #[arg(long, global = true)]
    tolerance_verdict: Option<f64>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Witness search attempts
    #[arg(long, global = true)]
    budget: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Lie algebra dimension, group class and invariant form
    AnalyzeGroup,
    /// Invariant bilinear form of the traceless generators
    FindJ,
    /// Spectral class of a state
    ClassifyState { state: String },
    /// Whether two states share a spectrum
    Kinematic { a: String, b: String },
    /// Dynamical reachability verdict for a pair
    Reachable { a: String, b: String },
    /// Transitivity on the unitary orbit of a state
    Transitive { state: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let text = match std::fs::read_to_string(&cli.document) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", cli.document.display());
            return ExitCode::from(1);
        }
    };
    let doc = match parse_document(&text) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let flags = DocumentOptions {
        tolerance_rank: cli.tolerance_rank,
        tolerance_verdict: cli.tolerance_verdict,
        seed: cli.seed,
        budget: cli.budget,
    };
    let cfg = doc.options.apply(Config::default(), &flags);
    let command = match cli.command {
        Cmd::AnalyzeGroup => Command::AnalyzeGroup,
        Cmd::FindJ => Command::FindJ,
        Cmd::ClassifyState { state } => Command::ClassifyState(state),
        Cmd::Kinematic { a, b } => Command::Kinematic(a, b),
        Cmd::Reachable { a, b } => Command::Reachable(a, b),
        Cmd::Transitive { state } => Command::Transitive(state),
    };
    let out = run_command(&command, &doc, &cfg);
    // a closed pipe is not an error worth reporting
    let mut stdout = std::io::stdout().lock();
    match cli.output {
        Output::Json => {
            let _ = writeln!(
                stdout,
                "{}",
                serde_json::to_string_pretty(&out.json).expect("json output")
            );
            let _ = writeln!(std::io::stderr(), "{}", out.summary.trim_end());
        }
        Output::Text => {
            let _ = writeln!(stdout, "{}", out.summary.trim_end());
        }
    }
    ExitCode::from(out.exit_code as u8)
}
