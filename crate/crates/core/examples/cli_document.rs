//! Parsing an analysis document and running every batch command on it, as
//! the `qreach` binary does.

use qreach::cli_io::{parse_document, run_command, Command};
use qreach::Config;

const DOCUMENT: &str = include_str!("../../../docs/documents/ladder5.json");

fn main() -> qreach::Result<()> {
    let doc = parse_document(DOCUMENT)?;
    let cfg = doc.options.apply(Config::default(), &Default::default());
    let commands = [
        Command::AnalyzeGroup,
        Command::FindJ,
        Command::ClassifyState("rho0".into()),
        Command::Kinematic("rho0".into(), "rho1".into()),
        Command::Reachable("rho0".into(), "rho1".into()),
        Command::Transitive("rho0".into()),
    ];
    for command in &commands {
        let out = run_command(command, &doc, &cfg);
        println!(
            "$ qreach ladder5.json {} (exit {})",
            command.name(),
            out.exit_code
        );
        println!("{}\n", out.summary.trim_end());
    }
    let out = run_command(
        &Command::Reachable("rho0".into(), "rho1".into()),
        &doc,
        &cfg,
    );
    println!("{}", serde_json::to_string_pretty(&out.json).unwrap());
    Ok(())
}
