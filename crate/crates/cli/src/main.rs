use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use meyniel_cli::{run, Cli, Command, EXIT_USAGE};

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();

    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // clap uses 0 for --help/--version and 2 for usage errors.
            return ExitCode::from(e.exit_code() as u8);
        }
    };

    let outcome = match run(&cli, &mut std::io::stdin().lock()) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {}", e.message);
            return ExitCode::from(e.code as u8);
        }
    };

    eprint!("{}", outcome.stderr);
    // `search` handles -o itself; everything else writes its output there.
    let to_file = cli
        .output
        .as_ref()
        .filter(|_| !matches!(cli.command, Command::Search(_)));
    let written = match to_file {
        Some(path) => {
            std::fs::write(path, &outcome.stdout).map_err(|e| format!("{}: {e}", path.display()))
        }
        None => std::io::stdout()
            .write_all(outcome.stdout.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_USAGE as u8);
    }
    ExitCode::from(outcome.code as u8)
}
