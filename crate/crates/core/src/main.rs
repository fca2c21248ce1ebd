use clap::Parser;
use snc_spectrum::cli::{self, Cli, RunConfig};
use std::io::{IsTerminal, Write};

fn main() {
    let cli = Cli::parse();
    let color = std::env::var(cli::COLOR_ENV).map_or(true, |v| v != "0")
        && std::io::stdout().is_terminal()
        && cli.out.is_none();
    let config = RunConfig::from_cli(cli, color);

    let outcome = cli::run(&config);
    if !outcome.stderr.is_empty() {
        eprint!("{}", outcome.stderr);
    }
    match &config.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, outcome.stdout.as_bytes()) {
                eprintln!("error: cannot write {}: {e}", path.display());
                std::process::exit(cli::EXIT_USER_ERROR);
            }
        }
        None => {
            print!("{}", outcome.stdout);
            let _ = std::io::stdout().flush();
        }
    }
    std::process::exit(outcome.exit_code);
}
