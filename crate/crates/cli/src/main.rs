//! `secolor`: batch front end for simultaneous edge colorings, Latin
//! trades, cycle double covers, flows and realizations.
//!
//! Exit status: 0 decided or constructed, 2 verified false or nonexistent,
//! 3 search budget exceeded, 1 usage or I/O error.

mod commands;
mod repro;

use std::process::ExitCode;

use clap::Parser;

use commands::Outcome;

#[derive(Parser)]
#[command(name = "secolor", version, about = "Simultaneous edge colorings and their equivalent objects")]
struct Cli {
    /// Node limit for every exhaustive search
    #[arg(long, global = true, default_value_t = secolor_core::DEFAULT_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: commands::Command,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli.command, cli.budget) {
        Ok(Outcome::Yes) => ExitCode::SUCCESS,
        Ok(Outcome::No) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<secolor_core::Error>() {
                Some(secolor_core::Error::SearchBudgetExceeded(_)) => ExitCode::from(3),
                _ => ExitCode::from(1),
            }
        }
    }
}
