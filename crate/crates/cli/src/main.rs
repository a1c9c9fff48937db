//! `oddcore` command-line front end. Every subcommand prints one JSON report
//! tagged with `"schema": "oddcore/1"` (except `generate`, which prints an
//! edge list unless `--format json` is given).
//!
//! Exit codes: 0 when the computation completed (whatever its verdict), 1 for
//! usage or input errors, 2 when a node budget ran out.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

mod commands;
mod input;

use commands::Output;

pub const SCHEMA: &str = "oddcore/1";

#[derive(Debug, Parser)]
#[command(name = "oddcore", version, about = "Odd-cycle extremal graph toolkit")]
struct Cli {
    /// Node budget for each exact search (default: $ODDCORE_BUDGET or 10^8).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,

    /// Output mode.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: commands::Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
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
    let limit = cli.budget.unwrap_or_else(oddcore::budget::default_limit);
    match commands::run(&cli.command, limit) {
        Ok(out) => {
            let code = if out.budget_exceeded { 2 } else { 0 };
            if let Err(e) = emit(&cli.command, out, cli.format) {
                if e.kind() == io::ErrorKind::BrokenPipe {
                    return ExitCode::from(code);
                }
                eprintln!("oddcore: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("oddcore: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn emit(command: &commands::Command, out: Output, format: Option<Format>) -> io::Result<()> {
    let mut stdout = io::stdout().lock();
    if let (Some(text), None | Some(Format::Text)) = (&out.edge_list, format) {
        return stdout.write_all(text.as_bytes());
    }
    let mut report = out.report;
    report.insert("schema".into(), SCHEMA.into());
    report.insert("command".into(), command.name().into());
    match format {
        Some(Format::Text) => {
            for (key, value) in &report {
                match value {
                    serde_json::Value::String(s) => writeln!(stdout, "{key}: {s}")?,
                    other => writeln!(stdout, "{key}: {other}")?,
                }
            }
            Ok(())
        }
        _ => {
            let text = serde_json::to_string(&report).expect("reports serialize");
            writeln!(stdout, "{text}")
        }
    }
}
