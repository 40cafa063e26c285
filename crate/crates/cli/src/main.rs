mod args;
mod commands;
mod job;

use std::fmt;
use std::process::ExitCode;

use clap::Parser;
use orbitforge::pbw::set_default_degree_cap;
use serde::Serialize;
use serde_json::json;

use args::{Cli, Command};

/// Bad input detected by the front end.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// 1 for a failed mathematical check, 2 for bad input, 3 for an exceeded resource cap.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    for cause in err.chain() {
        if cause.downcast_ref::<UsageError>().is_some() {
            return 2;
        }
        if let Some(e) = cause.downcast_ref::<orbitforge::Error>() {
            use orbitforge::Error as E;
            return if e.is_resource() {
                3
            } else if e.is_usage() || matches!(e, E::NonRegular(_) | E::CoincidentEigenvalues | E::ContextMismatch) {
                2
            } else {
                1
            };
        }
        if cause.downcast_ref::<std::io::Error>().is_some() {
            return 2;
        }
    }
    1
}

fn print<T: Serialize>(value: &T, pretty: bool) {
    let text = if pretty { serde_json::to_string_pretty(value) } else { serde_json::to_string(value) };
    println!("{}", text.expect("JSON values serialize"));
}

fn degree_cap_from_env() -> Result<(), String> {
    match std::env::var("ORBITFORGE_DEGREE_CAP") {
        Ok(text) => {
            let cap = text.trim().parse::<usize>().map_err(|e| format!("ORBITFORGE_DEGREE_CAP=`{text}`: {e}"))?;
            set_default_degree_cap(cap);
            Ok(())
        }
        Err(std::env::VarError::NotPresent) => Ok(()),
        Err(e) => Err(format!("ORBITFORGE_DEGREE_CAP: {e}")),
    }
}

fn report_error(err: &anyhow::Error, pretty: bool) -> i32 {
    eprintln!("error: {err:#}");
    print(&json!({ "error": format!("{err:#}") }), pretty);
    exit_code(err)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Err(msg) = degree_cap_from_env() {
        return ExitCode::from(report_error(&UsageError(msg).into(), cli.pretty) as u8);
    }
    let code = match &cli.command {
        Command::RunJob(a) => match job::load(&a.path) {
            Ok(spec) => {
                let report = job::run(&spec);
                print(&report, cli.pretty);
                report.exit_code()
            }
            Err(e) => report_error(&e, cli.pretty),
        },
        command => match commands::run(command) {
            Ok(outcome) => {
                print(&outcome.payload, cli.pretty);
                for w in &outcome.witnesses {
                    eprintln!("witness: {w}");
                }
                if outcome.passed {
                    0
                } else {
                    1
                }
            }
            Err(e) => report_error(&e, cli.pretty),
        },
    };
    ExitCode::from(code as u8)
}
