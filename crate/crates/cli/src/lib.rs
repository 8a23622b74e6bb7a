//! Command implementations behind the `fibcube` binary.
//!
//! Every command renders into an [`Output`] instead of printing directly, so
//! the binary only has to route text and map errors onto exit codes.

use std::path::Path;

use fibcube_core::{BigNat, Budget, Family};

pub mod args;
mod commands;
pub mod error;

pub use args::Cli;
pub use error::{CliError, CliResult};

use args::{Command, Format};

/// Rendered command output.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn text(stdout: String) -> Self {
        Output {
            stdout,
            stderr: String::new(),
        }
    }
}

pub fn run(cli: Cli) -> CliResult<Output> {
    match cli.command {
        Command::Seq(a) => commands::seq::run(&a),
        Command::Size(a) => commands::size::run(&a),
        Command::Table(a) => commands::table::run(&a),
        Command::Graph(a) => commands::graph::run(&a),
        Command::Verify(a) => commands::verify::run(&a),
        Command::Bench(a) => commands::bench::run(&a),
    }
}

/// Writes `out.stdout` to `path` when given; the text is then not echoed.
pub fn deliver(mut out: Output, path: Option<&Path>) -> CliResult<Output> {
    if let Some(path) = path {
        std::fs::write(path, out.stdout.as_bytes())?;
        out.stdout.clear();
    }
    Ok(out)
}

pub(crate) fn resolve_budget(flag: Option<u64>) -> CliResult<Budget> {
    match flag {
        Some(b) => Ok(Budget(b)),
        None => Budget::from_env().map_err(CliError::Usage),
    }
}

pub(crate) fn validate_family(family: Family) -> CliResult<Family> {
    family.validate()?;
    Ok(family)
}

pub(crate) fn require_format(format: Format, allowed: &[Format], command: &str) -> CliResult<()> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        let names: Vec<String> = allowed.iter().map(|f| format!("{f:?}").to_lowercase()).collect();
        Err(CliError::Usage(format!(
            "format {} is not available for `{command}` (use one of: {})",
            format!("{format:?}").to_lowercase(),
            names.join(", ")
        )))
    }
}

pub(crate) fn decimal(values: &[BigNat]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

pub(crate) fn to_json_text(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json renders");
    s.push('\n');
    s
}
