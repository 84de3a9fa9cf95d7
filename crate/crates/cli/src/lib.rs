//! Command-line surface for `atlas-core`.
//!
//! [`run`] parses an argument vector and returns what would be written to
//! stdout and stderr together with the exit status, so the binary is a thin
//! wrapper and the commands can be driven directly from tests.

pub mod check;
pub mod commands;
pub mod document;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use commands::{CmdResult, Failure};
use document::{Format, Kind, OutputDocument, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    InvariantFailure = 1,
    Usage = 2,
    Domain = 3,
    TableDiff = 4,
    Internal = 5,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "atlas",
    version,
    about = "Roots, lines and monodromy orbits of cubic surfaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the document to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The 72 roots in canonical order.
    Roots,
    /// The 27 lines with their classes.
    Lines,
    /// The 27x27 incidence matrix of the lines.
    Incidence,
    /// The 6 ways of writing a root as a difference of skew lines.
    Decompose {
        /// Seven comma-separated integers, e.g. 0,1,-1,0,0,0,0.
        #[arg(allow_hyphen_values = true)]
        root: String,
    },
    /// Orbits of W(R_e) on the 72 roots.
    Orbits(OrbitsArgs),
    /// Orbit counts for all 21 configurations.
    Table1 {
        /// Compare against the published counts; exit 4 on any difference.
        #[arg(long)]
        diff: bool,
    },
    /// Fixed-point-free order-3 elements and the Eckardt line model.
    Eckardt,
    /// Run the invariant suite.
    Check,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct OrbitsArgs {
    /// Configuration label such as 2A1+A3, D4 or E6.
    #[arg(long)]
    pub config: Option<String>,

    /// Generating roots; repeat the flag or separate roots with ';'.
    #[arg(long, allow_hyphen_values = true)]
    pub roots: Vec<String>,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub status: ExitStatus,
}

fn check_cmd() -> CmdResult {
    let results = check::run_suite();
    let mut table = Table::new(&["name", "passed", "detail"]);
    for r in &results {
        let detail = r.counterexample.as_deref().unwrap_or(&r.detail);
        table.push(vec![
            r.name.to_string(),
            r.passed.to_string(),
            detail.to_string(),
        ]);
    }
    let passed = results.iter().filter(|r| r.passed).count();
    let total = results.len();
    table
        .notes
        .push(format!("{passed} of {total} invariants hold."));
    let first = results.iter().find(|r| !r.passed).cloned();
    let doc = OutputDocument::new(
        Kind::CheckReport,
        json!({ "passed": passed, "total": total, "results": results }),
        table,
    );
    match first {
        None => Ok(doc),
        Some(f) => Err(Failure {
            status: ExitStatus::InvariantFailure,
            message: format!(
                "invariant failed: {}: {}",
                f.name,
                f.counterexample.unwrap_or_default()
            ),
            document: Some(Box::new(doc)),
        }),
    }
}

fn dispatch(command: &Command) -> CmdResult {
    match command {
        Command::Roots => commands::roots(),
        Command::Lines => commands::lines(),
        Command::Incidence => commands::incidence(),
        Command::Decompose { root } => commands::decompose(root),
        Command::Orbits(a) => commands::orbits_cmd(a.config.as_deref(), &a.roots),
        Command::Table1 { diff } => commands::table1_cmd(*diff),
        Command::Eckardt => commands::eckardt(),
        Command::Check => check_cmd(),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let status = if e.use_stderr() {
                ExitStatus::Usage
            } else {
                ExitStatus::Success
            };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), text)
            } else {
                (text, String::new())
            };
            return Outcome {
                stdout,
                stderr,
                status,
            };
        }
    };

    let (doc, status, mut stderr) = match dispatch(&cli.command) {
        Ok(doc) => (Some(doc), ExitStatus::Success, String::new()),
        Err(f) => (
            f.document.map(|d| *d),
            f.status,
            format!("error: {}\n", f.message),
        ),
    };
    let mut stdout = String::new();
    if let Some(doc) = doc {
        let rendered = doc.render(cli.format);
        match &cli.out {
            Some(path) => {
                if let Err(e) = std::fs::write(path, rendered) {
                    stderr.push_str(&format!("error: cannot write {}: {e}\n", path.display()));
                    return Outcome {
                        stdout,
                        stderr,
                        status: ExitStatus::Usage,
                    };
                }
            }
            None => stdout = rendered,
        }
    }
    Outcome {
        stdout,
        stderr,
        status,
    }
}
