//! Command-line front end for `bipolar-fre`.
//!
//! [`run`] does all the work and returns what to print plus the exit code:
//! `0` solvable or check passed, `1` unsolvable or check failed, `2` input
//! error, `3` enumeration cap exceeded.

pub mod args;
pub mod commands;
pub mod document;
pub mod error;
pub mod report;

use bipolar_fre::Limits;
use serde::Serialize;

pub use args::{Cli, Command, Format};
pub use commands::Options;
pub use document::{parse_problem, render_problem, ProblemDocument};
pub use error::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn render<T: Serialize>(format: Format, value: &T, text: impl FnOnce(&T) -> String) -> String {
    match format {
        Format::Text => text(value),
        Format::Structured => {
            let mut s = serde_json::to_string_pretty(value).expect("reports always serialize");
            s.push('\n');
            s
        }
    }
}

fn dispatch(cli: &Cli) -> Result<(String, i32), CliError> {
    let opts = Options {
        limits: Limits {
            max_enum: cli.max_enum,
            ..Limits::default()
        },
        max_oracle: cli.max_oracle,
        decimals: cli.decimals,
        timing: cli.timing,
    };
    let code = |ok: bool| if ok { 0 } else { 1 };
    match &cli.command {
        Command::Solve { file } => {
            let (doc, system) = commands::load_problem(file)?;
            let r = commands::solve(&system, &opts)?;
            let ok = r.verdict == report::VerdictLabel::Solvable;
            Ok((render(cli.format, &r, |r| r.to_text(doc.column_labels.as_deref())), code(ok)))
        }
        Command::Check { file, solution } => {
            let (_, system) = commands::load_problem(file)?;
            let candidate = commands::load_candidate(solution)?;
            let r = commands::check(&system, &candidate)?;
            Ok((render(cli.format, &r, report::CheckReport::to_text), code(r.verdict)))
        }
        Command::Pairs { file } => {
            let (_, system) = commands::load_problem(file)?;
            let r = commands::pairs(&system, &opts)?;
            let ok = r.verdict == report::VerdictLabel::Solvable;
            Ok((render(cli.format, &r, report::PairsReport::to_text), code(ok)))
        }
        Command::Oracle { file } => {
            let (_, system) = commands::load_problem(file)?;
            let r = commands::oracle(&system, &opts)?;
            let ok = r.verdict == report::VerdictLabel::Solvable;
            Ok((render(cli.format, &r, report::OracleDoc::to_text), code(ok)))
        }
        Command::Gen { seed, m, n, grid, out } => {
            let r = commands::generate(*seed, *m as usize, *n as usize, *grid, out)?;
            Ok((render(cli.format, &r, report::GenReport::to_text), 0))
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok((stdout, code)) => Outcome {
            stdout,
            stderr: String::new(),
            code,
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        },
    }
}
