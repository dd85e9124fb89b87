//! The `kodaira` command-line tool.
//!
//! Exit statuses: 0 success, 1 usage or parse error, 2 validation failure
//! or unrecognized curve.

pub mod document;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use kodaira_core::{
    build, enumerate_types, partner_matrix, recognize, subclass, CatalogError, CurveConfiguration, InvariantError,
    KodairaType, PartnerError,
};
use serde::Serialize;
use thiserror::Error;

use document::{parse_document, DocumentError};
use report::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Document { path: PathBuf, source: DocumentError },
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Partner(#[from] PartnerError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => EXIT_USAGE,
            CliError::Catalog(CatalogError::BadSpec(_)) => EXIT_USAGE,
            CliError::Document {
                source: DocumentError::Parse { .. },
                ..
            } => EXIT_USAGE,
            _ => EXIT_INVALID,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "kodaira",
    version,
    about = "Kodaira fibers, their invariants and derived-partner screening"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every fiber family with its parameter constraints.
    List,
    /// Full invariant report for one type, e.g. `IStar(3)` or `mI(2,4)`.
    Show { spec: String },
    /// Recognize the curve described by a configuration document.
    Classify { path: PathBuf },
    /// Screen two curves (type specs or document paths) for partnership.
    Compare { a: String, b: String },
    /// Verdicts for every pair of types with N <= max-n and 2 <= m <= max-m.
    Matrix {
        #[arg(long, default_value_t = 4)]
        max_n: u32,
        #[arg(long, default_value_t = 3)]
        max_m: u32,
    },
}

fn emit<T: Serialize>(format: Format, value: &T, table: impl FnOnce(&T) -> String) -> String {
    match format {
        Format::Table => table(value),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
            s.push('\n');
            s
        }
    }
}

fn read_document(path: &Path) -> Result<CurveConfiguration, CliError> {
    let source = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_document(&source).map_err(|source| CliError::Document {
        path: path.to_path_buf(),
        source,
    })
}

/// A type spec, or failing that an existing document path.
fn resolve(arg: &str) -> Result<(String, CurveConfiguration), CliError> {
    match arg.parse::<KodairaType>() {
        Ok(t) => Ok((t.to_string(), build(t)?)),
        Err(e) => {
            let path = Path::new(arg);
            if path.is_file() {
                Ok((arg.to_string(), read_document(path)?))
            } else {
                Err(e.into())
            }
        }
    }
}

/// Runs one command; returns stdout text and the exit status.
pub fn execute(cli: &Cli) -> Result<(String, i32), CliError> {
    let format = cli.format;
    match &cli.command {
        Command::List => Ok((emit(format, &list_report(), render_list), EXIT_OK)),
        Command::Show { spec } => {
            let t: KodairaType = spec.parse()?;
            Ok((emit(format, &show_report(t)?, render_show), EXIT_OK))
        }
        Command::Classify { path } => {
            let config = read_document(path)?;
            let report = match recognize(&config) {
                Ok(t) => ClassifyReport {
                    recognized: true,
                    kodaira_type: Some(t),
                    subclass: Some(subclass(t)),
                    reason: None,
                },
                Err(reason) => ClassifyReport {
                    recognized: false,
                    kodaira_type: None,
                    subclass: None,
                    reason: Some(reason.to_string()),
                },
            };
            let code = if report.recognized { EXIT_OK } else { EXIT_INVALID };
            Ok((emit(format, &report, render_classify), code))
        }
        Command::Compare { a, b } => {
            let (left, x) = resolve(a)?;
            let (right, y) = resolve(b)?;
            let report = compare_report(left, right, &x, &y)?;
            Ok((emit(format, &report, render_compare), EXIT_OK))
        }
        Command::Matrix { max_n, max_m } => {
            let types = enumerate_types(*max_n, *max_m);
            let report = MatrixReport {
                max_n: *max_n,
                max_m: *max_m,
                table: partner_matrix(&types)?,
            };
            Ok((emit(format, &report, render_matrix), EXIT_OK))
        }
    }
}

/// Parses arguments, runs, writes to the given streams and returns the
/// process exit status.
pub fn run<I, T>(args: I, stdout: &mut impl Write, stderr: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
            } else {
                let _ = write!(stdout, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => {
            let _ = stdout.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
