use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;
use sixlines::cases::{self, VerifyError};
use sixlines::catalog::{build_catalog, Catalog};
use sixlines::classify::{self, EnumerationMode};
use sixlines::divisor::DivisorLiteral;
use sixlines::fibration::{build_fibration, FibrationError, FibrationInput};
use sixlines::tables;

mod render;

#[derive(Parser)]
#[command(name = "sixlines", version, about = "Elliptic fibrations on the double plane branched over six lines")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the named (-2)-curves.
    Catalog {
        /// Include the conics through five nodes.
        #[arg(long)]
        conics: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Analyse a fiber divisor, either a named construction or a JSON file.
    Verify {
        /// Construction id such as 2.1, or `all`.
        #[arg(long, conflicts_with = "divisor", required_unless_present = "divisor")]
        case: Option<String>,
        /// JSON object mapping curve names to multiplicities.
        #[arg(long)]
        divisor: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Enumerate fiber configurations.
    Enumerate {
        #[arg(long, value_enum)]
        mode: Mode,
        /// Also print the rule audit.
        #[arg(long)]
        audit: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare the computed classification with the reference tables.
    Tables {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Show every rule and the candidates it removes.
    Audit {
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Infinite,
    Finite,
    Generic,
}

impl From<Mode> for EnumerationMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Infinite => EnumerationMode::Infinite,
            Mode::Finite => EnumerationMode::Finite,
            Mode::Generic => EnumerationMode::Generic,
        }
    }
}

/// Bad input; exits with status 2.
#[derive(Debug)]
struct UsageError(String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

/// Returns whether everything checked out.
fn run(cmd: Command) -> anyhow::Result<bool> {
    match cmd {
        Command::Catalog { conics, format } => {
            let cat = build_catalog(conics);
            match format {
                Format::Json => print_json(&cat.curves())?,
                Format::Csv => render::catalog_csv(&cat, io::stdout())?,
                Format::Text => emit(&render::catalog_text(&cat))?,
            }
            Ok(true)
        }
        Command::Verify { case, divisor, format } => {
            no_csv(format)?;
            let cat = build_catalog(true);
            match (case, divisor) {
                (Some(id), _) => verify_cases(&id, &cat, format),
                (None, Some(path)) => verify_file(&path, &cat, format),
                (None, None) => Err(usage("one of --case or --divisor is required")),
            }
        }
        Command::Enumerate { mode, audit, format } => {
            let cat = build_catalog(true);
            let rows = match mode {
                Mode::Infinite => classify::enumerate_infinite(),
                Mode::Finite => classify::enumerate_finite(&cat)?,
                Mode::Generic => {
                    let inf = classify::enumerate_infinite();
                    let fin = classify::enumerate_finite(&cat)?;
                    classify::enumerate_generic(&fin, &inf)
                }
            };
            let report = audit.then(|| classify::rule_audit(mode.into()));
            match format {
                Format::Json => {
                    let mut v = serde_json::json!({ "rows": rows });
                    if let Some(a) = &report {
                        v["audit"] = serde_json::to_value(a)?;
                    }
                    print_json(&v)?;
                }
                Format::Csv => {
                    if audit {
                        return Err(usage("--audit is not available with --format csv"));
                    }
                    render::rows_csv(&rows, io::stdout())?;
                }
                Format::Text => {
                    emit(&render::rows_text(mode.into(), &rows))?;
                    if let Some(a) = &report {
                        emit("\n")?;
                        emit(&render::audit_text(a))?;
                    }
                }
            }
            Ok(true)
        }
        Command::Tables { format } => {
            no_csv(format)?;
            let rep = tables::compare_tables(&build_catalog(true))?;
            match format {
                Format::Json => print_json(&rep)?,
                _ => emit(&render::tables_text(&rep))?,
            }
            Ok(rep.passed())
        }
        Command::Audit { mode, format } => {
            no_csv(format)?;
            let modes = match mode {
                Some(m) => vec![EnumerationMode::from(m)],
                None => vec![EnumerationMode::Infinite, EnumerationMode::Finite],
            };
            let audits: Vec<_> = modes.into_iter().map(classify::rule_audit).collect();
            match format {
                Format::Json => print_json(&audits)?,
                _ => {
                    for a in &audits {
                        emit(&render::audit_text(a))?;
                        emit("\n")?;
                    }
                }
            }
            Ok(true)
        }
    }
}

fn emit(s: &str) -> anyhow::Result<()> {
    io::stdout().lock().write_all(s.as_bytes())?;
    Ok(())
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        c.downcast_ref::<io::Error>().is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe)
            || c.downcast_ref::<csv::Error>().is_some_and(|e| matches!(e.kind(), csv::ErrorKind::Io(io) if io.kind() == io::ErrorKind::BrokenPipe))
    })
}

fn no_csv(format: Format) -> anyhow::Result<()> {
    if format == Format::Csv {
        return Err(usage("--format csv is only available for catalog and enumerate"));
    }
    Ok(())
}

/// Pretty JSON with sorted keys, so re-serializing parsed output is a no-op.
fn print_json<T: serde::Serialize + ?Sized>(value: &T) -> anyhow::Result<()> {
    let v: Value = serde_json::to_value(value)?;
    emit(&format!("{}\n", serde_json::to_string_pretty(&v)?))
}

fn verify_cases(id: &str, cat: &Catalog, format: Format) -> anyhow::Result<bool> {
    let ids: Vec<&str> = if id == "all" { cases::case_ids() } else { vec![id] };
    let mut results = Vec::new();
    for id in ids {
        match cases::verify_construction(id, cat) {
            Ok(v) => results.push(v),
            Err(e @ VerifyError::UnknownCase(_)) => return Err(usage(e.to_string())),
            Err(e) => return Err(e.into()),
        }
    }
    let ok = results.iter().all(|v| v.passed());
    match format {
        Format::Json if results.len() == 1 => print_json(&results[0])?,
        Format::Json => print_json(&results)?,
        _ => {
            for v in &results {
                emit(&render::verification_text(v))?;
            }
        }
    }
    Ok(ok)
}

fn verify_file(path: &PathBuf, cat: &Catalog, format: Format) -> anyhow::Result<bool> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
        .map_err(|e| usage(format!("{e:#}")))?;
    let lit = DivisorLiteral::from_json(&text).map_err(|e| usage(input_message(&e.to_string(), e.token())))?;
    let report = match build_fibration(&FibrationInput::new(lit, cat)) {
        Ok(r) => r,
        Err(FibrationError::Divisor(e)) => return Err(usage(input_message(&e.to_string(), e.token()))),
        Err(FibrationError::Catalog(e)) => return Err(usage(e.to_string())),
        Err(e) => {
            eprintln!("{e}");
            return Ok(false);
        }
    };
    match format {
        Format::Json => print_json(&report)?,
        _ => emit(&render::report_text(&report))?,
    }
    Ok(report.warnings.is_empty())
}

fn input_message(msg: &str, token: Option<&str>) -> String {
    match token {
        Some(t) => format!("{msg} (offending token: {t})"),
        None => msg.to_string(),
    }
}
