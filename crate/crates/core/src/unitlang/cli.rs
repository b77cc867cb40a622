//! Command-line front end for `unitc`.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use super::ast::{Ident, Statement, StatementKind};
use super::eval::{Diagnostic, Evaluator, StmtResult};
use super::lexer::{tokenize, Pos};
use super::parser::parse_expr;
use super::{check_source, load_definitions, Report, DEFAULT_DEFINITIONS};
use crate::scales::Registry;

/// Environment variable naming a definitions file.
pub const DEFS_ENV: &str = "UNITC_DEFS";

#[derive(Parser, Debug)]
#[command(name = "unitc", version, about = "Check and query scale definitions")]
struct Cli {
    #[command(flatten)]
    defs: DefsArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct DefsArgs {
    /// Definitions file to load instead of the built-in one.
    #[arg(long, global = true, value_name = "FILE", conflicts_with = "no_defs")]
    defs: Option<PathBuf>,
    /// Start without any definitions.
    #[arg(long, global = true)]
    no_defs: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the statements in one or more files.
    Check {
        #[arg(required = true, value_name = "FILE")]
        files: Vec<PathBuf>,
        /// Print a JSON report per file.
        #[arg(long)]
        json: bool,
    },
    /// Print the dimension of an expression.
    Dim { expr: String },
    /// Express a scale in a basis of three scales.
    Express {
        expr: String,
        #[arg(long, value_name = "A,B,C")]
        basis: String,
    },
    /// List the dimensionless groups of a set of scales.
    Pigroups {
        #[arg(value_name = "A,B,...")]
        names: String,
    },
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let registry = match definitions(&cli.defs) {
        Ok(r) => r,
        Err(msg) => {
            let _ = writeln!(err, "unitc: {msg}");
            return 2;
        }
    };
    match cli.command {
        Command::Check { files, json } => check_files(&files, json, registry.as_ref(), out, err),
        Command::Dim { expr } => single(registry, out, err, |pos| {
            Ok(Statement {
                kind: StatementKind::Dim(expression(&expr)?),
                pos,
            })
        }),
        Command::Express { expr, basis } => single(registry, out, err, |pos| {
            let names = name_list(&basis);
            let basis: [Ident; 3] = names.try_into().map_err(|v: Vec<Ident>| {
                Diagnostic::error(pos, "UsageError", format!("--basis needs three names, got {}", v.len()))
            })?;
            Ok(Statement {
                kind: StatementKind::Express(expression(&expr)?, basis),
                pos,
            })
        }),
        Command::Pigroups { names } => single(registry, out, err, |pos| {
            Ok(Statement {
                kind: StatementKind::PiGroups(name_list(&names)),
                pos,
            })
        }),
    }
}

fn definitions(args: &DefsArgs) -> Result<Option<Registry>, String> {
    if args.no_defs {
        return Ok(None);
    }
    let path = args.defs.clone().or_else(|| std::env::var_os(DEFS_ENV).map(PathBuf::from));
    let loaded = match &path {
        Some(p) => {
            let src = std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            load_definitions(&src).map_err(|e| format!("{}: {e}", p.display()))?
        }
        None => load_definitions(DEFAULT_DEFINITIONS).map_err(|e| format!("built-in definitions: {e}"))?,
    };
    Ok(Some(loaded))
}

fn expression(src: &str) -> Result<super::ast::Expr, Diagnostic> {
    let tokens = tokenize(src).map_err(|e| Diagnostic::error(e.pos, "LexError", e.message))?;
    parse_expr(&tokens).map_err(|e| Diagnostic::error(e.pos, "ParseError", e.message))
}

fn name_list(list: &str) -> Vec<Ident> {
    let mut col = 1;
    let mut names = Vec::new();
    for part in list.split(',') {
        let lead = part.chars().take_while(|c| c.is_whitespace()).count();
        names.push(Ident::new(part.trim(), Pos::new(1, col + lead)));
        col += part.chars().count() + 1;
    }
    names
}

fn single<F>(registry: Option<Registry>, out: &mut dyn Write, err: &mut dyn Write, build: F) -> i32
where
    F: FnOnce(Pos) -> Result<Statement, Diagnostic>,
{
    let report = match build(Pos::new(1, 1)) {
        Ok(stmt) => {
            let mut ev = registry.map(Evaluator::with_registry).unwrap_or_default();
            ev.run(std::slice::from_ref(&stmt));
            let (_, results, diagnostics) = ev.into_parts();
            Report {
                version: super::REPORT_VERSION,
                results,
                diagnostics,
            }
        }
        Err(d) => Report {
            version: super::REPORT_VERSION,
            results: Vec::new(),
            diagnostics: vec![d],
        },
    };
    for d in &report.diagnostics {
        let _ = writeln!(err, "<arg>:{d}");
    }
    for r in &report.results {
        let _ = writeln!(out, "{}", render_payload(r));
    }
    report.exit_code()
}

fn check_files(files: &[PathBuf], json: bool, registry: Option<&Registry>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let reports: Vec<Result<Report, String>> = std::thread::scope(|s| {
        let handles: Vec<_> = files.iter().map(|f| s.spawn(move || check_file(f, registry))).collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| Err("internal error while checking".into())))
            .collect()
    });
    let mut code = 0;
    for (file, report) in files.iter().zip(reports) {
        let name = file.display();
        match report {
            Err(msg) => {
                let _ = writeln!(err, "{name}: {msg}");
                code = code.max(2);
            }
            Ok(report) => {
                for d in &report.diagnostics {
                    let _ = writeln!(err, "{name}:{d}");
                }
                if json {
                    let _ = out.write_all(report.to_json().as_bytes());
                } else {
                    for r in &report.results {
                        let _ = writeln!(out, "{} => {}", r.stmt, render_payload(r));
                    }
                }
                code = code.max(report.exit_code());
            }
        }
    }
    code
}

fn check_file(path: &Path, registry: Option<&Registry>) -> Result<Report, String> {
    let src = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
    Ok(check_source(&src, registry))
}

fn text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// One-line human-readable rendering of a query result.
pub fn render_payload(r: &StmtResult) -> String {
    let p = &r.payload;
    match r.kind {
        "dim" => text(&p["dims"]),
        "check" if r.ok => "ok".into(),
        "check" => format!("FAILED ({} vs {})", text(&p["lhs"]), text(&p["rhs"])),
        "express" if r.ok => {
            let exps = p["exponents"].as_array().cloned().unwrap_or_default();
            let mut parts: Vec<String> = exps
                .iter()
                .enumerate()
                .map(|(i, e)| format!("c{}={}", i + 1, text(e)))
                .collect();
            parts.push(format!("r={}", text(&p["factor"])));
            parts.join(" ")
        }
        "express" => format!("FAILED (determinant {})", text(&p["determinant"])),
        "pigroups" => {
            let products: Vec<String> = p["products"]
                .as_array()
                .map(|a| a.iter().map(text).collect())
                .unwrap_or_default();
            if products.is_empty() {
                "(none)".into()
            } else {
                products.join("; ")
            }
        }
        "ratio" if r.ok => text(&p["value"]),
        _ => format!("FAILED ({})", text(&p["error"])),
    }
}
