//! A small declarative language for defining scales and querying their
//! dimensions, basis expressions and dimensionless groups.
//!
//! ```text
//! base T; base L; base M;
//! scale c : T^-1 * L = 299792458;
//! dim c;
//! express c in (m, hbar, G);
//! ```

pub mod ast;
pub mod cli;
pub mod eval;
pub mod lexer;
pub mod parser;

use serde::Serialize;

pub use ast::{pretty_print, Expr, ExprKind, Ident, Number, Statement, StatementKind};
pub use eval::{Diagnostic, Evaluator, Severity, StmtResult};
pub use lexer::{tokenize, LexError, Pos, Token, TokenKind};
pub use parser::{parse, parse_expr, ParseError};

use crate::scales::Registry;

/// Definitions file embedded at build time.
pub const DEFAULT_DEFINITIONS: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../defs/si.units"));

pub const REPORT_VERSION: &str = "1";

/// Everything produced by checking one program.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Report {
    pub version: &'static str,
    pub results: Vec<StmtResult>,
    pub diagnostics: Vec<Diagnostic>,
}

impl Report {
    fn from_diagnostics(diagnostics: Vec<Diagnostic>) -> Self {
        Report {
            version: REPORT_VERSION,
            results: Vec::new(),
            diagnostics,
        }
    }

    pub fn has_errors(&self) -> bool {
        self.diagnostics.iter().any(|d| d.severity == Severity::Error)
    }

    pub fn has_failures(&self) -> bool {
        self.diagnostics.iter().any(|d| d.severity == Severity::Failure)
    }

    /// 2 for errors, 1 for failed queries, 0 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.has_errors() {
            2
        } else if self.has_failures() {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }
}

/// Lexes and parses `src`, turning any problems into error diagnostics.
pub fn parse_source(src: &str) -> Result<Vec<Statement>, Vec<Diagnostic>> {
    let tokens = tokenize(src).map_err(|e| vec![Diagnostic::error(e.pos, "LexError", e.message)])?;
    parse(&tokens).map_err(|errs| {
        errs.into_iter()
            .map(|e| Diagnostic::error(e.pos, "ParseError", e.message))
            .collect()
    })
}

/// Runs a program. A program that declares its own bases is self-contained;
/// otherwise it starts from `registry` when one is given.
pub fn check_source(src: &str, registry: Option<&Registry>) -> Report {
    let program = match parse_source(src) {
        Ok(p) => p,
        Err(diags) => return Report::from_diagnostics(diags),
    };
    let declares_bases = program.iter().any(|s| matches!(s.kind, StatementKind::Base(_)));
    let mut ev = match registry.filter(|_| !declares_bases) {
        Some(r) => Evaluator::with_registry(r.clone()),
        None => Evaluator::new(),
    };
    ev.run(&program);
    let (_, results, diagnostics) = ev.into_parts();
    Report {
        version: REPORT_VERSION,
        results,
        diagnostics,
    }
}

#[derive(Clone, PartialEq, Debug, thiserror::Error)]
pub enum DefinitionsError {
    #[error("{0}")]
    Invalid(Diagnostic),
    #[error("definitions declare {0} base spaces; exactly three are required")]
    WrongBaseCount(usize),
}

/// Reads a definitions file: base and scale statements only.
pub fn load_definitions(src: &str) -> Result<Registry, DefinitionsError> {
    let program = parse_source(src).map_err(|mut d| DefinitionsError::Invalid(d.remove(0)))?;
    if let Some(q) = program
        .iter()
        .find(|s| !matches!(s.kind, StatementKind::Base(_) | StatementKind::ScaleDef { .. }))
    {
        return Err(DefinitionsError::Invalid(Diagnostic::error(
            q.pos,
            "NotADefinition",
            format!("`{q}` is a query; definitions files may only contain base and scale statements"),
        )));
    }
    let bases = program.iter().filter(|s| matches!(s.kind, StatementKind::Base(_))).count();
    if bases != 3 {
        return Err(DefinitionsError::WrongBaseCount(bases));
    }
    let mut ev = Evaluator::new();
    ev.run(&program);
    let (registry, _, mut diags) = ev.into_parts();
    if !diags.is_empty() {
        return Err(DefinitionsError::Invalid(diags.remove(0)));
    }
    Ok(registry.expect("three bases declared"))
}
