//! Evaluation of unit-language programs against a [`Registry`].

use serde::Serialize;
use serde_json::{json, Value};

use super::ast::{Expr, ExprKind, Ident, Statement, StatementKind};
use super::lexer::Pos;
use crate::error::Error;
use crate::exactla::{solve_linear, Rational};
use crate::scales::{
    dims_matrix, pi_groups, scale_determinant, DimVector, Quantity, Registry, Scale, ScaleBasis, SignedScale,
};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Failure,
    Info,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Diagnostic {
    pub severity: Severity,
    pub line: usize,
    pub column: usize,
    pub code: String,
    pub message: String,
}

impl Diagnostic {
    pub fn new(severity: Severity, pos: Pos, code: &str, message: impl Into<String>) -> Self {
        Diagnostic {
            severity,
            line: pos.line,
            column: pos.column,
            code: code.into(),
            message: message.into(),
        }
    }

    pub fn error(pos: Pos, code: &str, message: impl Into<String>) -> Self {
        Diagnostic::new(Severity::Error, pos, code, message)
    }
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sev = match self.severity {
            Severity::Error => "error",
            Severity::Failure => "failure",
            Severity::Info => "info",
        };
        write!(f, "{}:{}: {sev}[{}]: {}", self.line, self.column, self.code, self.message)
    }
}

/// Outcome of one query statement.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct StmtResult {
    pub stmt: String,
    pub kind: &'static str,
    pub ok: bool,
    pub payload: Value,
}

/// Semantic error carrying the position to report it at.
struct Fault(Diagnostic);

type EResult<T> = Result<T, Fault>;

fn fault(pos: Pos, err: Error) -> Fault {
    let code = match &err {
        Error::FractionalPowerOfNegative { .. } => "FractionalPowerOfNegative",
        Error::ZeroToNonpositivePower { .. } => "ZeroToNonpositivePower",
        Error::DivisionByZero => "DivisionByZero",
        Error::DuplicateName(_) => "DuplicateDefinition",
        Error::CoefficientOutOfRange(_) => "CoefficientOutOfRange",
        _ => "EvaluationError",
    };
    Fault(Diagnostic::error(pos, code, err.to_string()))
}

/// Evaluation state: the three base names, once declared, and every scale
/// defined so far.
#[derive(Clone, Debug, Default)]
pub struct Evaluator {
    pending_bases: Vec<Ident>,
    registry: Option<Registry>,
    results: Vec<StmtResult>,
    diagnostics: Vec<Diagnostic>,
}

impl Evaluator {
    pub fn new() -> Self {
        Evaluator::default()
    }

    /// Starts from an already loaded set of definitions.
    pub fn with_registry(registry: Registry) -> Self {
        Evaluator {
            registry: Some(registry),
            ..Evaluator::default()
        }
    }

    pub fn registry(&self) -> Option<&Registry> {
        self.registry.as_ref()
    }

    pub fn into_parts(self) -> (Option<Registry>, Vec<StmtResult>, Vec<Diagnostic>) {
        (self.registry, self.results, self.diagnostics)
    }

    pub fn run(&mut self, program: &[Statement]) {
        for stmt in program {
            if let Err(Fault(d)) = self.statement(stmt) {
                self.diagnostics.push(d);
            }
        }
    }

    fn names(&self) -> [&str; 3] {
        self.registry
            .as_ref()
            .map(Registry::base_names)
            .unwrap_or(crate::scales::DEFAULT_BASE_NAMES)
    }

    fn require_registry(&self, pos: Pos) -> EResult<&Registry> {
        self.registry.as_ref().ok_or_else(|| {
            Fault(Diagnostic::error(
                pos,
                "MissingBases",
                format!(
                    "three base statements are required before this statement ({} declared)",
                    self.pending_bases.len()
                ),
            ))
        })
    }

    fn statement(&mut self, stmt: &Statement) -> EResult<()> {
        match &stmt.kind {
            StatementKind::Base(name) => self.base(name),
            StatementKind::ScaleDef { name, signed, expr, coeff } => {
                let value = self.eval(expr)?;
                let factor = coeff.as_ref().map_or(1.0, |c| c.value);
                let value = SignedScale::new(value.dims().clone(), value.coeff() * factor);
                if !value.coeff().is_finite() {
                    return Err(Fault(Diagnostic::error(
                        name.pos,
                        "CoefficientOutOfRange",
                        format!("scale `{}` has a coefficient outside the floating-point range", name.name),
                    )));
                }
                let quantity = if *signed {
                    Quantity::Signed(value)
                } else {
                    match value.as_positive() {
                        Some(k) => Quantity::Scale(k),
                        None => {
                            return Err(Fault(Diagnostic::error(
                                name.pos,
                                "NonPositiveCoefficient",
                                format!(
                                    "scale `{}` has coefficient {}; declare it `signed` to allow this",
                                    name.name,
                                    value.coeff()
                                ),
                            )))
                        }
                    }
                };
                let registry = self.registry.as_mut().expect("checked by eval");
                registry.insert(&name.name, quantity).map_err(|_| duplicate(name))
            }
            StatementKind::Dim(expr) => {
                let v = self.eval(expr)?;
                let names = self.names();
                let payload = json!({
                    "dims": v.dims().render(&names),
                    "exponents": v.dims().components(),
                });
                self.push(stmt, "dim", true, payload);
                Ok(())
            }
            StatementKind::Check(lhs, rhs) => {
                let (a, b) = (self.eval(lhs)?, self.eval(rhs)?);
                let names = self.names();
                let (da, db) = (a.dims().render(&names), b.dims().render(&names));
                let ok = a.dims() == b.dims();
                if !ok {
                    self.diagnostics.push(Diagnostic::new(
                        Severity::Failure,
                        stmt.pos,
                        "CheckFailed",
                        format!("`{lhs}` has dimension {da} but `{rhs}` has dimension {db}"),
                    ));
                }
                self.push(stmt, "check", ok, json!({ "lhs": da, "rhs": db }));
                Ok(())
            }
            StatementKind::Express(expr, basis) => self.express(stmt, expr, basis),
            StatementKind::PiGroups(names) => {
                let values = names
                    .iter()
                    .map(|n| self.lookup(n))
                    .collect::<EResult<Vec<_>>>()?;
                let dims: Vec<DimVector> = values.iter().map(|v| v.dims().clone()).collect();
                let groups = pi_groups(&dims);
                let products: Vec<String> = groups.iter().map(|g| render_product(names, g)).collect();
                let payload = json!({
                    "names": names.iter().map(|n| n.name.as_str()).collect::<Vec<_>>(),
                    "groups": groups,
                    "products": products,
                });
                self.push(stmt, "pigroups", true, payload);
                Ok(())
            }
            StatementKind::Ratio(lhs, rhs) => {
                let (a, b) = (self.eval(lhs)?, self.eval(rhs)?);
                match a.ratio(&b) {
                    Ok(r) => self.push(stmt, "ratio", true, json!({ "value": r })),
                    Err(e) => {
                        let code = match e {
                            Error::DimensionMismatch { .. } => "DimensionMismatch",
                            _ => "DivisionByZero",
                        };
                        self.diagnostics.push(Diagnostic::new(
                            Severity::Failure,
                            stmt.pos,
                            code,
                            format!("cannot compare `{lhs}` with `{rhs}`: {e}"),
                        ));
                        self.push(stmt, "ratio", false, json!({ "error": code }));
                    }
                }
                Ok(())
            }
        }
    }

    fn push(&mut self, stmt: &Statement, kind: &'static str, ok: bool, payload: Value) {
        self.results.push(StmtResult {
            stmt: stmt.to_string(),
            kind,
            ok,
            payload,
        });
    }

    fn base(&mut self, name: &Ident) -> EResult<()> {
        if let Some(reg) = &self.registry {
            if reg.base_index(&name.name).is_some() || reg.get(&name.name).is_some() {
                return Err(duplicate(name));
            }
            return Err(Fault(Diagnostic::error(
                name.pos,
                "TooManyBases",
                format!("base `{}`: exactly three base spaces are supported and all are declared", name.name),
            )));
        }
        if self.pending_bases.iter().any(|b| b.name == name.name) {
            return Err(duplicate(name));
        }
        self.pending_bases.push(name.clone());
        if self.pending_bases.len() == 3 {
            let names: [&str; 3] = std::array::from_fn(|i| self.pending_bases[i].name.as_str());
            self.registry = Some(Registry::new(names));
        }
        Ok(())
    }

    fn lookup(&self, name: &Ident) -> EResult<SignedScale> {
        let reg = self.require_registry(name.pos)?;
        if let Some(i) = reg.base_index(&name.name) {
            return Ok(Scale::base_unit(i).into());
        }
        reg.get(&name.name).map(Quantity::to_signed).ok_or_else(|| {
            Fault(Diagnostic::error(
                name.pos,
                "UndefinedIdentifier",
                format!("`{}` is not defined", name.name),
            ))
        })
    }

    fn eval(&self, expr: &Expr) -> EResult<SignedScale> {
        self.require_registry(expr.pos)?;
        match &expr.kind {
            ExprKind::Ident(name) => self.lookup(&Ident::new(name, expr.pos)),
            ExprKind::Literal(n) => Ok(SignedScale::new(DimVector::zero(), n.value)),
            ExprKind::Mul(a, b) => Ok(self.eval(a)?.mul(&self.eval(b)?)),
            ExprKind::Div(a, b) => self.eval(a)?.div(&self.eval(b)?).map_err(|e| fault(b.pos, e)),
            ExprKind::Pow(base, q) => self.eval(base)?.pow(q).map_err(|e| fault(expr.pos, e)),
            ExprKind::Group(inner) => self.eval(inner),
        }
    }

    fn express(&mut self, stmt: &Statement, expr: &Expr, basis: &[Ident; 3]) -> EResult<()> {
        let target = self.eval(expr)?;
        let elems = basis
            .iter()
            .map(|n| self.lookup(n))
            .collect::<EResult<Vec<_>>>()?;
        let names: Vec<&str> = basis.iter().map(|n| n.name.as_str()).collect();
        let det = scale_determinant([&elems[0], &elems[1], &elems[2]]);
        if det.is_zero() {
            self.diagnostics.push(Diagnostic::new(
                Severity::Failure,
                stmt.pos,
                "SingularBasis",
                format!("({}) is not a scale basis: determinant 0", names.join(", ")),
            ));
            self.push(stmt, "express", false, json!({ "basis": names, "determinant": det }));
            return Ok(());
        }
        let mut magnitudes = Vec::with_capacity(3);
        for (n, e) in basis.iter().zip(&elems) {
            match e.magnitude() {
                Some(m) => {
                    if e.coeff() < 0.0 {
                        self.diagnostics.push(Diagnostic::new(
                            Severity::Info,
                            n.pos,
                            "SignedBasisElement",
                            format!("`{}` has a negative coefficient; its magnitude is used", n.name),
                        ));
                    }
                    magnitudes.push(m);
                }
                None => {
                    self.diagnostics.push(Diagnostic::new(
                        Severity::Failure,
                        n.pos,
                        "VanishingBasisElement",
                        format!("`{}` has a vanishing coefficient and cannot be a basis element", n.name),
                    ));
                    self.push(stmt, "express", false, json!({ "basis": names, "determinant": det }));
                    return Ok(());
                }
            }
        }
        let [a, b, c]: [Scale; 3] = magnitudes.try_into().expect("three elements");
        let basis_scales = ScaleBasis::new(a, b, c).map_err(|e| fault(stmt.pos, e))?;
        let (exponents, factor) = match target.magnitude() {
            Some(k) => {
                let e = basis_scales.express(&k).map_err(|e| fault(stmt.pos, e))?;
                (e.exponents.to_vec(), e.factor.get().copysign(target.coeff()))
            }
            None => {
                let m = dims_matrix(basis_scales.elements());
                let x = solve_linear(&m, target.dims().components()).map_err(|e| fault(stmt.pos, e))?;
                (x, 0.0)
            }
        };
        let payload = json!({
            "basis": names,
            "exponents": exponents,
            "factor": factor,
            "determinant": det,
        });
        self.push(stmt, "express", true, payload);
        Ok(())
    }
}

fn duplicate(name: &Ident) -> Fault {
    Fault(Diagnostic::error(
        name.pos,
        "DuplicateDefinition",
        format!("`{}` is already defined", name.name),
    ))
}

/// `c * hbar * G^-1 * m^-2` style rendering of a group, skipping zero exponents.
pub fn render_product(names: &[Ident], exponents: &[Rational]) -> String {
    let parts: Vec<String> = names
        .iter()
        .zip(exponents)
        .filter(|(_, e)| !e.is_zero())
        .map(|(n, e)| {
            if e.is_one() {
                n.name.clone()
            } else if e.is_integer() {
                format!("{}^{e}", n.name)
            } else {
                format!("{}^({e})", n.name)
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" * ")
    }
}
