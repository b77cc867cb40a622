use std::fmt;

use super::lexer::Pos;
use crate::exactla::Rational;

/// Identifier with its source position. Equality ignores the position.
#[derive(Clone, Debug)]
pub struct Ident {
    pub name: String,
    pub pos: Pos,
}

impl Ident {
    pub fn new(name: &str, pos: Pos) -> Self {
        Ident { name: name.into(), pos }
    }
}

impl PartialEq for Ident {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

impl fmt::Display for Ident {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Numeric literal as written, plus its value.
#[derive(Clone, Debug)]
pub struct Number {
    pub text: String,
    pub value: f64,
}

impl PartialEq for Number {
    fn eq(&self, other: &Self) -> bool {
        self.text == other.text
    }
}

impl fmt::Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum ExprKind {
    Ident(String),
    Literal(Number),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Rational),
    Group(Box<Expr>),
}

/// Scale expression. Equality ignores positions.
#[derive(Clone, Debug)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: Pos,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Expr {
    pub fn new(kind: ExprKind, pos: Pos) -> Self {
        Expr { kind, pos }
    }
}

fn fmt_exponent(q: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{q}")
    } else {
        write!(f, "({q})")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Ident(name) => f.write_str(name),
            ExprKind::Literal(n) => write!(f, "{n}"),
            ExprKind::Mul(a, b) => write!(f, "{a} * {b}"),
            ExprKind::Div(a, b) => write!(f, "{a} / {b}"),
            ExprKind::Pow(base, q) => {
                write!(f, "{base}^")?;
                fmt_exponent(q, f)
            }
            ExprKind::Group(inner) => write!(f, "({inner})"),
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum StatementKind {
    Base(Ident),
    ScaleDef {
        name: Ident,
        signed: bool,
        expr: Expr,
        coeff: Option<Number>,
    },
    Dim(Expr),
    Check(Expr, Expr),
    Express(Expr, [Ident; 3]),
    PiGroups(Vec<Ident>),
    Ratio(Expr, Expr),
}

#[derive(Clone, Debug)]
pub struct Statement {
    pub kind: StatementKind,
    pub pos: Pos,
}

impl PartialEq for Statement {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            StatementKind::Base(name) => write!(f, "base {name};"),
            StatementKind::ScaleDef { name, signed, expr, coeff } => {
                if *signed {
                    write!(f, "signed ")?;
                }
                write!(f, "scale {name} : {expr}")?;
                if let Some(c) = coeff {
                    write!(f, " = {c}")?;
                }
                write!(f, ";")
            }
            StatementKind::Dim(e) => write!(f, "dim {e};"),
            StatementKind::Check(a, b) => write!(f, "check {a} ~ {b};"),
            StatementKind::Express(e, [a, b, c]) => write!(f, "express {e} in ({a}, {b}, {c});"),
            StatementKind::PiGroups(names) => {
                let list: Vec<&str> = names.iter().map(|n| n.name.as_str()).collect();
                write!(f, "pigroups ({});", list.join(", "))
            }
            StatementKind::Ratio(a, b) => write!(f, "ratio {a}, {b};"),
        }
    }
}

/// Pretty-prints a program, one statement per line.
pub fn pretty_print(program: &[Statement]) -> String {
    program.iter().map(|s| format!("{s}\n")).collect()
}
