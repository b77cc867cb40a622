//! Recursive-descent parser.
//!
//! ```text
//! program   := statement* ;
//! statement := "base" IDENT ";" | ["signed"] "scale" IDENT ":" expr ["=" NUMBER] ";"
//!            | "dim" expr ";" | "check" expr "~" expr ";"
//!            | "express" expr "in" "(" IDENT "," IDENT "," IDENT ")" ";"
//!            | "pigroups" "(" IDENT ("," IDENT)* ")" ";" | "ratio" expr "," expr ";" ;
//! expr      := term (("*" | "/") term)* ;
//! term      := factor ["^" rational] ;
//! factor    := IDENT | NUMBER | "(" expr ")" ;
//! rational  := ["-"] INT | "(" ["-"] INT "/" INT ")" ;
//! ```

use std::fmt;

use num_bigint::BigInt;

use super::ast::{Expr, ExprKind, Ident, Number, Statement, StatementKind};
use super::lexer::{Keyword, Pos, Token, TokenKind};
use crate::exactla::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;

struct Parser<'a> {
    tokens: &'a [Token],
    at: usize,
}

/// Parses a whole program. After an error the parser skips past the next
/// `;` and continues, so every malformed statement is reported.
pub fn parse(tokens: &[Token]) -> Result<Vec<Statement>, Vec<ParseError>> {
    let mut p = Parser { tokens, at: 0 };
    let mut program = Vec::new();
    let mut errors = Vec::new();
    while !p.check(&TokenKind::Eof) {
        match p.statement() {
            Ok(s) => program.push(s),
            Err(e) => {
                errors.push(e);
                p.recover();
            }
        }
    }
    if errors.is_empty() {
        Ok(program)
    } else {
        Err(errors)
    }
}

/// Parses a single expression covering all of `tokens`.
pub fn parse_expr(tokens: &[Token]) -> PResult<Expr> {
    let mut p = Parser { tokens, at: 0 };
    let e = p.expr()?;
    p.expect(&TokenKind::Eof, "end of expression")?;
    Ok(e)
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.tokens[self.at.min(self.tokens.len() - 1)]
    }

    fn check(&self, kind: &TokenKind) -> bool {
        &self.peek().kind == kind
    }

    fn advance(&mut self) -> &Token {
        let t = &self.tokens[self.at.min(self.tokens.len() - 1)];
        if self.at < self.tokens.len() - 1 {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, expected: &str) -> PResult<T> {
        let t = self.peek();
        Err(ParseError {
            pos: t.pos,
            message: format!("expected {expected}, found {}", t.kind),
        })
    }

    fn expect(&mut self, kind: &TokenKind, expected: &str) -> PResult<Pos> {
        if self.check(kind) {
            Ok(self.advance().pos)
        } else {
            self.error(expected)
        }
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.check(kind) {
            self.advance();
            true
        } else {
            false
        }
    }

    fn recover(&mut self) {
        while !self.check(&TokenKind::Eof) {
            if self.advance().kind == TokenKind::Semi {
                return;
            }
        }
    }

    fn ident(&mut self) -> PResult<Ident> {
        match &self.peek().kind {
            TokenKind::Ident(name) => {
                let id = Ident::new(name, self.peek().pos);
                self.advance();
                Ok(id)
            }
            _ => self.error("identifier"),
        }
    }

    fn statement(&mut self) -> PResult<Statement> {
        let pos = self.peek().pos;
        let kind = match self.peek().kind {
            TokenKind::Keyword(Keyword::Base) => {
                self.advance();
                StatementKind::Base(self.ident()?)
            }
            TokenKind::Keyword(Keyword::Signed) | TokenKind::Keyword(Keyword::Scale) => {
                let signed = self.eat(&TokenKind::Keyword(Keyword::Signed));
                self.expect(&TokenKind::Keyword(Keyword::Scale), "`scale`")?;
                let name = self.ident()?;
                self.expect(&TokenKind::Colon, "`:`")?;
                let expr = self.expr()?;
                let coeff = if self.eat(&TokenKind::Eq) {
                    Some(self.number()?)
                } else {
                    None
                };
                StatementKind::ScaleDef { name, signed, expr, coeff }
            }
            TokenKind::Keyword(Keyword::Dim) => {
                self.advance();
                StatementKind::Dim(self.expr()?)
            }
            TokenKind::Keyword(Keyword::Check) => {
                self.advance();
                let lhs = self.expr()?;
                self.expect(&TokenKind::Tilde, "`~`")?;
                StatementKind::Check(lhs, self.expr()?)
            }
            TokenKind::Keyword(Keyword::Express) => {
                self.advance();
                let e = self.expr()?;
                self.expect(&TokenKind::Keyword(Keyword::In), "`in`")?;
                self.expect(&TokenKind::LParen, "`(`")?;
                let a = self.ident()?;
                self.expect(&TokenKind::Comma, "`,`")?;
                let b = self.ident()?;
                self.expect(&TokenKind::Comma, "`,`")?;
                let c = self.ident()?;
                self.expect(&TokenKind::RParen, "`)`")?;
                StatementKind::Express(e, [a, b, c])
            }
            TokenKind::Keyword(Keyword::PiGroups) => {
                self.advance();
                self.expect(&TokenKind::LParen, "`(`")?;
                let mut names = vec![self.ident()?];
                while self.eat(&TokenKind::Comma) {
                    names.push(self.ident()?);
                }
                self.expect(&TokenKind::RParen, "`)` or `,`")?;
                StatementKind::PiGroups(names)
            }
            TokenKind::Keyword(Keyword::Ratio) => {
                self.advance();
                let lhs = self.expr()?;
                self.expect(&TokenKind::Comma, "`,`")?;
                StatementKind::Ratio(lhs, self.expr()?)
            }
            _ => return self.error("statement"),
        };
        self.expect(&TokenKind::Semi, "`;`")?;
        Ok(Statement { kind, pos })
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut lhs = self.term()?;
        loop {
            let pos = self.peek().pos;
            let ctor: fn(Box<Expr>, Box<Expr>) -> ExprKind = if self.eat(&TokenKind::Star) {
                ExprKind::Mul
            } else if self.eat(&TokenKind::Slash) {
                ExprKind::Div
            } else {
                return Ok(lhs);
            };
            let rhs = self.term()?;
            lhs = Expr::new(ctor(Box::new(lhs), Box::new(rhs)), pos);
        }
    }

    fn term(&mut self) -> PResult<Expr> {
        let base = self.factor()?;
        let pos = self.peek().pos;
        if self.eat(&TokenKind::Caret) {
            let q = self.rational()?;
            return Ok(Expr::new(ExprKind::Pow(Box::new(base), q), pos));
        }
        Ok(base)
    }

    fn factor(&mut self) -> PResult<Expr> {
        let tok = self.peek().clone();
        match &tok.kind {
            TokenKind::Ident(name) => {
                self.advance();
                Ok(Expr::new(ExprKind::Ident(name.clone()), tok.pos))
            }
            TokenKind::Num(_) => {
                let n = self.number()?;
                if n.value.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) {
                    return Err(ParseError {
                        pos: tok.pos,
                        message: format!("expected positive literal, found `{}`", n.text),
                    });
                }
                Ok(Expr::new(ExprKind::Literal(n), tok.pos))
            }
            TokenKind::LParen => {
                self.advance();
                let inner = self.expr()?;
                self.expect(&TokenKind::RParen, "`)`")?;
                Ok(Expr::new(ExprKind::Group(Box::new(inner)), tok.pos))
            }
            _ => self.error("expression"),
        }
    }

    fn number(&mut self) -> PResult<Number> {
        let tok = self.peek().clone();
        match &tok.kind {
            TokenKind::Num(text) => {
                let value: f64 = text.parse().map_err(|_| ParseError {
                    pos: tok.pos,
                    message: format!("invalid number `{text}`"),
                })?;
                if !value.is_finite() {
                    return Err(ParseError {
                        pos: tok.pos,
                        message: format!("number `{text}` is out of range"),
                    });
                }
                self.advance();
                Ok(Number { text: text.clone(), value })
            }
            _ => self.error("number"),
        }
    }

    /// An integer literal, with an optional separate leading `-`.
    fn integer(&mut self) -> PResult<BigInt> {
        let negate = self.eat(&TokenKind::Minus);
        let tok = self.peek().clone();
        let TokenKind::Num(text) = &tok.kind else {
            return self.error("integer");
        };
        if negate && text.starts_with('-') {
            return self.error("integer");
        }
        let n: BigInt = text.parse().map_err(|_| ParseError {
            pos: tok.pos,
            message: format!("expected integer, found `{text}`"),
        })?;
        self.advance();
        Ok(if negate { -n } else { n })
    }

    fn rational(&mut self) -> PResult<Rational> {
        if !self.eat(&TokenKind::LParen) {
            return self.integer().map(Rational::from);
        }
        let num = self.integer()?;
        self.expect(&TokenKind::Slash, "`/`")?;
        let den_pos = self.peek().pos;
        let den = self.integer()?;
        if den <= BigInt::from(0) {
            return Err(ParseError {
                pos: den_pos,
                message: "exponent denominator must be a positive integer".into(),
            });
        }
        self.expect(&TokenKind::RParen, "`)`")?;
        Ok(Rational::from_bigints(num, den).expect("denominator is positive"))
    }
}
