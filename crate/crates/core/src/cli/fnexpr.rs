//! Real-valued expressions in one variable `x`, and piecewise literals built
//! from them.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' unary)?
//! atom   := number | 'x' | 'pi' | 'e' | name '(' expr ')' | '(' expr ')'
//! ```
//!
//! Functions: `sin cos tan exp ln sqrt abs`.
//!
//! A piecewise literal alternates branches and breakpoints:
//! `pw(x^2; 0; x+3; 1; sin(x))` is `x²` below 0, `x + 3` on `[0, 1)` and
//! `sin x` from 1 on.

use std::sync::Arc;

use super::ParseError;
use crate::piecewise::{Branch, PiecewiseSpec};

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    X,
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Exp,
    Ln,
    Sqrt,
    Abs,
}

impl Func {
    fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "tan" => Func::Tan,
            "exp" => Func::Exp,
            "ln" => Func::Ln,
            "sqrt" => Func::Sqrt,
            "abs" => Func::Abs,
            _ => return None,
        })
    }

    fn apply(self, v: f64) -> f64 {
        match self {
            Func::Sin => v.sin(),
            Func::Cos => v.cos(),
            Func::Tan => v.tan(),
            Func::Exp => v.exp(),
            Func::Ln => v.ln(),
            Func::Sqrt => v.sqrt(),
            Func::Abs => v.abs(),
        }
    }
}

impl Expr {
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            Expr::Num(v) => *v,
            Expr::X => x,
            Expr::Neg(e) => -e.eval(x),
            Expr::Bin(op, a, b) => {
                let (a, b) = (a.eval(x), b.eval(x));
                match op {
                    BinOp::Add => a + b,
                    BinOp::Sub => a - b,
                    BinOp::Mul => a * b,
                    BinOp::Div => a / b,
                    BinOp::Pow => a.powf(b),
                }
            }
            Expr::Call(f, e) => f.apply(e.eval(x)),
        }
    }

    pub fn mentions_x(&self) -> bool {
        match self {
            Expr::Num(_) => false,
            Expr::X => true,
            Expr::Neg(e) | Expr::Call(_, e) => e.mentions_x(),
            Expr::Bin(_, a, b) => a.mentions_x() || b.mentions_x(),
        }
    }
}

/// Parses a whole expression; `offset` shifts reported columns.
pub fn parse_expr(src: &str, offset: usize) -> Result<Expr, ParseError> {
    let mut p = Parser {
        chars: src.chars().collect(),
        pos: 0,
        offset,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error(format!("unexpected `{}`", p.chars[p.pos])));
    }
    Ok(e)
}

/// Parses `pw(branch; breakpoint; branch; …)`.
pub fn parse_piecewise(src: &str) -> Result<PiecewiseSpec<f64>, ParseError> {
    let trimmed = src.trim_end();
    let lead = src.len() - src.trim_start().len();
    let body_start = lead + 3;
    if !src.trim_start().starts_with("pw(") {
        return Err(ParseError::new(lead + 1, "piecewise literal must start with `pw(`"));
    }
    if !trimmed.ends_with(')') {
        return Err(ParseError::new(trimmed.chars().count() + 1, "expected `)` closing `pw(`"));
    }
    let body = &src[body_start..trimmed.len() - 1];
    let mut parts = Vec::new();
    let mut start = 0;
    for (i, ch) in body.char_indices() {
        if ch == ';' {
            parts.push((start, &body[start..i]));
            start = i + 1;
        }
    }
    parts.push((start, &body[start..]));
    if parts.len() < 3 || parts.len() % 2 == 0 {
        return Err(ParseError::new(
            body_start + 1,
            "expected branch; breakpoint; branch [; breakpoint; branch …]",
        ));
    }

    let mut breakpoints = Vec::new();
    let mut branches: Vec<Branch<f64>> = Vec::new();
    for (k, (at, text)) in parts.into_iter().enumerate() {
        let column = src[..body_start].chars().count() + body[..at].chars().count();
        let e = parse_expr(text, column)?;
        if k % 2 == 0 {
            branches.push(Arc::new(move |x| e.eval(x)));
        } else {
            if e.mentions_x() {
                return Err(ParseError::new(column + 1, "breakpoint must not depend on x"));
            }
            breakpoints.push(e.eval(f64::NAN));
        }
    }
    PiecewiseSpec::new(breakpoints, branches).map_err(|e| ParseError::new(body_start + 1, e.to_string()))
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    offset: usize,
}

impl Parser {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.offset + self.pos + 1, message)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Some('+') => BinOp::Add,
                Some('-') => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(self.term()?));
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Some('*') => BinOp::Mul,
                Some('/') => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(self.unary()?));
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.eat('^') {
            return Ok(Expr::Bin(BinOp::Pow, Box::new(base), Box::new(self.unary()?)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            None => Err(self.error("unexpected end of expression")),
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == '.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                match name.as_str() {
                    "x" => Ok(Expr::X),
                    "pi" => Ok(Expr::Num(std::f64::consts::PI)),
                    "e" => Ok(Expr::Num(std::f64::consts::E)),
                    _ => {
                        let func = Func::from_name(&name).ok_or_else(|| {
                            ParseError::new(self.offset + start + 1, format!("unknown name `{name}`"))
                        })?;
                        if !self.eat('(') {
                            return Err(self.error(format!("expected `(` after `{name}`")));
                        }
                        let arg = self.expr()?;
                        if !self.eat(')') {
                            return Err(self.error("expected `)`"));
                        }
                        Ok(Expr::Call(func, Box::new(arg)))
                    }
                }
            }
            Some(c) => Err(self.error(format!("unexpected `{c}`"))),
        }
    }

    fn number(&mut self) -> Result<Expr, ParseError> {
        let start = self.pos;
        let digits = |p: &mut Parser| {
            while p.pos < p.chars.len() && p.chars[p.pos].is_ascii_digit() {
                p.pos += 1;
            }
        };
        digits(self);
        if self.chars.get(self.pos) == Some(&'.') {
            self.pos += 1;
            digits(self);
        }
        if matches!(self.chars.get(self.pos), Some('e') | Some('E'))
            && matches!(self.chars.get(self.pos + 1), Some(c) if c.is_ascii_digit() || *c == '-' || *c == '+')
        {
            self.pos += 2;
            digits(self);
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse()
            .map(Expr::Num)
            .map_err(|_| ParseError::new(self.offset + start + 1, format!("malformed number `{text}`")))
    }
}
