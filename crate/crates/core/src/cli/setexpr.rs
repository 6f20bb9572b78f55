//! The set expression language of the `xiset` subcommand.
//!
//! ```text
//! input   := 'chain' set set integer ('aligned' | 'shifted') | expr
//! expr    := term (('|' | '\') term)*
//! term    := factor ('&' factor)*
//! factor  := primary ('||' primary)*
//! primary := set | '(' expr ')' | ('cap' | 'cup') '(' expr ',' expr ')'
//! set     := '{' [integer (',' integer)*] '}' | '0'
//! ```
//!
//! `&` binds tighter than `|` and `\`, which associate left to right. `||`
//! joins components, and `0` (or `{}`) is the empty set.

use super::ParseError;
use crate::xiset::{xi_cap, xi_cup, ChainStrategy, FiniteSet, SetExprChain, XiSet};
use crate::Atom;

#[derive(Debug, Clone, PartialEq)]
pub enum SetInput {
    Expr(XiSet<Atom>),
    Chain(SetExprChain<Atom>),
}

pub fn parse(src: &str) -> Result<SetInput, ParseError> {
    let tokens = lex(src)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        end: src.chars().count() + 1,
    };
    let result = if matches!(p.peek(), Some(Tok::Word(w)) if w == "chain") {
        p.pos += 1;
        SetInput::Chain(p.chain()?)
    } else {
        SetInput::Expr(p.expr()?)
    };
    if let Some((col, tok)) = p.tokens.get(p.pos) {
        return Err(ParseError::new(*col, format!("unexpected {}", tok.describe())));
    }
    Ok(result)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Amp,
    Bar,
    Backslash,
    Components,
    Int(i64),
    Word(String),
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Bar => "`|`".into(),
            Tok::Backslash => "`\\`".into(),
            Tok::Components => "`||`".into(),
            Tok::Int(v) => format!("integer {v}"),
            Tok::Word(w) => format!("`{w}`"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let col = i + 1;
        let c = chars[i];
        let simple = match c {
            '{' => Some(Tok::LBrace),
            '}' => Some(Tok::RBrace),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            '&' => Some(Tok::Amp),
            '\\' => Some(Tok::Backslash),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push((col, tok));
            i += 1;
        } else if c == '|' {
            if chars.get(i + 1) == Some(&'|') {
                out.push((col, Tok::Components));
                i += 2;
            } else {
                out.push((col, Tok::Bar));
                i += 1;
            }
        } else if c.is_ascii_digit() || (c == '-' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) {
            let start = i;
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let v = text
                .parse()
                .map_err(|_| ParseError::new(col, format!("integer `{text}` out of range")))?;
            out.push((col, Tok::Int(v)));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((col, Tok::Word(chars[start..i].iter().collect())));
        } else if c.is_whitespace() {
            i += 1;
        } else {
            return Err(ParseError::new(col, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(c, _)| *c)
    }

    fn error(&self, expected: &str) -> ParseError {
        let found = self
            .tokens
            .get(self.pos)
            .map_or_else(|| "end of input".to_string(), |(_, t)| t.describe());
        ParseError::new(self.column(), format!("expected {expected}, found {found}"))
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(what))
        }
    }

    fn expr(&mut self) -> Result<XiSet<Atom>, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Bar) => {
                    self.pos += 1;
                    lhs = lhs.union(&self.term()?);
                }
                Some(Tok::Backslash) => {
                    self.pos += 1;
                    lhs = lhs.difference(&self.term()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<XiSet<Atom>, ParseError> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(&Tok::Amp) {
            self.pos += 1;
            lhs = lhs.intersection(&self.factor()?);
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<XiSet<Atom>, ParseError> {
        let mut components = self.primary()?.components().to_vec();
        while self.peek() == Some(&Tok::Components) {
            self.pos += 1;
            components.extend_from_slice(self.primary()?.components());
        }
        Ok(XiSet::from_components(components).expect("at least one component"))
    }

    fn primary(&mut self) -> Result<XiSet<Atom>, ParseError> {
        match self.peek() {
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(Tok::Word(w)) if w == "cap" || w == "cup" => {
                let is_cap = w == "cap";
                self.pos += 1;
                self.expect(Tok::LParen, "`(`")?;
                let a = self.ordinary_arg()?;
                self.expect(Tok::Comma, "`,`")?;
                let b = self.ordinary_arg()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(if is_cap { xi_cap(&a, &b) } else { xi_cup(&a, &b) })
            }
            _ => Ok(XiSet::ordinary(self.set()?)),
        }
    }

    fn ordinary_arg(&mut self) -> Result<FiniteSet<Atom>, ParseError> {
        let col = self.column();
        let x = self.expr()?;
        if !x.is_ordinary() {
            return Err(ParseError::new(col, "cap/cup arguments must be ordinary sets"));
        }
        Ok(x.components()[0].clone())
    }

    fn set(&mut self) -> Result<FiniteSet<Atom>, ParseError> {
        match self.peek() {
            Some(Tok::Int(0)) => {
                self.pos += 1;
                Ok(FiniteSet::empty())
            }
            Some(Tok::LBrace) => {
                self.pos += 1;
                let mut atoms = Vec::new();
                if self.peek() == Some(&Tok::RBrace) {
                    self.pos += 1;
                    return Ok(FiniteSet::empty());
                }
                loop {
                    match self.peek() {
                        Some(&Tok::Int(v)) => {
                            atoms.push(v);
                            self.pos += 1;
                        }
                        _ => return Err(self.error("an integer atom")),
                    }
                    match self.peek() {
                        Some(Tok::Comma) => self.pos += 1,
                        Some(Tok::RBrace) => {
                            self.pos += 1;
                            return Ok(atoms.into_iter().collect());
                        }
                        _ => return Err(self.error("`,` or `}`")),
                    }
                }
            }
            _ => Err(self.error("a set literal `{…}` or `0`")),
        }
    }

    fn chain(&mut self) -> Result<SetExprChain<Atom>, ParseError> {
        let base = self.set()?;
        let partner = self.set()?;
        let col = self.column();
        let length = match self.peek() {
            Some(&Tok::Int(v)) if v >= 1 => {
                self.pos += 1;
                v as usize
            }
            _ => return Err(self.error("a chain length of at least 1")),
        };
        let strategy = match self.peek() {
            Some(Tok::Word(w)) if w == "aligned" => ChainStrategy::Aligned,
            Some(Tok::Word(w)) if w == "shifted" => ChainStrategy::Shifted,
            _ => return Err(self.error("`aligned` or `shifted`")),
        };
        self.pos += 1;
        SetExprChain::new(base, partner, length, strategy).map_err(|e| ParseError::new(col, e.to_string()))
    }
}
