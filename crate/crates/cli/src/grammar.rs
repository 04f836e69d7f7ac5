//! The element grammar.
//!
//! ```text
//! expr    := product ( "/" product )?
//! product := factor*
//! factor  := "l" N | "s" N "'"? | "1" | "(" expr ")" | "inv" "(" expr ")"
//! ```
//!
//! Letters are separated by whitespace. `N` is a decimal index below
//! `2^32`. A bare `NUM / DEN` of monoid words is kept as the unreduced
//! triple `(F, βγ⁻¹, G)`; anything with parentheses or `inv` is evaluated
//! with the group operations.

use std::fmt;

use bvgroup::braid::{BraidWord, Flavor, Gen};
use bvgroup::forest::Forest;
use bvgroup::fraction::Fraction;
use bvgroup::zappa::MonoidElt;
use thiserror::Error;

/// A syntax error, with the byte offset where it was found.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{message} at column {}", .position + 1)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }

    /// The error with the input echoed and a caret under the culprit.
    pub fn annotate(&self, input: &str) -> String {
        let column = input[..self.position.min(input.len())].chars().count();
        format!("{self}\n  {input}\n  {}^", " ".repeat(column))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Lambda(usize),
    Sigma(Gen),
    Product(Vec<Expr>),
    Quotient(Box<Expr>, Box<Expr>),
    Inverse(Box<Expr>),
}

impl Expr {
    /// The factors of a word made of letters only.
    fn letters(&self) -> Option<Vec<&Expr>> {
        match self {
            Expr::Lambda(_) | Expr::Sigma(_) => Some(vec![self]),
            Expr::Product(parts) => parts.iter().map(|p| p.letters()).try_fold(Vec::new(), |mut acc, p| {
                acc.extend(p?);
                Some(acc)
            }),
            _ => None,
        }
    }

    fn monoid(&self, flavor: Flavor) -> Option<MonoidElt> {
        let letters = self.letters()?;
        Some(letters.into_iter().fold(MonoidElt::identity(flavor), |acc, l| {
            let g = match *l {
                Expr::Lambda(i) => MonoidElt::from_forest(Forest::lambda(i), flavor),
                Expr::Sigma(s) => MonoidElt::from_braid(BraidWord::new(vec![s], flavor)),
                _ => unreachable!(),
            };
            acc.mul(&g)
        }))
    }

    pub fn evaluate(&self, flavor: Flavor) -> Fraction {
        if let Some(x) = self.monoid(flavor) {
            return Fraction::embed(&x);
        }
        match self {
            Expr::Quotient(num, den) => match (num.monoid(flavor), den.monoid(flavor)) {
                (Some(x), Some(y)) => Fraction::from_pair(&x, &y),
                _ => num.evaluate(flavor).mul(&den.evaluate(flavor).inverse()),
            },
            Expr::Inverse(inner) => inner.evaluate(flavor).inverse(),
            Expr::Product(parts) => parts
                .iter()
                .fold(Fraction::identity(flavor), |acc, p| acc.mul(&p.evaluate(flavor))),
            Expr::Lambda(_) | Expr::Sigma(_) => unreachable!("letters are monoid words"),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Lambda(i) => write!(f, "l{i}"),
            Expr::Sigma(g) => g.fmt(f),
            Expr::Product(parts) if parts.is_empty() => f.write_str("1"),
            Expr::Product(parts) => {
                for (n, p) in parts.iter().enumerate() {
                    if n > 0 {
                        f.write_str(" ")?;
                    }
                    match p {
                        Expr::Quotient(..) | Expr::Product(_) => write!(f, "({p})")?,
                        _ => p.fmt(f)?,
                    }
                }
                Ok(())
            }
            Expr::Quotient(a, b) => write!(f, "{a} / {b}"),
            Expr::Inverse(a) => write!(f, "inv({a})"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(d) => Err(ParseError::new(self.pos, format!("expected `{c}`, found `{d}`"))),
            None => Err(ParseError::new(self.pos, format!("expected `{c}`, found end of input"))),
        }
    }

    fn index(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        let digits: &str = {
            let r = self.rest();
            let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
            &r[..end]
        };
        if digits.is_empty() {
            return Err(ParseError::new(start, "expected an index"));
        }
        self.pos += digits.len();
        match digits.parse::<u64>() {
            Ok(v) if v < 1 << 32 => Ok(v as usize),
            _ => Err(ParseError::new(start, format!("index {digits} is not below 2^32"))),
        }
    }

    fn expr(&mut self, top: bool) -> Result<Expr, ParseError> {
        let num = self.product()?;
        if self.peek() != Some('/') {
            return Ok(num);
        }
        self.pos += 1;
        let den = self.product()?;
        if self.peek() == Some('/') {
            let what = if top { "top-level " } else { "" };
            return Err(ParseError::new(self.pos, format!("more than one {what}`/`")));
        }
        Ok(Expr::Quotient(Box::new(num), Box::new(den)))
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut parts = Vec::new();
        while let Some(c) = self.peek() {
            if c == '/' || c == ')' {
                break;
            }
            if let Some(f) = self.factor()? {
                parts.push(f);
            }
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            Expr::Product(parts)
        })
    }

    /// `None` for the unit `1`.
    fn factor(&mut self) -> Result<Option<Expr>, ParseError> {
        let start = self.pos;
        let rest = self.rest();
        if let Some(after) = rest.strip_prefix("inv") {
            if after.trim_start().starts_with('(') {
                self.pos += 3;
                self.expect('(')?;
                let inner = self.expr(false)?;
                self.expect(')')?;
                return Ok(Some(Expr::Inverse(Box::new(inner))));
            }
        }
        let c = rest.chars().next().unwrap();
        let out = match c {
            '(' => {
                self.pos += 1;
                let inner = self.expr(false)?;
                self.expect(')')?;
                Some(inner)
            }
            'l' => {
                self.pos += 1;
                Some(Expr::Lambda(self.index()?))
            }
            's' => {
                self.pos += 1;
                let index = self.index()?;
                let inverse = self.rest().starts_with('\'');
                if inverse {
                    self.pos += 1;
                }
                Some(Expr::Sigma(Gen { index, inverse }))
            }
            '1' => {
                self.pos += 1;
                None
            }
            other => {
                return Err(ParseError::new(start, format!("unexpected `{other}`")));
            }
        };
        // Letters must be separated from what follows.
        match self.rest().chars().next() {
            Some(d) if !(d.is_whitespace() || d == '/' || d == '(' || d == ')') => {
                Err(ParseError::new(self.pos, format!("unexpected `{d}` after `{}`", &self.src[start..self.pos])))
            }
            _ => Ok(out),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.expr(true)?;
    match p.peek() {
        None => Ok(e),
        Some(c) => Err(ParseError::new(p.pos, format!("unexpected `{c}`"))),
    }
}

pub fn parse_element(text: &str, flavor: Flavor) -> Result<Fraction, ParseError> {
    parse(text).map(|e| e.evaluate(flavor))
}
