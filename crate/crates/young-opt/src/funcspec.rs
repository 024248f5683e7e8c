//! Turning user input into a [`FuncTable`]: a small arithmetic expression
//! language in one variable `k`, literal table files, and builtin
//! shorthands.
//!
//! Grammar, with `^` binding tightest, then unary minus, then `*`, then
//! `+`/`-` (binary operators left-associative, whitespace insignificant):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom ('^' nonneg-literal)?
//! atom   := integer | 'k' | '(' expr ')'
//! ```
//!
//! So `-k^2` means `-(k^2)`, and exponents must be non-negative integer
//! literals — evaluation is exact on all of ℤ.

use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};
use crate::functable::{FuncTable, VALUE_BOUND};

/// Expression AST. Exponents are kept as plain non-negative integers, not
/// sub-expressions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FuncExpr {
    Literal(i64),
    /// The variable `k`.
    Var,
    Neg(Box<FuncExpr>),
    Add(Box<FuncExpr>, Box<FuncExpr>),
    Sub(Box<FuncExpr>, Box<FuncExpr>),
    Mul(Box<FuncExpr>, Box<FuncExpr>),
    Pow(Box<FuncExpr>, u32),
}

impl FuncExpr {
    /// Exact evaluation at `k`, in i128 so honest inputs never wrap.
    pub fn eval(&self, k: i64) -> Result<i128> {
        let overflow = || Error::Overflow("evaluating the expression".into());
        Ok(match self {
            FuncExpr::Literal(v) => i128::from(*v),
            FuncExpr::Var => i128::from(k),
            FuncExpr::Neg(x) => x.eval(k)?.checked_neg().ok_or_else(overflow)?,
            FuncExpr::Add(a, b) => a.eval(k)?.checked_add(b.eval(k)?).ok_or_else(overflow)?,
            FuncExpr::Sub(a, b) => a.eval(k)?.checked_sub(b.eval(k)?).ok_or_else(overflow)?,
            FuncExpr::Mul(a, b) => a.eval(k)?.checked_mul(b.eval(k)?).ok_or_else(overflow)?,
            FuncExpr::Pow(base, exp) => {
                let b = base.eval(k)?;
                match b {
                    0 => {
                        if *exp == 0 {
                            1
                        } else {
                            0
                        }
                    }
                    1 => 1,
                    -1 => {
                        if exp % 2 == 0 {
                            1
                        } else {
                            -1
                        }
                    }
                    _ => {
                        let mut acc = 1i128;
                        for _ in 0..*exp {
                            acc = acc.checked_mul(b).ok_or_else(overflow)?;
                        }
                        acc
                    }
                }
            }
        })
    }

    fn prec(&self) -> u8 {
        match self {
            FuncExpr::Add(..) | FuncExpr::Sub(..) => 1,
            FuncExpr::Mul(..) => 2,
            FuncExpr::Neg(..) => 3,
            FuncExpr::Pow(..) => 4,
            FuncExpr::Literal(_) | FuncExpr::Var => 5,
        }
    }
}

impl fmt::Display for FuncExpr {
    /// Canonical form: parentheses exactly where the grammar needs them to
    /// reproduce this AST.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn paren(f: &mut fmt::Formatter<'_>, x: &FuncExpr, needed: bool) -> fmt::Result {
            if needed {
                write!(f, "({})", x)
            } else {
                write!(f, "{}", x)
            }
        }
        match self {
            FuncExpr::Literal(v) => write!(f, "{}", v),
            FuncExpr::Var => write!(f, "k"),
            FuncExpr::Neg(x) => {
                write!(f, "-")?;
                paren(f, x, x.prec() < 3)
            }
            FuncExpr::Add(a, b) => {
                paren(f, a, a.prec() < 1)?;
                write!(f, "+")?;
                paren(f, b, b.prec() <= 1)
            }
            FuncExpr::Sub(a, b) => {
                paren(f, a, a.prec() < 1)?;
                write!(f, "-")?;
                paren(f, b, b.prec() <= 1)
            }
            FuncExpr::Mul(a, b) => {
                paren(f, a, a.prec() < 2)?;
                write!(f, "*")?;
                paren(f, b, b.prec() <= 2)
            }
            FuncExpr::Pow(base, exp) => {
                paren(f, base, base.prec() < 5)?;
                write!(f, "^{}", exp)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Num(i64),
    Var,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let (pos, b) = (i, bytes[i]);
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &src[start..i];
                let v: i64 = text.parse().map_err(|_| Error::Syntax {
                    pos: start,
                    msg: format!("integer literal {} out of range", text),
                })?;
                toks.push((start, Tok::Num(v)));
            }
            b'k' => {
                toks.push((pos, Tok::Var));
                i += 1;
            }
            b'+' => {
                toks.push((pos, Tok::Plus));
                i += 1;
            }
            b'-' => {
                toks.push((pos, Tok::Minus));
                i += 1;
            }
            b'*' => {
                toks.push((pos, Tok::Star));
                i += 1;
            }
            b'^' => {
                toks.push((pos, Tok::Caret));
                i += 1;
            }
            b'(' => {
                toks.push((pos, Tok::LParen));
                i += 1;
            }
            b')' => {
                toks.push((pos, Tok::RParen));
                i += 1;
            }
            _ => {
                let ch = src[pos..].chars().next().unwrap();
                return Err(Error::Syntax {
                    pos,
                    msg: format!("unexpected character {:?}", ch),
                });
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    at: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.at).map(|&(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |&(p, _)| p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.peek();
        if t.is_some() {
            self.at += 1;
        }
        t
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        }
    }

    fn expr(&mut self) -> Result<FuncExpr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = FuncExpr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = FuncExpr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<FuncExpr> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(Tok::Star) {
            self.bump();
            lhs = FuncExpr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<FuncExpr> {
        if self.peek() == Some(Tok::Minus) {
            self.bump();
            return Ok(FuncExpr::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if self.peek() == Some(Tok::Caret) {
            self.bump();
            let exp = match self.peek() {
                Some(Tok::Num(v)) => {
                    u32::try_from(v).map_err(|_| self.err("exponent too large"))?
                }
                _ => {
                    return Err(self.err("exponent must be a non-negative integer literal"));
                }
            };
            self.bump();
            return Ok(FuncExpr::Pow(Box::new(base), exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<FuncExpr> {
        match self.peek() {
            Some(Tok::Num(v)) => {
                self.bump();
                Ok(FuncExpr::Literal(v))
            }
            Some(Tok::Var) => {
                self.bump();
                Ok(FuncExpr::Var)
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(Tok::RParen) {
                    return Err(self.err("expected ')'"));
                }
                self.bump();
                Ok(inner)
            }
            Some(_) => Err(self.err("expected an integer, 'k', or '('")),
            None => Err(self.err("unexpected end of expression")),
        }
    }
}

/// Parses an expression in the variable `k`.
pub fn parse_expr(src: &str) -> Result<FuncExpr> {
    let toks = tokenize(src)?;
    if toks.is_empty() {
        return Err(Error::Syntax {
            pos: 0,
            msg: "empty expression".into(),
        });
    }
    let mut parser = Parser {
        toks: &toks,
        at: 0,
        end: src.len(),
    };
    let e = parser.expr()?;
    if parser.at != toks.len() {
        return Err(parser.err("unexpected trailing input"));
    }
    Ok(e)
}

/// Evaluates `e` at `1..=n` into a table, rejecting any value whose
/// magnitude exceeds `2^31`.
pub fn tabulate(e: &FuncExpr, n: u32) -> Result<FuncTable> {
    assert!(n >= 1, "tabulate requires n >= 1");
    let mut values = Vec::with_capacity(n as usize);
    for k in 1..=n {
        let v = e
            .eval(i64::from(k))
            .map_err(|_| Error::Overflow(format!("evaluating the expression at k = {}", k)))?;
        if v.abs() > i128::from(VALUE_BOUND) {
            return Err(Error::Magnitude { arg: k, value: v });
        }
        values.push(v as i64);
    }
    FuncTable::new(values)
}

/// Reads exactly `n` whitespace-separated signed decimal integers from
/// `path` as the values at `1..=n`.
pub fn load_table(path: &Path, n: u32) -> Result<FuncTable> {
    assert!(n >= 1, "load_table requires n >= 1");
    let text = std::fs::read_to_string(path)?;
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() != n as usize {
        return Err(Error::Table(format!(
            "expected {} values, found {}",
            n,
            tokens.len()
        )));
    }
    let mut values = Vec::with_capacity(tokens.len());
    for tok in tokens {
        let v: i64 = tok.parse().map_err(|_| {
            Error::Table(format!("token {:?} is not a signed decimal integer", tok))
        })?;
        values.push(v);
    }
    FuncTable::new(values)
}

fn builtin_source(name: &str) -> Option<&'static str> {
    match name {
        "square" => Some("k^2"),
        "identity" => Some("k"),
        "zero" => Some("0"),
        _ => None,
    }
}

/// Resolves a function specifier — a builtin shorthand (`square`,
/// `identity`, `zero`), `expr:<expression>`, or `table:<path>` — into a
/// table over `1..=n`. Builtin names are also accepted inside `expr:`.
pub fn table_from_spec(spec: &str, n: u32) -> Result<FuncTable> {
    if let Some(path) = spec.strip_prefix("table:") {
        return load_table(Path::new(path), n);
    }
    let src = if let Some(src) = spec.strip_prefix("expr:") {
        builtin_source(src.trim()).unwrap_or(src)
    } else {
        builtin_source(spec.trim()).ok_or_else(|| {
            Error::BadArgument(format!(
                "unknown function specifier {:?}; \
                 expected a builtin (square, identity, zero), expr:<expression>, or table:<path>",
                spec
            ))
        })?
    };
    tabulate(&parse_expr(src)?, n)
}
