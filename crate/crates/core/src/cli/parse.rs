//! Expression grammar.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '·' | '/') unary)*
//! unary   := '-' unary | primary
//! primary := INT '/' INT | INT | DECIMAL | cf | 'inv' '(' expr ')' | '(' expr ')'
//! cf      := 'cf' '[' ( '-'? INT (';' terms)? | '(' ints ')' '*' ) ']'
//! terms   := ints (',' '(' ints ')' '*')? | '(' ints ')' '*'
//! ```
//!
//! `INT '/' INT` is a rational literal, so `3/4 + 1/4` is a sum of two
//! literals while `3 / (4)` is a division.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use thiserror::Error;

pub const MAX_INPUT_BYTES: usize = 64 * 1024;
pub const DEFAULT_DEPTH_LIMIT: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigUint),
    Rat(BigUint, BigUint),
    /// Literal text such as `1.41421`, read as an exact rational.
    Decimal(String),
    Cf {
        prefix: Vec<BigInt>,
        period: Vec<BigInt>,
    },
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Inv(Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: expected {}", describe(expected))]
    Syntax {
        offset: usize,
        expected: Vec<&'static str>,
    },
    #[error("expression nests deeper than {limit}")]
    DepthExceeded { limit: usize },
    #[error("input is {len} bytes; the limit is {MAX_INPUT_BYTES}")]
    TooLong { len: usize },
}

fn describe(expected: &[&str]) -> String {
    match expected {
        [one] => format!("`{one}`"),
        many => format!(
            "one of {}",
            many.iter()
                .map(|e| format!("`{e}`"))
                .collect::<Vec<_>>()
                .join(" ")
        ),
    }
}

pub fn parse(input: &str) -> Result<Expr, ParseError> {
    parse_with_limit(input, DEFAULT_DEPTH_LIMIT)
}

pub fn parse_with_limit(input: &str, depth_limit: usize) -> Result<Expr, ParseError> {
    if input.len() > MAX_INPUT_BYTES {
        return Err(ParseError::TooLong { len: input.len() });
    }
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
        limit: depth_limit,
    };
    let (e, _) = p.expr(0)?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(&["operator", "end of input"]));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    limit: usize,
}

type Parsed = (Expr, usize);

impl<'a> Parser<'a> {
    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError::Syntax {
            offset: self.pos,
            expected: expected.to_vec(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn rest(&self) -> &[u8] {
        &self.src[self.pos..]
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &'static str) -> Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&[token]))
        }
    }

    fn check_depth(&self, depth: usize) -> Result<usize, ParseError> {
        if depth > self.limit {
            Err(ParseError::DepthExceeded { limit: self.limit })
        } else {
            Ok(depth)
        }
    }

    fn expr(&mut self, nest: usize) -> Result<Parsed, ParseError> {
        let (mut lhs, mut depth) = self.term(nest)?;
        loop {
            let build: fn(Box<Expr>, Box<Expr>) -> Expr = if self.eat("+") {
                Expr::Add
            } else if self.eat("-") {
                Expr::Sub
            } else {
                return Ok((lhs, depth));
            };
            let (rhs, d) = self.term(nest)?;
            depth = self.check_depth(depth.max(d) + 1)?;
            lhs = build(Box::new(lhs), Box::new(rhs));
        }
    }

    fn term(&mut self, nest: usize) -> Result<Parsed, ParseError> {
        let (mut lhs, mut depth) = self.unary(nest)?;
        loop {
            let build: fn(Box<Expr>, Box<Expr>) -> Expr = if self.eat("*") || self.eat("·") {
                Expr::Mul
            } else if self.eat("/") {
                Expr::Div
            } else {
                return Ok((lhs, depth));
            };
            let (rhs, d) = self.unary(nest)?;
            depth = self.check_depth(depth.max(d) + 1)?;
            lhs = build(Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self, nest: usize) -> Result<Parsed, ParseError> {
        let mut minus = 0usize;
        while self.eat("-") {
            minus += 1;
        }
        let (mut e, mut depth) = self.primary(nest)?;
        for _ in 0..minus {
            depth = self.check_depth(depth + 1)?;
            e = Expr::Neg(Box::new(e));
        }
        Ok((e, depth))
    }

    fn primary(&mut self, nest: usize) -> Result<Parsed, ParseError> {
        self.check_depth(nest + 1)?;
        self.skip_ws();
        if self.eat("(") {
            let inner = self.expr(nest + 1)?;
            self.expect(")")?;
            return Ok(inner);
        }
        if self.eat("inv") {
            self.expect("(")?;
            let (inner, d) = self.expr(nest + 1)?;
            self.expect(")")?;
            return Ok((Expr::Inv(Box::new(inner)), self.check_depth(d + 1)?));
        }
        if self.eat("cf") {
            return Ok((self.cf_literal()?, 1));
        }
        let Some(int) = self.digits() else {
            return Err(self.error(&["integer", "decimal", "cf[", "inv(", "(", "-"]));
        };
        if self.src.get(self.pos) == Some(&b'.') {
            self.pos += 1;
            if self.digits().is_none() {
                return Err(self.error(&["digit"]));
            }
            return Ok((
                Expr::Decimal(String::from_utf8_lossy(&self.src[int.0..self.pos]).into_owned()),
                1,
            ));
        }
        let n = self.number(int);
        let save = self.pos;
        if self.eat("/") {
            self.skip_ws();
            if let Some(den) = self.digits() {
                return Ok((Expr::Rat(n, self.number(den)), 1));
            }
            self.pos = save;
        }
        Ok((Expr::Int(n), 1))
    }

    /// Span of a run of ASCII digits at the cursor.
    fn digits(&mut self) -> Option<(usize, usize)> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then_some((start, self.pos))
    }

    fn number(&self, (start, end): (usize, usize)) -> BigUint {
        BigUint::parse_bytes(&self.src[start..end], 10).expect("digit run")
    }

    fn signed_int(&mut self) -> Result<BigInt, ParseError> {
        let neg = self.eat("-");
        self.skip_ws();
        let span = self.digits().ok_or_else(|| self.error(&["integer"]))?;
        let n = BigInt::from(self.number(span));
        Ok(if neg { -n } else { n })
    }

    fn int_list(&mut self) -> Result<Vec<BigInt>, ParseError> {
        let mut v = vec![self.signed_int()?];
        while self.eat(",") {
            v.push(self.signed_int()?);
        }
        Ok(v)
    }

    fn period(&mut self) -> Result<Vec<BigInt>, ParseError> {
        let v = self.int_list()?;
        self.expect(")")?;
        self.expect("*")?;
        Ok(v)
    }

    fn cf_literal(&mut self) -> Result<Expr, ParseError> {
        self.expect("[")?;
        if self.eat("(") {
            let period = self.period()?;
            self.expect("]")?;
            return Ok(Expr::Cf {
                prefix: Vec::new(),
                period,
            });
        }
        let mut prefix = vec![self.signed_int()?];
        let mut period = Vec::new();
        if self.eat(";") {
            loop {
                if self.eat("(") {
                    period = self.period()?;
                    break;
                }
                prefix.push(self.signed_int()?);
                if !self.eat(",") {
                    break;
                }
            }
        }
        if !self.eat("]") {
            return Err(self.error(&[",", "]"]));
        }
        Ok(Expr::Cf { prefix, period })
    }
}

/// Binding strength of the outermost operator.
fn level(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) | Expr::Div(..) => 2,
        Expr::Neg(_) => 3,
        _ => 4,
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if level(e) < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, v: &[BigInt]) -> fmt::Result {
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Rat(p, q) => write!(f, "{p}/{q}"),
            Expr::Decimal(s) => f.write_str(s),
            Expr::Cf { prefix, period } => {
                f.write_str("cf[")?;
                if let Some((a0, rest)) = prefix.split_first() {
                    write!(f, "{a0}")?;
                    if !rest.is_empty() || !period.is_empty() {
                        f.write_str(";")?;
                    }
                    write_list(f, rest)?;
                    if !rest.is_empty() && !period.is_empty() {
                        f.write_str(",")?;
                    }
                }
                if !period.is_empty() {
                    f.write_str("(")?;
                    write_list(f, period)?;
                    f.write_str(")*")?;
                }
                f.write_str("]")
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                write_at(f, a, 1)?;
                f.write_str(if matches!(self, Expr::Add(..)) {
                    " + "
                } else {
                    " - "
                })?;
                write_at(f, b, 2)
            }
            Expr::Mul(a, b) => {
                write_at(f, a, 2)?;
                f.write_str(" * ")?;
                write_at(f, b, 3)
            }
            // a bare integer on the right could fuse into a rational literal
            Expr::Div(a, b) => {
                write_at(f, a, 2)?;
                f.write_str(" / ")?;
                write!(f, "({b})")
            }
            Expr::Neg(a) => {
                f.write_str("-")?;
                write_at(f, a, 3)
            }
            Expr::Inv(a) => write!(f, "inv({a})"),
        }
    }
}
