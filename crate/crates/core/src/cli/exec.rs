use num_bigint::BigInt;
use num_prime::nt_funcs::factorize;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use super::parse::{parse, Expr, ParseError};
use super::{Config, Outcome};
use crate::cf::{endo_to_cf, CfError, CfSeq, CfStatus};
use crate::endo::EndoNode;
use crate::localization::{
    crt_join, crt_split, qend_decompose, rational_action, saturate, LocalizationError, MultSet,
    PrimeSet, PruferFrac,
};
use crate::real::{self, RealError, SignResult};

pub const DEFAULT_CF_TERMS: usize = 10;
pub const DEFECT_SCAN_RANGE: u64 = 100;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Eval {
        expr: Expr,
        digits: Option<u32>,
    },
    Cf {
        expr: Expr,
        terms: usize,
    },
    Sign(Expr),
    Compare(Expr, Expr),
    Defect(Expr),
    Saturate(Vec<i64>),
    CrtSplit {
        x: BigRational,
        left: PrimeSet,
        right: PrimeSet,
    },
    CrtJoin(BigRational, BigRational),
    Padic {
        value: BigRational,
        primes: PrimeSet,
        precision: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CommandError {
    #[error("unknown command `{0}`")]
    Unknown(String),
    #[error("`{command}` takes {expected}")]
    Arity {
        command: &'static str,
        expected: &'static str,
    },
    #[error("bad argument `{text}`: expected {expected}")]
    BadArgument {
        text: String,
        expected: &'static str,
    },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Localization(#[from] LocalizationError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("zero denominator in literal")]
    ZeroDenominator,
    #[error("division by an exact zero")]
    DivisionByZero,
    #[error(transparent)]
    Cf(#[from] CfError),
    #[error("inconclusive |λ| ≤ {bound}: divisor sign not certified")]
    Inconclusive { bound: BigRational },
    #[error(transparent)]
    Real(RealError),
}

impl From<RealError> for EvalError {
    fn from(e: RealError) -> Self {
        match e {
            RealError::InconclusiveSign { bound } => EvalError::Inconclusive { bound },
            other => EvalError::Real(other),
        }
    }
}

/// Splits on commas outside brackets, braces and parentheses. Pieces keep
/// their whitespace so parse errors report offsets into the original text.
pub fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    let last = &s[start..];
    if !last.trim().is_empty() || !parts.is_empty() {
        parts.push(last);
    }
    parts
}

fn bad(text: &str, expected: &'static str) -> CommandError {
    CommandError::BadArgument {
        text: text.to_string(),
        expected,
    }
}

fn parse_int<T: std::str::FromStr>(s: &str, expected: &'static str) -> Result<T, CommandError> {
    s.trim().parse().map_err(|_| bad(s, expected))
}

fn parse_rational(s: &str) -> Result<BigRational, CommandError> {
    const WHAT: &str = "a rational such as -3/4";
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| bad(s, WHAT))?;
    let d: BigInt = d.trim().parse().map_err(|_| bad(s, WHAT))?;
    if !d.is_positive() {
        return Err(bad(s, WHAT));
    }
    Ok(BigRational::new(n, d))
}

fn parse_primes(s: &str) -> Result<PrimeSet, CommandError> {
    const WHAT: &str = "a prime or a set such as {2, 3}";
    let t = s.trim();
    let inner = t
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .unwrap_or(t);
    let primes = inner
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| p.trim().parse::<u64>().map_err(|_| bad(s, WHAT)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PrimeSet::new(primes)?)
}

fn den_primes(x: &BigRational) -> PrimeSet {
    let primes = factorize(x.denom().magnitude().clone())
        .into_keys()
        .map(|p| u64::try_from(p).expect("denominator primes fit in 64 bits"))
        .collect();
    PrimeSet::new(primes).expect("factors are prime")
}

pub fn parse_command(word: &str, rest: &str) -> Result<Command, CommandError> {
    let args = split_top_level(rest);
    let expr = |i: usize| -> Result<Expr, CommandError> { Ok(parse(args[i])?) };
    match (word, args.len()) {
        ("eval", 1) => Ok(Command::Eval {
            expr: expr(0)?,
            digits: None,
        }),
        ("eval", 2) => Ok(Command::Eval {
            expr: expr(0)?,
            digits: Some(parse_int(args[1], "a digit count")?),
        }),
        ("eval", _) => Err(CommandError::Arity {
            command: "eval",
            expected: "<expr>[, digits]",
        }),
        ("cf", 1) => Ok(Command::Cf {
            expr: expr(0)?,
            terms: DEFAULT_CF_TERMS,
        }),
        ("cf", 2) => Ok(Command::Cf {
            expr: expr(0)?,
            terms: parse_int(args[1], "a term count")?,
        }),
        ("cf", _) => Err(CommandError::Arity {
            command: "cf",
            expected: "<expr>[, terms]",
        }),
        ("sign", 1) => Ok(Command::Sign(expr(0)?)),
        ("sign", _) => Err(CommandError::Arity {
            command: "sign",
            expected: "<expr>",
        }),
        ("compare", 2) => Ok(Command::Compare(expr(0)?, expr(1)?)),
        ("compare", _) => Err(CommandError::Arity {
            command: "compare",
            expected: "<expr>, <expr>",
        }),
        ("defect", 1) => Ok(Command::Defect(expr(0)?)),
        ("defect", _) => Err(CommandError::Arity {
            command: "defect",
            expected: "<expr>",
        }),
        ("saturate", 0) => Err(CommandError::Arity {
            command: "saturate",
            expected: "a list of nonzero integers",
        }),
        ("saturate", _) => Ok(Command::Saturate(
            args.iter()
                .map(|a| parse_int(a, "a nonzero integer"))
                .collect::<Result<_, _>>()?,
        )),
        ("crt", 2) => match args[1].split_once('|') {
            Some((l, r)) => Ok(Command::CrtSplit {
                x: parse_rational(args[0])?,
                left: parse_primes(l)?,
                right: parse_primes(r)?,
            }),
            None => Ok(Command::CrtJoin(
                parse_rational(args[0])?,
                parse_rational(args[1])?,
            )),
        },
        ("crt", _) => Err(CommandError::Arity {
            command: "crt",
            expected: "<frac>, <left>|<right> or <frac>, <frac>",
        }),
        ("padic", 3) => Ok(Command::Padic {
            value: parse_rational(args[0])?,
            primes: parse_primes(args[1])?,
            precision: parse_int(args[2], "a precision")?,
        }),
        ("padic", _) => Err(CommandError::Arity {
            command: "padic",
            expected: "<rational>, <p|{p1,...}>, <k>",
        }),
        (other, _) => Err(CommandError::Unknown(other.to_string())),
    }
}

enum Lowered {
    Exact(BigRational),
    Node(EndoNode),
}

impl Lowered {
    fn node(self) -> EndoNode {
        match self {
            Lowered::Exact(r) => EndoNode::from_rational(&r),
            Lowered::Node(n) => n,
        }
    }
}

fn decimal_value(text: &str) -> BigRational {
    let (int, frac) = text.split_once('.').unwrap_or((text, ""));
    let digits: BigInt = format!("{int}{frac}")
        .parse()
        .expect("parser admits digits only");
    BigRational::new(digits, BigInt::from(10).pow(frac.len() as u32))
}

fn lower_inner(e: &Expr, config: &Config) -> Result<Lowered, EvalError> {
    use Lowered::{Exact, Node};
    Ok(match e {
        Expr::Int(n) => Exact(BigRational::from_integer(n.clone().into())),
        Expr::Rat(p, q) => {
            if q.is_zero() {
                return Err(EvalError::ZeroDenominator);
            }
            Exact(BigRational::new(p.clone().into(), q.clone().into()))
        }
        Expr::Decimal(s) => Exact(decimal_value(s)),
        Expr::Cf { prefix, period } => {
            let seq = if period.is_empty() {
                CfSeq::finite(prefix.clone())?
            } else {
                CfSeq::periodic(prefix.clone(), period.clone())?
            };
            Node(EndoNode::cf(seq))
        }
        Expr::Neg(a) => match lower_inner(a, config)? {
            Exact(r) => Exact(-r),
            Node(n) => Node(real::neg(&n)),
        },
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            let sub = matches!(e, Expr::Sub(..));
            match (lower_inner(a, config)?, lower_inner(b, config)?) {
                (Exact(x), Exact(y)) => Exact(if sub { x - y } else { x + y }),
                (x, y) => {
                    let (x, y) = (x.node(), y.node());
                    Node(if sub {
                        real::sub(&x, &y)
                    } else {
                        real::add(&x, &y)
                    })
                }
            }
        }
        Expr::Mul(a, b) => match (lower_inner(a, config)?, lower_inner(b, config)?) {
            (Exact(x), Exact(y)) => Exact(x * y),
            (x, y) => Node(real::mul(&x.node(), &y.node())),
        },
        Expr::Div(a, b) => {
            let x = lower_inner(a, config)?;
            match (x, invert(lower_inner(b, config)?, config)?) {
                (Exact(x), Exact(y)) => Exact(x * y),
                (x, y) => Node(real::mul(&x.node(), &y.node())),
            }
        }
        Expr::Inv(a) => invert(lower_inner(a, config)?, config)?,
    })
}

fn invert(x: Lowered, config: &Config) -> Result<Lowered, EvalError> {
    match x {
        Lowered::Exact(r) if r.is_zero() => Err(EvalError::DivisionByZero),
        Lowered::Exact(r) => Ok(Lowered::Exact(r.recip())),
        Lowered::Node(n) => Ok(Lowered::Node(real::invert(&n, config.fuel)?)),
    }
}

/// Builds the node an expression denotes; rational subexpressions are folded
/// exactly and division by anything else goes through a certified inverse.
pub fn lower(e: &Expr, config: &Config) -> Result<EndoNode, EvalError> {
    Ok(lower_inner(e, config)?.node())
}

fn cf_text(terms: &[BigInt], open: bool) -> String {
    let mut s = String::from("cf[");
    for (i, t) in terms.iter().enumerate() {
        match i {
            0 => s.push_str(&t.to_string()),
            1 => s.push_str(&format!(";{t}")),
            _ => s.push_str(&format!(",{t}")),
        }
    }
    if open {
        s.push_str(if terms.len() == 1 { ";..." } else { ",..." });
    }
    s.push(']');
    s
}

fn eval_outcome(e: &EvalError) -> Outcome {
    match e {
        EvalError::Inconclusive { .. } => Outcome::inconclusive(e.to_string()),
        _ => Outcome::error(e.to_string()),
    }
}

macro_rules! lower_or_return {
    ($e:expr, $config:expr) => {
        match lower($e, $config) {
            Ok(node) => node,
            Err(err) => return eval_outcome(&err),
        }
    };
}

pub fn execute(cmd: &Command, config: &Config) -> Outcome {
    match cmd {
        Command::Eval { expr, digits } => {
            let node = lower_or_return!(expr, config);
            match real::to_decimal(&node, digits.unwrap_or(config.digits)) {
                Ok(d) => Outcome::ok(d.to_string()),
                Err(e) => Outcome::error(e.to_string()),
            }
        }
        Command::Cf { expr, terms } => {
            let node = lower_or_return!(expr, config);
            let ex = endo_to_cf(&node, *terms, config.fuel);
            match ex.status {
                CfStatus::Terminated => Outcome::ok(cf_text(&ex.terms, false)),
                CfStatus::Prefix => Outcome::ok(cf_text(&ex.terms, true)),
                CfStatus::Inconclusive if ex.terms.is_empty() => {
                    Outcome::inconclusive("inconclusive: integer part not certified".to_string())
                }
                CfStatus::Inconclusive => Outcome::inconclusive(format!(
                    "inconclusive after {}: next term not certified",
                    cf_text(&ex.terms, false)
                )),
            }
        }
        Command::Sign(expr) => {
            let node = lower_or_return!(expr, config);
            sign_outcome(real::sign(&node, config.fuel), "positive", "negative")
        }
        Command::Compare(a, b) => {
            let (x, y) = (lower_or_return!(a, config), lower_or_return!(b, config));
            sign_outcome(real::compare(&x, &y, config.fuel), "greater", "less")
        }
        Command::Defect(expr) => {
            let node = lower_or_return!(expr, config);
            match node.certify_defect(DEFECT_SCAN_RANGE) {
                Ok(observed) => Outcome::ok(format!(
                    "defect bound {} (observed max {observed} over |a|, |b| ≤ {DEFECT_SCAN_RANGE})",
                    node.defect()
                )),
                Err(v) => Outcome::error(format!(
                    "defect bound {} violated at a={}, b={}: observed {}",
                    v.bound, v.a, v.b, v.observed
                )),
            }
        }
        Command::Saturate(gens) => match MultSet::new(gens.clone()) {
            Ok(s) => Outcome::ok(saturate(&s).to_string()),
            Err(e) => Outcome::error(e.to_string()),
        },
        Command::CrtSplit { x, left, right } => {
            let result = PruferFrac::from_rational(x, left.union(right))
                .and_then(|x| crt_split(&x, left, right));
            match result {
                Ok((u, v)) => Outcome::ok(format!("({u}, {v})")),
                Err(e) => Outcome::error(e.to_string()),
            }
        }
        Command::CrtJoin(a, b) => {
            let result = PruferFrac::from_rational(a, den_primes(a))
                .and_then(|a| Ok((a, PruferFrac::from_rational(b, den_primes(b))?)))
                .and_then(|(a, b)| crt_join(&a, &b));
            match result {
                Ok(x) => Outcome::ok(x.to_string()),
                Err(e) => Outcome::error(e.to_string()),
            }
        }
        Command::Padic {
            value,
            primes,
            precision,
        } => match qend_decompose(&rational_action(value.clone()), primes, *precision) {
            Ok(product) => Outcome::ok(product.to_string()),
            Err(e) => Outcome::error(e.to_string()),
        },
    }
}

fn sign_outcome(s: SignResult, pos: &str, neg: &str) -> Outcome {
    match s {
        SignResult::Positive {
            witness,
            slope_floor,
        } => Outcome::ok(format!("{pos} (witness n={witness}, λ ≥ {slope_floor})")),
        SignResult::Negative {
            witness,
            slope_ceiling,
        } => Outcome::ok(format!("{neg} (witness n={witness}, λ ≤ {slope_ceiling})")),
        SignResult::Inconclusive { bound } => {
            Outcome::inconclusive(format!("inconclusive |λ| ≤ {bound}"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(word: &str, rest: &str) -> Outcome {
        match parse_command(word, rest) {
            Ok(cmd) => execute(&cmd, &Config::default()),
            Err(e) => Outcome::error(e.to_string()),
        }
    }

    #[test]
    fn top_level_split() {
        assert_eq!(split_top_level("cf[1;2,3], 4"), vec!["cf[1;2,3]", " 4"]);
        assert_eq!(split_top_level("5/6, {2,3}|{5}"), vec!["5/6", " {2,3}|{5}"]);
        assert!(split_top_level("  ").is_empty());
    }

    #[test]
    fn eval_command() {
        let out = run("eval", "cf[1;(2)*] * cf[1;(2)*], 8");
        assert_eq!((out.code, out.text.as_str()), (0, "2.00000000 ±1e-8"));
        assert_eq!(run("eval", "1/3").text, "0.333333333333 ±1e-12");
        assert_eq!(run("eval", "1 / (0)").code, 1);
        assert_eq!(run("eval", "1/0").code, 1);
    }

    #[test]
    fn division_by_inconclusive() {
        let out = run("eval", "1 / (cf[1;(2)*] - cf[1;(2)*])");
        assert_eq!(out.code, 2);
        assert!(out.text.starts_with("inconclusive |λ| ≤ "), "{}", out.text);
    }

    #[test]
    fn sign_and_compare() {
        let out = run("sign", "1/2 - 1/2");
        assert_eq!(out.code, 2);
        assert!(out.text.starts_with("inconclusive |λ| ≤ "));
        assert_eq!(run("sign", "-3").text, "negative (witness n=1, λ ≤ -2)");
        assert!(run("compare", "cf[1;(2)*], 1.4")
            .text
            .starts_with("greater"));
        assert!(run("compare", "cf[1;(2)*], 3/2").text.starts_with("less"));
    }

    #[test]
    fn cf_command() {
        assert_eq!(run("cf", "cf[1;(2)*], 4").text, "cf[1;2,2,2,...]");
        assert_eq!(run("cf", "7/2").text, "cf[3;2]");
        assert_eq!(run("cf", "5").text, "cf[5]");
    }

    #[test]
    fn localization_commands() {
        assert_eq!(run("saturate", "6,10").text, "{2, 3, 5}");
        assert_eq!(run("saturate", "0").code, 1);
        assert_eq!(run("crt", "5/6, {2}|{3}").text, "(1/2 mod 1, 1/3 mod 1)");
        assert_eq!(run("crt", "1/2, 2/3").text, "1/6 mod 1");
        assert_eq!(run("crt", "1/10, {2}|{3}").code, 1);
        assert_eq!(run("crt", "1/2, 1/4").code, 1);
        assert_eq!(
            run("padic", "-1, 5, 4").text,
            "p-adic(p=5, val=0, digits=[4,4,4,4,...])"
        );
        assert_eq!(
            run("padic", "1/5, {2,3}, 4").text,
            "p-adic(p=2, val=0, digits=[1,0,1,1,...])\np-adic(p=3, val=0, digits=[2,0,1,2,...])"
        );
    }

    #[test]
    fn defect_command() {
        assert_eq!(
            run("defect", "3/2").text,
            "defect bound 2 (observed max 1 over |a|, |b| ≤ 100)"
        );
    }

    #[test]
    fn argument_errors() {
        assert_eq!(run("eval", "").code, 1);
        assert_eq!(run("frobnicate", "1").code, 1);
        assert_eq!(run("padic", "1, 4, 3").code, 1);
    }
}
