use std::io::Write;
use std::process::{Command, Output, Stdio};

use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use eudoxus::cli::parse::{parse, parse_with_limit, Expr, ParseError};
use eudoxus::cli::{repl, run_line, Config};

fn eudoxus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eudoxus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn boxed(e: Expr) -> Box<Expr> {
    Box::new(e)
}

#[test]
fn parse_examples() {
    let sqrt2 = Expr::Cf {
        prefix: vec![1.into()],
        period: vec![2.into()],
    };
    assert_eq!(
        parse("cf[1;(2)*] * cf[1;(2)*]").unwrap(),
        Expr::Mul(boxed(sqrt2.clone()), boxed(sqrt2))
    );
    let r = |p: u32, q: u32| Expr::Rat(BigUint::from(p), BigUint::from(q));
    assert_eq!(
        parse("3/4 + 1/4").unwrap(),
        Expr::Add(boxed(r(3, 4)), boxed(r(1, 4)))
    );
    match parse("1 + ").unwrap_err() {
        ParseError::Syntax { offset, .. } => assert_eq!(offset, 4),
        other => panic!("{other}"),
    }
}

#[test]
fn precedence_and_associativity() {
    assert_eq!(parse("1 - 2 - 3").unwrap(), parse("(1 - 2) - 3").unwrap());
    assert_eq!(parse("1 + 2 * 3").unwrap(), parse("1 + (2 * 3)").unwrap());
    assert_eq!(parse("-2 * 3").unwrap(), parse("(-2) * 3").unwrap());
}

#[test]
fn depth_limit_is_enforced() {
    let deep = format!("{}1{}", "(".repeat(40), ")".repeat(40));
    assert!(matches!(
        parse_with_limit(&deep, 16),
        Err(ParseError::DepthExceeded { limit: 16 })
    ));
    let chain = vec!["1"; 600].join(" + ");
    assert!(matches!(
        parse(&chain),
        Err(ParseError::DepthExceeded { .. })
    ));
    assert!(matches!(
        parse(&"1".repeat(70_000)),
        Err(ParseError::TooLong { .. })
    ));
}

#[test]
fn binary_exit_codes() {
    let ok = eudoxus(&["eval", "cf[1;(2)*] * cf[1;(2)*]", "--digits", "8"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok).trim_end(), "2.00000000 ±1e-8");

    let bad = eudoxus(&["eval", "1 +"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).is_empty());
    assert!(String::from_utf8_lossy(&bad.stderr).contains("syntax error"));

    let unsure = eudoxus(&["sign", "1/2 - 1/2"]);
    assert_eq!(unsure.status.code(), Some(2));
    assert!(stdout(&unsure).starts_with("inconclusive |λ| ≤ "));

    assert_eq!(eudoxus(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(eudoxus(&["--help"]).status.code(), Some(0));
}

#[test]
fn division_by_unseparated_value_exits_two() {
    let o = eudoxus(&["eval", "1 / (cf[1;(2)*] * cf[1;(2)*] - 2)", "--fuel", "20"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        String::from_utf8_lossy(&o.stdout).contains("|λ| ≤")
            || String::from_utf8_lossy(&o.stderr).contains("|λ| ≤")
    );
}

#[test]
fn flags_override_defaults() {
    let o = eudoxus(&["--digits=3", "eval", "1/3"]);
    assert_eq!(stdout(&o).trim_end(), "0.333 ±1e-3");
    let o = eudoxus(&["eval", "1/3"]);
    assert_eq!(stdout(&o).trim_end(), "0.333333333333 ±1e-12");
}

#[test]
fn repl_over_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_eudoxus"))
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"# comment\nsaturate 6, 10\neval 1/4, 3\n")
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{2, 3, 5}\n0.250 ±1e-3\n");
}

#[test]
fn repl_returns_last_failure() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let input = "eval 1 +\neval 2\n".as_bytes();
    let code = repl(&Config::default(), input, &mut out, &mut err, false).unwrap();
    assert_eq!(code, 1);
    assert!(String::from_utf8(out)
        .unwrap()
        .starts_with("2.000000000000 ±1e-12"));
}

#[test]
fn certified_outputs_use_decimal_format() {
    let cfg = Config::default();
    let o = run_line("eval cf[1;(2)*], 20", &cfg).unwrap();
    assert_eq!(o.text, "1.41421356237309504880 ±1e-20");
    let o = run_line("eval -3, 2", &cfg).unwrap();
    assert_eq!(o.text, "-3.00 ±1e-2");
}

fn nat() -> impl Strategy<Value = BigUint> {
    (0u64..10_000).prop_map(BigUint::from)
}

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        nat().prop_map(Expr::Int),
        (nat(), (1u64..500).prop_map(BigUint::from)).prop_map(|(p, q)| Expr::Rat(p, q)),
        (0u32..999, 1u32..999).prop_map(|(a, b)| Expr::Decimal(format!("{a}.{b}"))),
        (
            prop::collection::vec(1i64..20, 1..4),
            -5i64..5,
            prop::collection::vec(1i64..20, 0..3)
        )
            .prop_map(|(mut prefix, a0, period)| {
                prefix[0] = a0;
                Expr::Cf {
                    prefix: prefix.into_iter().map(BigInt::from).collect(),
                    period: period.into_iter().map(BigInt::from).collect(),
                }
            }),
    ]
}

fn expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(5, 40, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(boxed(a), boxed(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(boxed(a), boxed(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(boxed(a), boxed(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Div(boxed(a), boxed(b))),
            inner.clone().prop_map(|a| Expr::Neg(boxed(a))),
            inner.prop_map(|a| Expr::Inv(boxed(a))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn print_then_parse_is_identity(e in expr()) {
        let text = e.to_string();
        prop_assert_eq!(parse(&text).unwrap(), e, "{}", text);
    }
}
