//! The `eudoxus` calculator: argument handling, commands and the REPL.

mod exec;
pub mod parse;

use std::io::{self, BufRead, Write};

pub use exec::{execute, lower, parse_command, split_top_level, Command, CommandError, EvalError};

use crate::real::Fuel;

pub const DEFAULT_DIGITS: u32 = 12;

pub const USAGE: &str = "\
usage: eudoxus <command> [args] [--fuel N] [--digits D]

commands:
  eval <expr>[, digits]          certified decimal
  cf <expr>[, terms]             continued fraction terms
  sign <expr>                    fuel-bounded sign with witness
  compare <expr>, <expr>         sign of the difference
  defect <expr>                  claimed defect bound and observed maximum
  saturate <n1>, <n2>, ...       primes inverted by the localization
  crt <frac>, <left>|<right>     primary decomposition, e.g. crt 5/6, {2}|{3}
  crt <frac>, <frac>             recombine parts with disjoint supports
  padic <rational>, <p|{p,..}>, <k>
                                 p-adic components of multiplication by a rational

Without a command, reads one command per line from standard input.
Exit status: 0 on success, 1 on user error, 2 on an inconclusive verdict.";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub fuel: Fuel,
    pub digits: u32,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            fuel: Fuel::default(),
            digits: DEFAULT_DIGITS,
        }
    }
}

/// Text plus exit code; code 1 text belongs on standard error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub text: String,
}

impl Outcome {
    pub const OK: i32 = 0;
    pub const USER_ERROR: i32 = 1;
    pub const INCONCLUSIVE: i32 = 2;

    pub fn ok(text: String) -> Self {
        Outcome {
            code: Self::OK,
            text,
        }
    }

    pub fn error(text: String) -> Self {
        Outcome {
            code: Self::USER_ERROR,
            text,
        }
    }

    pub fn inconclusive(text: String) -> Self {
        Outcome {
            code: Self::INCONCLUSIVE,
            text,
        }
    }

    pub fn is_error(&self) -> bool {
        self.code == Self::USER_ERROR
    }
}

/// Result of reading the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Invocation {
    Help,
    Repl(Config),
    Run {
        config: Config,
        command: String,
        args: String,
    },
}

fn flag_value<'a>(
    name: &str,
    inline: Option<&'a str>,
    it: &mut impl Iterator<Item = &'a String>,
) -> Result<u32, String> {
    let text = match inline {
        Some(v) => v,
        None => it
            .next()
            .map(String::as_str)
            .ok_or_else(|| format!("{name} needs a value"))?,
    };
    text.parse()
        .map_err(|_| format!("{name} expects a nonnegative integer, got `{text}`"))
}

/// Flags may appear anywhere; the first other word is the command and the
/// remaining words are joined as comma-separated arguments.
pub fn parse_args(args: &[String]) -> Result<Invocation, String> {
    let mut config = Config::default();
    let mut words = Vec::new();
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        let (name, inline) = match arg.split_once('=') {
            Some((n, v)) if n.starts_with("--") => (n, Some(v)),
            _ => (arg.as_str(), None),
        };
        match name {
            "--fuel" => {
                config.fuel =
                    Fuel::new(flag_value(name, inline, &mut it)?).map_err(|e| e.to_string())?
            }
            "--digits" => config.digits = flag_value(name, inline, &mut it)?,
            "-h" | "--help" => return Ok(Invocation::Help),
            _ if name.starts_with("--") => return Err(format!("unknown flag `{name}`")),
            _ => words.push(arg.as_str()),
        }
    }
    match words.split_first() {
        None => Ok(Invocation::Repl(config)),
        Some((command, rest)) => Ok(Invocation::Run {
            config,
            command: command.to_string(),
            args: rest.join(", "),
        }),
    }
}

pub fn run_command(command: &str, args: &str, config: &Config) -> Outcome {
    match parse_command(command, args) {
        Ok(cmd) => execute(&cmd, config),
        Err(e) => Outcome::error(e.to_string()),
    }
}

/// One REPL line: a command word followed by its arguments.
pub fn run_line(line: &str, config: &Config) -> Option<Outcome> {
    let line = line.trim_start();
    if line.trim().is_empty() || line.starts_with('#') {
        return None;
    }
    let (command, rest) = line
        .split_once(char::is_whitespace)
        .unwrap_or((line.trim_end(), ""));
    if command == "help" {
        return Some(Outcome::ok(USAGE.to_string()));
    }
    Some(run_command(command, rest, config))
}

/// Runs until end of input or `quit`; returns the last nonzero exit code.
pub fn repl(
    config: &Config,
    input: impl BufRead,
    out: &mut impl Write,
    err: &mut impl Write,
    prompt: bool,
) -> io::Result<i32> {
    let mut status = 0;
    if prompt {
        write!(out, "> ")?;
        out.flush()?;
    }
    for line in input.lines() {
        let line = line?;
        if matches!(line.trim(), "quit" | "exit") {
            break;
        }
        if let Some(o) = run_line(&line, config) {
            if o.is_error() {
                writeln!(err, "error: {}", o.text)?;
            } else {
                writeln!(out, "{}", o.text)?;
            }
            if o.code != 0 {
                status = o.code;
            }
        }
        if prompt {
            write!(out, "> ")?;
            out.flush()?;
        }
    }
    Ok(status)
}
