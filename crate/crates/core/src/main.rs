use std::io::{self, IsTerminal};
use std::process::ExitCode;

use eudoxus::cli::{self, Invocation};

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let code = match cli::parse_args(&args) {
        Err(msg) => {
            eprintln!("error: {msg}\n\n{}", cli::USAGE);
            1
        }
        Ok(Invocation::Help) => {
            println!("{}", cli::USAGE);
            0
        }
        Ok(Invocation::Repl(config)) => {
            let stdin = io::stdin();
            let prompt = stdin.is_terminal();
            match cli::repl(
                &config,
                stdin.lock(),
                &mut io::stdout(),
                &mut io::stderr(),
                prompt,
            ) {
                Ok(code) => code,
                Err(e) => {
                    eprintln!("error: {e}");
                    1
                }
            }
        }
        Ok(Invocation::Run {
            config,
            command,
            args,
        }) => {
            let outcome = cli::run_command(&command, &args, &config);
            if outcome.is_error() {
                eprintln!("error: {}", outcome.text);
            } else {
                println!("{}", outcome.text);
            }
            outcome.code
        }
    };
    ExitCode::from(code as u8)
}
