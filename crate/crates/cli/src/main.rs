use std::io::{self, BufRead, IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser};
use smt_cli::{exit, Config, Session, Status};
use smt_core::eval::UniverseSpec;
use smt_core::Limits;

/// Compute with hereditarily finite set matrices.
///
/// Without a mode flag, reads commands from standard input (type :help).
#[derive(Parser, Debug)]
#[command(name = "smt", version)]
#[command(group(ArgGroup::new("mode").args(["eval", "check", "script", "axioms"])))]
struct Args {
    /// Evaluate a term and print it
    #[arg(long, value_name = "TERM")]
    eval: Option<String>,
    /// Check a formula; exit 1 when it is false
    #[arg(long, value_name = "FORMULA")]
    check: Option<String>,
    /// Run a script of commands
    #[arg(long, value_name = "FILE")]
    script: Option<PathBuf>,
    /// Run the axiom suite; exit 1 when an axiom fails
    #[arg(long)]
    axioms: bool,
    #[arg(long, value_name = "N", default_value_t = 2)]
    rank_bound: usize,
    #[arg(long, value_name = "N", default_value_t = 2)]
    width_bound: usize,
    #[arg(long, value_name = "N", default_value_t = 2)]
    dim_bound: usize,
    #[arg(long, value_name = "N", default_value_t = 1)]
    nest_bound: usize,
    /// Largest collection any single construction may produce
    #[arg(long, value_name = "N", default_value_t = smt_core::DEFAULT_CAP)]
    cap: u64,
    /// Print values as JSON
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let config = Config {
        spec: UniverseSpec::new(
            args.rank_bound,
            args.width_bound,
            args.dim_bound,
            args.nest_bound,
        ),
        limits: Limits::new(args.cap),
        json: args.json,
    };
    let mut session = Session::new(config);
    let command = if let Some(term) = &args.eval {
        term.clone()
    } else if let Some(formula) = &args.check {
        format!(":check {formula}")
    } else if args.axioms {
        ":axioms".to_string()
    } else if let Some(path) = &args.script {
        format!(":load {}", path.display())
    } else {
        return repl(&mut session);
    };
    let mut out = String::new();
    let result = session.execute(&command, &mut out);
    print!("{out}");
    let _ = io::stdout().flush();
    ExitCode::from(code(result) as u8)
}

fn code(result: Result<Status, smt_cli::CliError>) -> i32 {
    match result {
        Ok(Status::False) => exit::FALSE,
        Ok(_) => exit::OK,
        Err(e) => {
            eprintln!("error: {e}");
            exit::ERROR
        }
    }
}

fn repl(session: &mut Session) -> ExitCode {
    let stdin = io::stdin();
    let interactive = stdin.is_terminal();
    let mut stdout = io::stdout();
    let mut failed = false;
    loop {
        if interactive {
            let _ = write!(stdout, "smt> ");
            let _ = stdout.flush();
        }
        let mut line = String::new();
        match stdin.lock().read_line(&mut line) {
            Ok(0) => break,
            Ok(_) => {}
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(exit::ERROR as u8);
            }
        }
        let mut out = String::new();
        let result = session.execute(&line, &mut out);
        let _ = write!(stdout, "{out}");
        match result {
            Ok(Status::Quit) => break,
            Ok(_) => {}
            Err(e) => {
                failed = true;
                let _ = stdout.flush();
                eprintln!("error: {e}");
            }
        }
    }
    let _ = stdout.flush();
    ExitCode::from(if failed && !interactive {
        exit::ERROR
    } else {
        exit::OK
    } as u8)
}
