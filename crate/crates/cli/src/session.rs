use std::fs;
use std::path::Path;

use smt_core::eval::{check_axiom_suite, Env, Evaluator, SuiteOptions, Universe, UniverseSpec};
use smt_core::syntax::{parse_formula, parse_term, render};
use smt_core::{Limits, Value};

use crate::{json, report, CliError};

pub const HELP: &str = "\
commands:
  <term>                 evaluate and print
  :let <name> = <term>   bind a name
  :check <formula>       print true or false
  :shape <term>          print the shape of a value
  :json <term>           print the JSON encoding
  :axioms [key=value..]  run the axiom suite (keys: rank width dim nest cap)
  :set [key=value..]     change bounds for later commands
  :load <file>           run a script
  :env                   list bindings
  :help                  this text
  :quit                  leave
lines starting with # are comments";

/// How a command went, beyond its printed output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok,
    /// A check came out false or an axiom failed.
    False,
    Quit,
}

#[derive(Debug, Clone, Default)]
pub struct Config {
    pub spec: UniverseSpec,
    pub limits: Limits,
    pub json: bool,
}

impl Config {
    /// Applies `key=value` settings.
    pub fn apply(&mut self, settings: &str) -> Result<(), CliError> {
        for item in settings.split_whitespace() {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("expected key=value, got `{item}`")))?;
            let n: u64 = value
                .parse()
                .map_err(|_| CliError::Usage(format!("`{value}` is not a non-negative integer")))?;
            let small = || {
                usize::try_from(n).map_err(|_| CliError::Usage(format!("`{value}` is too large")))
            };
            match key {
                "rank" => self.spec.rank_bound = small()?,
                "width" => self.spec.set_width_bound = small()?,
                "dim" => self.spec.matrix_dim_bound = small()?,
                "nest" => self.spec.nest_depth_bound = small()?,
                "cap" => self.limits = Limits::new(n),
                _ => return Err(CliError::Usage(format!("unknown setting `{key}`"))),
            }
        }
        Ok(())
    }

    pub fn describe(&self) -> String {
        format!("{} cap={}", self.spec, self.limits.cap)
    }
}

/// A command interpreter holding bindings and bounds.
#[derive(Debug, Default)]
pub struct Session {
    env: Env,
    config: Config,
    history: Vec<String>,
    universe: Option<Universe>,
}

impl Session {
    pub fn new(config: Config) -> Session {
        Session {
            config,
            ..Session::default()
        }
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    pub fn env(&self) -> &Env {
        &self.env
    }

    pub fn history(&self) -> &[String] {
        &self.history
    }

    fn evaluator(&self) -> Evaluator {
        Evaluator::new(self.config.limits)
    }

    fn universe(&mut self) -> Result<Universe, CliError> {
        if self.universe.is_none() {
            self.universe = Some(Universe::generate(&self.config.spec, &self.config.limits)?);
        }
        Ok(self.universe.clone().expect("just generated"))
    }

    pub fn eval(&self, src: &str) -> Result<Value, CliError> {
        let term = parse_term(src)?;
        Ok(self.evaluator().eval_term(&term, &self.env)?)
    }

    pub fn check(&mut self, src: &str) -> Result<bool, CliError> {
        let formula = parse_formula(src)?;
        let mut ev = self.evaluator();
        if formula.has_unbounded_quantifier() {
            ev = ev.with_universe(self.universe()?);
        }
        Ok(ev.check(&formula, &self.env)?)
    }

    fn show(&self, v: &Value) -> String {
        if self.config.json {
            json::to_string(v)
        } else {
            render(v)
        }
    }

    /// Runs one line, appending anything it prints to `out`.
    pub fn execute(&mut self, line: &str, out: &mut String) -> Result<Status, CliError> {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            return Ok(Status::Ok);
        }
        self.history.push(line.to_string());
        let Some(command) = line.strip_prefix(':') else {
            let v = self.eval(line)?;
            push_line(out, &self.show(&v));
            return Ok(Status::Ok);
        };
        let (name, rest) = command
            .split_once(char::is_whitespace)
            .map_or((command, ""), |(n, r)| (n, r.trim()));
        match name {
            "let" => {
                let (var, src) = rest
                    .split_once('=')
                    .ok_or_else(|| CliError::Usage(":let <name> = <term>".into()))?;
                let var = var.trim();
                if !is_identifier(var) {
                    return Err(CliError::Usage(format!("`{var}` is not a valid name")));
                }
                let v = self.eval(src)?;
                push_line(out, &format!("{var} = {}", self.show(&v)));
                self.env.insert(var, v);
            }
            "check" => {
                let holds = self.check(rest)?;
                push_line(out, if holds { "true" } else { "false" });
                if !holds {
                    return Ok(Status::False);
                }
            }
            "shape" => push_line(out, &self.eval(rest)?.shape().to_string()),
            "json" => push_line(out, &json::to_string(&self.eval(rest)?)),
            "axioms" => {
                let mut config = self.config.clone();
                config.apply(rest)?;
                let report =
                    check_axiom_suite(&config.spec, &config.limits, &SuiteOptions::default())?;
                if self.config.json {
                    push_line(out, &report::to_json(&report).to_string());
                } else {
                    push_line(out, &report.to_string());
                }
                if !report.all_passed() {
                    return Ok(Status::False);
                }
            }
            "set" => {
                let mut config = self.config.clone();
                config.apply(rest)?;
                self.config = config;
                self.universe = None;
                push_line(out, &self.config.describe());
            }
            "load" => return self.load(Path::new(rest), out),
            "env" => {
                for var in self.env.names().collect::<Vec<_>>() {
                    let v = self.env.get(var).expect("listed binding");
                    push_line(out, &format!("{var} = {}", self.show(v)));
                }
            }
            "help" => push_line(out, HELP),
            "quit" | "q" => return Ok(Status::Quit),
            _ => {
                return Err(CliError::Usage(format!(
                    "unknown command `:{name}`; try :help"
                )))
            }
        }
        Ok(Status::Ok)
    }

    /// Runs a script. Errors are reported inline and do not stop the script; the result is the
    /// first error, if any, else the most severe status.
    pub fn load(&mut self, path: &Path, out: &mut String) -> Result<Status, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        self.run_script(&text, out)
    }

    pub fn run_script(&mut self, text: &str, out: &mut String) -> Result<Status, CliError> {
        let mut status = Status::Ok;
        let mut first_error = None;
        for (i, line) in text.lines().enumerate() {
            match self.execute(line, out) {
                Ok(Status::Quit) => return Ok(Status::Quit),
                Ok(s) => status = status.max(s),
                Err(e) => {
                    push_line(out, &format!("line {}: error: {e}", i + 1));
                    first_error.get_or_insert(CliError::Script {
                        line: i + 1,
                        message: e.to_string(),
                    });
                }
            }
        }
        match first_error {
            Some(e) => Err(e),
            None => Ok(status),
        }
    }
}

fn push_line(out: &mut String, text: &str) {
    out.push_str(text);
    out.push('\n');
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
        && parse_term(s).is_ok()
}
