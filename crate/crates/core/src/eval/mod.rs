//! Evaluation of terms to values and formulas to truth values.
//!
//! Bounded quantifiers (`forall v in t (...)`) range over the elements of the value of `t`; a
//! matrix has no elements, so they range over nothing there. Unbounded quantifiers range over the
//! evaluator's [`Universe`], a finite carrier; with none configured they are an error.

mod axioms;
mod schemes;
mod universe;

pub use axioms::{check_axiom_suite, AxiomOutcome, AxiomReport, Fault, SuiteOptions, Verdict};
pub use schemes::{leaf_var, EntryMap, ShapeFormula};
pub use universe::{generate_universe, Universe, UniverseSpec};

use crate::error::{Error, Result};
use crate::ops::{self, Limits};
use crate::syntax::{Formula, Op, Quantifier, Range, Sort, Term};
use crate::value::Value;

/// Variable bindings. Later bindings shadow earlier ones with the same name.
#[derive(Debug, Clone, Default)]
pub struct Env {
    bindings: Vec<(String, Value)>,
}

impl Env {
    pub fn new() -> Env {
        Env::default()
    }

    /// Binds `name`, replacing an existing binding of that name.
    pub fn insert(&mut self, name: impl Into<String>, value: Value) {
        let name = name.into();
        match self.bindings.iter_mut().rev().find(|(n, _)| *n == name) {
            Some(slot) => slot.1 = value,
            None => self.bindings.push((name, value)),
        }
    }

    pub fn with(mut self, name: impl Into<String>, value: Value) -> Env {
        self.insert(name, value);
        self
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.bindings
            .iter()
            .rev()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.get(name).is_some()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.bindings.iter().map(|(n, _)| n.as_str())
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    /// Runs `f` with `name` bound to `value`, then drops the binding.
    pub(crate) fn scoped<T>(
        &mut self,
        name: &str,
        value: Value,
        f: impl FnOnce(&mut Env) -> T,
    ) -> T {
        self.bindings.push((name.to_string(), value));
        let out = f(self);
        self.bindings.pop();
        out
    }
}

#[derive(Debug, Clone, Default)]
pub struct Evaluator {
    limits: Limits,
    universe: Option<Universe>,
}

impl Evaluator {
    pub fn new(limits: Limits) -> Evaluator {
        Evaluator {
            limits,
            universe: None,
        }
    }

    pub fn with_universe(mut self, universe: Universe) -> Evaluator {
        self.universe = Some(universe);
        self
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn universe(&self) -> Option<&Universe> {
        self.universe.as_ref()
    }

    pub(crate) fn require_universe(&self, var: &str) -> Result<&Universe> {
        self.universe
            .as_ref()
            .ok_or_else(|| Error::MissingUniverse(var.to_string()))
    }

    pub fn eval_term(&self, term: &Term, env: &Env) -> Result<Value> {
        match term {
            Term::Empty => Ok(Value::empty()),
            Term::Var(name) => env
                .get(name)
                .cloned()
                .ok_or_else(|| Error::Unbound(name.clone())),
            Term::Numeral(k) => Ok(ops::numeral(*k)),
            Term::SetLit(items) => Ok(Value::set(self.eval_all(items, env)?)),
            Term::Tuple(items) => ops::tuple(self.eval_all(items, env)?),
            Term::MatrixLit(rows) => {
                let cols = rows.first().map_or(0, Vec::len);
                let mut entries = Vec::with_capacity(rows.len() * cols);
                for row in rows {
                    for t in row {
                        entries.push(self.eval_term(t, env)?);
                    }
                }
                Value::matrix(rows.len(), cols, entries)
            }
            Term::App(op, args) => {
                let args = self.eval_all(args, env)?;
                self.apply(*op, &args)
            }
        }
    }

    fn eval_all(&self, terms: &[Term], env: &Env) -> Result<Vec<Value>> {
        terms.iter().map(|t| self.eval_term(t, env)).collect()
    }

    fn apply(&self, op: Op, args: &[Value]) -> Result<Value> {
        if !op.accepts(args.len()) {
            return Err(Error::Precondition {
                op: op.name(),
                message: format!("wrong number of arguments: {}", args.len()),
            });
        }
        let limits = &self.limits;
        match op {
            Op::Pair => Ok(ops::pair(&args[0], &args[1])),
            Op::Union => ops::union_family(&args[0]),
            Op::Pow => ops::power_set(&args[0], limits),
            Op::MatSet { rows, cols } => ops::set_of_matrices(rows, cols, &args[0], limits),
            Op::Cart if args.len() == 2 => ops::cartesian(&args[0], &args[1], limits),
            Op::Cart => ops::cartesian_n(args, limits),
            Op::FunSpace => ops::function_space(&args[0], &args[1], limits),
            Op::Succ => ops::successor(&args[0]),
        }
    }

    /// Evaluates after checking that every free variable is bound, so an unbound name is
    /// reported even where evaluation would short-circuit past it.
    pub fn check(&self, formula: &Formula, env: &Env) -> Result<bool> {
        if let Some(name) = formula.free_vars().into_iter().find(|v| !env.contains(v)) {
            return Err(Error::Unbound(name));
        }
        let mut env = env.clone();
        self.eval_formula(formula, &mut env)
    }

    pub fn eval_formula(&self, formula: &Formula, env: &mut Env) -> Result<bool> {
        match formula {
            Formula::True => Ok(true),
            Formula::False => Ok(false),
            Formula::Member(a, b) => {
                let (a, b) = (self.eval_term(a, env)?, self.eval_term(b, env)?);
                Ok(ops::member(&a, &b))
            }
            Formula::Equal(a, b) => Ok(self.eval_term(a, env)? == self.eval_term(b, env)?),
            Formula::SubsetOf(a, b) => {
                ops::subset(&self.eval_term(a, env)?, &self.eval_term(b, env)?)
            }
            Formula::Not(f) => Ok(!self.eval_formula(f, env)?),
            Formula::And(a, b) => Ok(self.eval_formula(a, env)? && self.eval_formula(b, env)?),
            Formula::Or(a, b) => Ok(self.eval_formula(a, env)? || self.eval_formula(b, env)?),
            Formula::Implies(a, b) => Ok(!self.eval_formula(a, env)? || self.eval_formula(b, env)?),
            Formula::Iff(a, b) => Ok(self.eval_formula(a, env)? == self.eval_formula(b, env)?),
            Formula::Quant {
                quantifier,
                var,
                range,
                body,
            } => match range {
                Range::In(t) => {
                    let domain = self.eval_term(t, env)?;
                    let elements = domain.elements().unwrap_or_default();
                    self.quantify(*quantifier, var, elements, body, env)
                }
                Range::Universe(sort) => {
                    let universe = self.require_universe(var)?;
                    let domain = match sort {
                        Sort::Any => universe.values(),
                        Sort::Set => universe.sets(),
                    };
                    self.quantify(*quantifier, var, domain, body, env)
                }
            },
        }
    }

    fn quantify(
        &self,
        quantifier: Quantifier,
        var: &str,
        domain: &[Value],
        body: &Formula,
        env: &mut Env,
    ) -> Result<bool> {
        let holds = |v: &Value, env: &mut Env| {
            env.scoped(var, v.clone(), |env| self.eval_formula(body, env))
        };
        match quantifier {
            Quantifier::Forall => {
                for v in domain {
                    if !holds(v, env)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Quantifier::Exists => {
                for v in domain {
                    if holds(v, env)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            Quantifier::ExistsUnique => {
                let mut found = 0;
                for v in domain {
                    if holds(v, env)? {
                        found += 1;
                        if found > 1 {
                            return Ok(false);
                        }
                    }
                }
                Ok(found == 1)
            }
        }
    }
}
