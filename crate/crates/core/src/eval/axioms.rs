//! Bounded verification of the set-matrix axioms.
//!
//! Each axiom is checked by letting its quantifiers range over a generated [`Universe`] and
//! building the objects it asserts to exist with the kernel. A pass is evidence at the given
//! bounds, not a proof.

use std::fmt;

use itertools::Itertools;

use super::{Env, Evaluator, Universe, UniverseSpec};
use crate::error::{Error, Result};
use crate::ops::{self, Limits};
use crate::syntax::parse_formula;
use crate::value::Value;

/// Deliberate kernel faults, for checking that the suite notices them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// `[x]` is kept as a `1 x 1` matrix instead of collapsing to `x`.
    UncollapsedUnit,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SuiteOptions {
    pub fault: Option<Fault>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// `counterexample` is written in the term/formula syntax.
    Fail {
        counterexample: String,
    },
    NotFinitelyCheckable {
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomOutcome {
    pub name: &'static str,
    pub verdict: Verdict,
    pub instances: u64,
    /// Instances whose hypothesis could not be decided inside the universe.
    pub skipped: u64,
    pub note: Option<String>,
}

impl AxiomOutcome {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed(&self) -> bool {
        matches!(self.verdict, Verdict::Fail { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub spec: UniverseSpec,
    pub universe_size: usize,
    pub outcomes: Vec<AxiomOutcome>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        !self.outcomes.iter().any(AxiomOutcome::failed)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomOutcome> {
        self.outcomes.iter().find(|o| o.name == name)
    }
}

/// Separation instances, with `a` the element variable.
const SEPARATION_FAMILY: [&str; 3] = [
    "forall y in a (false)",
    "not a in a",
    "exists y in a (y = {})",
];

/// Substitution instances, relating `a` to `b`.
const SUBSTITUTION_FAMILY: [&str; 3] = ["b = a", "b = {a}", "b = <a, {}>"];

pub const SCOPE_NOTE: &str =
    "quantifiers range over the bounded universe only; a pass is evidence at these bounds, not a proof";

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "axiom suite over {} values ({})",
            self.universe_size, self.spec
        )?;
        for o in &self.outcomes {
            match &o.verdict {
                Verdict::Pass => write!(f, "PASS  {:<22} {} instances", o.name, o.instances)?,
                Verdict::Fail { counterexample } => {
                    write!(f, "FAIL  {:<22} counterexample: {}", o.name, counterexample)?
                }
                Verdict::NotFinitelyCheckable { reason } => {
                    write!(f, "N/A   {:<22} not finitely checkable: {}", o.name, reason)?
                }
            }
            if let Some(note) = &o.note {
                write!(f, " ({note})")?;
            }
            writeln!(f)?;
        }
        let passed = self.outcomes.iter().filter(|o| o.passed()).count();
        let failed = self.outcomes.iter().filter(|o| o.failed()).count();
        writeln!(
            f,
            "summary: {passed} passed, {failed} failed, {} not checkable",
            self.outcomes.len() - passed - failed
        )?;
        write!(f, "{SCOPE_NOTE}")
    }
}

#[derive(Default)]
struct Tally {
    instances: u64,
    skipped: u64,
    failure: Option<String>,
    note: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, counterexample: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(counterexample());
        }
    }

    fn finish(self, name: &'static str) -> AxiomOutcome {
        AxiomOutcome {
            name,
            verdict: match self.failure {
                None => Verdict::Pass,
                Some(counterexample) => Verdict::Fail { counterexample },
            },
            instances: self.instances,
            skipped: self.skipped,
            note: self.note,
        }
    }
}

struct Suite<'a> {
    universe: &'a Universe,
    limits: &'a Limits,
    eval: Evaluator,
    fault: Option<Fault>,
}

pub fn check_axiom_suite(
    spec: &UniverseSpec,
    limits: &Limits,
    options: &SuiteOptions,
) -> Result<AxiomReport> {
    let universe = Universe::generate(spec, limits)?;
    let suite = Suite {
        universe: &universe,
        limits,
        eval: Evaluator::new(*limits).with_universe(universe.clone()),
        fault: options.fault,
    };
    let outcomes = vec![
        suite.set_matrix_scheme()?,
        suite.reduction()?,
        suite.omission()?,
        suite.epsilon()?,
        suite.division()?,
        suite.matrix_extensionality()?,
        suite.set_extensionality()?,
        suite.emptiness()?,
        suite.pair()?,
        suite.sum_set()?,
        suite.power_set()?,
        suite.set_of_matrices()?,
        suite.separation()?,
        suite.substitution()?,
        suite.foundation()?,
        AxiomOutcome {
            name: "Countable Infinity",
            verdict: Verdict::NotFinitelyCheckable {
                reason: "an inductive set is infinite; finite initial segments are available as naturals_upto".into(),
            },
            instances: 0,
            skipped: 0,
            note: None,
        },
    ];
    Ok(AxiomReport {
        spec: *spec,
        universe_size: universe.len(),
        outcomes,
    })
}

fn render_args(values: &[Value]) -> String {
    values.iter().join(", ")
}

impl Suite<'_> {
    fn values(&self) -> &[Value] {
        self.universe.values()
    }

    fn sets(&self) -> &[Value] {
        self.universe.sets()
    }

    fn matrices(&self) -> Vec<Value> {
        self.universe.matrices().cloned().collect()
    }

    fn dims(&self) -> Vec<(usize, usize)> {
        self.universe
            .spec()
            .map(UniverseSpec::matrix_dims)
            .unwrap_or_default()
    }

    /// All `k`-tuples over `pool`, truncated to the cardinality cap.
    fn tuples(&self, pool: &[Value], k: usize, tally: &mut Tally) -> Vec<Vec<Value>> {
        let total = u32::try_from(k)
            .ok()
            .and_then(|k| (pool.len() as u64).checked_pow(k));
        let budget = self.limits.cap;
        if total.is_none_or(|t| t > budget) {
            tally.note = Some(format!("instances truncated to the first {budget}"));
        }
        (0..k)
            .map(|_| pool.iter().cloned())
            .multi_cartesian_product()
            .take(budget as usize)
            .collect()
    }

    fn unit(&self, v: &Value) -> Value {
        match self.fault {
            Some(Fault::UncollapsedUnit) => Value::raw_matrix(1, 1, vec![v.clone()]),
            None => Value::matrix(1, 1, vec![v.clone()]).expect("one entry"),
        }
    }

    fn set_matrix_scheme(&self) -> Result<AxiomOutcome> {
        let mut t = Tally::default();
        for (m, n) in self.dims() {
            for entries in self.tuples(self.sets(), m * n, &mut t) {
                let made = Value::matrix(m, n, entries.clone())?;
                let ok = made.dims() == Some((m, n)) && made.entries() == Some(&entries[..]);
                t.check(ok, || {
                    format!("no {m}x{n} matrix with entries {}", render_args(&entries))
                });
            }
        }
        Ok(t.finish("Set Matrix Scheme"))
    }

    fn reduction(&self) -> Result<AxiomOutcome> {
        let mut t = Tally::default();
        for x in self.sets() {
            let wrapped = self.unit(x);
            t.check(wrapped == *x, || format!("{wrapped} != {x}"));
        }
        Ok(t.finish("Reduction"))
    }

    fn omission(&self) -> Result<AxiomOutcome> {
        let mut t = Tally::default();
        for m in self.matrices() {
            let wrapped = self.unit(&m);
            t.check(wrapped == m, || format!("[{wrapped}] != {m}"));
        }
        Ok(t.finish("Omission"))
    }

    fn epsilon(&self) -> Result<AxiomOutcome> {
        let mut t = Tally::default();
        for m in self.matrices() {
            for v in self.values() {
                t.check(!ops::member(v, &m), || format!("{v} in {m}"));
            }
        }
        Ok(t.finish("Epsilon"))
    }

    fn division(&self) -> Result<AxiomOutcome> {
        let mut t = Tally::default();
        let values = self.values();
        let shapes: Vec<_> = values.iter().map(Value::shape).collect();
        for (i, a) in values.iter().enumerate() {
            for (j, b) in values.iter().enumerate() {
                if shapes[i] != shapes[j] {
                    t.check(a != b, || format!("{a} = {b}"));
                }
            }
        }
        let row = |xs: Vec<Value>| Value::matrix(1, xs.len(), xs);
        let col = |xs: Vec<Value>| Value::matrix(xs.len(), 1, xs);
        for xs in self.tuples(self.sets(), 2, &mut t) {
            let (x, y) = (&xs[0], &xs[1]);
            let symbols = [
                row(vec![x.clone(), y.clone()])?,
                col(vec![x.clone(), y.clone()])?,
            ];
            self.pairwise_distinct(&symbols, &mut t);
        }
        // the five ternary symbols f^3_1 .. f^3_5
        for xs in self.tuples(self.sets(), 3, &mut t) {
            let (x, y, z) = (&xs[0], &xs[1], &xs[2]);
            let symbols = [
                row(vec![x.clone(), y.clone(), z.clone()])?,
                row(vec![row(vec![x.clone(), y.clone()])?, z.clone()])?,
                row(vec![x.clone(), row(vec![y.clone(), z.clone()])?])?,
                row(vec![col(vec![x.clone(), y.clone()])?, z.clone()])?,
                row(vec![x.clone(), col(vec![y.clone(), z.clone()])?])?,
            ];
            self.pairwise_distinct(&symbols, &mut t);
        }
        Ok(t.finish("Division"))
    }

    fn pairwise_distinct(&self, symbols: &[Value], t: &mut Tally) {
        for (a, b) in symbols.iter().tuple_combinations() {
            t.check(a != b, || format!("{a} = {b}"));
        }
        for a in symbols {
            for s in self.sets() {
                t.check(a != s, || format!("{a} = {s}"));
            }
        }
    }

    fn matrix_extensionality(&self) -> Result<AxiomOutcome> {
        let mut t = Tally::default();
        let matrices = self.matrices();
        for a in &matrices {
            for b in matrices.iter().filter(|b| b.dims() == a.dims()) {
                let entrywise = a
                    .entries()
                    .zip(b.entries())
                    .is_some_and(|(x, y)| x.iter().zip(y).all(|(p, q)| p == q));
                t.check((a == b) == entrywise, || {
                    if a == b {
                        format!("{a} = {b} with differing entries")
                    } else {
                        format!("{a} != {b} with equal entries")
                    }
                });
            }
        }
        Ok(t.finish("Matrix Extensionality"))
    }

    fn set_extensionality(&self) -> Result<AxiomOutcome> {
        let mut t = Tally::default();
        for x in self.sets() {
            for y in self.sets() {
                let sub_xy = ops::subset(x, y)?;
                let mutual = sub_xy && ops::subset(y, x)?;
                t.check((x == y) == mutual, || {
                    format!("({x} = {y}) <-> ({x} sub {y} and {y} sub {x})")
                });
                // subset as defined: every object in x is in y
                let by_definition = self
                    .values()
                    .iter()
                    .all(|a| !ops::member(a, x) || ops::member(a, y));
                t.check(sub_xy == by_definition, || format!("{x} sub {y}"));
            }
        }
        Ok(t.finish("Set Extensionality"))
    }

    fn emptiness(&self) -> Result<AxiomOutcome> {
        let mut t = Tally::default();
        let empties: Vec<&Value> = self
            .sets()
            .iter()
            .filter(|x| self.values().iter().all(|a| !ops::member(a, x)))
            .collect();
        t.check(empties.len() == 1 && empties[0].is_empty_set(), || {
            format!("sets without elements: {}", empties.iter().join(", "))
        });
        Ok(t.finish("Emptiness"))
    }

    fn pair(&self) -> Result<AxiomOutcome> {
        let mut t = Tally::default();
        for a in self.values() {
            for b in self.values() {
                let x = ops::pair(a, b);
                let exact = x.is_set()
                    && self
                        .values()
                        .iter()
                        .all(|g| ops::member(g, &x) == (g == a || g == b))
                    && x.elements()
                        .is_some_and(|els| els.iter().all(|g| g == a || g == b));
                t.check(exact, || format!("pair({a}, {b}) = {x}"));
            }
        }
        Ok(t.finish("Pair"))
    }

    fn sum_set(&self) -> Result<AxiomOutcome> {
        let mut t = Tally::default();
        for x in self.sets() {
            let members = x.elements().unwrap_or_default();
            let guarded = members.iter().all(Value::is_set);
            match ops::union_family(x) {
                Ok(y) => {
                    t.check(guarded, || {
                        format!("union({x}) exists although {x} has a matrix element")
                    });
                    let mut candidates: Vec<&Value> = self.values().iter().collect();
                    candidates.extend(y.elements().unwrap_or_default());
                    for b in candidates {
                        let expected = members.iter().any(|z| ops::member(b, z));
                        t.check(ops::member(b, &y) == expected, || {
                            format!("{b} in union({x}) <-> exists z in {x} ({b} in z)")
                        });
                    }
                }
                Err(Error::GuardViolation { .. }) => {
                    t.check(!guarded, || format!("union({x}) refused for a set of sets"));
                }
                Err(e) => return Err(e),
            }
        }
        Ok(t.finish("Sum Set"))
    }

    fn power_set(&self) -> Result<AxiomOutcome> {
        let mut t = Tally::default();
        for x in self.sets() {
            let y = ops::power_set(x, self.limits)?;
            let els = y.elements().unwrap_or_default();
            t.check(els.iter().all(Value::is_set), || {
                format!("pow({x}) has a matrix element")
            });
            let n = x.elements().map_or(0, <[Value]>::len);
            t.check(els.len() == 1 << n, || {
                format!("|pow({x})| = {}", els.len())
            });
            for z in els {
                t.check(ops::subset(z, x)?, || {
                    format!("{z} in pow({x}) but not {z} sub {x}")
                });
            }
            for z in self.sets() {
                t.check(ops::member(z, &y) == ops::subset(z, x)?, || {
                    format!("{z} in pow({x}) <-> {z} sub {x}")
                });
            }
        }
        Ok(t.finish("Power Set"))
    }

    fn set_of_matrices(&self) -> Result<AxiomOutcome> {
        let mut t = Tally::default();
        let mut dims = vec![(1, 1)];
        dims.extend(self.dims());
        for x in self.sets() {
            let pool = x.elements().unwrap_or_default();
            for &(m, n) in &dims {
                let y = ops::set_of_matrices(m, n, x, self.limits)?;
                for entries in self.tuples(pool, m * n, &mut t) {
                    let made = Value::matrix(m, n, entries)?;
                    t.check(ops::member(&made, &y), || {
                        format!("{made} in matset({m}, {n}, {x})")
                    });
                }
                for b in y.elements().unwrap_or_default() {
                    let ok = if m * n == 1 {
                        ops::member(b, x)
                    } else {
                        b.dims() == Some((m, n))
                            && b.entries()
                                .is_some_and(|es| es.iter().all(|e| ops::member(e, x)))
                    };
                    t.check(ok, || format!("{b} in matset({m}, {n}, {x})"));
                }
            }
        }
        Ok(t.finish("Set of Matrices"))
    }

    fn separation(&self) -> Result<AxiomOutcome> {
        let mut t = Tally::default();
        let mut env = Env::new();
        for src in SEPARATION_FAMILY {
            let phi = parse_formula(src)?;
            for x in self.sets() {
                let y = self.eval.separation(x, "a", &phi, &env)?;
                for a in self.values() {
                    let holds =
                        env.scoped("a", a.clone(), |env| self.eval.eval_formula(&phi, env))?;
                    let expected = ops::member(a, x) && holds;
                    t.check(ops::member(a, &y) == expected, || {
                        format!(
                            "{a} in {y} <-> ({a} in {x} and {})",
                            substitute_note(src, a)
                        )
                    });
                }
            }
        }
        Ok(t.finish("Separation"))
    }

    fn substitution(&self) -> Result<AxiomOutcome> {
        let mut t = Tally::default();
        let mut env = Env::new();
        for src in SUBSTITUTION_FAMILY {
            let phi = parse_formula(src)?;
            let related = |env: &mut Env, a: &Value, b: &Value| -> Result<bool> {
                env.scoped("a", a.clone(), |env| {
                    env.scoped("b", b.clone(), |env| self.eval.eval_formula(&phi, env))
                })
            };
            'sets: for x in self.sets() {
                for a in x.elements().unwrap_or_default() {
                    let mut witnesses = 0;
                    for b in self.values() {
                        if related(&mut env, a, b)? {
                            witnesses += 1;
                        }
                    }
                    if witnesses == 0 {
                        t.skipped += 1;
                        continue 'sets;
                    }
                    t.check(witnesses == 1, || {
                        format!("{src} relates {a} to {witnesses} objects")
                    });
                    if witnesses != 1 {
                        continue 'sets;
                    }
                }
                let y = self.eval.replacement(x, "a", "b", &phi, &env)?;
                for b in self.values() {
                    let mut expected = false;
                    for g in x.elements().unwrap_or_default() {
                        if related(&mut env, g, b)? {
                            expected = true;
                            break;
                        }
                    }
                    t.check(ops::member(b, &y) == expected, || {
                        format!("{b} in {y} <-> exists g in {x} ({src})")
                    });
                }
            }
        }
        if t.skipped > 0 {
            t.note = Some(format!(
                "{} instances skipped: the unique witness lies outside the bounded universe",
                t.skipped
            ));
        }
        Ok(t.finish("Substitution"))
    }

    fn foundation(&self) -> Result<AxiomOutcome> {
        let mut t = Tally::default();
        for x in self.sets() {
            let els = x.elements().unwrap_or_default();
            let applies = !els.is_empty() && els.iter().all(Value::is_set);
            match ops::foundation_witness(x) {
                Ok(z) => {
                    t.check(applies, || format!("foundation witness for {x}"));
                    let disjoint = |z: &Value| {
                        z.elements()
                            .unwrap_or_default()
                            .iter()
                            .all(|g| !ops::member(g, x))
                    };
                    t.check(els.iter().any(disjoint), || {
                        format!("no element of {x} is disjoint from it")
                    });
                    t.check(ops::member(&z, x) && disjoint(&z), || {
                        format!("{z} is not a foundation witness for {x}")
                    });
                }
                Err(_) => t.check(!applies, || format!("foundation refused for {x}")),
            }
        }
        Ok(t.finish("Foundation"))
    }
}

fn substitute_note(src: &str, a: &Value) -> String {
    format!("{src} with a := {a}")
}
