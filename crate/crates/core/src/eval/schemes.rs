//! Separation and substitution driven by formulas, whole-set and per shape.
//!
//! A single formula can only mention finitely many shapes, so a set holding elements of many
//! shapes is filtered (or mapped) block by block: the elements of one shape are handled by that
//! shape's formula, and the results are united.

use std::collections::BTreeMap;

use super::{Env, Evaluator};
use crate::error::{Error, Result};
use crate::ops;
use crate::syntax::Formula;
use crate::value::{Shape, Value};

/// Name bound to the `i`-th (0-based) set position of an element inside a per-shape formula:
/// `x1`, `x2`, ...
pub fn leaf_var(i: usize) -> String {
    format!("x{}", i + 1)
}

/// Filter used for one shape block. While it is evaluated, `element` is bound to the element and
/// `x1..xn` to its set positions in row-major, depth-first order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeFormula {
    pub element: String,
    pub formula: Formula,
}

impl ShapeFormula {
    pub fn new(element: impl Into<String>, formula: Formula) -> ShapeFormula {
        ShapeFormula {
            element: element.into(),
            formula,
        }
    }
}

/// Entrywise functional relation: every set position `source` of an element is replaced by the
/// unique `target` satisfying `formula`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryMap {
    pub source: String,
    pub target: String,
    pub formula: Formula,
}

impl EntryMap {
    pub fn new(source: impl Into<String>, target: impl Into<String>, formula: Formula) -> EntryMap {
        EntryMap {
            source: source.into(),
            target: target.into(),
            formula,
        }
    }
}

impl Evaluator {
    /// Elements of `x` satisfying `formula` with `var` bound to the element.
    pub fn separation(&self, x: &Value, var: &str, formula: &Formula, env: &Env) -> Result<Value> {
        let mut env = env.clone();
        ops::separate(x, |a| {
            env.scoped(var, a.clone(), |env| self.eval_formula(formula, env))
        })
    }

    /// Image of `x` under the relation `formula(source, target)`. Witnesses are searched in the
    /// evaluator's universe and must be unique for every element.
    pub fn replacement(
        &self,
        x: &Value,
        source: &str,
        target: &str,
        formula: &Formula,
        env: &Env,
    ) -> Result<Value> {
        let domain = self.require_universe(target)?.values();
        let mut env = env.clone();
        ops::replace(x, domain, |a, b| {
            env.scoped(source, a.clone(), |env| {
                env.scoped(target, b.clone(), |env| self.eval_formula(formula, env))
            })
        })
    }

    pub fn separation_per_shape(
        &self,
        x: &Value,
        family: &BTreeMap<Shape, ShapeFormula>,
        default: Option<&ShapeFormula>,
        env: &Env,
    ) -> Result<Value> {
        let partition = ops::partition_by_shape(x)?;
        let mut env = env.clone();
        let mut kept = Vec::new();
        for (shape, block) in partition.iter() {
            let rule = family
                .get(shape)
                .or(default)
                .ok_or_else(|| Error::UncoveredShape {
                    shape: shape.to_string(),
                })?;
            let chosen = ops::separate(block, |a| self.holds_on_element(rule, a, &mut env))?;
            kept.extend(chosen.elements().unwrap_or_default().iter().cloned());
        }
        Ok(Value::set(kept))
    }

    fn holds_on_element(&self, rule: &ShapeFormula, a: &Value, env: &mut Env) -> Result<bool> {
        let leaves = a.leaves();
        let base = env.len();
        for (i, leaf) in leaves.into_iter().enumerate() {
            env.bindings.push((leaf_var(i), leaf));
        }
        let out = env.scoped(&rule.element, a.clone(), |env| {
            self.eval_formula(&rule.formula, env)
        });
        env.bindings.truncate(base);
        out
    }

    /// Maps every element of `x` entrywise with the rule for its shape and unites the images.
    /// Target entries are searched in the evaluator's universe.
    pub fn substitution_per_shape(
        &self,
        x: &Value,
        family: &BTreeMap<Shape, EntryMap>,
        env: &Env,
    ) -> Result<Value> {
        let partition = ops::partition_by_shape(x)?;
        if partition.is_empty() {
            return Ok(Value::empty());
        }
        let mut env = env.clone();
        let mut image = Vec::new();
        for (shape, block) in partition.iter() {
            let rule = family.get(shape).ok_or_else(|| Error::UncoveredShape {
                shape: shape.to_string(),
            })?;
            let domain = self.require_universe(&rule.target)?.values();
            for a in block.elements().unwrap_or_default() {
                let mapped =
                    a.map_leaves(&mut |leaf| self.unique_witness(rule, leaf, domain, &mut env))?;
                image.push(mapped);
            }
        }
        Ok(Value::set(image))
    }

    fn unique_witness(
        &self,
        rule: &EntryMap,
        leaf: &Value,
        domain: &[Value],
        env: &mut Env,
    ) -> Result<Value> {
        let mut found: Option<Value> = None;
        let mut count = 0;
        for b in domain {
            let related = env.scoped(&rule.source, leaf.clone(), |env| {
                env.scoped(&rule.target, b.clone(), |env| {
                    self.eval_formula(&rule.formula, env)
                })
            })?;
            if related {
                count += 1;
                found.get_or_insert_with(|| b.clone());
            }
        }
        match found {
            Some(b) if count == 1 => Ok(b),
            _ => Err(Error::NotFunctional {
                op: "substitution",
                element: leaf.to_string(),
                witnesses: count,
            }),
        }
    }
}
