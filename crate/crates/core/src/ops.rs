//! Set-forming operations on canonical values.
//!
//! Every construction here returns a canonical [`Value`]. The combinatorial ones take a
//! [`Limits`] and fail with [`Error::CapExceeded`] instead of building huge results.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::value::{Shape, Value};

pub const DEFAULT_CAP: u64 = 1_000_000;

/// Upper bound on the cardinality of any constructed result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { cap: DEFAULT_CAP }
    }
}

impl Limits {
    pub fn new(cap: u64) -> Self {
        Limits { cap }
    }

    fn check(&self, op: &'static str, size: Option<u64>) -> Result<()> {
        match size {
            Some(n) if n <= self.cap => Ok(()),
            _ => Err(Error::CapExceeded { op, cap: self.cap }),
        }
    }
}

pub(crate) fn expect_set<'a>(op: &'static str, v: &'a Value) -> Result<&'a [Value]> {
    v.elements().ok_or_else(|| Error::NotASet {
        op,
        found: v.to_string(),
    })
}

/// `a ∈ x`. Always false when `x` is a matrix: matrices have no elements.
pub fn member(a: &Value, x: &Value) -> bool {
    x.elements().is_some_and(|els| els.binary_search(a).is_ok())
}

pub fn subset(x: &Value, y: &Value) -> Result<bool> {
    let xs = expect_set("subset", x)?;
    let ys = expect_set("subset", y)?;
    if xs.len() > ys.len() {
        return Ok(false);
    }
    // both sides sorted: one merge pass
    let mut rest = ys.iter();
    Ok(xs.iter().all(|a| rest.by_ref().any(|b| b == a)))
}

pub fn pair(a: &Value, b: &Value) -> Value {
    Value::set([a.clone(), b.clone()])
}

/// The singleton `{x}` of a set `x`.
pub fn successor(x: &Value) -> Result<Value> {
    expect_set("successor", x)?;
    Ok(Value::from_sorted(vec![x.clone()]))
}

/// Zermelo numeral: `0 = {}`, `k + 1 = {k}`.
pub fn numeral(k: usize) -> Value {
    (0..k).fold(Value::empty(), |n, _| Value::from_sorted(vec![n]))
}

/// `{0, 1, ..., k - 1}` as Zermelo numerals.
pub fn naturals_upto(k: usize) -> Value {
    let mut out = Vec::with_capacity(k);
    let mut n = Value::empty();
    for _ in 0..k {
        let next = Value::from_sorted(vec![n.clone()]);
        out.push(n);
        n = next;
    }
    Value::set(out)
}

/// `⋃s` for a set of sets. A matrix element violates the guard and is an error, not an empty
/// contribution.
pub fn union_family(s: &Value) -> Result<Value> {
    let members = expect_set("union", s)?;
    let mut out = Vec::new();
    for m in members {
        match m.elements() {
            Some(els) => out.extend(els.iter().cloned()),
            None => {
                return Err(Error::GuardViolation {
                    op: "union",
                    element: m.to_string(),
                })
            }
        }
    }
    Ok(Value::set(out))
}

pub fn union2(x: &Value, y: &Value) -> Result<Value> {
    expect_set("union2", x)?;
    expect_set("union2", y)?;
    union_family(&pair(x, y))
}

pub fn power_set(x: &Value, limits: &Limits) -> Result<Value> {
    let els = expect_set("pow", x)?;
    let n = els.len();
    let size = u32::try_from(n).ok().and_then(|n| 2u64.checked_pow(n));
    limits.check("pow", size)?;
    let subsets = (0..1u64 << n).map(|mask| {
        let chosen = els
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| e.clone())
            .collect();
        Value::from_sorted(chosen)
    });
    Ok(Value::set(subsets))
}

fn power_count(base: usize, exp: usize) -> Option<u64> {
    let exp = u32::try_from(exp).ok()?;
    (base as u64).checked_pow(exp)
}

/// `M_{m×n}(x)`: all `m x n` matrices with entries from `x`.
pub fn set_of_matrices(rows: usize, cols: usize, x: &Value, limits: &Limits) -> Result<Value> {
    let els = expect_set("matset", x)?;
    if rows == 0 || cols == 0 {
        return Err(Error::ZeroDimension { rows, cols });
    }
    let cells = rows * cols;
    limits.check("matset", power_count(els.len(), cells))?;
    if cells == 1 {
        return Ok(x.clone());
    }
    let matrices = (0..cells)
        .map(|_| els.iter().cloned())
        .multi_cartesian_product()
        .map(|entries| Value::raw_matrix(rows, cols, entries));
    Ok(Value::set(matrices))
}

/// `<x1, ..., xn>` as a `1 x n` matrix; a single item is returned as is.
pub fn tuple(items: Vec<Value>) -> Result<Value> {
    if items.is_empty() {
        return Err(Error::EmptyTuple);
    }
    let n = items.len();
    Value::matrix(1, n, items)
}

/// `x × y = {[b c] ; b ∈ x, c ∈ y}`.
pub fn cartesian(x: &Value, y: &Value, limits: &Limits) -> Result<Value> {
    cartesian_n(&[x.clone(), y.clone()], limits)
}

/// Flat k-fold product: all `1 x k` matrices whose i-th entry is drawn from `xs[i]`.
pub fn cartesian_n(xs: &[Value], limits: &Limits) -> Result<Value> {
    if xs.len() < 2 {
        return Err(Error::Precondition {
            op: "cart",
            message: format!("needs at least two factors, got {}", xs.len()),
        });
    }
    let factors = xs
        .iter()
        .map(|x| expect_set("cart", x))
        .collect::<Result<Vec<_>>>()?;
    let size = factors
        .iter()
        .try_fold(1u64, |acc, f| acc.checked_mul(f.len() as u64));
    limits.check("cart", size)?;
    let k = xs.len();
    let tuples = factors
        .into_iter()
        .map(|f| f.iter().cloned())
        .multi_cartesian_product()
        .map(|entries| Value::raw_matrix(1, k, entries));
    Ok(Value::set(tuples))
}

/// `y^x`: every total function from `x` to `y`, each as a set of pairs `[b c]`.
pub fn function_space(x: &Value, y: &Value, limits: &Limits) -> Result<Value> {
    let dom = expect_set("funspace", x)?;
    let cod = expect_set("funspace", y)?;
    limits.check("funspace", power_count(cod.len(), dom.len()))?;
    if dom.is_empty() {
        return Ok(Value::set([Value::empty()]));
    }
    let functions = (0..dom.len())
        .map(|_| cod.iter().cloned())
        .multi_cartesian_product()
        .map(|images| {
            Value::set(
                dom.iter()
                    .zip(images)
                    .map(|(b, c)| Value::raw_matrix(1, 2, vec![b.clone(), c])),
            )
        });
    Ok(Value::set(functions))
}

/// The subset of `x` whose elements satisfy `keep`.
pub fn separate<F>(x: &Value, mut keep: F) -> Result<Value>
where
    F: FnMut(&Value) -> Result<bool>,
{
    let els = expect_set("separation", x)?;
    let mut out = Vec::new();
    for e in els {
        if keep(e)? {
            out.push(e.clone());
        }
    }
    Ok(Value::from_sorted(out))
}

/// Image of `x` under a functional relation. For every element the unique related value is
/// searched in `domain`; zero or several witnesses is an error.
pub fn replace<F>(x: &Value, domain: &[Value], mut related: F) -> Result<Value>
where
    F: FnMut(&Value, &Value) -> Result<bool>,
{
    let els = expect_set("replacement", x)?;
    let mut image = Vec::with_capacity(els.len());
    for a in els {
        let mut found = None;
        let mut count = 0;
        for b in domain {
            if related(a, b)? {
                count += 1;
                found.get_or_insert_with(|| b.clone());
            }
        }
        match (count, found) {
            (1, Some(b)) => image.push(b),
            _ => {
                return Err(Error::NotFunctional {
                    op: "replacement",
                    element: a.to_string(),
                    witnesses: count,
                })
            }
        }
    }
    Ok(Value::set(image))
}

/// Elements of a set grouped by shape. Blocks are nonempty, disjoint and cover the source.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ShapePartition {
    blocks: BTreeMap<Shape, Value>,
}

impl ShapePartition {
    pub fn get(&self, shape: &Shape) -> Option<&Value> {
        self.blocks.get(shape)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Shape, &Value)> {
        self.blocks.iter()
    }

    pub fn shapes(&self) -> impl Iterator<Item = &Shape> {
        self.blocks.keys()
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn union(&self) -> Value {
        Value::set(
            self.blocks
                .values()
                .flat_map(|b| b.elements().unwrap_or_default().iter().cloned()),
        )
    }
}

pub fn partition_by_shape(x: &Value) -> Result<ShapePartition> {
    let els = expect_set("partition", x)?;
    let mut groups: BTreeMap<Shape, Vec<Value>> = BTreeMap::new();
    for e in els {
        groups.entry(e.shape()).or_default().push(e.clone());
    }
    let blocks = groups
        .into_iter()
        .map(|(shape, members)| (shape, Value::from_sorted(members)))
        .collect();
    Ok(ShapePartition { blocks })
}

/// An element of `x` sharing no element with `x`. Requires a nonempty set of sets; picks the
/// first element of minimal rank.
pub fn foundation_witness(x: &Value) -> Result<Value> {
    let els = expect_set("foundation", x)?;
    if els.is_empty() {
        return Err(Error::Precondition {
            op: "foundation",
            message: "the set is empty".into(),
        });
    }
    if let Some(m) = els.iter().find(|e| e.is_matrix()) {
        return Err(Error::GuardViolation {
            op: "foundation",
            element: m.to_string(),
        });
    }
    let witness = els.iter().min_by_key(|e| e.rank()).expect("nonempty");
    Ok(witness.clone())
}
