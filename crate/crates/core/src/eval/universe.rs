use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ops::Limits;
use crate::value::Value;

/// Bounds of a finite universe of values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UniverseSpec {
    pub rank_bound: usize,
    /// Maximum number of elements of any set.
    pub set_width_bound: usize,
    /// Maximum of rows and columns of any matrix.
    pub matrix_dim_bound: usize,
    /// Maximum grid nesting; `0` leaves matrices out entirely.
    pub nest_depth_bound: usize,
}

impl UniverseSpec {
    pub fn new(rank: usize, width: usize, dim: usize, nest: usize) -> UniverseSpec {
        UniverseSpec {
            rank_bound: rank,
            set_width_bound: width,
            matrix_dim_bound: dim,
            nest_depth_bound: nest,
        }
    }

    pub fn is_matrix_free(&self) -> bool {
        self.nest_depth_bound == 0 || self.matrix_dim_bound < 2
    }

    /// `(rows, cols)` pairs with `rows * cols >= 2` within the dimension bound.
    pub fn matrix_dims(&self) -> Vec<(usize, usize)> {
        let d = self.matrix_dim_bound;
        (1..=d)
            .cartesian_product(1..=d)
            .filter(|(m, n)| m * n >= 2)
            .collect()
    }

    pub fn admits(&self, v: &Value) -> bool {
        v.rank() <= self.rank_bound
            && v.nesting() <= self.nest_depth_bound
            && match v.view() {
                crate::ValueRef::Set(els) => {
                    els.len() <= self.set_width_bound && els.iter().all(|e| self.admits(e))
                }
                crate::ValueRef::Matrix {
                    rows,
                    cols,
                    entries,
                } => {
                    rows.max(cols) <= self.matrix_dim_bound
                        && entries.iter().all(|e| self.admits(e))
                }
            }
    }
}

impl Default for UniverseSpec {
    fn default() -> Self {
        UniverseSpec::new(2, 2, 2, 1)
    }
}

impl fmt::Display for UniverseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rank<={} width<={} dim<={} nest<={}",
            self.rank_bound, self.set_width_bound, self.matrix_dim_bound, self.nest_depth_bound
        )
    }
}

/// A finite, duplicate-free carrier of values ordered by rank, then canonically. Cheap to clone.
#[derive(Debug, Clone)]
pub struct Universe {
    values: Arc<[Value]>,
    sets: Arc<[Value]>,
    spec: Option<UniverseSpec>,
}

impl Universe {
    pub fn generate(spec: &UniverseSpec, limits: &Limits) -> Result<Universe> {
        let values = generate_universe(spec, limits)?;
        let mut u = Universe::from_values(values);
        u.spec = Some(*spec);
        Ok(u)
    }

    /// A carrier made of exactly the given values.
    pub fn from_values<I: IntoIterator<Item = Value>>(values: I) -> Universe {
        let mut values: Vec<Value> = values.into_iter().collect();
        values.sort_by(|a, b| a.rank().cmp(&b.rank()).then_with(|| a.cmp(b)));
        values.dedup();
        let sets: Vec<Value> = values.iter().filter(|v| v.is_set()).cloned().collect();
        Universe {
            values: values.into(),
            sets: sets.into(),
            spec: None,
        }
    }

    pub fn values(&self) -> &[Value] {
        &self.values
    }

    pub fn sets(&self) -> &[Value] {
        &self.sets
    }

    pub fn matrices(&self) -> impl Iterator<Item = &Value> {
        self.values.iter().filter(|v| v.is_matrix())
    }

    pub fn spec(&self) -> Option<&UniverseSpec> {
        self.spec.as_ref()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, v: &Value) -> bool {
        self.values
            .binary_search_by(|u| u.rank().cmp(&v.rank()).then_with(|| u.cmp(v)))
            .is_ok()
    }
}

fn binomial_prefix_sum(n: usize, k: usize) -> Option<u64> {
    let mut total = 0u64;
    let mut term = 1u64;
    for i in 0..=k.min(n) {
        total = total.checked_add(term)?;
        // C(n, i + 1) = C(n, i) * (n - i) / (i + 1)
        term = term.checked_mul((n - i) as u64)? / (i as u64 + 1);
    }
    Some(total)
}

/// Every value within the bounds, ordered by rank then canonically.
///
/// Built level by level: the values of rank at most `r` are the sets of at most
/// `set_width_bound` values of rank below `r`, plus the matrices over those values whose
/// nesting stays within bounds.
pub fn generate_universe(spec: &UniverseSpec, limits: &Limits) -> Result<Vec<Value>> {
    let too_big = || Error::CapExceeded {
        op: "universe",
        cap: limits.cap,
    };
    let dims = spec.matrix_dims();
    let mut all: BTreeSet<Value> = BTreeSet::from([Value::empty()]);
    for _ in 0..spec.rank_bound {
        let below: Vec<Value> = all.iter().cloned().collect();
        let entries: Vec<Value> = below
            .iter()
            .filter(|v| v.nesting() < spec.nest_depth_bound)
            .cloned()
            .collect();

        let mut estimate = binomial_prefix_sum(below.len(), spec.set_width_bound);
        for (m, n) in &dims {
            let cells = u32::try_from(m * n).ok();
            let count = cells.and_then(|c| (entries.len() as u64).checked_pow(c));
            estimate = estimate.zip(count).and_then(|(a, b)| a.checked_add(b));
        }
        match estimate {
            Some(n) if n <= limits.cap => {}
            _ => return Err(too_big()),
        }

        let mut next = BTreeSet::new();
        for k in 0..=spec.set_width_bound.min(below.len()) {
            for chosen in below.iter().cloned().combinations(k) {
                next.insert(Value::from_sorted(chosen));
            }
        }
        if !entries.is_empty() {
            for &(m, n) in &dims {
                for filling in (0..m * n)
                    .map(|_| entries.iter().cloned())
                    .multi_cartesian_product()
                {
                    next.insert(Value::raw_matrix(m, n, filling));
                }
            }
        }
        all.extend(next);
    }
    if all.len() as u64 > limits.cap {
        return Err(too_big());
    }
    let mut values: Vec<Value> = all.into_iter().collect();
    values.sort_by(|a, b| a.rank().cmp(&b.rank()).then_with(|| a.cmp(b)));
    Ok(values)
}
