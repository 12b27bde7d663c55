//! A second, matrix-free model of hereditarily finite sets.
//!
//! Shares no set algorithms with [`crate::ops`]: sets are owned trees with no cached data,
//! membership is a linear scan and every construction is written from its textbook definition.
//! On matrix-free inputs the kernel must agree with this model.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::value::{Value, ValueRef};

/// A pure set: its elements, sorted and without duplicates.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct HfSet {
    elems: Vec<HfSet>,
}

impl Ord for HfSet {
    /// Fewer elements first, then element by element.
    fn cmp(&self, other: &Self) -> Ordering {
        self.elems.len().cmp(&other.elems.len()).then_with(|| {
            for (a, b) in self.elems.iter().zip(&other.elems) {
                match a.cmp(b) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for HfSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl HfSet {
    pub fn empty() -> HfSet {
        HfSet::default()
    }

    pub fn new(items: impl IntoIterator<Item = HfSet>) -> HfSet {
        let mut elems: Vec<HfSet> = Vec::new();
        for item in items {
            if !elems.contains(&item) {
                elems.push(item);
            }
        }
        elems.sort();
        HfSet { elems }
    }

    pub fn elements(&self) -> &[HfSet] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Zermelo numeral `k`.
    pub fn numeral(k: usize) -> HfSet {
        let mut n = HfSet::empty();
        for _ in 0..k {
            n = HfSet { elems: vec![n] };
        }
        n
    }
}

impl fmt::Display for HfSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elems.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for HfSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "hf`{self}`")
    }
}

pub fn to_hf(v: &Value) -> Result<HfSet> {
    match v.view() {
        ValueRef::Set(els) => Ok(HfSet::new(
            els.iter().map(to_hf).collect::<Result<Vec<_>>>()?,
        )),
        ValueRef::Matrix { .. } => Err(Error::OutOfFragment {
            found: v.to_string(),
        }),
    }
}

pub fn from_hf(x: &HfSet) -> Value {
    Value::set(x.elems.iter().map(from_hf))
}

pub fn hf_member(a: &HfSet, x: &HfSet) -> bool {
    x.elems.iter().any(|e| e == a)
}

pub fn hf_subset(x: &HfSet, y: &HfSet) -> bool {
    x.elems.iter().all(|e| hf_member(e, y))
}

pub fn hf_pair(a: &HfSet, b: &HfSet) -> HfSet {
    HfSet::new([a.clone(), b.clone()])
}

pub fn hf_union_family(x: &HfSet) -> HfSet {
    HfSet::new(x.elems.iter().flat_map(|z| z.elems.iter().cloned()))
}

pub fn hf_power_set(x: &HfSet) -> HfSet {
    fn subsets(items: &[HfSet]) -> Vec<Vec<HfSet>> {
        match items.split_first() {
            None => vec![Vec::new()],
            Some((first, rest)) => {
                let without = subsets(rest);
                let mut out = without.clone();
                for mut s in without {
                    s.push(first.clone());
                    out.push(s);
                }
                out
            }
        }
    }
    HfSet::new(subsets(&x.elems).into_iter().map(HfSet::new))
}

pub fn hf_separation(x: &HfSet, mut keep: impl FnMut(&HfSet) -> bool) -> HfSet {
    HfSet::new(x.elems.iter().filter(|e| keep(e)).cloned())
}

/// Image of `x` under a function.
pub fn hf_replacement(x: &HfSet, f: impl FnMut(&HfSet) -> HfSet) -> HfSet {
    HfSet::new(x.elems.iter().map(f))
}

pub fn hf_rank(x: &HfSet) -> usize {
    x.elems.iter().map(|e| hf_rank(e) + 1).max().unwrap_or(0)
}

/// An element of `x` sharing no element with `x`, of least rank. `None` for the empty set.
pub fn hf_foundation_witness(x: &HfSet) -> Option<HfSet> {
    let mut best: Option<(usize, &HfSet)> = None;
    for e in &x.elems {
        let disjoint = !e.elems.iter().any(|g| hf_member(g, x));
        let r = hf_rank(e);
        if disjoint && best.is_none_or(|(br, _)| r < br) {
            best = Some((r, e));
        }
    }
    best.map(|(_, e)| e.clone())
}

/// Every set of rank at most `rank` whose sets all have at most `width` elements.
pub fn hf_universe(rank: usize, width: usize) -> Vec<HfSet> {
    fn choose(pool: &[HfSet], k: usize, start: usize, acc: &mut Vec<HfSet>, out: &mut Vec<HfSet>) {
        out.push(HfSet::new(acc.iter().cloned()));
        if acc.len() == k {
            return;
        }
        for i in start..pool.len() {
            acc.push(pool[i].clone());
            choose(pool, k, i + 1, acc, out);
            acc.pop();
        }
    }
    let mut level = vec![HfSet::empty()];
    for _ in 0..rank {
        let mut next = Vec::new();
        choose(&level, width, 0, &mut Vec::new(), &mut next);
        next.sort();
        next.dedup();
        level = next;
    }
    level
}
