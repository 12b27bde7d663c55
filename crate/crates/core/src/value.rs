//! Canonical hereditarily finite set matrices.
//!
//! A [`Value`] is either a set, stored as a strictly increasing sequence of elements, or an
//! `m x n` matrix with `m * n >= 2`. A `1 x 1` matrix is never stored: [`Value::matrix`]
//! returns its sole entry instead, so `[x] = x` and `[[M]] = M` hold by construction and
//! equality is plain structural comparison.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

#[derive(Clone)]
pub struct Value(Arc<Node>);

struct Node {
    rank: usize,
    nesting: usize,
    kind: Kind,
}

#[derive(PartialEq, Eq, Hash)]
enum Kind {
    Set(Box<[Value]>),
    Matrix {
        rows: usize,
        cols: usize,
        entries: Box<[Value]>,
    },
}

/// Borrowed view of a value, for pattern matching.
#[derive(Debug, Clone, Copy)]
pub enum ValueRef<'a> {
    Set(&'a [Value]),
    Matrix {
        rows: usize,
        cols: usize,
        entries: &'a [Value],
    },
}

/// The nesting pattern of a value: which positions hold sets and how matrices are stacked.
///
/// Each distinct shape corresponds to one function symbol of the language; the number of
/// leaves is its arity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shape {
    Leaf,
    Grid {
        rows: usize,
        cols: usize,
        children: Vec<Shape>,
    },
}

impl Value {
    pub fn empty() -> Value {
        static EMPTY: OnceLock<Value> = OnceLock::new();
        EMPTY.get_or_init(|| Value::from_sorted(Vec::new())).clone()
    }

    /// Builds the set of the distinct `items`, in canonical order.
    pub fn set<I: IntoIterator<Item = Value>>(items: I) -> Value {
        let mut elements: Vec<Value> = items.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        Value::from_sorted(elements)
    }

    /// `elements` must be strictly increasing.
    pub(crate) fn from_sorted(elements: Vec<Value>) -> Value {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let rank = elements.iter().map(|e| e.rank() + 1).max().unwrap_or(0);
        Value(Arc::new(Node {
            rank,
            nesting: 0,
            kind: Kind::Set(elements.into_boxed_slice()),
        }))
    }

    /// Builds an `rows x cols` matrix from row-major `entries`, collapsing `1 x 1` to the entry.
    pub fn matrix(rows: usize, cols: usize, mut entries: Vec<Value>) -> Result<Value> {
        if rows == 0 || cols == 0 {
            return Err(Error::ZeroDimension { rows, cols });
        }
        if entries.len() != rows * cols {
            return Err(Error::EntryCount {
                rows,
                cols,
                got: entries.len(),
            });
        }
        if rows * cols == 1 {
            return Ok(entries.pop().expect("one entry"));
        }
        Ok(Value::raw_matrix(rows, cols, entries))
    }

    /// No collapsing. Only the fault-injection path of the axiom suite builds `1 x 1` matrices.
    pub(crate) fn raw_matrix(rows: usize, cols: usize, entries: Vec<Value>) -> Value {
        let rank = entries.iter().map(|e| e.rank() + 1).max().unwrap_or(1);
        let nesting = 1 + entries.iter().map(Value::nesting).max().unwrap_or(0);
        Value(Arc::new(Node {
            rank,
            nesting,
            kind: Kind::Matrix {
                rows,
                cols,
                entries: entries.into_boxed_slice(),
            },
        }))
    }

    pub fn view(&self) -> ValueRef<'_> {
        match &self.0.kind {
            Kind::Set(elements) => ValueRef::Set(elements),
            Kind::Matrix {
                rows,
                cols,
                entries,
            } => ValueRef::Matrix {
                rows: *rows,
                cols: *cols,
                entries,
            },
        }
    }

    pub fn is_set(&self) -> bool {
        matches!(self.0.kind, Kind::Set(_))
    }

    pub fn is_matrix(&self) -> bool {
        !self.is_set()
    }

    pub fn is_empty_set(&self) -> bool {
        matches!(&self.0.kind, Kind::Set(e) if e.is_empty())
    }

    /// Elements in canonical order, or `None` for a matrix.
    pub fn elements(&self) -> Option<&[Value]> {
        match &self.0.kind {
            Kind::Set(elements) => Some(elements),
            Kind::Matrix { .. } => None,
        }
    }

    /// Row-major entries, or `None` for a set.
    pub fn entries(&self) -> Option<&[Value]> {
        match &self.0.kind {
            Kind::Set(_) => None,
            Kind::Matrix { entries, .. } => Some(entries),
        }
    }

    pub fn dims(&self) -> Option<(usize, usize)> {
        match &self.0.kind {
            Kind::Set(_) => None,
            Kind::Matrix { rows, cols, .. } => Some((*rows, *cols)),
        }
    }

    /// `0` for the empty set, otherwise one more than the highest rank among the elements or
    /// entries. A matrix wrapper counts as one level.
    pub fn rank(&self) -> usize {
        self.0.rank
    }

    /// Depth of grid nesting at the top of the value: `0` for sets.
    pub fn nesting(&self) -> usize {
        self.0.nesting
    }

    pub fn shape(&self) -> Shape {
        match &self.0.kind {
            Kind::Set(_) => Shape::Leaf,
            Kind::Matrix {
                rows,
                cols,
                entries,
            } => Shape::Grid {
                rows: *rows,
                cols: *cols,
                children: entries.iter().map(Value::shape).collect(),
            },
        }
    }

    /// The set-valued positions of the value in row-major, depth-first order. A set is its own
    /// single leaf.
    pub fn leaves(&self) -> Vec<Value> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Value>) {
        match &self.0.kind {
            Kind::Set(_) => out.push(self.clone()),
            Kind::Matrix { entries, .. } => {
                for e in entries.iter() {
                    e.collect_leaves(out);
                }
            }
        }
    }

    /// Rebuilds the value with every leaf replaced by `f(leaf)`, keeping the grid structure.
    pub fn map_leaves<F>(&self, f: &mut F) -> Result<Value>
    where
        F: FnMut(&Value) -> Result<Value>,
    {
        match &self.0.kind {
            Kind::Set(_) => f(self),
            Kind::Matrix {
                rows,
                cols,
                entries,
            } => {
                let entries = entries
                    .iter()
                    .map(|e| e.map_leaves(f))
                    .collect::<Result<Vec<_>>>()?;
                Value::matrix(*rows, *cols, entries)
            }
        }
    }

    fn kind_name(&self) -> &'static str {
        if self.is_set() {
            "set"
        } else {
            "matrix"
        }
    }
}

/// Strict total order: sets before matrices; sets by cardinality then elementwise; matrices by
/// `(rows, cols)` then row-major entrywise.
pub fn canonical_compare(a: &Value, b: &Value) -> Ordering {
    if Arc::ptr_eq(&a.0, &b.0) {
        return Ordering::Equal;
    }
    match (&a.0.kind, &b.0.kind) {
        (Kind::Set(x), Kind::Set(y)) => x.len().cmp(&y.len()).then_with(|| x.iter().cmp(y.iter())),
        (Kind::Set(_), Kind::Matrix { .. }) => Ordering::Less,
        (Kind::Matrix { .. }, Kind::Set(_)) => Ordering::Greater,
        (
            Kind::Matrix {
                rows: r1,
                cols: c1,
                entries: e1,
            },
            Kind::Matrix {
                rows: r2,
                cols: c2,
                entries: e2,
            },
        ) => (r1, c1)
            .cmp(&(r2, c2))
            .then_with(|| e1.iter().cmp(e2.iter())),
    }
}

pub fn values_equal(a: &Value, b: &Value) -> bool {
    a == b
}

impl PartialEq for Value {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.rank == other.0.rank && self.0.kind == other.0.kind)
    }
}

impl Eq for Value {}

impl Hash for Value {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.kind.hash(state);
    }
}

impl Ord for Value {
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_compare(self, other)
    }
}

impl PartialOrd for Value {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical text: `{a, b}` for sets, `[a b; c d]` for matrices.
impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.kind {
            Kind::Set(elements) => {
                f.write_str("{")?;
                for (i, e) in elements.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{e}")?;
                }
                f.write_str("}")
            }
            Kind::Matrix { cols, entries, .. } => {
                f.write_str("[")?;
                for (i, e) in entries.iter().enumerate() {
                    if i > 0 {
                        f.write_str(if i % cols == 0 { "; " } else { " " })?;
                    }
                    write!(f, "{e}")?;
                }
                f.write_str("]")
            }
        }
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} `{}`", self.kind_name(), self)
    }
}

impl Shape {
    /// Number of set positions, i.e. the arity of the function symbol.
    pub fn leaf_count(&self) -> usize {
        match self {
            Shape::Leaf => 1,
            Shape::Grid { children, .. } => children.iter().map(Shape::leaf_count).sum(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Shape::Leaf => 0,
            Shape::Grid { children, .. } => {
                1 + children.iter().map(Shape::depth).max().unwrap_or(0)
            }
        }
    }

    pub fn grid(rows: usize, cols: usize, children: Vec<Shape>) -> Shape {
        Shape::Grid {
            rows,
            cols,
            children,
        }
    }
}

/// `_` marks a set position: `[[_ _] _]`.
impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Leaf => f.write_str("_"),
            Shape::Grid { cols, children, .. } => {
                f.write_str("[")?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        f.write_str(if i % cols == 0 { "; " } else { " " })?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("]")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e() -> Value {
        Value::empty()
    }

    fn s(items: Vec<Value>) -> Value {
        Value::set(items)
    }

    fn m(rows: usize, cols: usize, entries: Vec<Value>) -> Value {
        Value::matrix(rows, cols, entries).unwrap()
    }

    #[test]
    fn set_construction_dedups_and_orders() {
        assert!(s(vec![]).is_empty_set());
        assert_eq!(s(vec![e(), e()]), s(vec![e()]));
        let v = s(vec![s(vec![e()]), e()]);
        let els = v.elements().unwrap();
        assert_eq!(els.len(), 2);
        assert!(els[0].is_empty_set());
        assert_eq!(els[1], s(vec![e()]));
    }

    #[test]
    fn set_construction_matches_pairwise_dedup() {
        let items = vec![
            s(vec![e()]),
            e(),
            m(2, 1, vec![e(), e()]),
            s(vec![e()]),
            e(),
            m(1, 2, vec![e(), e()]),
        ];
        // brute force: keep first occurrence of each structurally distinct item
        let mut distinct: Vec<Value> = Vec::new();
        for it in &items {
            if !distinct
                .iter()
                .any(|d| format!("{d:?}") == format!("{it:?}"))
            {
                distinct.push(it.clone());
            }
        }
        let v = s(items);
        assert_eq!(v.elements().unwrap().len(), distinct.len());
        for d in &distinct {
            assert!(v.elements().unwrap().contains(d));
        }
        assert_eq!(s(v.elements().unwrap().to_vec()), v);
    }

    #[test]
    fn unit_matrix_collapses() {
        assert_eq!(m(1, 1, vec![e()]), e());
        let col = m(2, 1, vec![e(), e()]);
        assert_eq!(m(1, 1, vec![col.clone()]), col);
        let v = m(2, 1, vec![e(), s(vec![e()])]);
        assert_eq!(v.dims(), Some((2, 1)));
        assert_eq!(v.entries().unwrap()[1], s(vec![e()]));
    }

    #[test]
    fn matrix_construction_errors() {
        assert_eq!(
            Value::matrix(2, 2, vec![e()]),
            Err(Error::EntryCount {
                rows: 2,
                cols: 2,
                got: 1
            })
        );
        assert!(matches!(
            Value::matrix(0, 3, vec![]),
            Err(Error::ZeroDimension { .. })
        ));
    }

    #[test]
    fn ordering_examples() {
        assert_eq!(canonical_compare(&e(), &e()), Ordering::Equal);
        assert_eq!(
            canonical_compare(&e(), &m(2, 1, vec![e(), e()])),
            Ordering::Less
        );
        let flat = m(1, 3, vec![e(), e(), e()]);
        let nested = m(1, 2, vec![m(1, 2, vec![e(), e()]), e()]);
        assert_ne!(canonical_compare(&flat, &nested), Ordering::Equal);
    }

    #[test]
    fn equality_examples() {
        let col = m(2, 1, vec![e(), e()]);
        let row = m(1, 2, vec![e(), e()]);
        assert!(!values_equal(&s(vec![col.clone()]), &e()));
        assert!(!values_equal(&col, &row));
        assert!(values_equal(&m(1, 1, vec![s(vec![e()])]), &s(vec![e()])));
    }

    #[test]
    fn shapes() {
        assert_eq!(e().shape(), Shape::Leaf);
        assert_eq!(
            m(1, 2, vec![e(), s(vec![e()])]).shape(),
            Shape::grid(1, 2, vec![Shape::Leaf, Shape::Leaf])
        );
        let nested = m(1, 2, vec![m(1, 2, vec![e(), e()]), e()]);
        let shape = nested.shape();
        assert_eq!(
            shape,
            Shape::grid(
                1,
                2,
                vec![
                    Shape::grid(1, 2, vec![Shape::Leaf, Shape::Leaf]),
                    Shape::Leaf
                ]
            )
        );
        assert_eq!(shape.leaf_count(), 3);
        assert_eq!(shape.depth(), 2);
        assert_eq!(shape.to_string(), "[[_ _] _]");
        assert_eq!(nested.nesting(), 2);
    }

    #[test]
    fn ranks() {
        assert_eq!(e().rank(), 0);
        assert_eq!(s(vec![s(vec![e()])]).rank(), 2);
        assert_eq!(m(2, 1, vec![e(), s(vec![e()])]).rank(), 2);
        assert_eq!(m(1, 2, vec![e(), e()]).rank(), 1);
    }

    #[test]
    fn rendering() {
        assert_eq!(e().to_string(), "{}");
        assert_eq!(m(2, 1, vec![e(), e()]).to_string(), "[{}; {}]");
        let v = m(2, 2, vec![e(), s(vec![e()]), e(), e()]);
        assert_eq!(v.to_string(), "[{} {{}}; {} {}]");
    }

    #[test]
    fn leaves_and_map() {
        let one = s(vec![e()]);
        let nested = m(1, 2, vec![m(2, 1, vec![e(), one.clone()]), e()]);
        assert_eq!(nested.leaves(), vec![e(), one.clone(), e()]);
        let mapped = nested
            .map_leaves(&mut |l| Ok(Value::set([l.clone()])))
            .unwrap();
        assert_eq!(mapped.shape(), nested.shape());
        assert_eq!(
            mapped.leaves(),
            vec![one.clone(), s(vec![one]), s(vec![e()])]
        );
    }
}
