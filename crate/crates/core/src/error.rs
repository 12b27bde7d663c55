use thiserror::Error;

use crate::syntax::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix dimensions must be positive, got {rows}x{cols}")]
    ZeroDimension { rows: usize, cols: usize },

    #[error("a {rows}x{cols} matrix needs {} entries, got {got}", rows * cols)]
    EntryCount {
        rows: usize,
        cols: usize,
        got: usize,
    },

    #[error("a tuple needs at least one entry")]
    EmptyTuple,

    #[error("{op}: expected a set, found {found}")]
    NotASet { op: &'static str, found: String },

    /// The sum set is only defined for sets of sets.
    #[error("{op}: guard violated, element {element} is not a set")]
    GuardViolation { op: &'static str, element: String },

    #[error("{op}: result would exceed the cardinality cap of {cap}")]
    CapExceeded { op: &'static str, cap: u64 },

    #[error(
        "{op}: {element} has {witnesses} witnesses in the search domain, expected exactly one"
    )]
    NotFunctional {
        op: &'static str,
        element: String,
        witnesses: usize,
    },

    #[error("no formula covers shape {shape} and no default was given")]
    UncoveredShape { shape: String },

    #[error("{op}: {message}")]
    Precondition { op: &'static str, message: String },

    #[error("unbound variable `{0}`")]
    Unbound(String),

    #[error("unbounded quantifier over `{0}` needs a universe")]
    MissingUniverse(String),

    #[error("{found} is outside the matrix-free fragment")]
    OutOfFragment { found: String },

    #[error(transparent)]
    Syntax(#[from] ParseError),
}
