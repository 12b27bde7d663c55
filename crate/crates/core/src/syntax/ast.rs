use std::collections::BTreeSet;
use std::fmt;

/// Named kernel operations usable in terms. The list is closed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Pair,
    Union,
    Pow,
    /// `matset(m, n, x)`; the dimensions are literals, `x` is the only term argument.
    MatSet {
        rows: usize,
        cols: usize,
    },
    /// Binary or flat k-fold product.
    Cart,
    FunSpace,
    Succ,
}

impl Op {
    pub fn name(self) -> &'static str {
        match self {
            Op::Pair => "pair",
            Op::Union => "union",
            Op::Pow => "pow",
            Op::MatSet { .. } => "matset",
            Op::Cart => "cart",
            Op::FunSpace => "funspace",
            Op::Succ => "succ",
        }
    }

    pub fn accepts(self, argc: usize) -> bool {
        match self {
            Op::Pair | Op::FunSpace => argc == 2,
            Op::Union | Op::Pow | Op::Succ | Op::MatSet { .. } => argc == 1,
            Op::Cart => argc >= 2,
        }
    }

    pub(crate) fn from_name(name: &str) -> Option<Op> {
        Some(match name {
            "pair" => Op::Pair,
            "union" => Op::Union,
            "pow" => Op::Pow,
            "matset" => Op::MatSet { rows: 0, cols: 0 },
            "cart" => Op::Cart,
            "funspace" => Op::FunSpace,
            "succ" => Op::Succ,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Empty,
    Var(String),
    SetLit(Vec<Term>),
    /// Rectangular, at least one entry.
    MatrixLit(Vec<Vec<Term>>),
    Tuple(Vec<Term>),
    Numeral(usize),
    App(Op, Vec<Term>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantifier {
    Forall,
    Exists,
    ExistsUnique,
}

/// What an unbounded quantifier ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sort {
    /// Every object: sets and matrices.
    Any,
    Set,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Range {
    /// Elements of the value of a term.
    In(Term),
    /// The evaluator's bounded universe.
    Universe(Sort),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    True,
    False,
    Member(Term, Term),
    Equal(Term, Term),
    SubsetOf(Term, Term),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Quant {
        quantifier: Quantifier,
        var: String,
        range: Range,
        body: Box<Formula>,
    },
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Empty | Term::Numeral(_) => {}
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::SetLit(ts) | Term::Tuple(ts) | Term::App(_, ts) => {
                ts.iter().for_each(|t| t.collect_vars(out))
            }
            Term::MatrixLit(rows) => rows.iter().flatten().for_each(|t| t.collect_vars(out)),
        }
    }
}

impl Formula {
    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    pub fn quant(
        quantifier: Quantifier,
        var: impl Into<String>,
        range: Range,
        body: Formula,
    ) -> Formula {
        Formula::Quant {
            quantifier,
            var: var.into(),
            range,
            body: Box::new(body),
        }
    }

    /// Variables not bound by a quantifier inside the formula.
    pub fn free_vars(&self) -> BTreeSet<String> {
        match self {
            Formula::True | Formula::False => BTreeSet::new(),
            Formula::Member(a, b) | Formula::Equal(a, b) | Formula::SubsetOf(a, b) => {
                let mut vs = a.free_vars();
                vs.extend(b.free_vars());
                vs
            }
            Formula::Not(f) => f.free_vars(),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => {
                let mut vs = a.free_vars();
                vs.extend(b.free_vars());
                vs
            }
            Formula::Quant {
                var, range, body, ..
            } => {
                let mut vs = body.free_vars();
                vs.remove(var);
                if let Range::In(t) = range {
                    vs.extend(t.free_vars());
                }
                vs
            }
        }
    }

    pub fn has_unbounded_quantifier(&self) -> bool {
        match self {
            Formula::True
            | Formula::False
            | Formula::Member(..)
            | Formula::Equal(..)
            | Formula::SubsetOf(..) => false,
            Formula::Not(f) => f.has_unbounded_quantifier(),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => a.has_unbounded_quantifier() || b.has_unbounded_quantifier(),
            Formula::Quant { range, body, .. } => {
                matches!(range, Range::Universe(_)) || body.has_unbounded_quantifier()
            }
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[Term], sep: &str) -> fmt::Result {
    for (i, t) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{t}")?;
    }
    Ok(())
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Empty => f.write_str("{}"),
            Term::Var(v) => f.write_str(v),
            Term::Numeral(k) => write!(f, "{k}"),
            Term::SetLit(ts) => {
                f.write_str("{")?;
                write_list(f, ts, ", ")?;
                f.write_str("}")
            }
            Term::Tuple(ts) => {
                f.write_str("<")?;
                write_list(f, ts, ", ")?;
                f.write_str(">")
            }
            Term::MatrixLit(rows) => {
                f.write_str("[")?;
                for (i, row) in rows.iter().enumerate() {
                    if i > 0 {
                        f.write_str("; ")?;
                    }
                    write_list(f, row, " ")?;
                }
                f.write_str("]")
            }
            Term::App(op, args) => {
                write!(f, "{}(", op.name())?;
                if let Op::MatSet { rows, cols } = op {
                    write!(f, "{rows}, {cols}, ")?;
                }
                write_list(f, args, ", ")?;
                f.write_str(")")
            }
        }
    }
}

/// Binary connectives are always parenthesized so that the printed text parses back to the same
/// tree.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::True => f.write_str("true"),
            Formula::False => f.write_str("false"),
            Formula::Member(a, b) => write!(f, "{a} in {b}"),
            Formula::Equal(a, b) => write!(f, "{a} = {b}"),
            Formula::SubsetOf(a, b) => write!(f, "{a} sub {b}"),
            Formula::Not(inner) => write!(f, "not {inner}"),
            Formula::And(a, b) => write!(f, "({a} and {b})"),
            Formula::Or(a, b) => write!(f, "({a} or {b})"),
            Formula::Implies(a, b) => write!(f, "({a} -> {b})"),
            Formula::Iff(a, b) => write!(f, "({a} <-> {b})"),
            Formula::Quant {
                quantifier,
                var,
                range,
                body,
            } => {
                let q = match quantifier {
                    Quantifier::Forall => "forall",
                    Quantifier::Exists => "exists",
                    Quantifier::ExistsUnique => "exists!",
                };
                match range {
                    Range::In(t) => write!(f, "{q} {var} in {t} ({body})"),
                    Range::Universe(Sort::Any) => write!(f, "{q} {var} ({body})"),
                    Range::Universe(Sort::Set) => write!(f, "{q} {var}: set ({body})"),
                }
            }
        }
    }
}
