//! Inputs shared by the kernel benchmarks.

use smt_core::eval::{Universe, UniverseSpec};
use smt_core::ops::{self, Limits};
use smt_core::Value;

/// A matrix-free set with `n` elements.
pub fn naturals(n: usize) -> Value {
    ops::naturals_upto(n)
}

/// A set mixing numerals with row, column and nested matrices.
pub fn mixed(n: usize) -> Value {
    Value::set((0..n).map(|i| match i % 4 {
        0 => ops::numeral(i),
        1 => Value::matrix(1, 2, vec![ops::numeral(i), Value::empty()]).unwrap(),
        2 => Value::matrix(2, 1, vec![Value::empty(), ops::numeral(i)]).unwrap(),
        _ => {
            let row = Value::matrix(1, 2, vec![ops::numeral(i), ops::numeral(1)]).unwrap();
            Value::matrix(1, 2, vec![row, Value::empty()]).unwrap()
        }
    }))
}

pub fn default_universe() -> Universe {
    Universe::generate(&UniverseSpec::default(), &Limits::default())
        .expect("default bounds fit the cap")
}
