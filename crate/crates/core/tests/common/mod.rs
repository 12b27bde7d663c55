#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use smt_core::hf::HfSet;
use smt_core::Value;

/// Arbitrary values: sets of up to 3 elements and matrices up to 3 x 3, nested a few levels.
pub fn arb_value() -> impl Strategy<Value = Value> {
    let leaf = Just(Value::empty());
    leaf.prop_recursive(4, 32, 4, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 0..4).prop_map(Value::set),
            (1usize..=3, 1usize..=3).prop_flat_map(move |(m, n)| {
                prop::collection::vec(inner.clone(), m * n)
                    .prop_map(move |es| Value::matrix(m, n, es).unwrap())
            }),
        ]
    })
}

pub fn arb_set() -> impl Strategy<Value = Value> {
    prop::collection::vec(arb_value(), 0..5).prop_map(Value::set)
}

/// Arbitrary matrix-free values.
pub fn arb_pure() -> impl Strategy<Value = Value> {
    Just(Value::empty()).prop_recursive(4, 24, 3, |inner| {
        prop::collection::vec(inner, 0..4).prop_map(Value::set)
    })
}

/// A random pure set of rank at most `depth` in which every set has at most `width` elements.
pub fn random_pure(rng: &mut ChaCha8Rng, depth: usize, width: usize) -> Value {
    if depth == 0 {
        return Value::empty();
    }
    let n = rng.random_range(0..=width);
    Value::set((0..n).map(|_| {
        let d = rng.random_range(0..depth);
        random_pure(rng, d, width)
    }))
}

/// Same distribution as [`random_pure`], built directly as an oracle set.
pub fn random_hf(rng: &mut ChaCha8Rng, depth: usize, width: usize) -> HfSet {
    if depth == 0 {
        return HfSet::empty();
    }
    let n = rng.random_range(0..=width);
    HfSet::new((0..n).map(|_| {
        let d = rng.random_range(0..depth);
        random_hf(rng, d, width)
    }))
}

/// Rank computed from the structure alone: a set is one above its elements, a matrix one above
/// its entries.
pub fn rank_of(v: &Value) -> usize {
    let children = v.elements().or(v.entries()).unwrap_or_default();
    children.iter().map(|c| rank_of(c) + 1).max().unwrap_or(0)
}
