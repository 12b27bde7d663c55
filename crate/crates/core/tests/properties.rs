mod common;

use std::cmp::Ordering;

use common::{arb_set, arb_value, rank_of};
use proptest::prelude::*;
use smt_core::eval::{Env, Evaluator};
use smt_core::ops::{self, Limits};
use smt_core::syntax::{parse_formula, parse_term, render, Formula, Op, Quantifier, Range, Term};
use smt_core::{canonical_compare, values_equal, Shape, Value, ValueRef};

fn eval(src: &str) -> Value {
    Evaluator::default()
        .eval_term(&parse_term(src).unwrap(), &Env::new())
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn order_is_a_strict_total_order(a in arb_value(), b in arb_value(), c in arb_value()) {
        let ab = canonical_compare(&a, &b);
        prop_assert_eq!(ab, canonical_compare(&b, &a).reverse());
        prop_assert_eq!(ab == Ordering::Equal, values_equal(&a, &b));
        prop_assert_eq!(ab, a.cmp(&b));
        if ab != Ordering::Greater && canonical_compare(&b, &c) != Ordering::Greater {
            prop_assert_ne!(canonical_compare(&a, &c), Ordering::Greater);
        }
        if a.is_set() && b.is_matrix() {
            prop_assert_eq!(ab, Ordering::Less);
        }
    }

    #[test]
    fn rebuilding_from_parts_is_identity(v in arb_value()) {
        let rebuilt = match v.view() {
            ValueRef::Set(els) => Value::set(els.iter().rev().cloned()),
            ValueRef::Matrix { rows, cols, entries } => Value::matrix(rows, cols, entries.to_vec()).unwrap(),
        };
        prop_assert_eq!(&rebuilt, &v);
        let doubled = match v.view() {
            ValueRef::Set(els) => Value::set(els.iter().chain(els).cloned()),
            ValueRef::Matrix { .. } => v.clone(),
        };
        prop_assert_eq!(doubled, v);
    }

    #[test]
    fn unit_matrices_collapse(v in arb_value()) {
        let once = Value::matrix(1, 1, vec![v.clone()]).unwrap();
        prop_assert_eq!(&once, &v);
        let twice = Value::matrix(1, 1, vec![once]).unwrap();
        prop_assert_eq!(twice, v);
    }

    #[test]
    fn matrices_are_not_sets(v in arb_value(), s in arb_set()) {
        if v.is_matrix() {
            prop_assert!(!values_equal(&v, &s));
            prop_assert_ne!(v.shape(), Shape::Leaf);
            let (m, n) = v.dims().unwrap();
            prop_assert!(m * n >= 2);
        } else {
            prop_assert_eq!(v.shape(), Shape::Leaf);
        }
    }

    #[test]
    fn rank_is_well_founded(v in arb_value()) {
        let children = v.elements().or(v.entries()).unwrap_or_default();
        for c in children {
            prop_assert!(c.rank() < v.rank());
        }
        prop_assert_eq!(v.rank(), rank_of(&v));
        prop_assert!(!ops::member(&v, &v));
    }

    #[test]
    fn matrices_have_no_members(a in arb_value(), m in arb_value()) {
        if m.is_matrix() {
            prop_assert!(!ops::member(&a, &m));
            prop_assert!(m.elements().is_none());
        }
    }

    #[test]
    fn set_extensionality(x in arb_set(), y in arb_set()) {
        let mutual = ops::subset(&x, &y).unwrap() && ops::subset(&y, &x).unwrap();
        prop_assert_eq!(values_equal(&x, &y), mutual);
        let by_members = x.elements().unwrap().iter().all(|a| ops::member(a, &y));
        prop_assert_eq!(ops::subset(&x, &y).unwrap(), by_members);
    }

    #[test]
    fn union_guard(x in arb_set()) {
        let all_sets = x.elements().unwrap().iter().all(Value::is_set);
        let result = ops::union_family(&x);
        prop_assert_eq!(result.is_ok(), all_sets);
        if let Ok(u) = result {
            for z in x.elements().unwrap() {
                prop_assert!(ops::subset(z, &u).unwrap());
            }
            for b in u.elements().unwrap() {
                prop_assert!(x.elements().unwrap().iter().any(|z| ops::member(b, z)));
            }
        }
    }

    #[test]
    fn tuples_do_not_associate(a in arb_value(), b in arb_value(), c in arb_value()) {
        let t = |xs: Vec<Value>| ops::tuple(xs).unwrap();
        let left = t(vec![t(vec![a.clone(), b.clone()]), c.clone()]);
        let right = t(vec![a.clone(), t(vec![b.clone(), c.clone()])]);
        let flat = t(vec![a, b, c]);
        prop_assert_ne!(&left, &right);
        prop_assert_ne!(&left, &flat);
        prop_assert_ne!(&right, &flat);
    }

    #[test]
    fn partition_laws(x in arb_set()) {
        let p = ops::partition_by_shape(&x).unwrap();
        let mut total = 0;
        for (shape, block) in p.iter() {
            let els = block.elements().unwrap();
            prop_assert!(!els.is_empty());
            prop_assert!(els.iter().all(|e| e.shape() == *shape));
            prop_assert!(ops::subset(block, &x).unwrap());
            total += els.len();
        }
        prop_assert_eq!(total, x.elements().unwrap().len());
        prop_assert_eq!(p.union(), x);
    }

    #[test]
    fn render_parse_round_trip(v in arb_value()) {
        let text = render(&v);
        let term = parse_term(&text).unwrap();
        let back = Evaluator::default().eval_term(&term, &Env::new()).unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn tuple_sugar_matches_row_matrix(a in arb_value(), b in arb_value(), c in arb_value()) {
        let env = Env::new().with("a", a).with("b", b).with("c", c);
        let ev = Evaluator::default();
        let tuple = ev.eval_term(&parse_term("<a, b, c>").unwrap(), &env).unwrap();
        let row = ev.eval_term(&parse_term("[a b c]").unwrap(), &env).unwrap();
        prop_assert_eq!(tuple, row);
    }

    #[test]
    fn quantifier_duality(s in arb_set(), k in 0usize..4) {
        let bodies = ["v = {}", "exists w in v (true)", "v in {{}, [{} {}]}", "v = [{} {}]"];
        let body = parse_formula(bodies[k]).unwrap();
        let range = Range::In(Term::Var("s".into()));
        let forall = Formula::quant(Quantifier::Forall, "v", range.clone(), body.clone());
        let dual = Formula::not(Formula::quant(Quantifier::Exists, "v", range, Formula::not(body)));
        let env = Env::new().with("s", s);
        let ev = Evaluator::default();
        prop_assert_eq!(ev.check(&forall, &env).unwrap(), ev.check(&dual, &env).unwrap());
    }

    #[test]
    fn formula_print_parse_round_trip(k in 0usize..8, s in arb_set()) {
        let sources = [
            "forall v in s (v sub s)",
            "exists! v in s (not v = {})",
            "s = {} or exists v in s (v in s) -> true",
            "not (s in s) <-> s notin s",
            "forall v in s (exists w in v (w = [{} {}]) and v != s)",
            "<s, s> = [s s] and pair(s, s) = {s}",
            "union(pow(s)) = s",
            "cart(s, s, s) sub cart(s, s, s)",
        ];
        let f = parse_formula(sources[k]).unwrap();
        let again = parse_formula(&f.to_string()).unwrap();
        prop_assert_eq!(&again, &f);
        let env = Env::new().with("s", s);
        let ev = Evaluator::default();
        prop_assert_eq!(ev.check(&f, &env), ev.check(&again, &env));
    }
}

#[test]
fn numerals_and_sugar() {
    for k in 0..8 {
        assert_eq!(eval(&k.to_string()), ops::numeral(k));
    }
    assert_eq!(eval("succ(2)"), ops::numeral(3));
    assert_eq!(eval("<0, 1>"), eval("[0 1]"));
    assert_eq!(eval("[[0]]"), ops::numeral(0));
    assert_eq!(Term::App(Op::Pow, vec![Term::Empty]).to_string(), "pow({})");
}

fn pure_set_of_size(n: usize) -> Value {
    ops::naturals_upto(n)
}

#[test]
fn cardinalities_by_enumeration() {
    let limits = Limits::default();
    for size in 0..=3 {
        let x = pure_set_of_size(size);
        for m in 1..=3 {
            for n in 1..=3 {
                let got = ops::set_of_matrices(m, n, &x, &limits).unwrap();
                let expected = size.pow((m * n) as u32);
                assert_eq!(
                    got.elements().unwrap().len(),
                    expected,
                    "matset({m},{n}) |x|={size}"
                );
            }
        }
        for ysize in 0..=3 {
            let y = pure_set_of_size(ysize);
            let fs = ops::function_space(&x, &y, &limits).unwrap();
            assert_eq!(fs.elements().unwrap().len(), ysize.pow(size as u32));
            let cart = ops::cartesian(&x, &y, &limits).unwrap();
            assert_eq!(cart.elements().unwrap().len(), size * ysize);
        }
    }
    for size in 0..=6 {
        let p = ops::power_set(&pure_set_of_size(size), &limits).unwrap();
        assert_eq!(p.elements().unwrap().len(), 1 << size);
    }
}

#[test]
fn function_space_elements_are_functions() {
    let limits = Limits::default();
    let x = pure_set_of_size(2);
    let y = pure_set_of_size(3);
    for f in ops::function_space(&x, &y, &limits)
        .unwrap()
        .elements()
        .unwrap()
    {
        let pairs = f.elements().unwrap();
        assert_eq!(pairs.len(), 2);
        for a in x.elements().unwrap() {
            let images: Vec<_> = pairs
                .iter()
                .filter(|p| p.entries().unwrap()[0] == *a)
                .collect();
            assert_eq!(images.len(), 1);
            assert!(ops::member(&images[0].entries().unwrap()[1], &y));
        }
    }
}

#[test]
fn products_of_three_sets_differ() {
    let limits = Limits::default();
    let x = pure_set_of_size(2);
    let xy = ops::cartesian(&x, &x, &limits).unwrap();
    let left = ops::cartesian(&xy, &x, &limits).unwrap();
    let right = ops::cartesian(&x, &xy, &limits).unwrap();
    let flat = ops::cartesian_n(&[x.clone(), x.clone(), x], &limits).unwrap();
    assert_ne!(left, right);
    assert_ne!(left, flat);
    assert_ne!(right, flat);
    assert_eq!(flat.elements().unwrap().len(), 8);
}
