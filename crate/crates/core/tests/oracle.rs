mod common;

use common::{arb_pure, random_pure};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use smt_core::eval::{generate_universe, Env, Evaluator, Universe, UniverseSpec};
use smt_core::hf::{self, HfSet};
use smt_core::ops::{self, Limits};
use smt_core::syntax::parse_formula;
use smt_core::{Error, Value};

const RUNS: usize = 1000;

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5e7)
}

fn hf(v: &Value) -> HfSet {
    hf::to_hf(v).unwrap()
}

#[test]
fn member_and_subset_agree() {
    let mut rng = rng();
    for _ in 0..RUNS {
        let a = random_pure(&mut rng, 3, 3);
        let x = random_pure(&mut rng, 4, 3);
        assert_eq!(
            ops::member(&a, &x),
            hf::hf_member(&hf(&a), &hf(&x)),
            "{a} in {x}"
        );
        let y = random_pure(&mut rng, 4, 3);
        assert_eq!(
            ops::subset(&x, &y).unwrap(),
            hf::hf_subset(&hf(&x), &hf(&y))
        );
        // membership of an actual element
        if let Some(e) = x.elements().unwrap().first() {
            assert!(hf::hf_member(&hf(e), &hf(&x)));
            assert!(ops::member(e, &x));
        }
    }
}

#[test]
fn constructions_agree() {
    let mut rng = rng();
    let limits = Limits::default();
    for _ in 0..RUNS {
        let a = random_pure(&mut rng, 3, 3);
        let b = random_pure(&mut rng, 3, 3);
        assert_eq!(hf(&ops::pair(&a, &b)), hf::hf_pair(&hf(&a), &hf(&b)));
        let x = random_pure(&mut rng, 4, 3);
        assert_eq!(
            hf(&ops::union_family(&x).unwrap()),
            hf::hf_union_family(&hf(&x))
        );
        assert_eq!(
            hf(&ops::power_set(&x, &limits).unwrap()),
            hf::hf_power_set(&hf(&x))
        );
        assert_eq!(hf::from_hf(&hf(&x)), x);
    }
}

#[test]
fn separation_agrees() {
    let mut rng = rng();
    let ev = Evaluator::default();
    let phi = parse_formula("exists w in v (w = {}) or v = {{{}}}").unwrap();
    let two = hf(&ops::numeral(2));
    for _ in 0..RUNS {
        let x = random_pure(&mut rng, 4, 3);
        let kernel = ev.separation(&x, "v", &phi, &Env::new()).unwrap();
        let oracle = hf::hf_separation(&hf(&x), |e| hf::hf_member(&HfSet::empty(), e) || *e == two);
        assert_eq!(hf(&kernel), oracle, "separation of {x}");

        let even = ops::separate(&x, |e| Ok(e.elements().unwrap().len() % 2 == 0)).unwrap();
        assert_eq!(hf(&even), hf::hf_separation(&hf(&x), |e| e.len() % 2 == 0));
    }
}

#[test]
fn replacement_agrees() {
    let mut rng = rng();
    let limits = Limits::default();
    let domain = generate_universe(&UniverseSpec::new(4, 3, 0, 0), &limits).unwrap();
    for _ in 0..RUNS {
        let x = random_pure(&mut rng, 3, 3);
        let kernel = ops::replace(&x, &domain, |a, b| Ok(*b == Value::set([a.clone()]))).unwrap();
        let oracle = hf::hf_replacement(&hf(&x), |a| HfSet::new([a.clone()]));
        assert_eq!(hf(&kernel), oracle, "successor image of {x}");

        let kernel = ops::replace(&x, &domain, |a, b| Ok(*b == ops::union_family(a)?)).unwrap();
        assert_eq!(
            hf(&kernel),
            hf::hf_replacement(&hf(&x), hf::hf_union_family)
        );
    }
}

#[test]
fn replacement_through_formulas_agrees() {
    let mut rng = rng();
    let universe = Universe::generate(&UniverseSpec::new(4, 3, 0, 0), &Limits::default()).unwrap();
    let ev = Evaluator::default().with_universe(universe);
    let phi = parse_formula("b = pair(a, {})").unwrap();
    for _ in 0..100 {
        let x = random_pure(&mut rng, 3, 2);
        let kernel = ev.replacement(&x, "a", "b", &phi, &Env::new()).unwrap();
        let oracle = hf::hf_replacement(&hf(&x), |a| hf::hf_pair(a, &HfSet::empty()));
        assert_eq!(hf(&kernel), oracle);
    }
}

#[test]
fn foundation_witnesses_agree() {
    let mut rng = rng();
    let mut checked = 0;
    while checked < RUNS {
        let x = random_pure(&mut rng, 4, 3);
        if x.is_empty_set() {
            assert!(hf::hf_foundation_witness(&hf(&x)).is_none());
            assert!(matches!(
                ops::foundation_witness(&x),
                Err(Error::Precondition { .. })
            ));
            continue;
        }
        checked += 1;
        let z = ops::foundation_witness(&x).unwrap();
        let w = hf::hf_foundation_witness(&hf(&x)).unwrap();
        let hx = hf(&x);
        // exhaustive search for the least rank of any witness
        let least = hx
            .elements()
            .iter()
            .filter(|e| e.elements().iter().all(|g| !hf::hf_member(g, &hx)))
            .map(hf::hf_rank)
            .min()
            .unwrap();
        assert!(ops::member(&z, &x));
        assert!(z.elements().unwrap().iter().all(|g| !ops::member(g, &x)));
        assert_eq!(z.rank(), least);
        assert_eq!(hf::hf_rank(&w), least);
    }
}

#[test]
fn unique_empty_set_only_without_matrices() {
    let exactly_one = parse_formula("exists! x: set (forall y (y notin x))").unwrap();
    let no_set_elements = parse_formula("exists! x: set (forall y: set (y notin x))").unwrap();
    let limits = Limits::default();

    let pure = Universe::generate(&UniverseSpec::new(2, 2, 2, 0), &limits).unwrap();
    let ev = Evaluator::default().with_universe(pure);
    assert!(ev.check(&exactly_one, &Env::new()).unwrap());
    assert!(ev.check(&no_set_elements, &Env::new()).unwrap());

    let oracle = hf::hf_universe(2, 2);
    let empties = oracle
        .iter()
        .filter(|x| oracle.iter().all(|y| !hf::hf_member(y, x)))
        .count();
    assert_eq!(empties, 1);

    let full = Universe::generate(&UniverseSpec::default(), &limits).unwrap();
    let ev = Evaluator::default().with_universe(full);
    assert!(ev.check(&exactly_one, &Env::new()).unwrap());
    assert!(!ev.check(&no_set_elements, &Env::new()).unwrap());
}

#[test]
fn matrix_free_universe_matches_oracle_universe() {
    for (rank, width) in [(0, 2), (1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (4, 2)] {
        let kernel =
            generate_universe(&UniverseSpec::new(rank, width, 2, 0), &Limits::default()).unwrap();
        let mut translated: Vec<HfSet> = kernel.iter().map(hf).collect();
        translated.sort();
        assert_eq!(
            translated,
            hf::hf_universe(rank, width),
            "rank {rank} width {width}"
        );
    }
}

proptest! {
    #[test]
    fn translation_round_trips(v in arb_pure()) {
        let h = hf(&v);
        prop_assert_eq!(hf::from_hf(&h), v.clone());
        prop_assert_eq!(h.to_string(), v.to_string());
        prop_assert_eq!(hf::hf_rank(&h), v.rank());
    }

    #[test]
    fn canonical_orders_agree(a in arb_pure(), b in arb_pure()) {
        prop_assert_eq!(a.cmp(&b), hf(&a).cmp(&hf(&b)));
    }
}
