mod common;

use common::{m, random_int_signal};
use primefourier::fourier::{dft, support};
use primefourier::uncertainty::{
    certify_tightness, construct_exact_pair, construct_support_pair, verify_uncertainty,
    ConstructOptions,
};
use primefourier::{CycloNum, Error, SignalFn, SupportSet};

#[test]
fn achievability_and_tightness_are_total_for_p3_and_p5() {
    let opts = ConstructOptions::default();
    for p in [3usize, 5] {
        let pm = m(p);
        for am in 1u64..(1 << p) {
            for bm in 0u64..(1 << p) {
                let a = SupportSet::from_mask(pm, am);
                let b = SupportSet::from_mask(pm, bm);
                if a.len() + b.len() <= p {
                    assert!(certify_tightness(pm, &a, &b).unwrap());
                } else if !b.is_empty() {
                    let w = construct_support_pair(&a, &b, &opts).unwrap();
                    assert_eq!(support(&w.f), a);
                    assert_eq!(support(&dft(&w.f)), b);
                    assert_eq!(w.combination.is_some(), a.len() + b.len() > p + 1);
                }
            }
        }
    }
}

#[test]
fn exact_pair_uses_the_documented_auxiliary_set() {
    let p7 = m(7);
    let a = common::set(p7, &[1, 2, 4, 6]);
    let b = common::set(p7, &[2, 3, 5, 6]);
    let w = construct_exact_pair(&a, &b).unwrap();
    // complement of B plus min(B)
    assert_eq!(w.tilde_a.unwrap().members(), &[0, 1, 2, 4]);
    let fh = dft(&w.f);
    assert!(fh.get(2).is_one());
    for t in [0, 1, 4] {
        assert!(fh.get(t).is_zero());
    }
}

#[test]
fn adversarial_inputs_respect_the_bound() {
    for p in [2usize, 3, 5, 7, 11, 13] {
        let pm = m(p);
        let mut cases = vec![SignalFn::constant(pm, CycloNum::one(pm))];
        for x in 0..p {
            cases.push(SignalFn::dirac(pm, x));
            cases.push(SignalFn::character(pm, x));
            cases.push(SignalFn::character(pm, x).translate(p / 2));
            // indicator of an interval
            let ind: Vec<i64> = (0..p).map(|y| i64::from(y <= x)).collect();
            cases.push(SignalFn::from_integers(pm, &ind).unwrap());
        }
        for f in &cases {
            let r = verify_uncertainty(f).unwrap();
            assert!(r.sum > p && r.product >= p);
        }
    }
    let mut rng = common::rng(21);
    for p in [7usize, 11] {
        let pm = m(p);
        for _ in 0..200 {
            let f = SignalFn::from_integers(pm, &random_int_signal(&mut rng, pm, 3)).unwrap();
            verify_uncertainty(&f).unwrap();
        }
    }
}

#[test]
fn minor_solve_outputs_are_extremal() {
    // every witness from the boundary construction sits exactly on p + 1
    let p7 = m(7);
    for am in [0b1u64, 0b11, 0b1011, 0b111_0101, 0b111_1111] {
        let a = SupportSet::from_mask(p7, am);
        let b = SupportSet::prefix(p7, 8 - a.len()).translate(3);
        let w = construct_exact_pair(&a, &b).unwrap();
        assert_eq!(verify_uncertainty(&w.f).unwrap().sum, 8);
    }
}

#[test]
fn retry_budget_exhaustion_is_reported() {
    let p5 = m(5);
    let full = SupportSet::full(p5);
    let opts = ConstructOptions { seed: 3, max_attempts: 0 };
    match construct_support_pair(&full, &full, &opts) {
        Err(Error::BudgetExceeded(msg)) => assert!(msg.contains("seed 3")),
        other => panic!("expected budget error, got {other:?}"),
    }
}

#[test]
fn seeds_are_reproducible() {
    let p7 = m(7);
    let a = common::set(p7, &[0, 1, 3, 4, 6]);
    let b = common::set(p7, &[1, 2, 3, 5]);
    let opts = ConstructOptions { seed: 42, max_attempts: 32 };
    let w1 = construct_support_pair(&a, &b, &opts).unwrap();
    let w2 = construct_support_pair(&a, &b, &opts).unwrap();
    assert_eq!(w1, w2);
    assert_eq!(w1.combination.as_ref().unwrap().seed, 42);
}
