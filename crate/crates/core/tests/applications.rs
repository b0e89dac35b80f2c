mod common;

use common::m;
use primefourier::applications::{
    cauchy_davenport_check, cd_proof_witness, meshulam_check, multi_dft, multi_idft,
    sparse_zero_count, sumset, MultiSignal, SparsePoly,
};
use primefourier::fourier::{dft, support};
use primefourier::uncertainty::ConstructOptions;
use primefourier::{CycloNum, SignalFn, SupportSet};
use rand::Rng;

/// Sumset through the integer product of indicator polynomials mod z^p - 1.
fn sumset_oracle(a: &SupportSet, b: &SupportSet) -> Vec<usize> {
    let p = a.modulus().get();
    let mut prod = vec![0u32; p];
    for x in a.iter() {
        for y in b.iter() {
            prod[(x + y) % p] += 1;
        }
    }
    (0..p).filter(|&s| prod[s] > 0).collect()
}

#[test]
fn sumsets_match_the_oracle_and_are_monotone() {
    for p in [2usize, 3, 5] {
        let pm = m(p);
        for am in 1u64..(1 << p) {
            for bm in 1u64..(1 << p) {
                let a = SupportSet::from_mask(pm, am);
                let b = SupportSet::from_mask(pm, bm);
                let s = sumset(&a, &b).unwrap();
                assert_eq!(s.members(), sumset_oracle(&a, &b).as_slice());
                cauchy_davenport_check(&a, &b).unwrap();
                // adding any element to A can only grow the sumset
                for extra in 0..p {
                    let bigger = a.union(&SupportSet::new(pm, [extra]).unwrap());
                    assert!(s.is_subset(&sumset(&bigger, &b).unwrap()));
                }
            }
        }
    }
}

#[test]
fn arithmetic_progressions_are_extremal() {
    let p = m(11);
    for la in 1..=6 {
        for lb in 1..=6 {
            let a = SupportSet::prefix(p, la);
            let b = SupportSet::prefix(p, lb).translate(4);
            let r = cauchy_davenport_check(&a, &b).unwrap();
            assert_eq!(r.lhs, r.rhs);
        }
    }
}

#[test]
fn cd_witnesses_small_primes() {
    let opts = ConstructOptions::default();
    let p5 = m(5);
    for am in 1u64..32 {
        for bm in 1u64..32 {
            let a = SupportSet::from_mask(p5, am);
            let b = SupportSet::from_mask(p5, bm);
            let w = cd_proof_witness(&a, &b, &opts).unwrap();
            assert_eq!(support(&w.f), a);
            assert_eq!(support(&w.g), b);
            assert_eq!(support(&dft(&w.f)), w.x);
            assert_eq!(support(&dft(&w.g)), w.y);
            assert_eq!(support(&dft(&w.conv)), w.x.intersection(&w.y));
            assert!(support(&w.conv).is_subset(&w.sumset));
            assert!(w.inequality_chain.holds);
        }
    }
}

#[test]
fn sparse_polynomials_random() {
    let mut rng = common::rng(31);
    for p in [11usize, 13] {
        let pm = m(p);
        for _ in 0..200 {
            let terms = rng.random_range(1..=p.min(11));
            let mut exps: Vec<usize> = (0..p).collect();
            for i in 0..terms {
                let j = rng.random_range(i..p);
                exps.swap(i, j);
            }
            let poly = SparsePoly::new(
                pm,
                exps[..terms]
                    .iter()
                    .map(|&e| (e, common::random_cyclo(&mut rng, pm, 3)))
                    .filter(|(_, c)| !c.is_zero())
                    .collect(),
            );
            let Ok(poly) = poly else { continue };
            let r = sparse_zero_count(&poly).unwrap();
            assert!(r.zeros.len() < r.term_count);
            // floating cross-check of every claimed zero and non-zero
            for t in 0..p {
                let z = num_complex::Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * t as f64 / p as f64);
                let val: num_complex::Complex64 = poly
                    .terms()
                    .iter()
                    .map(|(e, c)| c.embed().unwrap() * z.powu(*e as u32))
                    .sum();
                if r.zeros.contains(t) {
                    assert!(val.norm() < 1e-8);
                }
            }
        }
    }
}

#[test]
fn sparse_cubic_roots_are_not_seventh_roots() {
    let p = m(7);
    let poly = SparsePoly::from_integers(p, &[(0, 1), (1, 1), (2, 1)]).unwrap();
    for t in 0..7 {
        let z = num_complex::Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * t as f64 / 7.0);
        assert!((1.0 + z + z * z).norm() > 1e-3);
        assert!(!poly.eval_at_root(t).is_zero());
    }
}

/// `F̂(ξ) = p^{-n} Σ_x F(x) ω^{-x·ξ}` by direct summation.
fn multi_dft_oracle(f: &MultiSignal) -> Vec<CycloNum> {
    let p = f.modulus();
    let scale = num_bigint::BigInt::from(p.get().pow(f.dim() as u32));
    (0..f.len())
        .map(|xi| {
            let xi_pt = f.point(xi);
            (0..f.len())
                .fold(CycloNum::zero(p), |acc, x| {
                    let dot: usize = f.point(x).iter().zip(&xi_pt).map(|(a, b)| a * b).sum();
                    &acc + &(&f.values()[x] * &CycloNum::root_power(p, -(dot as i64)))
                })
                .div_int(&scale)
                .unwrap()
        })
        .collect()
}

#[test]
fn multi_dft_matches_definition_and_tensor_structure() {
    let mut rng = common::rng(32);
    let p = m(3);
    for dim in 1..=3 {
        for _ in 0..5 {
            let vals: Vec<i64> = (0..3usize.pow(dim)).map(|_| rng.random_range(-4..=4)).collect();
            let f = MultiSignal::from_integers(p, dim as usize, &vals).unwrap();
            let fh = multi_dft(&f);
            assert_eq!(fh.values(), multi_dft_oracle(&f).as_slice());
            assert_eq!(multi_idft(&fh), f);
        }
    }
    // product of 1-D signals
    let u = SignalFn::from_integers(p, &[1, -2, 0]).unwrap();
    let v = SignalFn::from_integers(p, &[3, 1, 1]).unwrap();
    let f = MultiSignal::from_fn(p, 2, |x| u.get(x[0]) * v.get(x[1])).unwrap();
    let (uh, vh) = (dft(&u), dft(&v));
    let fh = multi_dft(&f);
    for a in 0..3 {
        for b in 0..3 {
            assert_eq!(fh.get(&[a, b]).unwrap(), &(uh.get(a) * vh.get(b)));
        }
    }
}

#[test]
fn meshulam_exhaustive_on_binary_square() {
    // (Z/2Z)^2 has 2^4 - 1 nonzero {0,1}-valued functions
    let p = m(2);
    for mask in 1u32..16 {
        let vals: Vec<i64> = (0..4).map(|i| i64::from(mask >> i & 1)).collect();
        let r = meshulam_check(&MultiSignal::from_integers(p, 2, &vals).unwrap()).unwrap();
        assert!(r.all_hold(), "{vals:?}: {r:?}");
    }
}

#[test]
fn meshulam_random_on_cube() {
    let mut rng = common::rng(33);
    let p = m(3);
    for _ in 0..60 {
        let vals: Vec<i64> = (0..27)
            .map(|_| if rng.random_range(0..2) == 0 { 0 } else { rng.random_range(-3..=3) })
            .collect();
        if vals.iter().all(|&v| v == 0) {
            continue;
        }
        let r = meshulam_check(&MultiSignal::from_integers(p, 3, &vals).unwrap()).unwrap();
        assert!(r.all_hold(), "{vals:?}: {r:?}");
        assert_eq!(r.per_j.len(), 3);
    }
    // a plane through the origin is extremal for j = 0 and 1
    let plane = MultiSignal::from_fn(p, 3, |x| CycloNum::from_integer(p, i64::from(x[2] == 0))).unwrap();
    let r = meshulam_check(&plane).unwrap();
    assert_eq!((r.support_size, r.fourier_support_size), (9, 3));
    assert!(r.per_j.iter().any(|t| t.lhs == t.rhs));
}
