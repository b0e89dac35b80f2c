//! Independent oracles shared by the integration suites. Nothing here goes
//! through the elimination or root-sum paths of the library.

#![allow(dead_code)]

use std::f64::consts::PI;

use num_complex::Complex64;
use primefourier::{CycloNum, PrimeModulus, SignalFn, SupportSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SMALL_PRIMES: [usize; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

pub fn m(p: usize) -> PrimeModulus {
    PrimeModulus::new(p).unwrap()
}

pub fn set(p: PrimeModulus, xs: &[usize]) -> SupportSet {
    SupportSet::new(p, xs.iter().copied()).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Nonzero integer signal with entries in `-bound..=bound`. Roughly a third
/// of the entries are forced to zero so supports vary.
pub fn random_int_signal(rng: &mut ChaCha8Rng, p: PrimeModulus, bound: i64) -> Vec<i64> {
    loop {
        let v: Vec<i64> = (0..p.get())
            .map(|_| {
                if rng.random_range(0..3) == 0 {
                    0
                } else {
                    rng.random_range(-bound..=bound)
                }
            })
            .collect();
        if v.iter().any(|&x| x != 0) {
            return v;
        }
    }
}

pub fn random_cyclo(rng: &mut ChaCha8Rng, p: PrimeModulus, bound: i64) -> CycloNum {
    let c: Vec<i64> = (0..p.degree()).map(|_| rng.random_range(-bound..=bound)).collect();
    CycloNum::from_int_coeffs(p, &c).unwrap()
}

/// Floating-point transform straight from the definition.
pub fn float_dft(values: &[Complex64]) -> Vec<Complex64> {
    let p = values.len();
    (0..p)
        .map(|xi| {
            values
                .iter()
                .enumerate()
                .map(|(x, v)| v * Complex64::from_polar(1.0, -2.0 * PI * ((x * xi) % p) as f64 / p as f64))
                .sum::<Complex64>()
                / p as f64
        })
        .collect()
}

pub fn embed_signal(f: &SignalFn) -> Vec<Complex64> {
    f.values().iter().map(|v| v.embed().unwrap()).collect()
}

/// Leibniz expansion over all permutations.
pub fn leibniz_det(a: &[Vec<CycloNum>]) -> CycloNum {
    let n = a.len();
    let p = a[0][0].modulus();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = CycloNum::zero(p);
    permute(&mut perm, 0, &mut |perm| {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        let term = (0..n).fold(CycloNum::one(p), |acc, i| &acc * &a[i][perm[i]]);
        total = if inversions % 2 == 0 { &total + &term } else { &total - &term };
    });
    total
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

/// `det(ξ_k^{j})` over GF(p) by elimination mod p.
pub fn vandermonde_det_gf(xs: &[usize], p: usize) -> usize {
    let n = xs.len();
    let p = p as u64;
    let mut a: Vec<Vec<u64>> = (0..n)
        .map(|j| xs.iter().map(|&x| mod_pow(x as u64, j as u64, p)).collect())
        .collect();
    let mut det = 1u64;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&r| a[r][k] != 0) else {
            return 0;
        };
        if piv != k {
            a.swap(piv, k);
            det = (p - det) % p;
        }
        det = det * a[k][k] % p;
        let inv = mod_pow(a[k][k], p - 2, p);
        for r in k + 1..n {
            let factor = a[r][k] * inv % p;
            let pivot_row = a[k].clone();
            for (x, y) in a[r].iter_mut().zip(&pivot_row).skip(k) {
                *x = (*x + p * p - factor * y % p) % p;
            }
        }
    }
    det as usize
}

pub fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
