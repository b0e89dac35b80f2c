//! Integer polynomials evaluated at `p`-th roots of unity.
//!
//! If `P(ω^{k_1}, …, ω^{k_n}) = 0` then `P(1, …, 1) ≡ 0 (mod p)`. The check
//! here evaluates both sides exactly and reports the implication as a
//! theorem violation if it ever fails.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use super::{CycloNum, PrimeModulus, RootSum};
use crate::{Error, Result};

/// A multivariate polynomial with arbitrary-precision integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    vars: usize,
    // no zero coefficients are stored
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl IntPolynomial {
    pub fn new(vars: usize) -> Self {
        IntPolynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs; repeated
    /// exponent tuples are summed.
    pub fn from_terms<I, C>(vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::new(vars);
        for (exps, c) in terms {
            out.add_term(exps, c.into())?;
        }
        Ok(out)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: BigInt) -> Result<()> {
        if exps.len() != self.vars {
            return Err(Error::precondition(format!(
                "monomial has {} exponents, polynomial has {} variables",
                exps.len(),
                self.vars
            )));
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                if !coeff.is_zero() {
                    v.insert(coeff);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
        Ok(())
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of the coefficients, i.e. the value at `(1, …, 1)`.
    pub fn value_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Coefficient of `z^e` in a univariate polynomial.
    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Exact value at `(ω^{k_1}, …, ω^{k_n})`.
    pub fn eval_at_roots(&self, p: PrimeModulus, powers: &[usize]) -> Result<CycloNum> {
        check_powers(self, p, powers)?;
        let mut sum = RootSum::new(p);
        for (exps, c) in &self.terms {
            sum.add_term(&CycloNum::from_integer(p, c.clone()), root_exponent(p, exps, powers));
        }
        Ok(sum.finish())
    }
}

fn check_powers(poly: &IntPolynomial, p: PrimeModulus, powers: &[usize]) -> Result<()> {
    if powers.len() != poly.vars {
        return Err(Error::precondition(format!(
            "{} root powers given for {} variables",
            powers.len(),
            poly.vars
        )));
    }
    if let Some(k) = powers.iter().find(|&&k| k >= p.get()) {
        return Err(Error::precondition(format!("root power {k} is not below p = {p}")));
    }
    Ok(())
}

/// `Σ_j e_j k_j mod p`.
fn root_exponent(p: PrimeModulus, exps: &[u32], powers: &[usize]) -> usize {
    let p = p.get() as u128;
    let e = exps
        .iter()
        .zip(powers)
        .fold(0u128, |acc, (&e, &k)| (acc + (e as u128 % p) * k as u128) % p);
    e as usize
}

/// `Q(z) = P(z^{k_1}, …, z^{k_n}) mod (z^p - 1)`, a univariate polynomial of
/// degree at most `p - 1`.
pub fn galois_reduce(
    poly: &IntPolynomial,
    p: PrimeModulus,
    powers: &[usize],
) -> Result<IntPolynomial> {
    check_powers(poly, p, powers)?;
    let mut out = IntPolynomial::new(1);
    for (exps, c) in &poly.terms {
        let e = root_exponent(p, exps, powers) as u32;
        out.add_term(vec![e], c.clone())?;
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GaloisReport {
    pub vanishes_at_roots: bool,
    #[serde(serialize_with = "serialize_bigint")]
    pub value_at_one: BigInt,
    pub divisible_by_p: bool,
}

fn serialize_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Evaluates `P` at the given roots of unity and at `(1, …, 1)`.
///
/// Returns a theorem violation if `P` vanishes at the roots while
/// `P(1, …, 1)` is not a multiple of `p`.
pub fn galois_divisibility_check(
    poly: &IntPolynomial,
    p: PrimeModulus,
    powers: &[usize],
) -> Result<GaloisReport> {
    let value = poly.eval_at_roots(p, powers)?;
    let value_at_one = poly.value_at_one();
    let report = GaloisReport {
        vanishes_at_roots: value.is_zero(),
        divisible_by_p: value_at_one.is_multiple_of(&BigInt::from(p.get())),
        value_at_one,
    };
    if report.vanishes_at_roots && !report.divisible_by_p {
        return Err(Error::violation(format!(
            "polynomial vanishes at roots {powers:?} of order {p} but P(1,…,1) = {}",
            report.value_at_one
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: usize) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let p5 = m(5);
        let sq = IntPolynomial::from_terms(1, [(vec![2], 1)]).unwrap();
        let q = galois_reduce(&sq, p5, &[3]).unwrap();
        assert_eq!(q, IntPolynomial::from_terms(1, [(vec![1], 1)]).unwrap());

        let prod = IntPolynomial::from_terms(2, [(vec![1, 1], 1)]).unwrap();
        let q = galois_reduce(&prod, p5, &[2, 3]).unwrap();
        assert_eq!(q, IntPolynomial::from_terms(1, [(vec![0], 1)]).unwrap());

        let phi3 = IntPolynomial::from_terms(1, [(vec![0], 1), (vec![1], 1), (vec![2], 1)]).unwrap();
        assert_eq!(galois_reduce(&phi3, m(3), &[1]).unwrap(), phi3);
    }

    #[test]
    fn check_examples() {
        let phi3 = IntPolynomial::from_terms(1, [(vec![0], 1), (vec![1], 1), (vec![2], 1)]).unwrap();
        let r = galois_divisibility_check(&phi3, m(3), &[1]).unwrap();
        assert!(r.vanishes_at_roots);
        assert_eq!(r.value_at_one, BigInt::from(3));
        assert!(r.divisible_by_p);

        let lin = IntPolynomial::from_terms(1, [(vec![1], 1), (vec![0], -1)]).unwrap();
        let r = galois_divisibility_check(&lin, m(5), &[0]).unwrap();
        assert!(r.vanishes_at_roots);
        assert_eq!(r.value_at_one, BigInt::zero());
        assert!(r.divisible_by_p);

        let diff = IntPolynomial::from_terms(2, [(vec![1, 0], 1), (vec![0, 1], -1)]).unwrap();
        let r = galois_divisibility_check(&diff, m(5), &[1, 2]).unwrap();
        assert!(!r.vanishes_at_roots);
    }

    #[test]
    fn cancelling_terms_are_dropped() {
        let p = IntPolynomial::from_terms(1, [(vec![1], 2), (vec![0], 1), (vec![1], -2)]).unwrap();
        assert_eq!(p.terms().count(), 1);
        assert!(IntPolynomial::from_terms(1, [(vec![3], 1), (vec![3], -1)]).unwrap().is_zero());
    }

    #[test]
    fn bad_inputs() {
        let p = IntPolynomial::new(2);
        assert!(galois_reduce(&p, m(5), &[1]).is_err());
        assert!(galois_reduce(&p, m(5), &[1, 5]).is_err());
        assert!(IntPolynomial::from_terms(2, [(vec![1], 1)]).is_err());
    }
}
