//! Exact arithmetic in `Q(ω)` for `ω` a primitive `p`-th root of unity.
//!
//! Elements are stored in the power basis `1, ω, …, ω^{p-2}`. The minimal
//! polynomial `1 + z + … + z^{p-1}` has degree `p - 1`, so this basis is a
//! true basis and every element has exactly one coefficient vector. Equality
//! and the zero test are therefore plain comparisons.
//!
//! Internally the coefficients share one positive denominator and the
//! numerators are reduced against it, which keeps multiplication free of
//! per-coefficient gcds while still giving a unique representation.

mod galois;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::{Error, Result};

pub use galois::{galois_divisibility_check, galois_reduce, GaloisReport, IntPolynomial};

/// Largest modulus accepted by [`PrimeModulus::new`].
pub const DEFAULT_MAX_P: usize = 10007;

/// A validated prime `p`, the order of the ambient group `Z/pZ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(usize);

impl PrimeModulus {
    pub fn new(p: usize) -> Result<Self> {
        Self::with_bound(p, DEFAULT_MAX_P)
    }

    /// Like [`PrimeModulus::new`] with an explicit upper bound on `p`.
    pub fn with_bound(p: usize, max: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > max {
            return Err(Error::ModulusTooLarge { p, max });
        }
        Ok(PrimeModulus(p))
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0
    }

    /// Dimension of `Q(ω)` over the rationals, `p - 1`.
    #[inline]
    pub fn degree(self) -> usize {
        self.0 - 1
    }

    /// Reduces any integer to its residue in `{0, …, p-1}`.
    #[inline]
    pub fn reduce(self, k: i64) -> usize {
        k.rem_euclid(self.0 as i64) as usize
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for PrimeModulus {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u64(self.0 as u64)
    }
}

/// Deterministic trial division.
pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact element of `Q(ω)`.
///
/// Coefficient `i` multiplies `ω^i`, `0 ≤ i ≤ p - 2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloNum {
    modulus: PrimeModulus,
    // invariant: gcd(num..., den) = 1, den > 0, and den = 1 for zero
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycloNum {
    pub fn zero(modulus: PrimeModulus) -> Self {
        CycloNum {
            modulus,
            num: vec![BigInt::zero(); modulus.degree()],
            den: BigInt::one(),
        }
    }

    pub fn one(modulus: PrimeModulus) -> Self {
        Self::from_integer(modulus, 1)
    }

    pub fn from_integer(modulus: PrimeModulus, value: impl Into<BigInt>) -> Self {
        let mut out = Self::zero(modulus);
        out.num[0] = value.into();
        out
    }

    pub fn from_rational(modulus: PrimeModulus, value: &BigRational) -> Self {
        let mut num = vec![BigInt::zero(); modulus.degree()];
        num[0] = value.numer().clone();
        Self::normalized(modulus, num, value.denom().clone())
    }

    /// Builds an element from its `p - 1` power-basis coefficients.
    pub fn from_coeffs(modulus: PrimeModulus, coeffs: &[BigRational]) -> Result<Self> {
        if coeffs.len() != modulus.degree() {
            return Err(Error::precondition(format!(
                "expected {} coefficients for p = {}, got {}",
                modulus.degree(),
                modulus,
                coeffs.len()
            )));
        }
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Ok(Self::normalized(modulus, num, den))
    }

    /// Integer coefficients in the power basis.
    pub fn from_int_coeffs(modulus: PrimeModulus, coeffs: &[i64]) -> Result<Self> {
        let coeffs: Vec<BigRational> = coeffs
            .iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect();
        Self::from_coeffs(modulus, &coeffs)
    }

    /// `ω^k`, with `k` reduced mod `p` first.
    ///
    /// For `k ≡ p - 1` this is `-(1 + ω + … + ω^{p-2})`.
    pub fn root_power(modulus: PrimeModulus, k: i64) -> Self {
        let k = modulus.reduce(k);
        let mut out = Self::zero(modulus);
        if k < modulus.degree() {
            out.num[k] = BigInt::one();
        } else {
            out.num.iter_mut().for_each(|c| *c = -BigInt::one());
        }
        out
    }

    #[inline]
    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    /// The power-basis coefficients as reduced rationals.
    pub fn coeffs(&self) -> Vec<BigRational> {
        (0..self.num.len()).map(|i| self.coeff(i)).collect()
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        BigRational::new(self.num[i].clone(), self.den.clone())
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// True when the element is a rational number (only the constant term
    /// may be nonzero).
    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational, if it is one.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.coeff(0))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_modulus(other)?;
        Ok(self.combine(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_modulus(other)?;
        Ok(self.combine(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_modulus(other)?;
        Ok(self.product(other))
    }

    /// Multiplicative inverse by extended Euclid against the minimal
    /// polynomial over the rationals.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(Self::from_rational(self.modulus, &r.recip()));
        }
        // a^{-1} = (product of the other conjugates) / N(a), all in Z[ω]
        let integral = CycloNum {
            modulus: self.modulus,
            num: self.num.clone(),
            den: BigInt::one(),
        };
        let others = (2..self.modulus.get())
            .fold(Self::one(self.modulus), |acc, k| acc.product(&integral.galois(k)));
        let norm = integral
            .product(&others)
            .to_rational()
            .expect("the norm is rational");
        Ok(others.scale(&(BigRational::from_integer(self.den.clone()) / norm)))
    }

    /// Image under `ω ↦ ω^k` for `k` prime to `p`.
    fn galois(&self, k: usize) -> Self {
        let p = self.modulus.get();
        let mut full = vec![BigInt::zero(); p];
        for (i, c) in self.num.iter().enumerate() {
            full[i * k % p] = c.clone();
        }
        Self::from_full(self.modulus, full, self.den.clone())
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.same_modulus(other)?;
        Ok(self.product(&other.inverse()?))
    }

    /// Image under `ω ↦ ω^{-1}`, which is complex conjugation in the
    /// standard embedding.
    pub fn conj(&self) -> Self {
        let p = self.modulus.get();
        let mut full = vec![BigInt::zero(); p];
        for (i, c) in self.num.iter().enumerate() {
            full[(p - i) % p] = c.clone();
        }
        // conjugation is a Z-module automorphism of Z[ω]; content is preserved
        Self::from_full_unchecked(self.modulus, full, self.den.clone())
    }

    /// `self · ω^k`, computed as a rotation in the length-`p` spanning set.
    pub fn mul_root_power(&self, k: i64) -> Self {
        let p = self.modulus.get();
        let k = self.modulus.reduce(k);
        if k == 0 {
            return self.clone();
        }
        let mut full = vec![BigInt::zero(); p];
        for (i, c) in self.num.iter().enumerate() {
            full[(i + k) % p] = c.clone();
        }
        Self::from_full_unchecked(self.modulus, full, self.den.clone())
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        let num = self.num.iter().map(|c| c * factor.numer()).collect();
        Self::normalized(self.modulus, num, &self.den * factor.denom())
    }

    pub fn scale_int(&self, factor: &BigInt) -> Self {
        let num = self.num.iter().map(|c| c * factor).collect();
        Self::normalized(self.modulus, num, self.den.clone())
    }

    /// `self / d` for a nonzero integer `d`.
    pub fn div_int(&self, d: &BigInt) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.modulus, self.num.clone(), &self.den * d))
    }

    /// Double-precision value of `Σ c_i e^{2πi·i/p}`.
    pub fn embed(&self) -> Result<Complex64> {
        let p = self.modulus.get() as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..self.num.len() {
            if self.num[i].is_zero() {
                continue;
            }
            let c = self.coeff(i).to_f64().ok_or(Error::Overflow)?;
            if !c.is_finite() {
                return Err(Error::Overflow);
            }
            let angle = 2.0 * std::f64::consts::PI * i as f64 / p;
            acc += Complex64::from_polar(c, angle);
        }
        if !acc.re.is_finite() || !acc.im.is_finite() {
            return Err(Error::Overflow);
        }
        Ok(acc)
    }

    /// Parses the canonical text form produced by `Display`.
    pub fn parse(modulus: PrimeModulus, text: &str) -> Result<Self> {
        let mut coeffs = vec![BigRational::zero(); modulus.degree()];
        for term in text.split(" + ") {
            let term = term.trim();
            let (coeff, power) = match term.split_once('*') {
                None => (term, 0),
                Some((c, "w")) => (c, 1),
                Some((c, w)) => {
                    let e = w
                        .strip_prefix("w^")
                        .and_then(|e| e.parse::<usize>().ok())
                        .ok_or_else(|| Error::Parse(format!("bad power in term `{term}`")))?;
                    (c, e)
                }
            };
            if power >= modulus.degree() {
                return Err(Error::Parse(format!(
                    "power {power} out of range for p = {modulus}"
                )));
            }
            let value: BigRational = coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient `{coeff}`")))?;
            coeffs[power] += value;
        }
        Self::from_coeffs(modulus, &coeffs)
    }

    fn same_modulus(&self, other: &Self) -> Result<()> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(Error::ModulusMismatch(
                self.modulus.get(),
                other.modulus.get(),
            ))
        }
    }

    fn combine(&self, other: &Self, subtract: bool) -> Self {
        let (num, den) = if self.den == other.den {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if subtract { a - b } else { a + b })
                .collect();
            (num, self.den.clone())
        } else {
            let den = self.den.lcm(&other.den);
            let sa = &den / &self.den;
            let sb = &den / &other.den;
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| {
                    if subtract {
                        a * &sa - b * &sb
                    } else {
                        a * &sa + b * &sb
                    }
                })
                .collect();
            (num, den)
        };
        Self::normalized(self.modulus, num, den)
    }

    fn product(&self, other: &Self) -> Self {
        if let Some(r) = self.to_rational() {
            return other.scale(&r);
        }
        if let Some(r) = other.to_rational() {
            return self.scale(&r);
        }
        let p = self.modulus.get();
        // schoolbook product folded mod z^p - 1
        let mut full = vec![BigInt::zero(); p];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let slot = &mut full[(i + j) % p];
                *slot += a * b;
            }
        }
        let top = full.pop().expect("p >= 2");
        let num = full.into_iter().map(|c| c - &top).collect();
        Self::normalized(self.modulus, num, &self.den * &other.den)
    }

    /// Reduces a length-`p` vector over `1, ω, …, ω^{p-1}` to the basis by
    /// substituting `ω^{p-1} = -(1 + … + ω^{p-2})`.
    pub(crate) fn from_full(modulus: PrimeModulus, mut full: Vec<BigInt>, den: BigInt) -> Self {
        debug_assert_eq!(full.len(), modulus.get());
        let top = full.pop().expect("p >= 2");
        let num = if top.is_zero() {
            full
        } else {
            full.into_iter().map(|c| c - &top).collect()
        };
        Self::normalized(modulus, num, den)
    }

    fn from_full_unchecked(modulus: PrimeModulus, mut full: Vec<BigInt>, den: BigInt) -> Self {
        let top = full.pop().expect("p >= 2");
        let num: Vec<BigInt> = if top.is_zero() {
            full
        } else {
            full.into_iter().map(|c| c - &top).collect()
        };
        let out = CycloNum { modulus, num, den };
        debug_assert_eq!(out, Self::normalized(modulus, out.num.clone(), out.den.clone()));
        out
    }

    fn normalized(modulus: PrimeModulus, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        debug_assert!(!den.is_zero());
        if num.iter().all(Zero::is_zero) {
            return Self::zero(modulus);
        }
        if den.is_negative() {
            den = -den;
            num.iter_mut().for_each(|c| *c = -&*c);
        }
        if !den.is_one() {
            let g = num.iter().fold(den.clone(), |g, c| {
                if g.is_one() || c.is_zero() {
                    g
                } else {
                    g.gcd(c)
                }
            });
            if !g.is_one() {
                num.iter_mut().for_each(|c| *c = &*c / &g);
                den /= g;
            }
        }
        CycloNum { modulus, num, den }
    }
}

impl fmt::Display for CycloNum {
    /// Canonical form `c0 + c1*w + … + c{p-2}*w^{p-2}`, every term printed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.num.len() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let c = self.coeff(i);
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*w")?,
                _ => write!(f, "{c}*w^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum(p={}: {})", self.modulus, self)
    }
}

impl Serialize for CycloNum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

// Operator forms panic on mismatched moduli; use the `checked_*` methods when
// the operands come from different sources.
impl Add for &CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        self.checked_add(rhs).expect("cyclotomic addition")
    }
}

impl Sub for &CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        self.checked_sub(rhs).expect("cyclotomic subtraction")
    }
}

impl Mul for &CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        self.checked_mul(rhs).expect("cyclotomic multiplication")
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            modulus: self.modulus,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(mut self) -> CycloNum {
        self.num.iter_mut().for_each(|c| *c = -&*c);
        self
    }
}

/// Accumulates `Σ a_k ω^{e_k}` in the redundant length-`p` spanning set and
/// reduces once at the end. Multiplying by a root of unity is only an index
/// shift there, which makes transforms and root-of-unity evaluation cheap.
#[derive(Debug, Clone)]
pub(crate) struct RootSum {
    modulus: PrimeModulus,
    full: Vec<BigInt>,
    den: BigInt,
}

impl RootSum {
    pub(crate) fn new(modulus: PrimeModulus) -> Self {
        RootSum {
            modulus,
            full: vec![BigInt::zero(); modulus.get()],
            den: BigInt::one(),
        }
    }

    /// `self += a · ω^k`.
    pub(crate) fn add_term(&mut self, a: &CycloNum, k: usize) {
        debug_assert_eq!(a.modulus, self.modulus);
        if a.is_zero() {
            return;
        }
        let p = self.modulus.get();
        let scale = if a.den == self.den {
            None
        } else {
            let den = self.den.lcm(&a.den);
            let own = &den / &self.den;
            if !own.is_one() {
                self.full.iter_mut().for_each(|c| *c *= &own);
            }
            let other = &den / &a.den;
            self.den = den;
            (!other.is_one()).then_some(other)
        };
        for (i, c) in a.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let slot = &mut self.full[(i + k) % p];
            match &scale {
                Some(s) => *slot += c * s,
                None => *slot += c,
            }
        }
    }

    pub(crate) fn finish(self) -> CycloNum {
        CycloNum::from_full(self.modulus, self.full, self.den)
    }
}
