//! Exact Fourier analysis on `Z/pZ`.
//!
//! The transform uses the normalization
//! `f̂(ξ) = (1/p) Σ_x f(x) ω^{-xξ}` and the inverse `f(x) = Σ_ξ f̂(ξ) ω^{xξ}`.
//! All sums are formed in the redundant length-`p` spanning set, where a
//! twiddle factor is only an index rotation.

mod minor;
mod support;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::cyclotomic::{CycloNum, PrimeModulus, RootSum};
use crate::{Error, Result};

pub use minor::{vandermonde_det_mod_p, FourierMinor};
pub use support::SupportSet;

/// A function `Z/pZ → Q(ω)`, stored as its table of `p` values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SignalFn {
    modulus: PrimeModulus,
    values: Vec<CycloNum>,
}

impl SignalFn {
    pub fn new(modulus: PrimeModulus, values: Vec<CycloNum>) -> Result<Self> {
        if values.len() != modulus.get() {
            return Err(Error::precondition(format!(
                "signal over Z/{modulus}Z needs {modulus} values, got {}",
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| v.modulus() != modulus) {
            return Err(Error::ModulusMismatch(modulus.get(), v.modulus().get()));
        }
        Ok(SignalFn { modulus, values })
    }

    pub fn zero(modulus: PrimeModulus) -> Self {
        SignalFn {
            modulus,
            values: vec![CycloNum::zero(modulus); modulus.get()],
        }
    }

    pub fn from_integers(modulus: PrimeModulus, values: &[i64]) -> Result<Self> {
        Self::new(
            modulus,
            values
                .iter()
                .map(|&v| CycloNum::from_integer(modulus, v))
                .collect(),
        )
    }

    /// Point mass of height one at `at`.
    pub fn dirac(modulus: PrimeModulus, at: usize) -> Self {
        let mut out = Self::zero(modulus);
        out.values[at % modulus.get()] = CycloNum::one(modulus);
        out
    }

    pub fn constant(modulus: PrimeModulus, value: CycloNum) -> Self {
        SignalFn {
            modulus,
            values: vec![value; modulus.get()],
        }
    }

    /// The character `x ↦ ω^{bx}`.
    pub fn character(modulus: PrimeModulus, b: usize) -> Self {
        SignalFn {
            modulus,
            values: (0..modulus.get())
                .map(|x| CycloNum::root_power(modulus, (b * x) as i64))
                .collect(),
        }
    }

    /// Function supported on `support` with the given values, in the order
    /// of the set's members.
    pub fn on_support(support: &SupportSet, values: Vec<CycloNum>) -> Result<Self> {
        if values.len() != support.len() {
            return Err(Error::precondition("one value per support element required"));
        }
        let mut out = Self::zero(support.modulus());
        for (x, v) in support.iter().zip(values) {
            out.values[x] = v;
        }
        Ok(out)
    }

    #[inline]
    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    #[inline]
    pub fn values(&self) -> &[CycloNum] {
        &self.values
    }

    #[inline]
    pub fn get(&self, x: usize) -> &CycloNum {
        &self.values[x % self.modulus.get()]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(CycloNum::is_zero)
    }

    /// `x ↦ f(x - a)`.
    pub fn translate(&self, a: usize) -> Self {
        let p = self.modulus.get();
        let a = a % p;
        SignalFn {
            modulus: self.modulus,
            values: (0..p).map(|x| self.values[(x + p - a) % p].clone()).collect(),
        }
    }

    /// `x ↦ f(x) ω^{bx}`.
    pub fn modulate(&self, b: usize) -> Self {
        SignalFn {
            modulus: self.modulus,
            values: self
                .values
                .iter()
                .enumerate()
                .map(|(x, v)| v.mul_root_power((b * x) as i64))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        self.map(|v| v.scale(factor))
    }

    pub fn scale_by(&self, factor: &CycloNum) -> Result<Self> {
        self.values
            .iter()
            .map(|v| v.checked_mul(factor))
            .collect::<Result<Vec<_>>>()
            .map(|values| SignalFn {
                modulus: self.modulus,
                values,
            })
    }

    pub fn conj(&self) -> Self {
        self.map(CycloNum::conj)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    /// Pointwise product.
    pub fn pointwise_mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a * b)
    }

    fn map(&self, f: impl Fn(&CycloNum) -> CycloNum) -> Self {
        SignalFn {
            modulus: self.modulus,
            values: self.values.iter().map(f).collect(),
        }
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&CycloNum, &CycloNum) -> CycloNum,
    ) -> Result<Self> {
        same_modulus(self.modulus, other.modulus)?;
        Ok(SignalFn {
            modulus: self.modulus,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }
}

pub(crate) fn same_modulus(a: PrimeModulus, b: PrimeModulus) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::ModulusMismatch(a.get(), b.get()))
    }
}

/// `Σ_x values[x] ω^{sign·xξ}` for every `ξ`.
fn character_sums(f: &SignalFn, sign: i64) -> Vec<CycloNum> {
    let m = f.modulus;
    let p = m.get();
    (0..p)
        .map(|xi| {
            let mut sum = RootSum::new(m);
            for (x, v) in f.values.iter().enumerate() {
                sum.add_term(v, m.reduce(sign * ((x * xi) % p) as i64));
            }
            sum.finish()
        })
        .collect()
}

/// `f̂(ξ) = (1/p) Σ_x f(x) ω^{-xξ}`, exactly.
pub fn dft(f: &SignalFn) -> SignalFn {
    let p = BigInt::from(f.modulus.get());
    SignalFn {
        modulus: f.modulus,
        values: character_sums(f, -1)
            .into_iter()
            .map(|v| v.div_int(&p).expect("p is nonzero"))
            .collect(),
    }
}

/// `f(x) = Σ_ξ F(ξ) ω^{xξ}`; inverse of [`dft`].
pub fn idft(spectrum: &SignalFn) -> SignalFn {
    SignalFn {
        modulus: spectrum.modulus,
        values: character_sums(spectrum, 1),
    }
}

/// Indices where the function is nonzero.
pub fn support(f: &SignalFn) -> SupportSet {
    SupportSet::from_sorted_unchecked(
        f.modulus,
        f.values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(x, _)| x)
            .collect(),
    )
}

/// `(f * g)(x) = Σ_y f(y) g(x - y)`.
pub fn convolve(f: &SignalFn, g: &SignalFn) -> Result<SignalFn> {
    same_modulus(f.modulus, g.modulus)?;
    let m = f.modulus;
    let p = m.get();
    let values = (0..p)
        .map(|x| {
            let mut acc = CycloNum::zero(m);
            for y in 0..p {
                let (a, b) = (&f.values[y], &g.values[(x + p - y) % p]);
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        })
        .collect();
    Ok(SignalFn { modulus: m, values })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: usize) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    #[test]
    fn dirac_and_constant_transforms() {
        let p5 = m(5);
        let fifth = CycloNum::from_rational(p5, &BigRational::new(1.into(), 5.into()));
        assert_eq!(dft(&SignalFn::dirac(p5, 0)), SignalFn::constant(p5, fifth));
        assert_eq!(
            dft(&SignalFn::constant(p5, CycloNum::one(p5))),
            SignalFn::dirac(p5, 0)
        );
    }

    #[test]
    fn dft_of_small_signal() {
        let p3 = m(3);
        let f = SignalFn::from_integers(p3, &[1, 2, 3]).unwrap();
        let fh = dft(&f);
        let w = |k| CycloNum::root_power(p3, k);
        let third = BigRational::new(1.into(), 3.into());
        let expect = |a: i64, b: i64, c: i64| {
            let s = &(&CycloNum::from_integer(p3, a) + &w(1).scale_int(&b.into()))
                + &w(2).scale_int(&c.into());
            s.scale(&third)
        };
        assert_eq!(fh.get(0).to_rational(), Some(BigRational::from_integer(2.into())));
        assert_eq!(fh.get(1), &expect(1, 3, 2));
        assert_eq!(fh.get(2), &expect(1, 2, 3));
    }

    #[test]
    fn inverse_examples() {
        let p7 = m(7);
        let d = SignalFn::dirac(p7, 3);
        assert_eq!(idft(&dft(&d)), d);
        assert_eq!(
            idft(&SignalFn::dirac(p7, 0)),
            SignalFn::constant(p7, CycloNum::one(p7))
        );
    }

    #[test]
    fn supports() {
        let p5 = m(5);
        assert!(support(&SignalFn::zero(p5)).is_empty());
        assert_eq!(support(&SignalFn::dirac(p5, 2)).members(), &[2]);
        let f = SignalFn::new(
            p5,
            (0..5)
                .map(|x| &CycloNum::one(p5) - &CycloNum::root_power(p5, x))
                .collect(),
        )
        .unwrap();
        assert_eq!(support(&f).members(), &[1, 2, 3, 4]);
    }

    #[test]
    fn convolution_examples() {
        let p5 = m(5);
        let d1 = SignalFn::dirac(p5, 1);
        assert_eq!(convolve(&d1, &d1).unwrap(), SignalFn::dirac(p5, 2));
        let g = SignalFn::from_integers(p5, &[3, -1, 0, 7, 2]).unwrap();
        assert_eq!(convolve(&SignalFn::dirac(p5, 0), &g).unwrap(), g);
        assert!(convolve(&g, &SignalFn::zero(m(3))).is_err());
    }

    #[test]
    fn modulation_translates_spectrum() {
        let p7 = m(7);
        let f = SignalFn::from_integers(p7, &[1, 0, 2, 0, 0, -1, 0]).unwrap();
        let fh = dft(&f);
        let gh = dft(&f.modulate(3));
        for xi in 0..7 {
            assert_eq!(gh.get(xi + 3), fh.get(xi));
        }
    }

    #[test]
    fn signal_validation() {
        let p3 = m(3);
        assert!(SignalFn::from_integers(p3, &[1, 2]).is_err());
        assert!(SignalFn::new(p3, vec![CycloNum::one(m(5)); 3]).is_err());
    }
}
