use serde::Serialize;

use crate::cyclotomic::{CycloNum, PrimeModulus, RootSum};
use crate::fourier::SupportSet;
use crate::{Error, Result};

/// `Σ_j c_j z^{n_j}` with distinct exponents `0 ≤ n_j < p` and nonzero
/// coefficients in `Q(ω)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SparsePoly {
    modulus: PrimeModulus,
    terms: Vec<(usize, CycloNum)>,
}

impl SparsePoly {
    pub fn new(modulus: PrimeModulus, mut terms: Vec<(usize, CycloNum)>) -> Result<Self> {
        if terms.is_empty() || terms.len() > modulus.get() {
            return Err(Error::precondition(format!(
                "a sparse polynomial over Z/{modulus}Z needs between 1 and {modulus} terms"
            )));
        }
        terms.sort_by_key(|(e, _)| *e);
        for (e, c) in &terms {
            if *e >= modulus.get() {
                return Err(Error::precondition(format!("exponent {e} is not below p = {modulus}")));
            }
            if c.modulus() != modulus {
                return Err(Error::ModulusMismatch(modulus.get(), c.modulus().get()));
            }
            if c.is_zero() {
                return Err(Error::precondition(format!("coefficient of z^{e} is zero")));
            }
        }
        if let Some(w) = terms.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::precondition(format!("exponent {} repeated", w[0].0)));
        }
        Ok(SparsePoly { modulus, terms })
    }

    pub fn from_integers(modulus: PrimeModulus, terms: &[(usize, i64)]) -> Result<Self> {
        Self::new(
            modulus,
            terms
                .iter()
                .map(|&(e, c)| (e, CycloNum::from_integer(modulus, c)))
                .collect(),
        )
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn terms(&self) -> &[(usize, CycloNum)] {
        &self.terms
    }

    /// Exact value at `ω^t`.
    pub fn eval_at_root(&self, t: usize) -> CycloNum {
        let p = self.modulus.get();
        let mut sum = RootSum::new(self.modulus);
        for (e, c) in &self.terms {
            sum.add_term(c, e * (t % p) % p);
        }
        sum.finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SparseZeroReport {
    /// The `t` with `P(ω^t) = 0`.
    pub zeros: SupportSet,
    pub term_count: usize,
    pub bound_holds: bool,
}

/// Finds every `p`-th root of unity where `P` vanishes; a polynomial with
/// `k + 1` terms has at most `k` of them.
pub fn sparse_zero_count(poly: &SparsePoly) -> Result<SparseZeroReport> {
    let p = poly.modulus;
    let zeros: Vec<usize> = (0..p.get())
        .filter(|&t| poly.eval_at_root(t).is_zero())
        .collect();
    let term_count = poly.terms.len();
    let report = SparseZeroReport {
        bound_holds: zeros.len() < term_count,
        zeros: SupportSet::new(p, zeros)?,
        term_count,
    };
    if !report.bound_holds {
        return Err(Error::violation(format!(
            "polynomial with {term_count} terms vanishes at {} roots of unity of order {p}",
            report.zeros.len()
        )));
    }
    Ok(report)
}
