use num_bigint::BigInt;
use serde::Serialize;

use crate::cyclotomic::{CycloNum, PrimeModulus, RootSum};
use crate::{Error, Result};

/// A function on `(Z/pZ)^n`, stored as a dense table of `p^n` values.
///
/// The point `(x_1, …, x_n)` lives at index `Σ x_i p^{n-1-i}`, so the last
/// coordinate varies fastest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiSignal {
    modulus: PrimeModulus,
    dim: usize,
    values: Vec<CycloNum>,
}

/// Table sizes above this are refused.
const MAX_TABLE: usize = 1 << 24;

fn table_size(p: PrimeModulus, dim: usize) -> Result<usize> {
    if dim == 0 {
        return Err(Error::precondition("dimension must be at least 1"));
    }
    (0..dim)
        .try_fold(1usize, |acc, _| acc.checked_mul(p.get()))
        .filter(|&n| n <= MAX_TABLE)
        .ok_or_else(|| Error::precondition(format!("table of {p}^{dim} values is too large")))
}

impl MultiSignal {
    pub fn zero(modulus: PrimeModulus, dim: usize) -> Result<Self> {
        let len = table_size(modulus, dim)?;
        Ok(MultiSignal {
            modulus,
            dim,
            values: vec![CycloNum::zero(modulus); len],
        })
    }

    pub fn new(modulus: PrimeModulus, dim: usize, values: Vec<CycloNum>) -> Result<Self> {
        let len = table_size(modulus, dim)?;
        if values.len() != len {
            return Err(Error::precondition(format!(
                "expected {len} values on (Z/{modulus}Z)^{dim}, got {}",
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| v.modulus() != modulus) {
            return Err(Error::ModulusMismatch(modulus.get(), v.modulus().get()));
        }
        Ok(MultiSignal { modulus, dim, values })
    }

    pub fn from_integers(modulus: PrimeModulus, dim: usize, values: &[i64]) -> Result<Self> {
        Self::new(
            modulus,
            dim,
            values.iter().map(|&v| CycloNum::from_integer(modulus, v)).collect(),
        )
    }

    /// Table built from `f(point)`.
    pub fn from_fn(
        modulus: PrimeModulus,
        dim: usize,
        mut f: impl FnMut(&[usize]) -> CycloNum,
    ) -> Result<Self> {
        let mut out = Self::zero(modulus, dim)?;
        for i in 0..out.values.len() {
            let point = out.point(i);
            out.values[i] = f(&point);
        }
        Ok(out)
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn values(&self) -> &[CycloNum] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn index(&self, point: &[usize]) -> Result<usize> {
        if point.len() != self.dim {
            return Err(Error::precondition(format!(
                "point has {} coordinates, expected {}",
                point.len(),
                self.dim
            )));
        }
        let p = self.modulus.get();
        point.iter().try_fold(0usize, |acc, &x| {
            if x >= p {
                Err(Error::precondition(format!("coordinate {x} is not below p = {p}")))
            } else {
                Ok(acc * p + x)
            }
        })
    }

    pub fn point(&self, mut index: usize) -> Vec<usize> {
        let p = self.modulus.get();
        let mut out = vec![0; self.dim];
        for slot in out.iter_mut().rev() {
            *slot = index % p;
            index /= p;
        }
        out
    }

    pub fn get(&self, point: &[usize]) -> Result<&CycloNum> {
        Ok(&self.values[self.index(point)?])
    }

    pub fn set(&mut self, point: &[usize], value: CycloNum) -> Result<()> {
        let i = self.index(point)?;
        if value.modulus() != self.modulus {
            return Err(Error::ModulusMismatch(self.modulus.get(), value.modulus().get()));
        }
        self.values[i] = value;
        Ok(())
    }

    pub fn support_size(&self) -> usize {
        self.values.iter().filter(|v| !v.is_zero()).count()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(CycloNum::is_zero)
    }
}

/// Applies `v ↦ Σ_x v(x) ω^{sign·xξ}` along every axis in turn.
fn separable_sums(f: &MultiSignal, sign: i64) -> Vec<CycloNum> {
    let m = f.modulus;
    let p = m.get();
    let mut values = f.values.clone();
    let mut stride = 1;
    for _ in 0..f.dim {
        let block = stride * p;
        let mut next = values.clone();
        for base in (0..values.len()).step_by(block) {
            for offset in 0..stride {
                let fiber = |x: usize| base + offset + x * stride;
                for xi in 0..p {
                    let mut sum = RootSum::new(m);
                    for x in 0..p {
                        sum.add_term(&values[fiber(x)], m.reduce(sign * ((x * xi) % p) as i64));
                    }
                    next[fiber(xi)] = sum.finish();
                }
            }
        }
        values = next;
        stride = block;
    }
    values
}

/// `F̂(ξ) = p^{-n} Σ_x F(x) ω^{-x·ξ}`, computed one axis at a time.
pub fn multi_dft(f: &MultiSignal) -> MultiSignal {
    let scale = (0..f.dim).fold(BigInt::from(1), |acc, _| acc * f.modulus.get());
    MultiSignal {
        modulus: f.modulus,
        dim: f.dim,
        values: separable_sums(f, -1)
            .into_iter()
            .map(|v| v.div_int(&scale).expect("p^n is nonzero"))
            .collect(),
    }
}

/// `F(x) = Σ_ξ F̂(ξ) ω^{x·ξ}`; inverse of [`multi_dft`].
pub fn multi_idft(spectrum: &MultiSignal) -> MultiSignal {
    MultiSignal {
        modulus: spectrum.modulus,
        dim: spectrum.dim,
        values: separable_sums(spectrum, 1),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MeshulamTerm {
    pub j: usize,
    /// `p^j |supp F| + p^{n-j-1} |supp F̂|`.
    pub lhs: u128,
    /// `p^n + p^{n-1}`.
    pub rhs: u128,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MeshulamReport {
    pub support_size: usize,
    pub fourier_support_size: usize,
    pub per_j: Vec<MeshulamTerm>,
    /// Whether `(|supp F|, |supp F̂|)` lies on or above the lower convex hull
    /// of the subgroup points `(p^j, p^{n-j})`.
    pub hull_ok: bool,
}

impl MeshulamReport {
    pub fn all_hold(&self) -> bool {
        self.hull_ok && self.per_j.iter().all(|t| t.holds)
    }
}

/// Measures both supports of a nonzero `F` on `(Z/pZ)^n` and evaluates
/// `p^j |supp F| + p^{n-j-1} |supp F̂| ≥ p^n + p^{n-1}` for every `j`, plus
/// the convex-hull form of the same statement.
pub fn meshulam_check(f: &MultiSignal) -> Result<MeshulamReport> {
    if f.is_zero() {
        return Err(Error::precondition("the zero function has empty support"));
    }
    let s = f.support_size();
    let s_hat = multi_dft(f).support_size();
    let p = f.modulus.get() as u128;
    let n = f.dim as u32;
    let pow = |e: u32| p.pow(e);
    let rhs = pow(n) + pow(n - 1);
    let per_j = (0..n)
        .map(|j| {
            let lhs = pow(j) * s as u128 + pow(n - j - 1) * s_hat as u128;
            MeshulamTerm {
                j: j as usize,
                lhs,
                rhs,
                holds: lhs >= rhs,
            }
        })
        .collect();
    Ok(MeshulamReport {
        support_size: s,
        fourier_support_size: s_hat,
        per_j,
        hull_ok: above_subgroup_hull(p, n, s as u128, s_hat as u128),
    })
}

/// Interpolates the hull between the two vertices bracketing `s` and compares
/// in integers: on `[p^j, p^{j+1}]` the hull height `h` satisfies
/// `h (p^{j+1} - p^j) = p^{n-j} (p^{j+1} - s) + p^{n-j-1} (s - p^j)`.
fn above_subgroup_hull(p: u128, n: u32, s: u128, s_hat: u128) -> bool {
    if s < 1 || s > p.pow(n) {
        return false;
    }
    if s == p.pow(n) {
        return s_hat >= 1;
    }
    let j = (0..n).find(|&j| p.pow(j) <= s && s <= p.pow(j + 1)).expect("1 ≤ s < p^n");
    let (lo, hi) = (p.pow(j), p.pow(j + 1));
    let height = p.pow(n - j) * (hi - s) + p.pow(n - j - 1) * (s - lo);
    s_hat * (hi - lo) >= height
}
