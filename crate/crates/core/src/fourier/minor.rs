//! Square submatrices `(ω^{x_j ξ_k})` of the character table, with exact
//! determinants and solves by Gaussian elimination over `Q(ω)`.
//!
//! Every such minor is nonsingular when `p` is prime, so a missing pivot is
//! reported as a theorem violation rather than as an ordinary failure.

use serde::Serialize;

use super::support::SupportSet;
use crate::cyclotomic::{CycloNum, PrimeModulus};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FourierMinor {
    modulus: PrimeModulus,
    rows: SupportSet,
    cols: SupportSet,
    entries: Vec<Vec<CycloNum>>,
}

impl FourierMinor {
    /// The minor with row positions `rows` and column frequencies `cols`.
    pub fn new(modulus: PrimeModulus, rows: SupportSet, cols: SupportSet) -> Result<Self> {
        if rows.modulus() != modulus || cols.modulus() != modulus {
            let other = if rows.modulus() != modulus { rows.modulus() } else { cols.modulus() };
            return Err(Error::ModulusMismatch(modulus.get(), other.get()));
        }
        if rows.is_empty() || cols.is_empty() {
            return Err(Error::precondition("a minor needs at least one row and column"));
        }
        if rows.len() != cols.len() {
            return Err(Error::precondition(format!(
                "minor must be square: {} rows, {} columns",
                rows.len(),
                cols.len()
            )));
        }
        let p = modulus.get();
        let entries = rows
            .iter()
            .map(|x| {
                cols.iter()
                    .map(|xi| CycloNum::root_power(modulus, ((x * xi) % p) as i64))
                    .collect()
            })
            .collect();
        Ok(FourierMinor {
            modulus,
            rows,
            cols,
            entries,
        })
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn rows(&self) -> &SupportSet {
        &self.rows
    }

    pub fn cols(&self) -> &SupportSet {
        &self.cols
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn entries(&self) -> &[Vec<CycloNum>] {
        &self.entries
    }

    pub fn entry(&self, j: usize, k: usize) -> &CycloNum {
        &self.entries[j][k]
    }

    /// Exact determinant. Never zero for a valid minor.
    pub fn determinant(&self) -> Result<CycloNum> {
        determinant(self.entries.clone()).ok_or_else(|| {
            Error::violation(format!(
                "Fourier minor rows {} cols {} over Z/{}Z is singular",
                self.rows, self.cols, self.modulus
            ))
        })
    }

    /// The unique `c` with `M·c = rhs`.
    pub fn solve(&self, rhs: &[CycloNum]) -> Result<Vec<CycloNum>> {
        if rhs.len() != self.size() {
            return Err(Error::precondition(format!(
                "right-hand side has {} entries, minor has {} rows",
                rhs.len(),
                self.size()
            )));
        }
        if let Some(v) = rhs.iter().find(|v| v.modulus() != self.modulus) {
            return Err(Error::ModulusMismatch(self.modulus.get(), v.modulus().get()));
        }
        solve(self.entries.clone(), rhs.to_vec()).ok_or_else(|| {
            Error::violation(format!(
                "no pivot while solving against minor rows {} cols {}",
                self.rows, self.cols
            ))
        })
    }

    /// `M·c`, for residual checks.
    pub fn apply(&self, c: &[CycloNum]) -> Result<Vec<CycloNum>> {
        if c.len() != self.size() {
            return Err(Error::precondition("vector length does not match minor"));
        }
        Ok(self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .zip(c)
                    .fold(CycloNum::zero(self.modulus), |acc, (a, b)| &acc + &(a * b))
            })
            .collect())
    }
}

/// Eliminates below the diagonal in place, carrying `rhs` along. Returns the
/// number of row swaps, or `None` if some column has no nonzero pivot.
fn forward_eliminate(a: &mut [Vec<CycloNum>], mut rhs: Option<&mut Vec<CycloNum>>) -> Option<usize> {
    let n = a.len();
    let mut swaps = 0;
    for k in 0..n {
        let pivot = (k..n).find(|&r| !a[r][k].is_zero())?;
        if pivot != k {
            a.swap(pivot, k);
            if let Some(b) = rhs.as_deref_mut() {
                b.swap(pivot, k);
            }
            swaps += 1;
        }
        let inv = a[k][k].inverse().expect("pivot is nonzero");
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for (offset, row) in bottom.iter_mut().enumerate() {
            if row[k].is_zero() {
                continue;
            }
            let factor = &row[k] * &inv;
            for j in k + 1..n {
                if !pivot_row[j].is_zero() {
                    row[j] = &row[j] - &(&factor * &pivot_row[j]);
                }
            }
            row[k] = CycloNum::zero(row[k].modulus());
            if let Some(b) = rhs.as_deref_mut() {
                let i = k + 1 + offset;
                if !b[k].is_zero() {
                    b[i] = &b[i] - &(&factor * &b[k]);
                }
            }
        }
    }
    Some(swaps)
}

pub(crate) fn determinant(mut a: Vec<Vec<CycloNum>>) -> Option<CycloNum> {
    let swaps = forward_eliminate(&mut a, None)?;
    let det = a
        .iter()
        .enumerate()
        .skip(1)
        .fold(a[0][0].clone(), |acc, (i, row)| &acc * &row[i]);
    Some(if swaps % 2 == 1 { -det } else { det })
}

pub(crate) fn solve(mut a: Vec<Vec<CycloNum>>, mut b: Vec<CycloNum>) -> Option<Vec<CycloNum>> {
    forward_eliminate(&mut a, Some(&mut b))?;
    let n = a.len();
    let mut x: Vec<CycloNum> = Vec::with_capacity(n);
    for i in (0..n).rev() {
        // x is filled from the back: x[n-1-i'] holds the unknown i'
        let mut acc = b[i].clone();
        for j in i + 1..n {
            let xj = &x[n - 1 - j];
            if !a[i][j].is_zero() && !xj.is_zero() {
                acc = &acc - &(&a[i][j] * xj);
            }
        }
        x.push(&acc * &a[i][i].inverse().ok()?);
    }
    x.reverse();
    Some(x)
}

/// `Π_{k<k'} (ξ_k - ξ_{k'}) mod p`, the Vandermonde determinant of the
/// frequencies up to sign. Nonzero because the frequencies are distinct.
pub fn vandermonde_det_mod_p(cols: &SupportSet) -> Result<usize> {
    if cols.is_empty() {
        return Err(Error::precondition("need at least one frequency"));
    }
    let p = cols.modulus().get() as u128;
    let xs = cols.members();
    let mut prod: u128 = 1;
    for k in 0..xs.len() {
        for k2 in k + 1..xs.len() {
            let diff = (xs[k] as u128 + p - xs[k2] as u128) % p;
            prod = prod * diff % p;
        }
    }
    if prod == 0 {
        return Err(Error::violation(format!(
            "Vandermonde product of {cols} vanishes mod {p}"
        )));
    }
    Ok(prod as usize)
}
