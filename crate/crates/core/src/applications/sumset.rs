use serde::Serialize;

use crate::fourier::{convolve, dft, same_modulus, support, SignalFn, SupportSet};
use crate::uncertainty::{construct_support_pair, ConstructOptions};
use crate::{Error, Result};

/// `A + B = {a + b : a ∈ A, b ∈ B}` in `Z/pZ`.
pub fn sumset(a: &SupportSet, b: &SupportSet) -> Result<SupportSet> {
    same_modulus(a.modulus(), b.modulus())?;
    let p = a.modulus().get();
    let mut hit = vec![false; p];
    for x in a.iter() {
        for y in b.iter() {
            hit[(x + y) % p] = true;
        }
    }
    SupportSet::new(a.modulus(), (0..p).filter(|&s| hit[s]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CdCheck {
    /// `|A + B|`.
    pub lhs: usize,
    /// `min(|A| + |B| - 1, p)`.
    pub rhs: usize,
    pub holds: bool,
}

/// `|A + B| ≥ min(|A| + |B| - 1, p)` for nonempty `A, B`.
pub fn cauchy_davenport_check(a: &SupportSet, b: &SupportSet) -> Result<CdCheck> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::precondition("Cauchy–Davenport needs nonempty sets"));
    }
    let lhs = sumset(a, b)?.len();
    let rhs = (a.len() + b.len() - 1).min(a.modulus().get());
    let check = CdCheck {
        lhs,
        rhs,
        holds: lhs >= rhs,
    };
    if !check.holds {
        return Err(Error::violation(format!("|{a} + {b}| = {lhs} < {rhs}")));
    }
    Ok(check)
}

/// The bookkeeping of the Fourier argument: the convolution is nonzero with
/// Fourier support `X ∩ Y`, so `|A + B| + |X ∩ Y| ≥ p + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InequalityChain {
    pub sumset_size: usize,
    pub conv_support_size: usize,
    pub intersection_size: usize,
    pub p_plus_one: usize,
    /// `|supp(f*g)| + |X ∩ Y| ≥ p + 1`.
    pub conv_bound_holds: bool,
    /// `p + 1 - |X ∩ Y|`, the lower bound for `|A + B|` this yields.
    pub implied_lower_bound: usize,
    /// `min(|A| + |B| - 1, p)`.
    pub cauchy_davenport_rhs: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CdWitness {
    pub a: SupportSet,
    pub b: SupportSet,
    pub x: SupportSet,
    pub y: SupportSet,
    pub f: SignalFn,
    pub g: SignalFn,
    pub conv: SignalFn,
    pub sumset: SupportSet,
    pub inequality_chain: InequalityChain,
}

/// Chooses `X, Y` with `|X| = p + 1 - |A|`, `|Y| = p + 1 - |B|` and
/// `|X ∩ Y| = max(|X| + |Y| - p, 1)`.
///
/// `X = {0, …, |X| - 1}` and `Y` is the run of `|Y|` consecutive residues
/// starting at `|X| - t`, where `t` is the required overlap. The run never
/// wraps, so it meets `X` in exactly `t` points.
pub fn select_fourier_supports(a: &SupportSet, b: &SupportSet) -> Result<(SupportSet, SupportSet)> {
    same_modulus(a.modulus(), b.modulus())?;
    if a.is_empty() || b.is_empty() {
        return Err(Error::precondition("A and B must be nonempty"));
    }
    let m = a.modulus();
    let p = m.get();
    let x_len = p + 1 - a.len();
    let y_len = p + 1 - b.len();
    let overlap = (x_len + y_len).saturating_sub(p).max(1);
    let start = x_len - overlap;
    debug_assert!(start + y_len <= p);
    let x = SupportSet::prefix(m, x_len);
    let y = SupportSet::new(m, start..start + y_len)?;
    Ok((x, y))
}

/// Replays the Fourier proof of Cauchy–Davenport for `A, B` and checks
/// every step exactly.
pub fn cd_proof_witness(
    a: &SupportSet,
    b: &SupportSet,
    options: &ConstructOptions,
) -> Result<CdWitness> {
    let (x, y) = select_fourier_supports(a, b)?;
    let p = a.modulus().get();
    let intersection = x.intersection(&y);
    if x.len() != p + 1 - a.len()
        || y.len() != p + 1 - b.len()
        || intersection.len() != (x.len() + y.len()).saturating_sub(p).max(1)
    {
        return Err(Error::violation(format!(
            "selected X = {x}, Y = {y} do not have the required sizes"
        )));
    }

    let f = construct_support_pair(a, &x, options)?.f;
    let g = construct_support_pair(b, &y, options)?.f;
    let conv = convolve(&f, &g)?;
    let sums = sumset(a, b)?;

    let conv_support = support(&conv);
    let conv_spectrum = support(&dft(&conv));
    if conv_spectrum != intersection {
        return Err(Error::violation(format!(
            "f*g has Fourier support {conv_spectrum}, expected X ∩ Y = {intersection}"
        )));
    }
    if !conv_support.is_subset(&sums) {
        return Err(Error::violation(format!(
            "f*g has support {conv_support} outside A + B = {sums}"
        )));
    }

    let cd_rhs = (a.len() + b.len() - 1).min(p);
    let implied = p + 1 - intersection.len();
    let chain = InequalityChain {
        sumset_size: sums.len(),
        conv_support_size: conv_support.len(),
        intersection_size: intersection.len(),
        p_plus_one: p + 1,
        conv_bound_holds: conv_support.len() + intersection.len() > p,
        implied_lower_bound: implied,
        cauchy_davenport_rhs: cd_rhs,
        holds: sums.len() >= implied && implied >= cd_rhs,
    };
    if !chain.conv_bound_holds || !chain.holds {
        return Err(Error::violation(format!("inequality chain broken: {chain:?}")));
    }
    Ok(CdWitness {
        a: a.clone(),
        b: b.clone(),
        x,
        y,
        f,
        g,
        conv,
        sumset: sums,
        inequality_chain: chain,
    })
}
