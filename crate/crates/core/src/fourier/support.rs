use std::fmt;

use serde::{Serialize, Serializer};

use crate::cyclotomic::PrimeModulus;
use crate::{Error, Result};

/// A subset of `Z/pZ`, kept sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SupportSet {
    modulus: PrimeModulus,
    members: Vec<usize>,
}

impl SupportSet {
    /// Builds a set from residues in any order. Duplicates and residues
    /// outside `0..p` are rejected.
    pub fn new(modulus: PrimeModulus, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        if let Some(&x) = members.iter().find(|&&x| x >= modulus.get()) {
            return Err(Error::precondition(format!(
                "residue {x} is not in Z/{modulus}Z"
            )));
        }
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::precondition(format!("residue {} repeated", w[0])));
        }
        Ok(SupportSet { modulus, members })
    }

    pub(crate) fn from_sorted_unchecked(modulus: PrimeModulus, members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.iter().all(|&x| x < modulus.get()));
        SupportSet { modulus, members }
    }

    pub fn empty(modulus: PrimeModulus) -> Self {
        SupportSet {
            modulus,
            members: Vec::new(),
        }
    }

    pub fn full(modulus: PrimeModulus) -> Self {
        SupportSet {
            modulus,
            members: (0..modulus.get()).collect(),
        }
    }

    /// The residues `{0, …, len-1}`.
    pub fn prefix(modulus: PrimeModulus, len: usize) -> Self {
        SupportSet {
            modulus,
            members: (0..len.min(modulus.get())).collect(),
        }
    }

    /// Set whose members are the set bits of `mask`.
    pub fn from_mask(modulus: PrimeModulus, mask: u64) -> Self {
        SupportSet {
            modulus,
            members: (0..modulus.get().min(64))
                .filter(|&i| mask >> i & 1 == 1)
                .collect(),
        }
    }

    pub fn to_mask(&self) -> Option<u64> {
        (self.modulus.get() <= 64).then(|| self.members.iter().fold(0u64, |m, &x| m | 1 << x))
    }

    #[inline]
    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    #[inline]
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn first(&self) -> Option<usize> {
        self.members.first().copied()
    }

    pub fn complement(&self) -> Self {
        SupportSet {
            modulus: self.modulus,
            members: (0..self.modulus.get()).filter(|&x| !self.contains(x)).collect(),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        SupportSet {
            modulus: self.modulus,
            members: self.iter().filter(|&x| other.contains(x)).collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut members: Vec<usize> = self.iter().chain(other.iter()).collect();
        members.sort_unstable();
        members.dedup();
        SupportSet {
            modulus: self.modulus,
            members,
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.iter().all(|x| other.contains(x))
    }

    /// `self + {a}`.
    pub fn translate(&self, a: usize) -> Self {
        let p = self.modulus.get();
        let mut members: Vec<usize> = self.iter().map(|x| (x + a) % p).collect();
        members.sort_unstable();
        SupportSet {
            modulus: self.modulus,
            members,
        }
    }

    /// `{-x : x ∈ self}`.
    pub fn negate(&self) -> Self {
        let p = self.modulus.get();
        let mut members: Vec<usize> = self.iter().map(|x| (p - x) % p).collect();
        members.sort_unstable();
        SupportSet {
            modulus: self.modulus,
            members,
        }
    }

    /// The first `len` members.
    pub fn take(&self, len: usize) -> Self {
        SupportSet {
            modulus: self.modulus,
            members: self.members[..len.min(self.len())].to_vec(),
        }
    }
}

impl fmt::Display for SupportSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for SupportSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.members.serialize(s)
    }
}
