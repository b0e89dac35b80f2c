//! Exact Fourier analysis on the cyclic group `Z/pZ` of prime order.
//!
//! Every value lives in the cyclotomic field `Q(ω)`, `ω = e^{2πi/p}`, and is
//! stored canonically, so "is this entry zero?" is always answered exactly.
//! On top of that arithmetic the crate provides:
//!
//! * [`cyclotomic`]: the field `Q(ω)`, plus the root-of-unity divisibility
//!   check for integer polynomials.
//! * [`fourier`]: transform, inverse, convolution, supports, Fourier-matrix
//!   minors with exact determinants and solves.
//! * [`uncertainty`]: the additive support bound `|supp f| + |supp f̂| ≥ p + 1`,
//!   tightness certificates and constructive witnesses for every admissible
//!   support pair.
//! * [`applications`]: zeros of sparse polynomials at roots of unity,
//!   Cauchy–Davenport with a replayable Fourier witness, and the support
//!   bound on `(Z/pZ)^n`.

pub mod applications;
pub mod cyclotomic;
mod error;
pub mod fourier;
pub(crate) mod subsets;
pub mod uncertainty;

pub use cyclotomic::{CycloNum, PrimeModulus};
pub use error::{Error, ErrorKind, Result};
pub use fourier::{FourierMinor, SignalFn, SupportSet};
