//! Consequences of the additive support bound: zeros of sparse polynomials
//! at roots of unity, the Cauchy–Davenport inequality with a replayable
//! Fourier witness, and the support inequality on `(Z/pZ)^n`.

mod meshulam;
mod sparse;
mod sumset;

pub use meshulam::{meshulam_check, multi_dft, multi_idft, MeshulamReport, MeshulamTerm, MultiSignal};
pub use sparse::{sparse_zero_count, SparsePoly, SparseZeroReport};
pub use sumset::{
    cauchy_davenport_check, cd_proof_witness, select_fourier_supports, sumset, CdCheck, CdWitness,
    InequalityChain,
};
