//! The additive support bound on `Z/pZ` and its converse.
//!
//! Forward: a nonzero `f` satisfies `|supp f| + |supp f̂| ≥ p + 1`. Converse:
//! every pair of nonempty sets `A, B` with `|A| + |B| ≥ p + 1` is realized as
//! `(supp f, supp f̂)` by some `f`, which [`construct_support_pair`] builds
//! explicitly and verifies with exact arithmetic.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cyclotomic::{CycloNum, PrimeModulus};
use crate::fourier::{dft, support, FourierMinor, SignalFn, SupportSet};
use crate::subsets::{all_masks, binomial, masks_of_size};
use crate::{Error, Result};

/// Coefficients of generic combinations are drawn from `1..=COMBINATION_RANGE`.
pub const COMBINATION_RANGE: u64 = 1 << 16;
pub const DEFAULT_MAX_ATTEMPTS: u32 = 32;
pub const DEFAULT_SEED: u64 = 0;
/// Default cap on the number of individual checks in
/// [`exhaustive_certification`]; admits every `p ≤ 7`.
pub const DEFAULT_BUDGET: u128 = 50_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UncertaintyReport {
    pub p: PrimeModulus,
    pub supp_f: SupportSet,
    pub supp_fhat: SupportSet,
    pub sum: usize,
    pub product: usize,
    pub additive_bound_holds: bool,
    pub product_bound_holds: bool,
}

/// Computes both supports of a nonzero `f` and checks
/// `|supp f| + |supp f̂| ≥ p + 1` and `|supp f|·|supp f̂| ≥ p`.
pub fn verify_uncertainty(f: &SignalFn) -> Result<UncertaintyReport> {
    let supp_f = support(f);
    if supp_f.is_empty() {
        return Err(Error::precondition("the zero function has no uncertainty bound"));
    }
    let supp_fhat = support(&dft(f));
    let p = f.modulus();
    let sum = supp_f.len() + supp_fhat.len();
    let product = supp_f.len() * supp_fhat.len();
    let report = UncertaintyReport {
        p,
        sum,
        product,
        additive_bound_holds: sum > p.get(),
        product_bound_holds: product >= p.get(),
        supp_f,
        supp_fhat,
    };
    if !report.additive_bound_holds || !report.product_bound_holds {
        return Err(Error::violation(format!(
            "supports {} and {} break the bound over Z/{p}Z",
            report.supp_f, report.supp_fhat
        )));
    }
    Ok(report)
}

/// How the generic combination stage of [`construct_support_pair`] ran.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Combination {
    pub seed: u64,
    /// Number of coefficient draws, the successful one included.
    pub attempts: u32,
    /// The `(A', B')` pairs whose witnesses were combined.
    pub family: Vec<(SupportSet, SupportSet)>,
    /// The coefficients of the successful draw, one per family member.
    pub coefficients: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AchievabilityWitness {
    pub target_a: SupportSet,
    pub target_b: SupportSet,
    pub f: SignalFn,
    /// Frequencies where `f̂` was prescribed; set when `|A| + |B| = p + 1`.
    pub tilde_a: Option<SupportSet>,
    pub combination: Option<Combination>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructOptions {
    pub seed: u64,
    pub max_attempts: u32,
}

impl Default for ConstructOptions {
    fn default() -> Self {
        ConstructOptions {
            seed: DEFAULT_SEED,
            max_attempts: DEFAULT_MAX_ATTEMPTS,
        }
    }
}

fn check_pair(a: &SupportSet, b: &SupportSet) -> Result<PrimeModulus> {
    let p = a.modulus();
    if b.modulus() != p {
        return Err(Error::ModulusMismatch(p.get(), b.modulus().get()));
    }
    if a.is_empty() || b.is_empty() {
        return Err(Error::precondition("support sets must be nonempty"));
    }
    Ok(p)
}

fn verify_witness(f: &SignalFn, a: &SupportSet, b: &SupportSet) -> bool {
    support(f) == *a && support(&dft(f)) == *b
}

/// Witness for `|A| + |B| = p + 1`.
///
/// With `ξ = min B` and `Ã = (Z/pZ ∖ B) ∪ {ξ}`, solves for the `f` supported
/// on `A` whose transform vanishes on `Ã ∖ {ξ}` and equals one at `ξ`. The
/// forward bound then forces `supp f = A` and `supp f̂ = B`, which is
/// re-checked exactly.
pub fn construct_exact_pair(a: &SupportSet, b: &SupportSet) -> Result<AchievabilityWitness> {
    let p = check_pair(a, b)?;
    if a.len() + b.len() != p.get() + 1 {
        return Err(Error::precondition(format!(
            "|A| + |B| = {} but p + 1 = {}",
            a.len() + b.len(),
            p.get() + 1
        )));
    }
    let xi = b.first().expect("B is nonempty");
    let tilde_a = b
        .complement()
        .union(&SupportSet::new(p, [xi]).expect("ξ < p"));
    debug_assert_eq!(tilde_a.len(), a.len());

    // Rows are frequencies, columns positions: Σ_{x∈A} ω^{ξx} c_x = [ξ = ξ0].
    // The transform uses ω^{-ξx}/p, so f = p · conj(c).
    let minor = FourierMinor::new(p, tilde_a.clone(), a.clone())?;
    let rhs: Vec<CycloNum> = tilde_a
        .iter()
        .map(|t| {
            if t == xi {
                CycloNum::one(p)
            } else {
                CycloNum::zero(p)
            }
        })
        .collect();
    let c = minor.solve(&rhs)?;
    let scale = BigInt::from(p.get());
    let values = c.iter().map(|v| v.conj().scale_int(&scale)).collect();
    let f = SignalFn::on_support(a, values)?;

    if !verify_witness(&f, a, b) {
        return Err(Error::violation(format!(
            "solved witness for A = {a}, B = {b} has supports {} and {}",
            support(&f),
            support(&dft(&f))
        )));
    }
    Ok(AchievabilityWitness {
        target_a: a.clone(),
        target_b: b.clone(),
        f,
        tilde_a: Some(tilde_a),
        combination: None,
    })
}

/// Consecutive windows of `size` elements over the sorted members of `set`,
/// wrapping around, enough of them to cover the set.
fn covering_windows(set: &SupportSet, size: usize) -> Vec<SupportSet> {
    let xs = set.members();
    let count = xs.len().div_ceil(size);
    (0..count)
        .map(|i| {
            let start = i * size;
            SupportSet::new(set.modulus(), (0..size).map(|t| xs[(start + t) % xs.len()]))
                .expect("window of distinct members")
        })
        .collect()
}

/// Pairs `(A'_i, B'_i)` with `A'_i ⊆ A`, `B'_i ⊆ B`, `|A'_i| + |B'_i| = p + 1`,
/// whose union covers `A` and `B`.
pub fn covering_family(a: &SupportSet, b: &SupportSet) -> Vec<(SupportSet, SupportSet)> {
    let p = a.modulus().get();
    let a_size = (p + 1).saturating_sub(b.len()).max(1);
    let b_size = p + 1 - a_size;
    let a_windows = covering_windows(a, a_size);
    let b_windows = covering_windows(b, b_size);
    let count = a_windows.len().max(b_windows.len());
    (0..count)
        .map(|i| {
            (
                a_windows[i % a_windows.len()].clone(),
                b_windows[i % b_windows.len()].clone(),
            )
        })
        .collect()
}

/// Witness for any nonempty `A, B` with `|A| + |B| ≥ p + 1`.
///
/// The boundary case is delegated to [`construct_exact_pair`]. Otherwise
/// witnesses for a covering family of boundary pairs are combined with seeded
/// random integer weights until the combination has exactly the target
/// supports.
pub fn construct_support_pair(
    a: &SupportSet,
    b: &SupportSet,
    options: &ConstructOptions,
) -> Result<AchievabilityWitness> {
    let p = check_pair(a, b)?;
    let total = a.len() + b.len();
    if total < p.get() + 1 {
        return Err(Error::precondition(format!(
            "|A| + |B| = {total} is below p + 1 = {}; no such function exists",
            p.get() + 1
        )));
    }
    if total == p.get() + 1 {
        return construct_exact_pair(a, b);
    }

    let family = covering_family(a, b);
    let parts = family
        .iter()
        .map(|(a2, b2)| construct_exact_pair(a2, b2).map(|w| w.f))
        .collect::<Result<Vec<_>>>()?;

    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    for attempt in 1..=options.max_attempts {
        let coefficients: Vec<u64> = (0..parts.len())
            .map(|_| rng.random_range(1..=COMBINATION_RANGE))
            .collect();
        let f = parts
            .iter()
            .zip(&coefficients)
            .fold(SignalFn::zero(p), |acc, (part, &lambda)| {
                let term = SignalFn::new(
                    p,
                    part.values()
                        .iter()
                        .map(|v| v.scale_int(&BigInt::from(lambda)))
                        .collect(),
                )
                .expect("same modulus");
                acc.checked_add(&term).expect("same modulus")
            });
        if verify_witness(&f, a, b) {
            return Ok(AchievabilityWitness {
                target_a: a.clone(),
                target_b: b.clone(),
                f,
                tilde_a: None,
                combination: Some(Combination {
                    seed: options.seed,
                    attempts: attempt,
                    family,
                    coefficients,
                }),
            });
        }
    }
    Err(Error::BudgetExceeded(format!(
        "no combination with supports A = {a}, B = {b} after {} attempts (seed {})",
        options.max_attempts, options.seed
    )))
}

/// Certifies that no nonzero `f` has `supp f ⊆ A` and `supp f̂ ⊆ B` when
/// `|A| + |B| ≤ p`.
///
/// Takes `Ã` as the first `|A|` residues outside `B`; the transform
/// restricted to `Ã` is injective on functions supported in `A` because the
/// minor on positions `A` and frequencies `Ã` is nonsingular.
pub fn certify_tightness(p: PrimeModulus, a: &SupportSet, b: &SupportSet) -> Result<bool> {
    if a.modulus() != p || b.modulus() != p {
        return Err(Error::ModulusMismatch(p.get(), a.modulus().get().max(b.modulus().get())));
    }
    if a.is_empty() {
        return Err(Error::precondition("A must be nonempty"));
    }
    if a.len() + b.len() > p.get() {
        return Err(Error::precondition(format!(
            "|A| + |B| = {} exceeds p = {p}",
            a.len() + b.len()
        )));
    }
    let tilde_a = b.complement().take(a.len());
    let det = FourierMinor::new(p, a.clone(), tilde_a)?.determinant()?;
    Ok(!det.is_zero())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Minor,
    Tightness,
    Achievability,
}

/// One instance checked by [`exhaustive_certification`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub kind: CheckKind,
    /// Rows of the minor, or `A`.
    pub first: SupportSet,
    /// Columns of the minor, or `B`.
    pub second: SupportSet,
    pub passed: bool,
    /// Coefficient draws used by an achievability check (0 when no
    /// combination stage ran).
    pub attempts: u32,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificationSummary {
    pub p: PrimeModulus,
    pub minors_checked: usize,
    /// Minor counts indexed by size `n - 1`.
    pub minors_by_size: Vec<usize>,
    pub tightness_checked: usize,
    pub achievability_checked: usize,
    /// Achievability checks that needed the combination stage.
    pub combinations_used: usize,
    /// Combination stages that needed more than one draw.
    pub retries_used: usize,
    pub failures: Vec<String>,
    #[serde(skip)]
    pub records: Vec<CheckRecord>,
}

impl CertificationSummary {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertifyOptions {
    /// Upper bound on the number of individual checks.
    pub budget: u128,
    pub construct: ConstructOptions,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            budget: DEFAULT_BUDGET,
            construct: ConstructOptions::default(),
        }
    }
}

/// Number of checks [`exhaustive_certification`] performs for `p`:
/// `C(2p, p) - 1` minors plus one check per pair `(A, B)` with `A` nonempty.
pub fn certification_workload(p: PrimeModulus) -> u128 {
    let p = p.get() as u128;
    if p >= 100 {
        return u128::MAX;
    }
    let minors = binomial(2 * p, p) - 1;
    let pairs = ((1u128 << p) - 1) << p;
    minors.saturating_add(pairs)
}

/// Exhaustively checks, for one `p`: every equal-size minor is nonsingular;
/// tightness for every `(A, B)` with `|A| + |B| ≤ p`; achievability for every
/// nonempty `(A, B)` with `|A| + |B| ≥ p + 1`.
///
/// Instances are checked in parallel; records come back in a fixed canonical
/// order regardless of scheduling.
pub fn exhaustive_certification(
    p: PrimeModulus,
    options: &CertifyOptions,
) -> Result<CertificationSummary> {
    let work = certification_workload(p);
    if work > options.budget {
        return Err(Error::BudgetExceeded(format!(
            "p = {p} needs {work} checks, budget is {}",
            options.budget
        )));
    }
    let n = p.get();

    let minor_tasks: Vec<(u64, u64)> = (1..=n)
        .flat_map(|size| {
            masks_of_size(n, size)
                .flat_map(move |r| masks_of_size(n, size).map(move |c| (r, c)))
        })
        .collect();
    let mut records: Vec<CheckRecord> = minor_tasks
        .par_iter()
        .map(|&(r, c)| {
            let rows = SupportSet::from_mask(p, r);
            let cols = SupportSet::from_mask(p, c);
            let outcome = FourierMinor::new(p, rows.clone(), cols.clone())
                .and_then(|m| m.determinant());
            record(CheckKind::Minor, rows, cols, outcome.map(|_| 0))
        })
        .collect();

    let pair_tasks: Vec<(u64, u64)> = all_masks(n)
        .skip(1)
        .flat_map(|a| all_masks(n).map(move |b| (a, b)))
        .collect();
    let pair_records: Vec<CheckRecord> = pair_tasks
        .par_iter()
        .map(|&(am, bm)| {
            let a = SupportSet::from_mask(p, am);
            let b = SupportSet::from_mask(p, bm);
            if a.len() + b.len() <= n {
                let outcome = certify_tightness(p, &a, &b).and_then(|ok| {
                    if ok {
                        Ok(0)
                    } else {
                        Err(Error::violation("tightness certificate failed"))
                    }
                });
                record(CheckKind::Tightness, a, b, outcome)
            } else {
                let outcome = construct_support_pair(&a, &b, &options.construct)
                    .map(|w| w.combination.map_or(0, |c| c.attempts));
                record(CheckKind::Achievability, a, b, outcome)
            }
        })
        .collect();
    records.extend(pair_records);

    let mut summary = CertificationSummary {
        p,
        minors_checked: 0,
        minors_by_size: vec![0; n],
        tightness_checked: 0,
        achievability_checked: 0,
        combinations_used: 0,
        retries_used: 0,
        failures: Vec::new(),
        records: Vec::new(),
    };
    for r in &records {
        match r.kind {
            CheckKind::Minor => {
                summary.minors_checked += 1;
                summary.minors_by_size[r.first.len() - 1] += 1;
            }
            CheckKind::Tightness => summary.tightness_checked += 1,
            CheckKind::Achievability => {
                summary.achievability_checked += 1;
                summary.combinations_used += usize::from(r.attempts > 0);
                summary.retries_used += usize::from(r.attempts > 1);
            }
        }
        if !r.passed {
            summary.failures.push(format!(
                "{:?} {} {}: {}",
                r.kind,
                r.first,
                r.second,
                r.detail.as_deref().unwrap_or("failed")
            ));
        }
    }
    summary.records = records;
    Ok(summary)
}

fn record(kind: CheckKind, first: SupportSet, second: SupportSet, outcome: Result<u32>) -> CheckRecord {
    match outcome {
        Ok(attempts) => CheckRecord {
            kind,
            first,
            second,
            passed: true,
            attempts,
            detail: None,
        },
        Err(e) => CheckRecord {
            kind,
            first,
            second,
            passed: false,
            attempts: 0,
            detail: Some(e.to_string()),
        },
    }
}
