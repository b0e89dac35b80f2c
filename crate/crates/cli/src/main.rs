mod report;
mod values;

use std::io;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use primefourier::applications::{
    cauchy_davenport_check, cd_proof_witness, meshulam_check, sparse_zero_count, sumset, SparsePoly,
};
use primefourier::cyclotomic::DEFAULT_MAX_P;
use primefourier::fourier::{dft, support};
use primefourier::uncertainty::{
    construct_support_pair, exhaustive_certification, CertifyOptions, ConstructOptions,
    DEFAULT_BUDGET, DEFAULT_MAX_ATTEMPTS, DEFAULT_SEED,
};
use primefourier::{CycloNum, Error, PrimeModulus, Result, SupportSet};
use serde_json::json;

use report::{ConfigEcho, Outcome, Report, SweepRow};

#[derive(Debug, Parser)]
#[command(name = "primefourier", version, about = "Exact Fourier uncertainty checks over Z/pZ")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,

    /// Worker threads for parallel sweeps (default: one per core).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Coefficient draws allowed per generic construction.
    #[arg(long, default_value_t = DEFAULT_MAX_ATTEMPTS, global = true)]
    retries: u32,

    /// Largest accepted modulus.
    #[arg(long, env = "PRIMEFOURIER_MAX_P", default_value_t = DEFAULT_MAX_P, global = true)]
    max_p: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exhaustively certify minors, tightness and achievability for one p.
    Certify {
        #[arg(long)]
        p: usize,
        /// Maximum number of individual checks.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Build f with supp(f) = A and supp(f̂) = B.
    Construct {
        #[arg(long)]
        p: usize,
        #[arg(long, value_delimiter = ',')]
        a: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        b: Vec<usize>,
    },
    /// Count zeros of a sparse polynomial at the p-th roots of unity.
    Sparse {
        #[arg(long)]
        p: usize,
        #[arg(long, value_delimiter = ',')]
        exponents: Vec<usize>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        coefficients: Vec<String>,
    },
    /// Check Cauchy–Davenport for A + B.
    Sumset {
        #[arg(long)]
        p: usize,
        #[arg(long, value_delimiter = ',')]
        a: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        b: Vec<usize>,
        /// Also replay the Fourier proof and report its witness.
        #[arg(long)]
        witness: bool,
    },
    /// Check the support bound on (Z/pZ)^n for a table read from a file.
    Meshulam {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        values: PathBuf,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Certify { .. } => "certify",
            Command::Construct { .. } => "construct",
            Command::Sparse { .. } => "sparse",
            Command::Sumset { .. } => "sumset",
            Command::Meshulam { .. } => "meshulam",
        }
    }
}

fn echo(cli: &Cli) -> ConfigEcho {
    let mut c = ConfigEcho {
        seed: cli.seed,
        retries: cli.retries,
        threads: cli.threads,
        max_p: cli.max_p,
        format: format!("{:?}", cli.format).to_lowercase(),
        ..ConfigEcho::default()
    };
    match &cli.command {
        Command::Certify { p, budget } => {
            c.p = Some(*p);
            c.budget = Some(*budget);
        }
        Command::Construct { p, a, b } => {
            c.p = Some(*p);
            c.a = Some(a.clone());
            c.b = Some(b.clone());
        }
        Command::Sparse { p, exponents, coefficients } => {
            c.p = Some(*p);
            c.exponents = Some(exponents.clone());
            c.coefficients = Some(coefficients.clone());
        }
        Command::Sumset { p, a, b, witness } => {
            c.p = Some(*p);
            c.a = Some(a.clone());
            c.b = Some(b.clone());
            c.witness = Some(*witness);
        }
        Command::Meshulam { p, n, values } => {
            c.p = Some(*p);
            c.n = Some(*n);
            c.values = Some(values.display().to_string());
        }
    }
    c
}

fn to_json(v: impl serde::Serialize) -> serde_json::Value {
    serde_json::to_value(v).expect("report values serialize")
}

fn run(cli: &Cli) -> Result<Outcome> {
    let modulus = |p: usize| PrimeModulus::with_bound(p, cli.max_p);
    let construct = ConstructOptions { seed: cli.seed, max_attempts: cli.retries };
    match &cli.command {
        Command::Certify { p, budget } => {
            let options = CertifyOptions { budget: *budget, construct };
            let summary = exhaustive_certification(modulus(*p)?, &options)?;
            let rows = summary
                .records
                .iter()
                .map(|r| SweepRow {
                    kind: to_json(r.kind).as_str().unwrap_or_default().to_string(),
                    first: r.first.to_string(),
                    second: r.second.to_string(),
                    passed: r.passed,
                    attempts: r.attempts,
                    detail: r.detail.clone().unwrap_or_default(),
                })
                .collect();
            let counts = [
                ("minors", summary.minors_checked as u64),
                ("tightness", summary.tightness_checked as u64),
                ("achievability", summary.achievability_checked as u64),
                ("combinations", summary.combinations_used as u64),
                ("retries", summary.retries_used as u64),
                ("failures", summary.failures.len() as u64),
            ];
            if !summary.all_passed() {
                return Err(Error::TheoremViolation(summary.failures.join("; ")));
            }
            Ok(Outcome {
                result: to_json(&summary),
                counts: counts.into_iter().collect(),
                rows: Some(rows),
            })
        }
        Command::Construct { p, a, b } => {
            let p = modulus(*p)?;
            let (a, b) = (SupportSet::new(p, a.iter().copied())?, SupportSet::new(p, b.iter().copied())?);
            let w = construct_support_pair(&a, &b, &construct)?;
            let (supp_f, supp_fhat) = (support(&w.f), support(&dft(&w.f)));
            let attempts = w.combination.as_ref().map_or(0, |c| c.attempts);
            Ok(Outcome {
                result: json!({
                    "a": a,
                    "b": b,
                    "f": w.f.values(),
                    "supp_f": supp_f,
                    "supp_fhat": supp_fhat,
                    "verified": supp_f == a && supp_fhat == b,
                    "tilde_a": w.tilde_a,
                    "combination": w.combination,
                }),
                counts: [("attempts", u64::from(attempts))].into_iter().collect(),
                rows: None,
            })
        }
        Command::Sparse { p, exponents, coefficients } => {
            let p = modulus(*p)?;
            if exponents.len() != coefficients.len() {
                return Err(Error::Precondition(format!(
                    "{} exponents but {} coefficients",
                    exponents.len(),
                    coefficients.len()
                )));
            }
            let terms = exponents
                .iter()
                .zip(coefficients)
                .map(|(&e, c)| Ok((e, CycloNum::parse(p, c)?)))
                .collect::<Result<Vec<_>>>()?;
            let poly = SparsePoly::new(p, terms)?;
            let report = sparse_zero_count(&poly)?;
            let counts = [
                ("terms", report.term_count as u64),
                ("zeros", report.zeros.len() as u64),
            ];
            Ok(Outcome {
                result: json!({
                    "polynomial": poly.terms(),
                    "zeros": report.zeros,
                    "k": report.term_count - 1,
                    "bound_holds": report.bound_holds,
                }),
                counts: counts.into_iter().collect(),
                rows: None,
            })
        }
        Command::Sumset { p, a, b, witness } => {
            let p = modulus(*p)?;
            let (a, b) = (SupportSet::new(p, a.iter().copied())?, SupportSet::new(p, b.iter().copied())?);
            let check = cauchy_davenport_check(&a, &b)?;
            let sums = sumset(&a, &b)?;
            let proof = if *witness { Some(cd_proof_witness(&a, &b, &construct)?) } else { None };
            let counts = [("sumset_size", sums.len() as u64)];
            Ok(Outcome {
                result: json!({
                    "a": a,
                    "b": b,
                    "sumset": sums,
                    "lhs": check.lhs,
                    "rhs": check.rhs,
                    "holds": check.holds,
                    "witness": proof,
                }),
                counts: counts.into_iter().collect(),
                rows: None,
            })
        }
        Command::Meshulam { p, n, values } => {
            let p = modulus(*p)?;
            let text = std::fs::read_to_string(values)
                .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", values.display())))?;
            let table = values::parse_values(p, *n, &text)?;
            let report = meshulam_check(&table)?;
            let counts = [
                ("points", table.len() as u64),
                ("support", report.support_size as u64),
                ("fourier_support", report.fourier_support_size as u64),
            ];
            Ok(Outcome {
                result: to_json(&report),
                counts: counts.into_iter().collect(),
                rows: None,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("primefourier: cannot start thread pool: {e}");
        }
    }
    let start = Instant::now();
    let outcome = run(&cli);
    let elapsed = start.elapsed().as_millis() as u64;
    let report = Report::new(cli.command.name(), echo(&cli), outcome, elapsed);

    let mut out = io::stdout().lock();
    let written = match cli.format {
        Format::Json => report.write_json(&mut out),
        Format::Csv => report.write_csv(&mut out),
        Format::Text => report.write_text(&mut out),
    };
    if let Err(e) = written {
        eprintln!("primefourier: cannot write report: {e}");
        return ExitCode::FAILURE;
    }
    if let Some(e) = &report.error {
        eprintln!("primefourier: {}", e.message);
    }
    ExitCode::from(report.status.exit_code() as u8)
}
