//! Command-line front end: transform and multiply polynomial files,
//! benchmark naive vs transform multiplication, dump stage traces, and run
//! the property self-check suite.
//!
//! Exit codes: 0 success, 1 property failure, 2 input/parse error,
//! 3 precondition violation.

mod bench;
mod doc;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use polyfft::selfcheck::{run_all, CheckConfig};
use polyfft::{inverse, iterative, transform, Domain, Engine, FftPlan, Field, Polynomial};

use doc::{ComplexStageRecord, PolynomialDocument, PrimeStageRecord, TraceDocument};

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input (exit 2).
    Input(String),
    /// A transform hypothesis does not hold for this input (exit 3).
    Precondition(String),
    /// A self-check suite failed (exit 1).
    PropertyFailure,
}

impl CliError {
    fn precondition(e: polyfft::Error) -> Self {
        Self::Precondition(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "polyfft",
    about = "Radix-2 FFT/NTT transforms, multiplication, benchmarks and stage traces",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Transform a polynomial file (forward or inverse)
    Fft(FftArgs),
    /// Multiply two polynomial files
    Mul(MulArgs),
    /// Time naive vs transform-based multiplication
    Bench(bench::BenchArgs),
    /// Emit every intermediate stage of the iterative pipeline
    Trace(TraceArgs),
    /// Run the property suites and report per-lemma pass counts
    Selfcheck(SelfcheckArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Algo {
    Recursive,
    Butterfly,
    Iterative,
}

impl From<Algo> for Engine {
    fn from(a: Algo) -> Engine {
        match a {
            Algo::Recursive => Engine::Recursive,
            Algo::Butterfly => Engine::Butterfly,
            Algo::Iterative => Engine::Iterative,
        }
    }
}

#[derive(Parser)]
struct FftArgs {
    /// Polynomial document (JSON, or whitespace-separated coefficients)
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Algo::Iterative)]
    algo: Algo,
    /// Order exponent: transform length is 2^n
    #[arg(long)]
    n: u32,
    /// Explicit root of unity ("4" for prime domains, "re,im" for complex)
    #[arg(long, conflicts_with = "auto")]
    root: Option<String>,
    /// Derive the root from the domain instead of passing one
    #[arg(long)]
    auto: bool,
    /// Apply the inverse transform
    #[arg(long)]
    inverse: bool,
    /// Output file (stdout when omitted)
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Modulus assumed for plain-text input files
    #[arg(long, default_value_t = polyfft::PrimeField::NTT_FRIENDLY_MODULUS)]
    modulus: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MulAlgo {
    Naive,
    Fft,
}

#[derive(Parser)]
struct MulArgs {
    a: PathBuf,
    b: PathBuf,
    #[arg(long, value_enum, default_value_t = MulAlgo::Fft)]
    algo: MulAlgo,
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Modulus assumed for plain-text input files
    #[arg(long, default_value_t = polyfft::PrimeField::NTT_FRIENDLY_MODULUS)]
    modulus: u64,
}

#[derive(Parser)]
struct TraceArgs {
    input: PathBuf,
    #[arg(long)]
    n: u32,
    #[arg(long, conflicts_with = "auto")]
    root: Option<String>,
    #[arg(long)]
    auto: bool,
    /// Modulus assumed for plain-text input files
    #[arg(long, default_value_t = polyfft::PrimeField::NTT_FRIENDLY_MODULUS)]
    modulus: u64,
}

#[derive(Parser)]
struct SelfcheckArgs {
    /// Randomized cases per suite
    #[arg(long, default_value_t = 200)]
    trials: u32,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Largest order exponent sampled by the transform suites
    #[arg(long = "max-n", default_value_t = 6)]
    max_n: u32,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Fft(args) => cmd_fft(&args),
        Cmd::Mul(args) => cmd_mul(&args),
        Cmd::Bench(args) => bench::cmd_bench(&args),
        Cmd::Trace(args) => cmd_trace(&args),
        Cmd::Selfcheck(args) => cmd_selfcheck(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::PropertyFailure) => ExitCode::from(1),
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Precondition(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn read_document(path: &Path, plaintext_modulus: u64) -> Result<PolynomialDocument, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    PolynomialDocument::parse(&text, plaintext_modulus)
}

fn write_output(output: Option<&Path>, text: &str) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, format!("{text}\n"))
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn parse_prime_root(spec: Option<&str>, modulus: u64) -> Result<Option<u64>, CliError> {
    spec.map(|s| {
        let r = s
            .parse::<u64>()
            .map_err(|_| CliError::Input(format!("invalid root {s:?}")))?;
        if r >= modulus {
            return Err(CliError::Input(format!("root {r} is outside [0, {modulus})")));
        }
        Ok(r)
    })
    .transpose()
}

fn parse_complex_root(spec: Option<&str>) -> Result<Option<Complex64>, CliError> {
    spec.map(|s| {
        let parts: Vec<&str> = s.split(',').collect();
        let parse = |t: &str| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Input(format!("invalid root {s:?}")))
        };
        match parts.as_slice() {
            [re] => Ok(Complex64::new(parse(re)?, 0.0)),
            [re, im] => Ok(Complex64::new(parse(re)?, parse(im)?)),
            _ => Err(CliError::Input(format!("invalid root {s:?}"))),
        }
    })
    .transpose()
}

fn build_plan<D: Domain>(domain: D, n: u32, root: Option<D::Elem>) -> Result<FftPlan<D>, CliError> {
    match root {
        Some(r) => FftPlan::new(domain, n, r),
        None => FftPlan::with_order(domain, n),
    }
    .map_err(CliError::precondition)
}

fn apply_transform<D: Field>(
    plan: &FftPlan<D>,
    p: &Polynomial<D>,
    engine: Engine,
    is_inverse: bool,
) -> Result<Polynomial<D>, CliError> {
    if is_inverse {
        inverse::ifft_with(engine, plan, p)
    } else {
        transform::transform_with(engine, plan, p)
    }
    .map_err(CliError::precondition)
}

fn require_root_choice(root: &Option<String>, auto: bool) -> Result<(), CliError> {
    if root.is_none() && !auto {
        return Err(CliError::Input(
            "pass either --root <element> or --auto".into(),
        ));
    }
    Ok(())
}

fn cmd_fft(args: &FftArgs) -> Result<(), CliError> {
    require_root_choice(&args.root, args.auto)?;
    let out_doc = match read_document(&args.input, args.modulus)? {
        PolynomialDocument::Prime { modulus, coeffs } => {
            let (field, poly) = doc::prime_poly(modulus, &coeffs)?;
            let root = parse_prime_root(args.root.as_deref(), modulus)?;
            let plan = build_plan(field, args.n, root)?;
            let out = apply_transform(&plan, &poly, args.algo.into(), args.inverse)?;
            doc::prime_document(modulus, &out)
        }
        PolynomialDocument::Complex { epsilon, coeffs } => {
            let (domain, poly) = doc::complex_poly(epsilon, &coeffs)?;
            let root = parse_complex_root(args.root.as_deref())?;
            let plan = build_plan(domain, args.n, root)?;
            let out = apply_transform(&plan, &poly, args.algo.into(), args.inverse)?;
            doc::complex_document(epsilon, &out)
        }
    };
    write_output(args.output.as_deref(), &out_doc.to_json())
}

fn cmd_mul(args: &MulArgs) -> Result<(), CliError> {
    let doc_a = read_document(&args.a, args.modulus)?;
    let doc_b = read_document(&args.b, args.modulus)?;
    let out_doc = match (doc_a, doc_b) {
        (
            PolynomialDocument::Prime { modulus, coeffs },
            PolynomialDocument::Prime {
                modulus: modulus_b,
                coeffs: coeffs_b,
            },
        ) => {
            if modulus != modulus_b {
                return Err(CliError::Input(format!(
                    "domain mismatch: modulus {modulus} vs {modulus_b}"
                )));
            }
            let (_, a) = doc::prime_poly(modulus, &coeffs)?;
            let (_, b) = doc::prime_poly(modulus, &coeffs_b)?;
            let product = match args.algo {
                MulAlgo::Naive => a.naive_mul(&b),
                MulAlgo::Fft => inverse::fft_mul(&a, &b).map_err(CliError::precondition)?,
            };
            doc::prime_document(modulus, &product)
        }
        (
            PolynomialDocument::Complex { epsilon, coeffs },
            PolynomialDocument::Complex {
                epsilon: epsilon_b,
                coeffs: coeffs_b,
            },
        ) => {
            if epsilon != epsilon_b {
                return Err(CliError::Input(format!(
                    "domain mismatch: epsilon {epsilon} vs {epsilon_b}"
                )));
            }
            let (_, a) = doc::complex_poly(epsilon, &coeffs)?;
            let (_, b) = doc::complex_poly(epsilon, &coeffs_b)?;
            let product = match args.algo {
                MulAlgo::Naive => a.naive_mul(&b),
                MulAlgo::Fft => inverse::fft_mul(&a, &b).map_err(CliError::precondition)?,
            };
            doc::complex_document(epsilon, &product)
        }
        _ => {
            return Err(CliError::Input(
                "domain mismatch: prime vs complex".into(),
            ))
        }
    };
    write_output(args.output.as_deref(), &out_doc.to_json())
}

fn cmd_trace(args: &TraceArgs) -> Result<(), CliError> {
    require_root_choice(&args.root, args.auto)?;
    let trace = match read_document(&args.input, args.modulus)? {
        PolynomialDocument::Prime { modulus, coeffs } => {
            let (field, poly) = doc::prime_poly(modulus, &coeffs)?;
            let root = parse_prime_root(args.root.as_deref(), modulus)?;
            let plan = build_plan(field, args.n, root)?;
            let stages = iterative::fft_iterative_stages(&plan, &poly)
                .map_err(CliError::precondition)?;
            TraceDocument::Prime {
                modulus,
                n: args.n,
                root: *plan.root(),
                stages: stages
                    .iter()
                    .map(|s| PrimeStageRecord {
                        depth: s.depth,
                        root: s.root,
                        coeffs: s.data.coeffs().to_vec(),
                    })
                    .collect(),
            }
        }
        PolynomialDocument::Complex { epsilon, coeffs } => {
            let (domain, poly) = doc::complex_poly(epsilon, &coeffs)?;
            let root = parse_complex_root(args.root.as_deref())?;
            let plan = build_plan(domain, args.n, root)?;
            let stages = iterative::fft_iterative_stages(&plan, &poly)
                .map_err(CliError::precondition)?;
            TraceDocument::Complex {
                epsilon,
                n: args.n,
                root: [plan.root().re, plan.root().im],
                stages: stages
                    .iter()
                    .map(|s| ComplexStageRecord {
                        depth: s.depth,
                        root: [s.root.re, s.root.im],
                        coeffs: s.data.coeffs().iter().map(|c| [c.re, c.im]).collect(),
                    })
                    .collect(),
            }
        }
    };
    println!(
        "{}",
        serde_json::to_string(&trace).expect("trace serialization cannot fail")
    );
    Ok(())
}

fn cmd_selfcheck(args: &SelfcheckArgs) -> Result<(), CliError> {
    let cfg = CheckConfig {
        trials: args.trials,
        seed: args.seed,
        max_n: args.max_n,
    };
    let reports = run_all(&cfg);
    let mut failed = false;
    for r in &reports {
        if r.passed() {
            println!("{}: {}/{} ok", r.name, r.cases - r.failures, r.cases);
        } else {
            failed = true;
            println!(
                "{}: {}/{} ok, {} FAILED",
                r.name,
                r.cases - r.failures,
                r.cases,
                r.failures
            );
            if let Some(input) = &r.first_failure {
                println!("  first failing input: {input}");
            }
        }
    }
    if failed {
        return Err(CliError::PropertyFailure);
    }
    println!("all suites passed ({} suites)", reports.len());
    Ok(())
}
