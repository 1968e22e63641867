//! `polyfft bench`: deterministic timing of naive vs transform-based
//! multiplication over a prime field.
//!
//! Inputs are generated from the seed, so two runs with the same flags time
//! the same polynomials. The timed region covers only the multiplication
//! itself; plan and root construction happen outside the loop.

use std::time::Instant;

use clap::{Parser, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use polyfft::{inverse, Engine, FftPlan, Polynomial, PrimeField};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BenchAlgo {
    Naive,
    Fft,
}

impl BenchAlgo {
    fn name(self) -> &'static str {
        match self {
            BenchAlgo::Naive => "naive",
            BenchAlgo::Fft => "fft",
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum BenchFormat {
    Json,
    Csv,
}

#[derive(Parser)]
pub struct BenchArgs {
    /// Comma-separated input sizes; each must be a power of two
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<u64>,
    /// Which multipliers to time
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [BenchAlgo::Naive, BenchAlgo::Fft])]
    algos: Vec<BenchAlgo>,
    /// Timed runs per (algorithm, size) pair
    #[arg(long, default_value_t = 3)]
    repeat: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = BenchFormat::Json)]
    format: BenchFormat,
    #[arg(long, default_value_t = PrimeField::NTT_FRIENDLY_MODULUS)]
    modulus: u64,
}

#[derive(Serialize)]
struct BenchReport {
    modulus: u64,
    seed: u64,
    repeat: u32,
    results: Vec<BenchRow>,
}

#[derive(Serialize)]
struct BenchRow {
    algo: &'static str,
    size: u64,
    samples_ns: Vec<u128>,
    min_ns: u128,
    median_ns: u128,
}

/// Two random polynomials with exactly `size` coefficients each, fixed by
/// `(seed, size)` so every algorithm multiplies the same pair.
fn bench_inputs(
    field: PrimeField,
    modulus: u64,
    seed: u64,
    size: u64,
) -> (Polynomial<PrimeField>, Polynomial<PrimeField>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ size.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let mut gen = |leading_nonzero: bool| {
        let mut coeffs: Vec<u64> = (0..size).map(|_| rng.gen_range(0..modulus)).collect();
        if leading_nonzero {
            if let Some(last) = coeffs.last_mut() {
                *last = rng.gen_range(1..modulus);
            }
        }
        coeffs
    };
    let a = Polynomial::from_coeffs(field, gen(true));
    let b = Polynomial::from_coeffs(field, gen(true));
    (a, b)
}

fn time_runs<F: FnMut() -> Polynomial<PrimeField>>(repeat: u32, mut run: F) -> Vec<u128> {
    (0..repeat)
        .map(|_| {
            let start = Instant::now();
            let product = run();
            let elapsed = start.elapsed().as_nanos();
            std::hint::black_box(product);
            elapsed
        })
        .collect()
}

fn median(samples: &[u128]) -> u128 {
    let mut sorted = samples.to_vec();
    sorted.sort_unstable();
    let mid = sorted.len() / 2;
    if sorted.len() % 2 == 0 {
        (sorted[mid - 1] + sorted[mid]) / 2
    } else {
        sorted[mid]
    }
}

pub fn cmd_bench(args: &BenchArgs) -> Result<(), CliError> {
    if args.repeat == 0 {
        return Err(CliError::Input("--repeat must be at least 1".into()));
    }
    let field = PrimeField::new(args.modulus).map_err(|e| CliError::Input(e.to_string()))?;
    let mut results = Vec::new();
    for &size in &args.sizes {
        if size == 0 || !size.is_power_of_two() {
            return Err(CliError::Input(format!(
                "size {size} is not a power of two"
            )));
        }
        // Product of two size-`size` inputs has 2*size - 1 coefficients.
        let log_len = (2 * size - 1).next_power_of_two().trailing_zeros();
        let plan = FftPlan::with_order(field, log_len).map_err(CliError::precondition)?;
        let (a, b) = bench_inputs(field, args.modulus, args.seed, size);
        for &algo in &args.algos {
            let samples_ns = match algo {
                BenchAlgo::Naive => time_runs(args.repeat, || a.naive_mul(&b)),
                BenchAlgo::Fft => time_runs(args.repeat, || {
                    inverse::fft_mul_with_plan(Engine::Iterative, &plan, &a, &b)
                        .expect("inputs fit the plan by construction")
                }),
            };
            results.push(BenchRow {
                algo: algo.name(),
                size,
                min_ns: *samples_ns.iter().min().expect("repeat >= 1"),
                median_ns: median(&samples_ns),
                samples_ns,
            });
        }
    }
    let report = BenchReport {
        modulus: args.modulus,
        seed: args.seed,
        repeat: args.repeat,
        results,
    };
    match args.format {
        BenchFormat::Json => println!(
            "{}",
            serde_json::to_string(&report).expect("report serialization cannot fail")
        ),
        BenchFormat::Csv => {
            println!("algo,size,min_ns,median_ns");
            for row in &report.results {
                println!("{},{},{},{}", row.algo, row.size, row.min_ns, row.median_ns);
            }
        }
    }
    Ok(())
}
