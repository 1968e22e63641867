//! Randomized property suites, one per correctness statement, runnable at a
//! configurable scale. The CLI `selfcheck` command prints one line per
//! suite; the same reports back the acceptance tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{is_primitive_root, ComplexDomain, Domain, FftPlan, PrimeField};
use crate::inverse;
use crate::iterative;
use crate::poly::Polynomial;
use crate::transform::{self, Engine};

#[derive(Clone, Copy, Debug)]
pub struct CheckConfig {
    /// Randomized cases per suite. Zero runs nothing and reports success.
    pub trials: u32,
    pub seed: u64,
    /// Largest order exponent the transform suites sample.
    pub max_n: u32,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            trials: 200,
            seed: 42,
            max_n: 6,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: &'static str,
    pub cases: u64,
    pub failures: u64,
    /// Description of the first failing input, when any case failed.
    pub first_failure: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

struct Recorder {
    report: CheckReport,
}

impl Recorder {
    fn new(name: &'static str) -> Self {
        Self {
            report: CheckReport {
                name,
                cases: 0,
                failures: 0,
                first_failure: None,
            },
        }
    }

    fn check(&mut self, ok: bool, input: impl FnOnce() -> String) {
        self.report.cases += 1;
        if !ok {
            self.report.failures += 1;
            if self.report.first_failure.is_none() {
                self.report.first_failure = Some(input());
            }
        }
    }

    fn finish(self) -> CheckReport {
        self.report
    }
}

fn default_field() -> PrimeField {
    PrimeField::new(PrimeField::NTT_FRIENDLY_MODULUS).expect("default modulus is prime")
}

fn rand_poly(rng: &mut ChaCha8Rng, f: PrimeField, max_size: usize) -> Polynomial<PrimeField> {
    let size = rng.gen_range(0..=max_size);
    Polynomial::from_coeffs(f, (0..size).map(|_| rng.gen_range(0..f.modulus())).collect())
}

fn describe(p: &Polynomial<PrimeField>) -> String {
    if p.size() <= 16 {
        format!("{:?}", p.coeffs())
    } else {
        format!("[{} coefficients]", p.size())
    }
}

fn suite_rng(cfg: &CheckConfig, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ salt)
}

/// Runs every suite at the configured scale.
pub fn run_all(cfg: &CheckConfig) -> Vec<CheckReport> {
    vec![
        check_prim_exp2ns(cfg),
        check_prim_sqr(cfg),
        check_poly_even_odd(cfg),
        check_poly_take_drop(cfg),
        check_fft_e(cfg),
        check_fft1_e(cfg),
        check_reverse_poly_s(cfg),
        check_rdigitn_involution(cfg),
        check_step1_e(cfg),
        check_istep_fft1(cfg),
        check_take_step(cfg),
        check_drop_step(cfg),
        check_all_results_reverse_poly(cfg),
        check_all_results_step(cfg),
        check_fft_k(cfg),
        check_fft_mul(cfg),
    ]
}

/// `w` primitive of order 2^n with n ≥ 1 implies `w^(2^(n-1)) = -1`.
fn check_prim_exp2ns(cfg: &CheckConfig) -> CheckReport {
    let mut rec = Recorder::new("prim_exp2nS");
    if cfg.trials > 0 {
        let f = default_field();
        for n in 1..=cfg.max_n.max(1) {
            let plan = FftPlan::with_order(f, n).expect("order within capacity");
            rec.check(
                f.pow(plan.root(), 1u64 << (n - 1)) == f.neg(&f.one()),
                || format!("n={n} w={}", plan.root()),
            );
        }
        let c = ComplexDomain::default();
        for n in 1..=cfg.max_n.max(1) {
            let plan = FftPlan::with_order(c, n).expect("complex roots always exist");
            let half = c.pow(plan.root(), 1u64 << (n - 1));
            rec.check(c.elem_eq(&half, &c.neg(&c.one())), || format!("complex n={n}"));
        }
    }
    rec.finish()
}

/// The square of a primitive 2^n-th root is a primitive 2^(n-1)-th root.
fn check_prim_sqr(cfg: &CheckConfig) -> CheckReport {
    let mut rec = Recorder::new("prim_sqr");
    if cfg.trials > 0 {
        let f = default_field();
        for n in 1..=cfg.max_n.max(1) {
            let plan = FftPlan::with_order(f, n).expect("order within capacity");
            let halved = plan.halve().expect("n >= 1");
            rec.check(
                is_primitive_root(&f, halved.root(), 1u64 << (n - 1)).unwrap(),
                || format!("n={n} w={}", plan.root()),
            );
        }
    }
    rec.finish()
}

/// `dilate(even, 2) + X·dilate(odd, 2) = p`.
fn check_poly_even_odd(cfg: &CheckConfig) -> CheckReport {
    let mut rec = Recorder::new("poly_even_odd");
    let f = default_field();
    let mut rng = suite_rng(cfg, 1);
    for _ in 0..cfg.trials {
        let p = rand_poly(&mut rng, f, 1 << cfg.max_n);
        let lhs = p
            .even_part()
            .dilate(2)
            .unwrap()
            .add(&p.odd_part().dilate(2).unwrap().mul_xpow(1));
        rec.check(lhs == p, || format!("p={}", describe(&p)));
    }
    rec.finish()
}

/// `take m p + (drop m p)·X^m = p`.
fn check_poly_take_drop(cfg: &CheckConfig) -> CheckReport {
    let mut rec = Recorder::new("poly_take_drop");
    let f = default_field();
    let mut rng = suite_rng(cfg, 2);
    for _ in 0..cfg.trials {
        let p = rand_poly(&mut rng, f, 1 << cfg.max_n);
        let m = rng.gen_range(0..=(p.size() + 4));
        let lhs = p.take_low(m).add(&p.drop_low(m).mul_xpow(m));
        rec.check(lhs == p, || format!("m={m} p={}", describe(&p)));
    }
    rec.finish()
}

/// Recursive transform equals the brute-force evaluation oracle.
fn check_fft_e(cfg: &CheckConfig) -> CheckReport {
    let mut rec = Recorder::new("fftE");
    let f = default_field();
    let mut rng = suite_rng(cfg, 3);
    let plans: Vec<_> = (0..=cfg.max_n)
        .map(|n| FftPlan::with_order(f, n).expect("order within capacity"))
        .collect();
    for _ in 0..cfg.trials {
        let plan = &plans[rng.gen_range(0..plans.len())];
        let p = rand_poly(&mut rng, f, plan.len());
        let want = transform::naive_dft(plan, &p).unwrap();
        rec.check(transform::fft_recursive(plan, &p).unwrap() == want, || {
            format!("n={} p={}", plan.log_len(), describe(&p))
        });
    }
    rec.finish()
}

/// Butterfly formulation equals the plain recursion.
fn check_fft1_e(cfg: &CheckConfig) -> CheckReport {
    let mut rec = Recorder::new("fft1E");
    let f = default_field();
    let mut rng = suite_rng(cfg, 4);
    let plans: Vec<_> = (0..=cfg.max_n)
        .map(|n| FftPlan::with_order(f, n).expect("order within capacity"))
        .collect();
    for _ in 0..cfg.trials {
        let plan = &plans[rng.gen_range(0..plans.len())];
        let p = rand_poly(&mut rng, f, plan.len());
        rec.check(
            transform::fft_butterfly(plan, &p).unwrap()
                == transform::fft_recursive(plan, &p).unwrap(),
            || format!("n={} p={}", plan.log_len(), describe(&p)),
        );
    }
    rec.finish()
}

/// `reverse(n+1, p) = reverse(n, even) + reverse(n, odd)·X^(2^n)`.
fn check_reverse_poly_s(cfg: &CheckConfig) -> CheckReport {
    let mut rec = Recorder::new("reverse_polyS");
    let f = default_field();
    let mut rng = suite_rng(cfg, 5);
    for _ in 0..cfg.trials {
        let n = rng.gen_range(0..cfg.max_n.max(1));
        let p = rand_poly(&mut rng, f, 1 << (n + 1));
        let lhs = iterative::bit_reverse_poly(n + 1, &p);
        let rhs = iterative::bit_reverse_poly(n, &p.even_part())
            .add(&iterative::bit_reverse_poly(n, &p.odd_part()).mul_xpow(1 << n));
        rec.check(lhs == rhs, || format!("n={n} p={}", describe(&p)));
    }
    rec.finish()
}

/// Digit reversal at fixed width is an involution.
fn check_rdigitn_involution(cfg: &CheckConfig) -> CheckReport {
    let mut rec = Recorder::new("rdigitn_involution");
    let mut rng = suite_rng(cfg, 6);
    for _ in 0..cfg.trials {
        let base = rng.gen_range(2u64..=3);
        let width = rng.gen_range(0u32..=10);
        let m = rng.gen_range(0..base.pow(width));
        let r = iterative::reverse_digits(base, width, m).unwrap();
        rec.check(
            iterative::reverse_digits(base, width, r).unwrap() == m,
            || format!("base={base} width={width} m={m}"),
        );
    }
    rec.finish()
}

/// Direct stage pass equals the block-sum reference stage.
fn check_step1_e(cfg: &CheckConfig) -> CheckReport {
    let mut rec = Recorder::new("step1E");
    let f = default_field();
    let mut rng = suite_rng(cfg, 7);
    let cap = cfg.max_n.max(1);
    for _ in 0..cfg.trials {
        let total = rng.gen_range(1..=cap);
        let m = rng.gen_range(0..total);
        let n = total - 1 - m;
        let w = rng.gen_range(0..f.modulus());
        let p = rand_poly(&mut rng, f, 1 << total);
        rec.check(
            iterative::combine_stage_direct(m, n, &w, &p).unwrap()
                == iterative::combine_stage(m, n, &w, &p).unwrap(),
            || format!("m={m} n={n} w={w} p={}", describe(&p)),
        );
    }
    rec.finish()
}

/// Iterative pipeline equals the butterfly recursion.
fn check_istep_fft1(cfg: &CheckConfig) -> CheckReport {
    let mut rec = Recorder::new("istep_fft1");
    let f = default_field();
    let mut rng = suite_rng(cfg, 8);
    let plans: Vec<_> = (0..=cfg.max_n)
        .map(|n| FftPlan::with_order(f, n).expect("order within capacity"))
        .collect();
    for _ in 0..cfg.trials {
        let plan = &plans[rng.gen_range(0..plans.len())];
        let p = rand_poly(&mut rng, f, plan.len());
        rec.check(
            iterative::fft_iterative(plan, &p).unwrap()
                == transform::fft_butterfly(plan, &p).unwrap(),
            || format!("n={} p={}", plan.log_len(), describe(&p)),
        );
    }
    rec.finish()
}

/// `take (2^(m+n+1)) ∘ step(m+1, n, w) = step(m, n, w) ∘ take (2^(m+n+1))`.
fn check_take_step(cfg: &CheckConfig) -> CheckReport {
    let mut rec = Recorder::new("take_step");
    let f = default_field();
    let mut rng = suite_rng(cfg, 9);
    for _ in 0..cfg.trials {
        let m = rng.gen_range(0..=3u32);
        let n = rng.gen_range(0..=(5u32.saturating_sub(m)).min(3));
        let w = rng.gen_range(0..f.modulus());
        let p = rand_poly(&mut rng, f, 1 << (m + n + 2));
        let cut = 1usize << (m + n + 1);
        let lhs = iterative::combine_stage(m + 1, n, &w, &p).unwrap().take_low(cut);
        let rhs = iterative::combine_stage(m, n, &w, &p.take_low(cut)).unwrap();
        rec.check(lhs == rhs, || format!("m={m} n={n} w={w} p={}", describe(&p)));
    }
    rec.finish()
}

/// The symmetric commutation for the high half.
fn check_drop_step(cfg: &CheckConfig) -> CheckReport {
    let mut rec = Recorder::new("drop_step");
    let f = default_field();
    let mut rng = suite_rng(cfg, 10);
    for _ in 0..cfg.trials {
        let m = rng.gen_range(0..=3u32);
        let n = rng.gen_range(0..=(5u32.saturating_sub(m)).min(3));
        let w = rng.gen_range(0..f.modulus());
        let p = rand_poly(&mut rng, f, 1 << (m + n + 2));
        let cut = 1usize << (m + n + 1);
        let lhs = iterative::combine_stage(m + 1, n, &w, &p).unwrap().drop_low(cut);
        let rhs = iterative::combine_stage(m, n, &w, &p.drop_low(cut)).unwrap();
        rec.check(lhs == rhs, || format!("m={m} n={n} w={w} p={}", describe(&p)));
    }
    rec.finish()
}

/// The bit-reversed arrangement is the depth-n, leaf-0 stage state.
fn check_all_results_reverse_poly(cfg: &CheckConfig) -> CheckReport {
    let mut rec = Recorder::new("all_results_fft1_reverse_poly");
    let f = default_field();
    let mut rng = suite_rng(cfg, 11);
    let cap = cfg.max_n.min(6);
    for _ in 0..cfg.trials {
        let n = rng.gen_range(0..=cap);
        let w = rng.gen_range(0..f.modulus());
        let p = rand_poly(&mut rng, f, 1 << n);
        rec.check(
            iterative::contains_stage_results(n, 0, &w, &p, &iterative::bit_reverse_poly(n, &p)),
            || format!("n={n} w={w} p={}", describe(&p)),
        );
    }
    rec.finish()
}

/// Glues the definitional stage state at (depth, leaf): leaves are
/// butterfly transforms, inner nodes concatenate even/odd sub-states.
fn glued_stage_state<D: Domain>(
    depth: u32,
    leaf: u32,
    w: &D::Elem,
    p: &Polynomial<D>,
) -> Polynomial<D> {
    if depth == 0 {
        return crate::transform::fft_butterfly_raw(p.domain(), leaf, w, p);
    }
    let cut = 1usize << (leaf + depth - 1);
    glued_stage_state(depth - 1, leaf, w, &p.even_part())
        .add(&glued_stage_state(depth - 1, leaf, w, &p.odd_part()).mul_xpow(cut))
}

/// One stage pass carries the stage invariant from (m+1, n, w²) to
/// (m, n+1, w).
fn check_all_results_step(cfg: &CheckConfig) -> CheckReport {
    let mut rec = Recorder::new("all_results_fft1_step");
    let f = default_field();
    let mut rng = suite_rng(cfg, 12);
    for _ in 0..cfg.trials {
        let m = rng.gen_range(0..=2u32);
        let n = rng.gen_range(0..=(4u32.saturating_sub(m)).min(2));
        let w = rng.gen_range(0..f.modulus());
        let w_sq = f.mul(&w, &w);
        let p = rand_poly(&mut rng, f, 1 << (m + n + 1));
        let q = glued_stage_state(m + 1, n, &w_sq, &p);
        debug_assert!(iterative::contains_stage_results(m + 1, n, &w_sq, &p, &q));
        let stepped = iterative::combine_stage(m, n, &w, &q).unwrap();
        rec.check(
            iterative::contains_stage_results(m, n + 1, &w, &p, &stepped),
            || format!("m={m} n={n} w={w} p={}", describe(&p)),
        );
    }
    rec.finish()
}

/// Inverse transform undoes the forward transform; exact over the prime
/// field, within tolerance over complex doubles.
fn check_fft_k(cfg: &CheckConfig) -> CheckReport {
    let mut rec = Recorder::new("fftK");
    let f = default_field();
    let mut rng = suite_rng(cfg, 13);
    let plans: Vec<_> = (0..=cfg.max_n)
        .map(|n| FftPlan::with_order(f, n).expect("order within capacity"))
        .collect();
    for _ in 0..cfg.trials {
        let plan = &plans[rng.gen_range(0..plans.len())];
        let p = rand_poly(&mut rng, f, plan.len());
        let fwd = transform::fft_recursive(plan, &p).unwrap();
        rec.check(inverse::ifft(plan, &fwd).unwrap() == p, || {
            format!("n={} p={}", plan.log_len(), describe(&p))
        });
    }
    let c = ComplexDomain::default();
    let complex_trials = cfg.trials.min(32);
    for _ in 0..complex_trials {
        let n = rng.gen_range(0..=cfg.max_n.min(8));
        let plan = FftPlan::with_order(c, n).expect("complex roots always exist");
        let coeffs: Vec<_> = (0..plan.len())
            .map(|_| {
                num_complex::Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
            })
            .collect();
        let p = Polynomial::from_coeffs(c, coeffs);
        let fwd = transform::fft_recursive(&plan, &p).unwrap();
        rec.check(inverse::ifft(&plan, &fwd).unwrap() == p, || {
            format!("complex n={n}")
        });
    }
    rec.finish()
}

/// Transform-based multiplication equals the schoolbook convolution.
fn check_fft_mul(cfg: &CheckConfig) -> CheckReport {
    let mut rec = Recorder::new("fft_mul_naive_mul");
    let f = default_field();
    let mut rng = suite_rng(cfg, 14);
    for _ in 0..cfg.trials {
        let p = rand_poly(&mut rng, f, 1 << cfg.max_n);
        let q = rand_poly(&mut rng, f, 1 << cfg.max_n);
        let engine = match rng.gen_range(0..3) {
            0 => Engine::Recursive,
            1 => Engine::Butterfly,
            _ => Engine::Iterative,
        };
        rec.check(
            inverse::fft_mul_with(engine, &p, &q).unwrap() == p.naive_mul(&q),
            || format!("p={} q={}", describe(&p), describe(&q)),
        );
    }
    rec.finish()
}
