//! Inverse transform and the headline application: polynomial
//! multiplication by evaluate, pointwise multiply, interpolate.

use crate::algebra::{Domain, Field, FftPlan};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::transform::{self, Engine};

/// Componentwise product `build(len, i ↦ a_i · b_i)`.
pub fn pointwise_mul<D: Domain>(
    a: &Polynomial<D>,
    b: &Polynomial<D>,
    len: usize,
) -> Polynomial<D> {
    let d = a.domain().clone();
    Polynomial::build(d.clone(), len, |i| d.mul(&a.coeff(i), &b.coeff(i)))
}

/// Inverse transform `(2^n)⁻¹ · fft(n, w⁻¹, p)`. Needs a field in which
/// `2^n` is invertible (characteristic ≠ 2 suffices).
pub fn ifft<D: Field>(plan: &FftPlan<D>, p: &Polynomial<D>) -> Result<Polynomial<D>> {
    ifft_with(Engine::Recursive, plan, p)
}

pub fn ifft_with<D: Field>(
    engine: Engine,
    plan: &FftPlan<D>,
    p: &Polynomial<D>,
) -> Result<Polynomial<D>> {
    transform::check_size(plan, p)?;
    let d = plan.domain();
    let len = 1u64 << plan.log_len();
    let scale = d
        .inv(&d.from_nat(len))
        .map_err(|_| Error::NonInvertibleOrder)?;
    // w has order 2^n, so w^(2^n - 1) is its inverse; this stays inside the
    // operations the domain already provides.
    let w_inv = d.pow(plan.root(), len - 1);
    let q = transform::transform_raw(engine, d, plan.log_len(), &w_inv, p);
    Ok(q.scale(&scale))
}

/// Multiplication through the transform: pad to the minimal power of two
/// covering the product, evaluate both factors, multiply pointwise,
/// interpolate back. Equals `naive_mul` on every valid input.
pub fn fft_mul<D: Field>(p: &Polynomial<D>, q: &Polynomial<D>) -> Result<Polynomial<D>> {
    fft_mul_with(Engine::Iterative, p, q)
}

pub fn fft_mul_with<D: Field>(
    engine: Engine,
    p: &Polynomial<D>,
    q: &Polynomial<D>,
) -> Result<Polynomial<D>> {
    assert_eq!(p.domain(), q.domain(), "mixed coefficient domains");
    if p.is_zero() || q.is_zero() {
        return Ok(Polynomial::zero(p.domain().clone()));
    }
    let need = p.size() + q.size() - 1;
    let log_len = need.next_power_of_two().trailing_zeros();
    let plan = FftPlan::with_order(p.domain().clone(), log_len)?;
    fft_mul_with_plan(engine, &plan, p, q)
}

/// Same as [`fft_mul_with`] but with a caller-supplied plan, so repeated
/// products (and benchmarks) can keep root construction out of the loop.
pub fn fft_mul_with_plan<D: Field>(
    engine: Engine,
    plan: &FftPlan<D>,
    p: &Polynomial<D>,
    q: &Polynomial<D>,
) -> Result<Polynomial<D>> {
    let pa = transform::transform_with(engine, plan, p)?;
    let pb = transform::transform_with(engine, plan, q)?;
    let prod = pointwise_mul(&pa, &pb, plan.len());
    ifft_with(engine, plan, &prod)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ComplexDomain, PrimeField};
    use crate::transform::fft_recursive;
    use num_complex::Complex64;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn z17() -> PrimeField {
        PrimeField::new(17).unwrap()
    }

    fn poly(coeffs: &[u64]) -> Polynomial<PrimeField> {
        Polynomial::from_coeffs(z17(), coeffs.to_vec())
    }

    fn rand_poly(rng: &mut ChaCha8Rng, f: PrimeField, max_size: usize) -> Polynomial<PrimeField> {
        let size = rng.gen_range(0..=max_size);
        Polynomial::from_coeffs(f, (0..size).map(|_| rng.gen_range(0..f.modulus())).collect())
    }

    #[test]
    fn ifft_worked_example() {
        let plan = FftPlan::new(z17(), 2, 4).unwrap();
        let got = ifft(&plan, &poly(&[10, 7, 15, 6])).unwrap();
        assert_eq!(got, poly(&[1, 2, 3, 4]));
        let unit = FftPlan::new(z17(), 0, 1).unwrap();
        assert_eq!(ifft(&unit, &poly(&[9])).unwrap(), poly(&[9]));
        assert!(ifft(&plan, &poly(&[])).unwrap().is_zero());
    }

    #[test]
    fn round_trip_prime() {
        let f = PrimeField::new(PrimeField::NTT_FRIENDLY_MODULUS).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for n in 0..=8u32 {
            let plan = FftPlan::with_order(f, n).unwrap();
            for _ in 0..10 {
                let p = rand_poly(&mut rng, f, plan.len());
                let fwd = fft_recursive(&plan, &p).unwrap();
                assert_eq!(ifft(&plan, &fwd).unwrap(), p, "n={n}");
                // reverse order: fft after ifft also restores p
                let back = ifft(&plan, &p).unwrap();
                assert_eq!(fft_recursive(&plan, &back).unwrap(), p, "n={n}");
            }
        }
    }

    #[test]
    fn round_trip_complex() {
        let c = ComplexDomain::default();
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for n in 0..=10u32 {
            let plan = FftPlan::with_order(c, n).unwrap();
            let coeffs: Vec<Complex64> = (0..plan.len())
                .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            let p = Polynomial::from_coeffs(c, coeffs);
            let fwd = fft_recursive(&plan, &p).unwrap();
            assert_eq!(ifft(&plan, &fwd).unwrap(), p, "n={n}");
        }
    }

    #[test]
    fn pointwise_examples() {
        let a = poly(&[1, 2]);
        assert_eq!(pointwise_mul(&a, &poly(&[3, 4]), 2), poly(&[3, 8]));
        assert!(pointwise_mul(&a, &poly(&[]), 4).is_zero());
        assert_eq!(pointwise_mul(&a, &poly(&[1, 1, 1, 1]), 4), a);
    }

    #[test]
    fn mul_examples() {
        let p = poly(&[1, 1]);
        assert_eq!(fft_mul(&p, &p).unwrap(), poly(&[1, 2, 1]));
        assert!(fft_mul(&p, &poly(&[])).unwrap().is_zero());
    }

    #[test]
    fn mul_matches_oracle() {
        let f = PrimeField::new(PrimeField::NTT_FRIENDLY_MODULUS).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..30 {
            let p = rand_poly(&mut rng, f, 256);
            let q = rand_poly(&mut rng, f, 256);
            let want = p.naive_mul(&q);
            for engine in [Engine::Recursive, Engine::Butterfly, Engine::Iterative] {
                assert_eq!(fft_mul_with(engine, &p, &q).unwrap(), want);
            }
        }
    }

    #[test]
    fn mul_degree_is_additive() {
        let f = PrimeField::new(PrimeField::NTT_FRIENDLY_MODULUS).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..30 {
            let p = rand_poly(&mut rng, f, 40);
            let q = rand_poly(&mut rng, f, 40);
            if p.is_zero() || q.is_zero() {
                continue;
            }
            let prod = fft_mul(&p, &q).unwrap();
            assert_eq!(prod.size(), p.size() + q.size() - 1);
        }
    }

    #[test]
    fn order_capacity_is_enforced() {
        // Z_17 has 2-adic capacity 4: products needing length 32 must fail.
        let f = z17();
        let big = Polynomial::from_coeffs(f, vec![1u64; 17]);
        assert_eq!(
            fft_mul(&big, &big).unwrap_err(),
            Error::OrderUnavailable {
                requested: 6,
                capacity: 4
            }
        );
    }
}
