//! The two recursive transform algorithms and the brute-force evaluation
//! oracle they are checked against.
//!
//! `fft_recursive` is the direct even/odd recursion; `fft_butterfly` is the
//! same recursion with the paired `(e + o·w^j, e − o·w^j)` update written
//! out. Both equal `naive_dft`, the O(4^n) specification oracle that
//! evaluates the polynomial at every power of the root.

use crate::algebra::{Domain, FftPlan};
use crate::error::{Error, Result};
use crate::iterative;
use crate::poly::Polynomial;

/// Which transform implementation to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    Recursive,
    Butterfly,
    Iterative,
}

pub(crate) fn check_size<D: Domain>(plan: &FftPlan<D>, p: &Polynomial<D>) -> Result<()> {
    if p.size() > plan.len() {
        return Err(Error::SizeExceedsOrder {
            size: p.size(),
            capacity: plan.len(),
        });
    }
    Ok(())
}

/// The specification oracle: `build(2^n, i ↦ p(w^i))`.
pub fn naive_dft<D: Domain>(plan: &FftPlan<D>, p: &Polynomial<D>) -> Result<Polynomial<D>> {
    check_size(plan, p)?;
    let d = plan.domain().clone();
    let mut point = d.one();
    Ok(Polynomial::build(d.clone(), plan.len(), |_| {
        let v = p.eval(&point);
        point = d.mul(&point, plan.root());
        v
    }))
}

/// Recursive radix-2 transform. Recurses on the even and odd parts with
/// `w²`, then combines as `ev_(i mod 2^n₁) + ov_(i mod 2^n₁) · w^i`.
pub fn fft_recursive<D: Domain>(plan: &FftPlan<D>, p: &Polynomial<D>) -> Result<Polynomial<D>> {
    check_size(plan, p)?;
    Ok(fft_recursive_raw(
        plan.domain(),
        plan.log_len(),
        plan.root(),
        p,
    ))
}

pub(crate) fn fft_recursive_raw<D: Domain>(
    d: &D,
    n: u32,
    w: &D::Elem,
    p: &Polynomial<D>,
) -> Polynomial<D> {
    if n == 0 {
        return Polynomial::constant(d.clone(), p.coeff(0));
    }
    let w_sq = d.mul(w, w);
    let ev = fft_recursive_raw(d, n - 1, &w_sq, &p.even_part());
    let ov = fft_recursive_raw(d, n - 1, &w_sq, &p.odd_part());
    // i mod 2^(n-1) as a bit mask; lengths are powers of two
    let mask = (1usize << (n - 1)) - 1;
    let mut w_pow = d.one();
    Polynomial::build(d.clone(), 1usize << n, |i| {
        let j = i & mask;
        let v = d.add(&ev.coeff(j), &d.mul(&ov.coeff(j), &w_pow));
        w_pow = d.mul(&w_pow, w);
        v
    })
}

/// Butterfly formulation of the same recursion: each `j < 2^(n-1)` writes
/// the pair `ev_j ± ov_j·w^j` to positions `j` and `j + 2^(n-1)`.
pub fn fft_butterfly<D: Domain>(plan: &FftPlan<D>, p: &Polynomial<D>) -> Result<Polynomial<D>> {
    check_size(plan, p)?;
    Ok(fft_butterfly_raw(
        plan.domain(),
        plan.log_len(),
        plan.root(),
        p,
    ))
}

pub(crate) fn fft_butterfly_raw<D: Domain>(
    d: &D,
    n: u32,
    w: &D::Elem,
    p: &Polynomial<D>,
) -> Polynomial<D> {
    if n == 0 {
        return Polynomial::constant(d.clone(), p.coeff(0));
    }
    let w_sq = d.mul(w, w);
    let ev = fft_butterfly_raw(d, n - 1, &w_sq, &p.even_part());
    let ov = fft_butterfly_raw(d, n - 1, &w_sq, &p.odd_part());
    let half = 1usize << (n - 1);
    let mut out = vec![d.zero(); half * 2];
    let mut twiddle = d.one();
    for j in 0..half {
        let e = ev.coeff(j);
        let t = d.mul(&ov.coeff(j), &twiddle);
        out[j] = d.add(&e, &t);
        out[j + half] = d.sub(&e, &t);
        twiddle = d.mul(&twiddle, w);
    }
    Polynomial::from_coeffs(d.clone(), out)
}

/// Runs the selected engine after the shared size check.
pub fn transform_with<D: Domain>(
    engine: Engine,
    plan: &FftPlan<D>,
    p: &Polynomial<D>,
) -> Result<Polynomial<D>> {
    check_size(plan, p)?;
    Ok(transform_raw(
        engine,
        plan.domain(),
        plan.log_len(),
        plan.root(),
        p,
    ))
}

pub(crate) fn transform_raw<D: Domain>(
    engine: Engine,
    d: &D,
    n: u32,
    w: &D::Elem,
    p: &Polynomial<D>,
) -> Polynomial<D> {
    match engine {
        Engine::Recursive => fft_recursive_raw(d, n, w, p),
        Engine::Butterfly => fft_butterfly_raw(d, n, w, p),
        Engine::Iterative => iterative::fft_iterative_raw(d, n, w, p),
    }
}
