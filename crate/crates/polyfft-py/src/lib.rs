//! Python bindings for the prime-field transforms.
//!
//! Polynomials cross the boundary as lists of residues in ascending degree
//! order. All functions default to the NTT-friendly modulus 998244353; pass
//! `modulus=` for other odd primes. Domain errors surface as `ValueError`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use polyfft::iterative::reverse_digits;
use polyfft::transform::naive_dft as naive_dft_core;
use polyfft::{inverse, transform, Engine, FftPlan, Polynomial, PrimeField};

fn to_py_err(e: polyfft::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_engine(algo: &str) -> PyResult<Engine> {
    match algo {
        "recursive" => Ok(Engine::Recursive),
        "butterfly" => Ok(Engine::Butterfly),
        "iterative" => Ok(Engine::Iterative),
        other => Err(PyValueError::new_err(format!(
            "unknown algorithm {other:?}; expected recursive, butterfly, or iterative"
        ))),
    }
}

fn checked_poly(
    modulus: u64,
    coeffs: Vec<u64>,
) -> PyResult<(PrimeField, Polynomial<PrimeField>)> {
    let field = PrimeField::new(modulus).map_err(to_py_err)?;
    if let Some(&c) = coeffs.iter().find(|&&c| c >= modulus) {
        return Err(PyValueError::new_err(format!(
            "coefficient {c} is outside [0, {modulus})"
        )));
    }
    let poly = Polynomial::from_coeffs(field, coeffs);
    Ok((field, poly))
}

fn build_plan(field: PrimeField, n: u32, root: Option<u64>) -> PyResult<FftPlan<PrimeField>> {
    match root {
        Some(r) => FftPlan::new(field, n, r),
        None => FftPlan::with_order(field, n),
    }
    .map_err(to_py_err)
}

/// Length-2^n transform of `coeffs`. The root is derived from the field
/// when omitted; `inverse=True` interpolates instead of evaluating.
#[pyfunction]
#[pyo3(signature = (coeffs, n, root=None, modulus=PrimeField::NTT_FRIENDLY_MODULUS, algo="iterative", inverse=false))]
fn fft(
    coeffs: Vec<u64>,
    n: u32,
    root: Option<u64>,
    modulus: u64,
    algo: &str,
    inverse: bool,
) -> PyResult<Vec<u64>> {
    let engine = parse_engine(algo)?;
    let (field, poly) = checked_poly(modulus, coeffs)?;
    let plan = build_plan(field, n, root)?;
    let out = if inverse {
        inverse::ifft_with(engine, &plan, &poly)
    } else {
        transform::transform_with(engine, &plan, &poly)
    }
    .map_err(to_py_err)?;
    Ok(out.coeffs().to_vec())
}

/// Inverse transform; equivalent to `fft(..., inverse=True)`.
#[pyfunction]
#[pyo3(signature = (coeffs, n, root=None, modulus=PrimeField::NTT_FRIENDLY_MODULUS, algo="iterative"))]
fn ifft(coeffs: Vec<u64>, n: u32, root: Option<u64>, modulus: u64, algo: &str) -> PyResult<Vec<u64>> {
    fft(coeffs, n, root, modulus, algo, true)
}

/// Brute-force evaluation at the 2^n root powers — the oracle the fast
/// transforms are checked against.
#[pyfunction]
#[pyo3(signature = (coeffs, n, root=None, modulus=PrimeField::NTT_FRIENDLY_MODULUS))]
fn naive_dft(coeffs: Vec<u64>, n: u32, root: Option<u64>, modulus: u64) -> PyResult<Vec<u64>> {
    let (field, poly) = checked_poly(modulus, coeffs)?;
    let plan = build_plan(field, n, root)?;
    let out = naive_dft_core(&plan, &poly).map_err(to_py_err)?;
    Ok(out.coeffs().to_vec())
}

/// Polynomial product of `a` and `b` via the transform. Trailing zero
/// coefficients are trimmed from the result.
#[pyfunction]
#[pyo3(signature = (a, b, modulus=PrimeField::NTT_FRIENDLY_MODULUS))]
fn multiply(a: Vec<u64>, b: Vec<u64>, modulus: u64) -> PyResult<Vec<u64>> {
    let (_, pa) = checked_poly(modulus, a)?;
    let (_, pb) = checked_poly(modulus, b)?;
    let product = inverse::fft_mul(&pa, &pb).map_err(to_py_err)?;
    Ok(product.coeffs().to_vec())
}

/// `value` with its `width` low bits reversed (base-2 digit reversal).
#[pyfunction]
fn bit_reverse(width: u32, value: u64) -> PyResult<u64> {
    reverse_digits(2, width, value).map_err(to_py_err)
}

/// A primitive 2^n-th root of unity modulo `modulus`.
#[pyfunction]
#[pyo3(signature = (n, modulus=PrimeField::NTT_FRIENDLY_MODULUS))]
fn primitive_root(n: u32, modulus: u64) -> PyResult<u64> {
    use polyfft::Domain;
    let field = PrimeField::new(modulus).map_err(to_py_err)?;
    field.primitive_root_of_order(n).map_err(to_py_err)
}

#[pymodule]
fn polyfft_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("DEFAULT_MODULUS", PrimeField::NTT_FRIENDLY_MODULUS)?;
    m.add_function(wrap_pyfunction!(fft, m)?)?;
    m.add_function(wrap_pyfunction!(ifft, m)?)?;
    m.add_function(wrap_pyfunction!(naive_dft, m)?)?;
    m.add_function(wrap_pyfunction!(multiply, m)?)?;
    m.add_function(wrap_pyfunction!(bit_reverse, m)?)?;
    m.add_function(wrap_pyfunction!(primitive_root, m)?)?;
    Ok(())
}
