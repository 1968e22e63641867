//! On-disk document formats.
//!
//! Coefficients are stored in ascending degree order: index `i` is the
//! coefficient of `X^i`. Prime-domain coefficients are decimal integers in
//! `[0, p)`, complex coefficients are `[re, im]` pairs. A plain-text file of
//! whitespace-separated decimal coefficients is also accepted for prime
//! domains (the modulus then comes from `--modulus`).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use polyfft::{ComplexDomain, Polynomial, PrimeField};

use crate::CliError;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(tag = "domain", rename_all = "lowercase", deny_unknown_fields)]
pub enum PolynomialDocument {
    Prime { modulus: u64, coeffs: Vec<u64> },
    Complex { epsilon: f64, coeffs: Vec<[f64; 2]> },
}

impl PolynomialDocument {
    /// Parses JSON when the text looks like a JSON object, otherwise the
    /// plain-text prime format.
    pub fn parse(text: &str, plaintext_modulus: u64) -> Result<Self, CliError> {
        if text.trim_start().starts_with('{') {
            serde_json::from_str(text)
                .map_err(|e| CliError::Input(format!("invalid polynomial document: {e}")))
        } else {
            let coeffs = text
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<u64>().map_err(|_| {
                        CliError::Input(format!("invalid coefficient {tok:?} in plain-text input"))
                    })
                })
                .collect::<Result<Vec<u64>, _>>()?;
            Ok(Self::Prime {
                modulus: plaintext_modulus,
                coeffs,
            })
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serialization cannot fail")
    }
}

/// A prime document checked against its modulus, ready for the transforms.
pub fn prime_poly(
    modulus: u64,
    coeffs: &[u64],
) -> Result<(PrimeField, Polynomial<PrimeField>), CliError> {
    let field = PrimeField::new(modulus).map_err(|e| CliError::Input(e.to_string()))?;
    if let Some(c) = coeffs.iter().find(|&&c| c >= modulus) {
        return Err(CliError::Input(format!(
            "coefficient {c} is outside [0, {modulus})"
        )));
    }
    let poly = Polynomial::from_coeffs(field, coeffs.to_vec());
    Ok((field, poly))
}

pub fn complex_poly(epsilon: f64, coeffs: &[[f64; 2]]) -> Result<(ComplexDomain, Polynomial<ComplexDomain>), CliError> {
    if !(epsilon.is_finite() && epsilon >= 0.0) {
        return Err(CliError::Input(format!("invalid epsilon {epsilon}")));
    }
    if coeffs.iter().flatten().any(|c| !c.is_finite()) {
        return Err(CliError::Input("non-finite complex coefficient".into()));
    }
    let domain = ComplexDomain::new(epsilon);
    let poly = Polynomial::from_coeffs(
        domain,
        coeffs.iter().map(|[re, im]| Complex64::new(*re, *im)).collect(),
    );
    Ok((domain, poly))
}

pub fn prime_document(modulus: u64, poly: &Polynomial<PrimeField>) -> PolynomialDocument {
    PolynomialDocument::Prime {
        modulus,
        coeffs: poly.coeffs().to_vec(),
    }
}

pub fn complex_document(epsilon: f64, poly: &Polynomial<ComplexDomain>) -> PolynomialDocument {
    PolynomialDocument::Complex {
        epsilon,
        coeffs: poly.coeffs().iter().map(|c| [c.re, c.im]).collect(),
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(tag = "domain", rename_all = "lowercase")]
pub enum TraceDocument {
    Prime {
        modulus: u64,
        n: u32,
        root: u64,
        stages: Vec<PrimeStageRecord>,
    },
    Complex {
        epsilon: f64,
        n: u32,
        root: [f64; 2],
        stages: Vec<ComplexStageRecord>,
    },
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct PrimeStageRecord {
    pub depth: u32,
    pub root: u64,
    pub coeffs: Vec<u64>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ComplexStageRecord {
    pub depth: u32,
    pub root: [f64; 2],
    pub coeffs: Vec<[f64; 2]>,
}
