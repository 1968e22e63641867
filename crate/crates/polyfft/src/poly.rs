//! Dense univariate polynomials over a coefficient domain.
//!
//! A polynomial is a coefficient vector with index `i` holding the
//! coefficient of `X^i`. The stored vector is normalized: the last entry is
//! nonzero, and the empty vector is the zero polynomial. `size` is the
//! length of that vector, i.e. degree + 1 for nonzero polynomials.

use crate::algebra::Domain;
use crate::error::{Error, Result};

/// Ceiling half, `(n + 1) / 2`. Bounds the size of the even part.
pub fn uphalf(n: usize) -> usize {
    (n + 1) / 2
}

#[derive(Clone, Debug)]
pub struct Polynomial<D: Domain> {
    domain: D,
    coeffs: Vec<D::Elem>,
}

impl<D: Domain> Polynomial<D> {
    pub fn zero(domain: D) -> Self {
        Self {
            domain,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(domain: D, c: D::Elem) -> Self {
        Self::from_coeffs(domain, vec![c])
    }

    /// Builds from raw coefficients, trimming trailing zeros.
    pub fn from_coeffs(domain: D, mut coeffs: Vec<D::Elem>) -> Self {
        while coeffs.last().map_or(false, |c| domain.is_zero(c)) {
            coeffs.pop();
        }
        Self { domain, coeffs }
    }

    /// The builder `\poly_(i < n) F i`: size at most `n`, i-th coefficient
    /// `f(i)`. `f` is invoked in ascending index order, so stateful closures
    /// (e.g. accumulated root powers) are fine.
    pub fn build(domain: D, n: usize, mut f: impl FnMut(usize) -> D::Elem) -> Self {
        let coeffs = (0..n).map(|i| f(i)).collect();
        Self::from_coeffs(domain, coeffs)
    }

    pub fn domain(&self) -> &D {
        &self.domain
    }

    pub fn coeffs(&self) -> &[D::Elem] {
        &self.coeffs
    }

    pub fn size(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `X^i`; zero beyond the stored size.
    pub fn coeff(&self, i: usize) -> D::Elem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.domain.zero())
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: &D::Elem) -> D::Elem {
        let mut acc = self.domain.zero();
        for c in self.coeffs.iter().rev() {
            acc = self.domain.add(&self.domain.mul(&acc, x), c);
        }
        acc
    }

    /// Coefficients at even indices: `coeff(result, i) = coeff(p, 2i)`.
    pub fn even_part(&self) -> Self {
        Self::build(self.domain.clone(), uphalf(self.size()), |i| {
            self.coeff(2 * i)
        })
    }

    /// Coefficients at odd indices: `coeff(result, i) = coeff(p, 2i + 1)`.
    pub fn odd_part(&self) -> Self {
        Self::build(self.domain.clone(), self.size() / 2, |i| {
            self.coeff(2 * i + 1)
        })
    }

    /// The `m` low-order terms.
    pub fn take_low(&self, m: usize) -> Self {
        Self::build(self.domain.clone(), m.min(self.size()), |i| self.coeff(i))
    }

    /// The high-order terms shifted down by `m`.
    pub fn drop_low(&self, m: usize) -> Self {
        Self::build(self.domain.clone(), self.size().saturating_sub(m), |i| {
            self.coeff(i + m)
        })
    }

    /// Substitutes `X^k` for `X` (composition with a monomial): the
    /// coefficient of `X^(k·i)` in the result is `coeff(self, i)`.
    pub fn dilate(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroStride);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let mut out = vec![self.domain.zero(); (self.size() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k] = c.clone();
        }
        Ok(Self::from_coeffs(self.domain.clone(), out))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.domain, other.domain, "mixed coefficient domains");
        Self::build(self.domain.clone(), self.size().max(other.size()), |i| {
            self.domain.add(&self.coeff(i), &other.coeff(i))
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.domain, other.domain, "mixed coefficient domains");
        Self::build(self.domain.clone(), self.size().max(other.size()), |i| {
            self.domain.sub(&self.coeff(i), &other.coeff(i))
        })
    }

    pub fn neg(&self) -> Self {
        Self::build(self.domain.clone(), self.size(), |i| {
            self.domain.neg(&self.coeff(i))
        })
    }

    /// Multiplication by the scalar `c`.
    pub fn scale(&self, c: &D::Elem) -> Self {
        Self::build(self.domain.clone(), self.size(), |i| {
            self.domain.mul(&self.coeff(i), c)
        })
    }

    /// Multiplication by `X^m`.
    pub fn mul_xpow(&self, m: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = vec![self.domain.zero(); m];
        out.extend(self.coeffs.iter().cloned());
        // last coefficient is unchanged, so no re-normalization needed
        Self {
            domain: self.domain.clone(),
            coeffs: out,
        }
    }

    /// Schoolbook convolution, the O(n²) multiplication oracle.
    pub fn naive_mul(&self, other: &Self) -> Self {
        assert_eq!(self.domain, other.domain, "mixed coefficient domains");
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.domain.clone());
        }
        let mut out = vec![self.domain.zero(); self.size() + other.size() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = self.domain.add(&out[i + j], &self.domain.mul(a, b));
            }
        }
        Self::from_coeffs(self.domain.clone(), out)
    }
}

/// Equality pads to the longer length and compares coefficient-wise through
/// the domain, so it is exact over `Z_p` and ε-tolerant over the complex
/// doubles (where normalization is unstable under floating-point noise).
impl<D: Domain> PartialEq for Polynomial<D> {
    fn eq(&self, other: &Self) -> bool {
        if self.domain != other.domain {
            return false;
        }
        (0..self.size().max(other.size()))
            .all(|i| self.domain.elem_eq(&self.coeff(i), &other.coeff(i)))
    }
}
