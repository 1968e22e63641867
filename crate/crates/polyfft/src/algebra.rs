//! Coefficient domains and primitive-root machinery.
//!
//! The forward transform works over any integral domain, the inverse needs a
//! field. Two concrete instances are provided: a prime field `Z_p` with exact
//! arithmetic (the default is the NTT-friendly `Z_998244353`) and complex
//! doubles with tolerance-based comparison.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Contract every coefficient domain must satisfy: commutative ring
/// operations, the natural-number embedding, and semantic equality. The
/// product of two nonzero elements is expected to be nonzero (integral
/// domain); this is checked by the test suite, not at runtime.
///
/// Operations take `&self` so a domain can carry runtime configuration
/// (modulus, comparison tolerance).
pub trait Domain: Clone + PartialEq + std::fmt::Debug {
    type Elem: Clone + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// The natural-number embedding `n ↦ 1 + 1 + … + 1`.
    fn from_nat(&self, n: u64) -> Self::Elem;

    /// Semantic equality. Exact in `Z_p`, tolerance-based over the complex
    /// doubles.
    fn elem_eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.elem_eq(a, &self.zero())
    }

    /// Square-and-multiply exponentiation; `pow(x, 0)` is one.
    fn pow(&self, x: &Self::Elem, k: u64) -> Self::Elem {
        let mut base = x.clone();
        let mut acc = self.one();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    /// Largest `n` for which the domain can produce a primitive 2^n-th root.
    fn root_capacity(&self) -> u32;

    /// A primitive 2^n-th root of unity, or `OrderUnavailable` when the
    /// domain has none of that order.
    fn primitive_root_of_order(&self, n: u32) -> Result<Self::Elem>;
}

/// Field extension of the domain contract: multiplicative inverses.
pub trait Field: Domain {
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
}

/// True iff `w^order = 1` and `w^(order/q) != 1` for every prime factor `q`
/// of `order`, i.e. `order` is the exact multiplicative order of `w`.
pub fn is_primitive_root<D: Domain>(domain: &D, w: &D::Elem, order: u64) -> Result<bool> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    if !domain.elem_eq(&domain.pow(w, order), &domain.one()) {
        return Ok(false);
    }
    for q in distinct_prime_factors(order) {
        if domain.elem_eq(&domain.pow(w, order / q), &domain.one()) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// A transform plan: order exponent `n` (transform length 2^n) and a root
/// that passed the primitivity check at construction. Validation happens
/// once here; the recursion below trusts it.
#[derive(Clone, Debug)]
pub struct FftPlan<D: Domain> {
    domain: D,
    log_len: u32,
    root: D::Elem,
}

impl<D: Domain> FftPlan<D> {
    /// Validates that `root` is a primitive 2^`log_len`-th root of unity.
    pub fn new(domain: D, log_len: u32, root: D::Elem) -> Result<Self> {
        if !is_primitive_root(&domain, &root, 1u64 << log_len)? {
            return Err(Error::InvalidRoot);
        }
        Ok(Self {
            domain,
            log_len,
            root,
        })
    }

    /// Builds a plan from the domain's own root supply.
    pub fn with_order(domain: D, log_len: u32) -> Result<Self> {
        let root = domain.primitive_root_of_order(log_len)?;
        Ok(Self {
            domain,
            log_len,
            root,
        })
    }

    pub fn domain(&self) -> &D {
        &self.domain
    }

    pub fn log_len(&self) -> u32 {
        self.log_len
    }

    pub fn len(&self) -> usize {
        1usize << self.log_len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn root(&self) -> &D::Elem {
        &self.root
    }

    /// Plan with exponent `n-1` and root `w²`. The square of a primitive
    /// 2^n-th root is a primitive 2^(n-1)-th root, so the result stays
    /// validated.
    pub fn halve(&self) -> Result<Self> {
        if self.log_len == 0 {
            return Err(Error::ZeroOrder);
        }
        let root = self.domain.mul(&self.root, &self.root);
        debug_assert!(
            is_primitive_root(&self.domain, &root, 1u64 << (self.log_len - 1)).unwrap_or(false)
        );
        Ok(Self {
            domain: self.domain.clone(),
            log_len: self.log_len - 1,
            root,
        })
    }
}

/// The prime field `Z_p` for an odd prime `p`. Elements are residues in
/// `[0, p)` stored as `u64`; products go through `u128` so arithmetic is
/// exact for any 64-bit modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    modulus: u64,
}

impl PrimeField {
    /// The standard NTT-friendly modulus 998244353 = 119·2^23 + 1.
    pub const NTT_FRIENDLY_MODULUS: u64 = 998_244_353;

    pub fn new(modulus: u64) -> Result<Self> {
        if modulus == 2 || !is_prime_u64(modulus) {
            return Err(Error::NotOddPrime(modulus));
        }
        Ok(Self { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// 2-adic valuation of `p - 1`: the largest `n` with `2^n | p - 1`.
    pub fn two_adic_capacity(&self) -> u32 {
        (self.modulus - 1).trailing_zeros()
    }

    /// Smallest generator of the multiplicative group, found by checking
    /// `g^((p-1)/q) != 1` for every prime factor `q` of `p - 1`.
    pub fn generator(&self) -> u64 {
        let order = self.modulus - 1;
        let factors = distinct_prime_factors(order);
        (2..self.modulus)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&q| self.pow(&g, order / q) != 1)
            })
            .expect("every prime field has a generator")
    }
}

impl Domain for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.modulus
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        debug_assert!(*a < self.modulus && *b < self.modulus);
        // a + b may overflow u64 for moduli above 2^63.
        ((*a as u128 + *b as u128) % self.modulus as u128) as u64
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        debug_assert!(*a < self.modulus && *b < self.modulus);
        if a >= b {
            a - b
        } else {
            a + (self.modulus - b)
        }
    }

    fn neg(&self, a: &u64) -> u64 {
        debug_assert!(*a < self.modulus);
        if *a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        debug_assert!(*a < self.modulus && *b < self.modulus);
        ((*a as u128 * *b as u128) % self.modulus as u128) as u64
    }

    fn from_nat(&self, n: u64) -> u64 {
        n % self.modulus
    }

    fn elem_eq(&self, a: &u64, b: &u64) -> bool {
        a == b
    }

    fn root_capacity(&self) -> u32 {
        self.two_adic_capacity()
    }

    fn primitive_root_of_order(&self, n: u32) -> Result<u64> {
        if n > self.two_adic_capacity() {
            return Err(Error::OrderUnavailable {
                requested: n,
                capacity: self.two_adic_capacity(),
            });
        }
        if n == 0 {
            return Ok(self.one());
        }
        let g = self.generator();
        Ok(self.pow(&g, (self.modulus - 1) >> n))
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            return Err(Error::DivisionByZero);
        }
        // Fermat: a^(p-2) mod p.
        Ok(self.pow(a, self.modulus - 2))
    }
}

/// Deterministic Miller-Rabin for `u64`.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let s = d.trailing_zeros();
    d >>= s;
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut base: u64, mut e: u64| {
        let mut acc = 1u64;
        base %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, base);
            }
            base = mulmod(base, base);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Complex doubles with a comparison tolerance. Equality is relative:
/// `|a - b| <= ε · (1 + max(|a|, |b|))`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexDomain {
    epsilon: f64,
    /// When true (the default), the supplied forward root is
    /// `e^(-2πi/2^n)`; the transform is correct for either sign.
    negative_rotation: bool,
}

impl ComplexDomain {
    pub const DEFAULT_EPSILON: f64 = 1e-9;

    pub fn new(epsilon: f64) -> Self {
        Self {
            epsilon,
            negative_rotation: true,
        }
    }

    pub fn with_positive_rotation(mut self) -> Self {
        self.negative_rotation = false;
        self
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }
}

impl Default for ComplexDomain {
    fn default() -> Self {
        Self::new(Self::DEFAULT_EPSILON)
    }
}

impl Domain for ComplexDomain {
    type Elem = Complex64;

    fn zero(&self) -> Complex64 {
        Complex64::new(0.0, 0.0)
    }

    fn one(&self) -> Complex64 {
        Complex64::new(1.0, 0.0)
    }

    fn add(&self, a: &Complex64, b: &Complex64) -> Complex64 {
        a + b
    }

    fn sub(&self, a: &Complex64, b: &Complex64) -> Complex64 {
        a - b
    }

    fn neg(&self, a: &Complex64) -> Complex64 {
        -a
    }

    fn mul(&self, a: &Complex64, b: &Complex64) -> Complex64 {
        a * b
    }

    fn from_nat(&self, n: u64) -> Complex64 {
        Complex64::new(n as f64, 0.0)
    }

    fn elem_eq(&self, a: &Complex64, b: &Complex64) -> bool {
        (a - b).norm() <= self.epsilon * (1.0 + a.norm().max(b.norm()))
    }

    fn root_capacity(&self) -> u32 {
        32
    }

    fn primitive_root_of_order(&self, n: u32) -> Result<Complex64> {
        if n > self.root_capacity() {
            return Err(Error::OrderUnavailable {
                requested: n,
                capacity: self.root_capacity(),
            });
        }
        if n == 0 {
            return Ok(self.one());
        }
        let sign = if self.negative_rotation { -1.0 } else { 1.0 };
        let angle = sign * std::f64::consts::TAU / (1u64 << n) as f64;
        Ok(Complex64::from_polar(1.0, angle))
    }
}

impl Field for ComplexDomain {
    fn inv(&self, a: &Complex64) -> Result<Complex64> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(a.inv())
    }
}
