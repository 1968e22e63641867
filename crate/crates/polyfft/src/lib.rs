//! Radix-2 FFT/NTT over generic coefficient domains.
//!
//! The crate keeps every formulation of the transform side by side —
//! recursive, butterfly, and iterative with explicit bit-reversal — together
//! with the brute-force evaluation oracle and an executable property suite
//! that checks the algorithms against each other and against the oracle.
//!
//! Concrete domains: exact prime fields `Z_p` (default modulus
//! 998244353 = 119·2^23 + 1) and complex doubles with tolerance-based
//! comparison. All values are immutable after construction and all
//! operations are pure.

pub mod algebra;
mod error;
pub mod inverse;
pub mod iterative;
pub mod poly;
pub mod selfcheck;
pub mod transform;

pub use algebra::{ComplexDomain, Domain, FftPlan, Field, PrimeField};
pub use error::{Error, Result};
pub use poly::Polynomial;
pub use transform::Engine;
