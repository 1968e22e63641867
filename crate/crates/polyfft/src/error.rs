use thiserror::Error;

/// Errors shared across the whole crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus {0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("root order must be positive")]
    ZeroOrder,
    #[error("w is not a primitive root of the requested order")]
    InvalidRoot,
    #[error("hypothesis size p <= 2^n violated: size {size} > {capacity}")]
    SizeExceedsOrder { size: usize, capacity: usize },
    #[error("no primitive 2^{requested}-th root available (2-adic capacity is {capacity})")]
    OrderUnavailable { requested: u32, capacity: u32 },
    #[error("2^n is not invertible in this field")]
    NonInvertibleOrder,
    #[error("division by zero")]
    DivisionByZero,
    #[error("digit base must be at least 2")]
    BaseTooSmall,
    #[error("value {value} has more than {width} digits in base {base}")]
    DigitRange { base: u64, width: u32, value: u64 },
    #[error("dilation stride must be positive")]
    ZeroStride,
}

pub type Result<T> = std::result::Result<T, Error>;
