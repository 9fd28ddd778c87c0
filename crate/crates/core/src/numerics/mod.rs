//! Exact integer, Gaussian-integer and certified interval arithmetic.

mod factor;
mod gaussian;
mod interval;
mod valuation;

pub use factor::{factorize, is_probable_prime, is_prime_power, small_factorize};
pub use gaussian::GaussianInt;
pub use interval::{iv_fn, IvFn, RInterval, DEFAULT_PRECISION, THRESHOLD_PRECISION};
pub use valuation::{perfect_power_exponent, val_p};

pub use num_bigint::BigInt;
