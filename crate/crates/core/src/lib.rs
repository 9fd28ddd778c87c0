//! Verification toolkit for the equation `a^x + b^y = c^z` over primitive
//! Pythagorean triples `a = m² − n²`, `b = 2mn`, `c = m² + n²`.
//!
//! The crate is split into:
//!
//! * [`numerics`]: valuations, Gaussian integers, factorisation helpers and
//!   outward-rounded real intervals backed by MPFR.
//! * [`triples`]: generator pairs, derived triples, the 2-adic profile and
//!   the exclusion-condition scan.
//! * [`residues`]: Jacobi and quartic residue symbols and the parity engine
//!   for pairs with `4 | m`.
//! * [`search`]: exact brute-force solver and the Gaussian-integer structure
//!   of candidate solutions.
//! * [`bounds`]: exponent ordering, two-logarithm lower bounds, bounds on
//!   `z − x` and certified threshold inequalities.

pub mod bounds;
mod error;
pub mod numerics;
pub mod residues;
pub mod search;
pub mod triples;

pub use error::{Error, Result};
