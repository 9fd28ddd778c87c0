//! Jacobi and quartic residue symbols, and the parity engine that decides
//! when every solution with `4 | m` and `y > 1` has `x`, `y`, `z` even.

mod jacobi;
mod parity;
mod quartic;

pub use jacobi::jacobi;
pub use parity::{
    minus_one_power_primes, parity_engine, parity_feasible, quadratic_sieve, quartic_chain, split_de, DeDecomposition,
    DeSplit, Parity, ParityConstraint, ParityKind, ParityVerdict, QuarticChain, Rule,
};
pub use quartic::{gaussian_prime_factors, is_primary, primary_form, quartic_symbol, QuarticValue};
