//! Exponent orderings, the two-logarithm lower bound and its parameter
//! checks, bounds on `z - x`, and certified threshold inequalities in `t = ln m`.

mod laurent;
mod ordering;
mod threshold;

pub use laurent::{
    cor_lower_bound, delta_bounds, delta_upper, delta_upper_log_c, epsilon_n, epsilon_n_exact, k_at_minimum_a2,
    laurent_check, lemma_constants, lemma_instance, min_a2_for_k, CorBound, DeltaBounds, KnCheck, LaurentCheck,
    LaurentInstance, LemmaCheck, LemmaConstants,
};
pub use ordering::{
    delta_congruence, delta_lower, delta_lower_raw, even_power_congruence, ordering_predicates, y_upper_bound,
    OrderingReport, PredicateResult, YBound,
};
pub use threshold::{
    certify_threshold, crossover, ln_of_decimal, rhs_final, Crossover, ThresholdCert, ThresholdForm,
};

use crate::numerics::RInterval;

fn dec(s: &str, prec: u32) -> RInterval {
    RInterval::from_decimal(s, prec).expect("decimal literal")
}

fn int(v: i64, prec: u32) -> RInterval {
    RInterval::from_int(v, prec)
}

/// `Some(true)` if `a ≤ b` is certain, `Some(false)` if `a > b` is certain.
fn certainly_le(a: &RInterval, b: &RInterval) -> Option<bool> {
    if a.hi() <= b.lo() {
        Some(true)
    } else if a.lo() > b.hi() {
        Some(false)
    } else {
        None
    }
}
