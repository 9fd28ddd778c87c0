use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use super::int;
use crate::numerics::RInterval;
use crate::search::ExponentTriple;
use crate::triples::PrimPair;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct YBound {
    pub alpha: u32,
    /// `ln n / ln 3`
    pub odd_branch: RInterval,
    /// `ln(2(m-1)) / ((alpha+1) ln 2)`
    pub two_adic_branch: RInterval,
    /// The smaller of the two; `Y < ⌈hi⌉`.
    pub bound: RInterval,
}

/// Upper bound on `Y = y/2` for an exceptional solution.
pub fn y_upper_bound(p: &PrimPair, prec: u32) -> Result<YBound> {
    let alpha = p.profile()?.alpha;
    let ln_n = RInterval::from_bigint(p.n(), prec).ln()?;
    let odd_branch = &ln_n / &int(3, prec).ln()?;
    let two_m1 = RInterval::from_bigint(&((p.m() - 1u32) * 2u32), prec);
    let two_adic_branch = &two_m1.ln()? / &(&int(alpha as i64 + 1, prec) * &RInterval::ln2(prec));
    let bound = odd_branch.min(&two_adic_branch);
    Ok(YBound { alpha, odd_branch, two_adic_branch, bound })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredicateResult {
    pub name: &'static str,
    /// `None` when the predicate's hypothesis does not hold for the pair.
    pub holds: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderingReport {
    /// All exponents even and not `(2, 2, 2)`.
    pub candidate: bool,
    pub predicates: Vec<PredicateResult>,
    pub failed: Vec<&'static str>,
    pub excluded: bool,
}

/// Necessary orderings for an exceptional solution. Predicates are skipped
/// for anything that is not an exceptional candidate.
pub fn ordering_predicates(p: &PrimPair, s: ExponentTriple) -> OrderingReport {
    let candidate = s.all_even() && s != ExponentTriple::TRIVIAL;
    if !candidate {
        return OrderingReport { candidate, predicates: Vec::new(), failed: Vec::new(), excluded: false };
    }
    let (x, y, z) = (s.x, s.y, s.z);
    // the last three rest on x < z, proved only for m > 1.22 n
    let wide = p.m() * 100u32 > p.n() * 122u32;
    let t = p.triple();
    let gated = |v: bool| wide.then_some(v);
    let predicates = vec![
        PredicateResult { name: "z < 2x", holds: Some(z < 2 * x) },
        PredicateResult { name: "z < 2y", holds: Some(z < 2 * y) },
        PredicateResult { name: "|x - z| >= 4", holds: Some(x.abs_diff(z) >= 4) },
        PredicateResult { name: "x < z", holds: gated(x < z) },
        PredicateResult { name: "z < y", holds: gated(z < y) },
        PredicateResult { name: "c^z < 2 b^y", holds: gated(t.c.pow(z) < t.b.pow(y) * 2u32) },
    ];
    let failed: Vec<&'static str> = predicates.iter().filter(|r| r.holds == Some(false)).map(|r| r.name).collect();
    OrderingReport { candidate, excluded: !failed.is_empty(), predicates, failed }
}

/// `ln m / ln n`, the lower bound on `z - x`.
pub fn delta_lower(p: &PrimPair, prec: u32) -> Result<RInterval> {
    delta_lower_raw(p.m(), p.n(), prec)
}

pub fn delta_lower_raw(m: &BigInt, n: &BigInt, prec: u32) -> Result<RInterval> {
    if n < &BigInt::from(2) || m < &BigInt::from(2) {
        return Err(Error::Domain(format!("ln m / ln n needs m, n >= 2, got ({m}, {n})")));
    }
    Ok(&RInterval::from_bigint(m, prec).ln()? / &RInterval::from_bigint(n, prec).ln()?)
}

/// `a^x ≡ c^x (mod b²)` for even `x`.
pub fn even_power_congruence(p: &PrimPair, x: u32) -> Result<bool> {
    if x == 0 || x % 2 == 1 {
        return Err(Error::EvenExponent("x"));
    }
    let t = p.triple();
    let b2 = &t.b * &t.b;
    Ok((t.a.pow(x) - t.c.pow(x)).mod_floor(&b2).is_zero())
}

/// For a solution with `x` even: `c^z ≡ c^x (mod b²)` and, reduced further,
/// `(n²)^x ≡ (n²)^z (mod m²)`. Returns both.
pub fn delta_congruence(p: &PrimPair, s: ExponentTriple) -> Result<(bool, bool)> {
    if s.x == 0 || s.x % 2 == 1 {
        return Err(Error::EvenExponent("x"));
    }
    let t = p.triple();
    let b2 = &t.b * &t.b;
    let full = (t.c.pow(s.z) - t.c.pow(s.x)).mod_floor(&b2).is_zero();
    let m2 = p.m() * p.m();
    let n2 = p.n() * p.n();
    let reduced = (n2.pow(s.x) - n2.pow(s.z)).mod_floor(&m2).is_zero();
    Ok((full, reduced))
}
