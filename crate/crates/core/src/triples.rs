//! Generator pairs `(m, n)`, the primitive triples they produce, the 2-adic
//! profile of the pair and the exclusion-condition scan.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

pub use crate::numerics::is_prime_power;
use crate::numerics::val_p;
use crate::{Error, Result};

/// Coprime `m > n ≥ 1` of opposite parity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimPair {
    m: BigInt,
    n: BigInt,
}

pub(crate) fn ser_big<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl Serialize for PrimPair {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("PrimPair", 2)?;
        st.serialize_field("m", &self.m.to_string())?;
        st.serialize_field("n", &self.n.to_string())?;
        st.end()
    }
}

impl PrimPair {
    /// Validates `(m, n)` in that order.
    pub fn new(m: impl Into<BigInt>, n: impl Into<BigInt>) -> Result<Self> {
        let (m, n) = (m.into(), n.into());
        if n < BigInt::one() || m <= n {
            return Err(Error::NotOrdered { m: m.to_string(), n: n.to_string() });
        }
        if !m.gcd(&n).is_one() {
            return Err(Error::NotCoprime { m: m.to_string(), n: n.to_string() });
        }
        if m.is_odd() == n.is_odd() {
            let parity = if m.is_odd() { "odd" } else { "even" };
            return Err(Error::SameParity { m: m.to_string(), n: n.to_string(), parity });
        }
        Ok(PrimPair { m, n })
    }

    /// Accepts either order, so `(4, 13)` and `(13, 4)` give the same pair.
    /// When neither order is valid the error for `(max, min)` is returned.
    pub fn from_unordered(u: impl Into<BigInt>, v: impl Into<BigInt>) -> Result<Self> {
        let (u, v) = (u.into(), v.into());
        if u >= v {
            Self::new(u, v)
        } else {
            Self::new(v, u)
        }
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    pub fn m_even(&self) -> bool {
        self.m.is_even()
    }

    /// The derived triple; `a² + b² = c²` is checked before returning.
    pub fn triple(&self) -> PythTriple {
        let m2 = &self.m * &self.m;
        let n2 = &self.n * &self.n;
        let t = PythTriple { a: &m2 - &n2, b: &self.m * &self.n * 2u32, c: &m2 + &n2 };
        assert_eq!(&t.a * &t.a + &t.b * &t.b, &t.c * &t.c);
        t
    }

    pub fn profile(&self) -> Result<TwoAdicProfile> {
        profile_of(self)
    }

    /// Every valid pair with `m ≤ m_max`, ordered by `(m, n)`.
    pub fn all_up_to(m_max: u64) -> Vec<PrimPair> {
        let mut out = Vec::new();
        for m in 2..=m_max {
            for n in 1..m {
                if (m + n) % 2 == 1 && m.gcd(&n) == 1 {
                    out.push(PrimPair { m: m.into(), n: n.into() });
                }
            }
        }
        out
    }
}

impl fmt::Display for PrimPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

pub fn new_pair(m: impl Into<BigInt>, n: impl Into<BigInt>) -> Result<PrimPair> {
    PrimPair::new(m, n)
}

pub fn triple_of(p: &PrimPair) -> PythTriple {
    p.triple()
}

/// `a = m² − n²`, `b = 2mn`, `c = m² + n²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PythTriple {
    #[serde(serialize_with = "ser_big")]
    pub a: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub b: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub c: BigInt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Member {
    M,
    N,
}

/// Even member `2^alpha · i`, odd member `2^beta · j + e` with `i`, `j` odd,
/// `beta ≥ 2` and `e = ±1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoAdicProfile {
    pub alpha: u32,
    pub beta: u32,
    pub e: i8,
    #[serde(serialize_with = "ser_big")]
    pub i: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub j: BigInt,
    pub even_member: Member,
}

impl TwoAdicProfile {
    /// `(even member, odd member)` rebuilt from the profile.
    pub fn reconstruct(&self) -> (BigInt, BigInt) {
        let even = (BigInt::one() << self.alpha) * &self.i;
        let odd = (BigInt::one() << self.beta) * &self.j + BigInt::from(self.e);
        (even, odd)
    }

    /// `(m, n)` rebuilt from the profile.
    pub fn reconstruct_pair(&self) -> (BigInt, BigInt) {
        let (even, odd) = self.reconstruct();
        match self.even_member {
            Member::M => (even, odd),
            Member::N => (odd, even),
        }
    }
}

pub fn profile_of(p: &PrimPair) -> Result<TwoAdicProfile> {
    let (even, odd, even_member) =
        if p.m.is_even() { (&p.m, &p.n, Member::M) } else { (&p.n, &p.m, Member::N) };
    if odd.is_one() {
        return Err(Error::ProfileUndefined);
    }
    let two = BigInt::from(2);
    let alpha = val_p(even, &two)?;
    let i = even >> alpha;
    let e: i8 = if odd.mod_floor(&BigInt::from(4)).is_one() { 1 } else { -1 };
    let shifted = odd - BigInt::from(e);
    let beta = val_p(&shifted, &two)?;
    let j = &shifted >> beta;
    debug_assert!(beta >= 2 && j.is_positive() && j.is_odd());
    Ok(TwoAdicProfile { alpha, beta, e, i, j, even_member })
}

/// The five conditions under which the ordering `x < z` is derived.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub alpha_ge_2: bool,
    pub n_ge_4: bool,
    pub two_alpha_ne_beta_plus_1: bool,
    pub c_not_prime_power: bool,
    pub m_minus_n_ge_3: bool,
    pub all: bool,
}

pub fn exclusion_conditions(p: &PrimPair) -> Result<ConditionReport> {
    let prof = profile_of(p)?;
    let c = p.triple().c;
    let alpha_ge_2 = prof.alpha >= 2;
    let n_ge_4 = p.n >= BigInt::from(4);
    let two_alpha_ne_beta_plus_1 = 2 * prof.alpha != prof.beta + 1;
    let c_not_prime_power = !is_prime_power(&c);
    let m_minus_n_ge_3 = &p.m - &p.n >= BigInt::from(3);
    let all = alpha_ge_2 && n_ge_4 && two_alpha_ne_beta_plus_1 && c_not_prime_power && m_minus_n_ge_3;
    Ok(ConditionReport { alpha_ge_2, n_ge_4, two_alpha_ne_beta_plus_1, c_not_prime_power, m_minus_n_ge_3, all })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinCScan {
    #[serde(serialize_with = "ser_opt_big")]
    pub c_min: Option<BigInt>,
    pub pairs: Vec<PrimPair>,
}

fn ser_opt_big<S: Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_some(&v.to_string()),
        None => s.serialize_none(),
    }
}

/// Smallest `c ≤ c_limit` over pairs meeting every exclusion condition, with
/// all pairs attaining it ordered by `n`.
pub fn min_c_scan(c_limit: u64) -> MinCScan {
    let max_n = (c_limit as f64).sqrt() as u64 + 1;
    let mut hits: Vec<(u64, PrimPair)> = (1..=max_n)
        .into_par_iter()
        .flat_map_iter(|n| {
            let mut local = Vec::new();
            let mut m = n + 3;
            while m * m + n * n <= c_limit {
                if let Ok(p) = PrimPair::new(m, n) {
                    if exclusion_conditions(&p).map(|r| r.all).unwrap_or(false) {
                        local.push((m * m + n * n, p));
                    }
                }
                m += 1;
            }
            local
        })
        .collect();
    let Some(c_min) = hits.iter().map(|(c, _)| *c).min() else {
        return MinCScan { c_min: None, pairs: Vec::new() };
    };
    hits.retain(|(c, _)| *c == c_min);
    let mut pairs: Vec<PrimPair> = hits.into_iter().map(|(_, p)| p).collect();
    pairs.sort_by(|a, b| (&a.n, &a.m).cmp(&(&b.n, &b.m)));
    MinCScan { c_min: Some(BigInt::from(c_min)), pairs }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(m: i64, n: i64) -> PrimPair {
        PrimPair::new(m, n).unwrap()
    }

    #[test]
    fn pair_validation() {
        assert!(PrimPair::new(2, 1).is_ok());
        assert!(PrimPair::new(13, 4).is_ok());
        assert!(matches!(PrimPair::new(9, 3), Err(Error::NotCoprime { .. })));
        assert!(matches!(PrimPair::new(3, 5), Err(Error::NotOrdered { .. })));
        assert!(matches!(PrimPair::new(7, 3), Err(Error::SameParity { parity: "odd", .. })));
        assert!(matches!(PrimPair::new(2, 0), Err(Error::NotOrdered { .. })));
        assert_eq!(PrimPair::from_unordered(4, 13).unwrap(), pair(13, 4));
        assert!(PrimPair::from_unordered(3, 9).unwrap_err().to_string().contains("not coprime"));
    }

    #[test]
    fn triple_examples() {
        let t = pair(2, 1).triple();
        assert_eq!((t.a, t.b, t.c), (3.into(), 4.into(), 5.into()));
        let t = pair(3, 2).triple();
        assert_eq!((t.a, t.b, t.c), (5.into(), 12.into(), 13.into()));
        let t = pair(13, 4).triple();
        assert_eq!((t.a, t.b, t.c), (153.into(), 104.into(), 185.into()));
    }

    #[test]
    fn profile_examples() {
        let p = profile_of(&pair(13, 4)).unwrap();
        assert_eq!((p.alpha, p.beta, p.e), (2, 2, 1));
        assert_eq!((p.i.clone(), p.j.clone()), (1.into(), 3.into()));
        assert_eq!(p.even_member, Member::N);

        let p = profile_of(&pair(11, 8)).unwrap();
        assert_eq!((p.alpha, p.beta, p.e), (3, 2, -1));
        assert_eq!((p.i.clone(), p.j.clone()), (1.into(), 3.into()));

        let p = profile_of(&pair(12, 7)).unwrap();
        assert_eq!((p.alpha, p.beta, p.e), (2, 3, -1));
        assert_eq!((p.i.clone(), p.j.clone()), (3.into(), 1.into()));
        assert_eq!(p.even_member, Member::M);
    }

    #[test]
    fn profile_undefined_for_unit_odd_member() {
        assert_eq!(profile_of(&pair(4, 1)), Err(Error::ProfileUndefined));
        assert_eq!(profile_of(&pair(2, 1)), Err(Error::ProfileUndefined));
    }

    #[test]
    fn profile_round_trip_small() {
        for p in PrimPair::all_up_to(500) {
            if let Ok(prof) = profile_of(&p) {
                assert_eq!(prof.reconstruct_pair(), (p.m.clone(), p.n.clone()), "{p}");
                assert!(prof.beta >= 2);
            }
        }
    }

    #[test]
    fn exclusion_examples() {
        assert!(exclusion_conditions(&pair(13, 4)).unwrap().all);
        assert!(exclusion_conditions(&pair(11, 8)).unwrap().all);
        let r = exclusion_conditions(&pair(4, 3)).unwrap();
        assert!(!r.m_minus_n_ge_3 && !r.all);
    }

    #[test]
    fn min_c_examples() {
        let r = min_c_scan(1000);
        assert_eq!(r.c_min, Some(185.into()));
        assert_eq!(r.pairs, vec![pair(13, 4), pair(11, 8)]);
        assert_eq!(min_c_scan(185), r);
        let empty = min_c_scan(100);
        assert!(empty.c_min.is_none() && empty.pairs.is_empty());
    }
}
