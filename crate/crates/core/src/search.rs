//! Exact solver for `a^x + b^y = c^z` over a generator pair, the `(k, l)`
//! decomposition of an all-even solution and Gaussian `Z`-th roots.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::numerics::{perfect_power_exponent, small_factorize, val_p, GaussianInt};
use crate::residues::{quadratic_sieve, ParityConstraint};
use crate::triples::{ser_big, PrimPair};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ExponentTriple {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl ExponentTriple {
    pub const TRIVIAL: ExponentTriple = ExponentTriple { x: 2, y: 2, z: 2 };

    pub fn new(x: u32, y: u32, z: u32) -> Self {
        ExponentTriple { x, y, z }
    }

    pub fn all_even(&self) -> bool {
        self.x.is_multiple_of(2) && self.y.is_multiple_of(2) && self.z.is_multiple_of(2)
    }
}

impl fmt::Display for ExponentTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// A solution checked with exact arithmetic when it was built.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolutionRecord {
    pair: PrimPair,
    sol: ExponentTriple,
    exceptional: bool,
}

impl SolutionRecord {
    pub fn new(pair: PrimPair, sol: ExponentTriple) -> Result<Self> {
        if !is_solution(&pair, sol) {
            return Err(Error::Precondition(format!("{sol} does not solve the equation for {pair}")));
        }
        let exceptional = sol.all_even() && sol != ExponentTriple::TRIVIAL;
        Ok(SolutionRecord { pair, sol, exceptional })
    }

    pub fn pair(&self) -> &PrimPair {
        &self.pair
    }

    pub fn sol(&self) -> ExponentTriple {
        self.sol
    }

    pub fn exceptional(&self) -> bool {
        self.exceptional
    }

    pub fn is_trivial(&self) -> bool {
        self.sol == ExponentTriple::TRIVIAL
    }
}

pub fn is_solution(p: &PrimPair, s: ExponentTriple) -> bool {
    if s.x == 0 || s.y == 0 || s.z == 0 {
        return false;
    }
    let t = p.triple();
    t.a.pow(s.x) + t.b.pow(s.y) == t.c.pow(s.z)
}

const FILTER_MODULI: [u64; 12] = [16, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

struct ResidueFilter {
    q: u64,
    a: Vec<u64>,
    b: Vec<u64>,
    c: Vec<u64>,
    // bit 0: some even y ≤ cap hits the residue, bit 1: some odd y does
    b_hits: Vec<u8>,
}

/// Cheap necessary conditions on `(x, y, z)`: the parity sieve, then power
/// residues modulo 16 and small primes. A triple rejected here is not a
/// solution.
pub struct Pruner {
    cap: u32,
    sieve: Vec<ParityConstraint>,
    filters: Vec<ResidueFilter>,
}

impl Pruner {
    pub fn new(p: &PrimPair, cap: u32) -> Self {
        let t = p.triple();
        let powers = |base: &BigInt, q: u64| -> Vec<u64> {
            let r = base.mod_floor(&BigInt::from(q)).to_u64().expect("small residue");
            let mut v = vec![1u64; cap as usize + 1];
            for e in 1..=cap as usize {
                v[e] = v[e - 1] * r % q;
            }
            v
        };
        let filters = FILTER_MODULI
            .iter()
            .map(|&q| {
                let b = powers(&t.b, q);
                let mut b_hits = vec![0u8; q as usize];
                for (y, &r) in b.iter().enumerate().skip(1) {
                    b_hits[r as usize] |= 1 << (y % 2);
                }
                ResidueFilter { q, a: powers(&t.a, q), b, c: powers(&t.c, q), b_hits }
            })
            .collect();
        Pruner { cap, sieve: quadratic_sieve(p), filters }
    }

    // Mask of y parities (bit 0 even, bit 1 odd) still possible for (x, z).
    fn y_mask(&self, x: u32, z: u32) -> u8 {
        let mut mask = 0u8;
        for py in 0..2u64 {
            if self.sieve.iter().all(|c| c.holds(x as u64, py, z as u64)) {
                mask |= 1 << py;
            }
        }
        for f in &self.filters {
            if mask == 0 {
                break;
            }
            let target = (f.c[z as usize] + f.q - f.a[x as usize]) % f.q;
            mask &= f.b_hits[target as usize];
        }
        mask
    }

    /// Whether `(x, y, z)` survives every filter.
    pub fn admits(&self, s: ExponentTriple) -> bool {
        if [s.x, s.y, s.z].iter().any(|&e| e == 0 || e > self.cap) {
            return false;
        }
        self.sieve.iter().all(|c| c.holds(s.x as u64, s.y as u64, s.z as u64))
            && self
                .filters
                .iter()
                .all(|f| (f.a[s.x as usize] + f.b[s.y as usize]) % f.q == f.c[s.z as usize])
    }
}

/// Every solution with `1 ≤ x, y, z ≤ cap`, each confirmed exactly.
pub fn find_solutions(p: &PrimPair, cap: u32) -> Vec<SolutionRecord> {
    let t = p.triple();
    let pruner = Pruner::new(p, cap);
    let a_pow: Vec<BigInt> = (0..=cap).map(|e| t.a.pow(e)).collect();
    let mut out = Vec::new();
    for x in 1..=cap {
        for z in 1..=cap {
            if pruner.y_mask(x, z) == 0 {
                continue;
            }
            let cz = t.c.pow(z);
            let diff: BigInt = &cz - &a_pow[x as usize];
            if !diff.is_positive() {
                continue;
            }
            if let Some(y) = perfect_power_exponent(&diff, &t.b).filter(|&y| y <= cap) {
                let rec = SolutionRecord::new(p.clone(), ExponentTriple::new(x, y, z))
                    .expect("candidate confirmed by exact power test");
                out.push(rec);
            }
        }
    }
    out.sort_by_key(|r| r.sol);
    out
}

/// Triple loop over all exponents with no filtering.
pub fn find_solutions_unpruned(p: &PrimPair, cap: u32) -> Vec<ExponentTriple> {
    let t = p.triple();
    let pows = |v: &BigInt| (0..=cap).map(|e| v.pow(e)).collect::<Vec<_>>();
    let (ap, bp, cp) = (pows(&t.a), pows(&t.b), pows(&t.c));
    let mut out = Vec::new();
    for x in 1..=cap as usize {
        for y in 1..=cap as usize {
            let s = &ap[x] + &bp[y];
            for z in 1..=cap as usize {
                if s == cp[z] {
                    out.push(ExponentTriple::new(x as u32, y as u32, z as u32));
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub m_max: u64,
    pub cap: u32,
    pub pairs_checked: usize,
    pub solutions_total: usize,
    /// Solutions other than `(2, 2, 2)`, in `(m, n)` order.
    pub nontrivial: Vec<SolutionRecord>,
    pub exceptional: usize,
}

impl ScanReport {
    pub fn from_outcomes(m_max: u64, cap: u32, outcomes: &[PairOutcome]) -> Self {
        let solutions_total = outcomes.iter().map(|o| o.solutions.len()).sum();
        let nontrivial: Vec<SolutionRecord> =
            outcomes.iter().flat_map(|o| o.solutions.iter()).filter(|r| !r.is_trivial()).cloned().collect();
        let exceptional = nontrivial.iter().filter(|r| r.exceptional()).count();
        ScanReport { m_max, cap, pairs_checked: outcomes.len(), solutions_total, nontrivial, exceptional }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairOutcome {
    pub pair: PrimPair,
    pub solutions: Vec<SolutionRecord>,
}

/// `find_solutions` on every pair with `m ≤ m_max`, in `(m, n)` order.
///
/// `jobs` sets the worker count (all cores when `None`). `progress` is called
/// with `(done, total)` after each pair, from worker threads.
pub fn scan_pairs(
    m_max: u64,
    cap: u32,
    jobs: Option<usize>,
    progress: &(dyn Fn(usize, usize) + Sync),
) -> Result<Vec<PairOutcome>> {
    if m_max < 2 || cap < 2 {
        return Err(Error::InvalidParameter(format!("need m_max ≥ 2 and cap ≥ 2, got {m_max}, {cap}")));
    }
    let pairs = PrimPair::all_up_to(m_max);
    let done = AtomicUsize::new(0);
    let run = || -> Vec<PairOutcome> {
        pairs
            .par_iter()
            .map(|p| {
                let solutions = find_solutions(p, cap);
                progress(done.fetch_add(1, Ordering::Relaxed) + 1, pairs.len());
                PairOutcome { pair: p.clone(), solutions }
            })
            .collect()
    };
    match jobs {
        Some(j) => Ok(rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?
            .install(run)),
        None => Ok(run()),
    }
}

/// Aggregate of [`scan_pairs`]; the report does not depend on `jobs`.
pub fn scan_range(m_max: u64, cap: u32, jobs: Option<usize>) -> Result<ScanReport> {
    let outcomes = scan_pairs(m_max, cap, jobs, &|_, _| {})?;
    Ok(ScanReport::from_outcomes(m_max, cap, &outcomes))
}

fn exact_sqrt(v: &BigInt) -> Option<BigInt> {
    if v.is_negative() {
        return None;
    }
    let r = v.sqrt();
    (&r * &r == *v).then_some(r)
}

fn require_odd(name: &str, v: u32) -> Result<()> {
    if v.is_multiple_of(2) {
        return Err(Error::Precondition(format!("{name} = {v} must be odd and positive")));
    }
    Ok(())
}

/// `(k, l)` with `a^X = k² − l²`, `b^Y = 2kl`, `c^Z = k² + l²`.
pub fn kl_of(p: &PrimPair, big_x: u32, big_y: u32, big_z: u32) -> Result<(BigInt, BigInt)> {
    require_odd("X", big_x)?;
    require_odd("Y", big_y)?;
    require_odd("Z", big_z)?;
    let t = p.triple();
    let cz = t.c.pow(big_z);
    let ax = t.a.pow(big_x);
    let half = |v: BigInt, what: &str| -> Result<BigInt> {
        let (q, r) = v.div_rem(&BigInt::from(2));
        if !r.is_zero() || q.is_negative() {
            return Err(Error::NoPythagoreanStructure(format!("{what} = {v} is not a nonnegative even number")));
        }
        exact_sqrt(&q).ok_or_else(|| Error::NoPythagoreanStructure(format!("{what}/2 = {q} is not a square")))
    };
    let k = half(&cz + &ax, "c^Z + a^X")?;
    let l = half(&cz - &ax, "c^Z - a^X")?;
    if &k * &l * 2u32 != t.b.pow(big_y) {
        return Err(Error::MiddleIdentityFails);
    }
    Ok((k, l))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaussianRoot {
    #[serde(serialize_with = "ser_big")]
    pub a1: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub b1: BigInt,
    pub unit: GaussianInt,
    #[serde(serialize_with = "ser_big")]
    pub c: BigInt,
}

/// `(a1, b1)` with `a1 > 0`, `b1 ≥ 0` and a unit `u` such that
/// `u·(a1 + b1 i)^Z = k + l i`; unit 1 is preferred when several roots work.
pub fn gaussian_root(k: &BigInt, l: &BigInt, big_z: u32) -> Result<GaussianRoot> {
    require_odd("Z", big_z)?;
    let target = GaussianInt::new(k.clone(), l.clone());
    let norm = target.norm();
    let c = norm.nth_root(big_z);
    if c.pow(big_z) != norm || c.is_zero() {
        return Err(Error::NotPower(format!("k^2 + l^2 = {norm} is not a {big_z}-th power")));
    }
    let mut best: Option<GaussianRoot> = None;
    let mut a1 = BigInt::from(1);
    while &a1 * &a1 <= c {
        if let Some(b1) = exact_sqrt(&(&c - &a1 * &a1)) {
            let power = GaussianInt::new(a1.clone(), b1.clone()).pow(big_z as u64);
            for u in GaussianInt::units() {
                if &u * &power == target {
                    let better = best.as_ref().is_none_or(|b| b.unit != GaussianInt::one() && u == GaussianInt::one());
                    if better {
                        best = Some(GaussianRoot { a1: a1.clone(), b1: b1.clone(), unit: u, c: c.clone() });
                    }
                }
            }
        }
        a1 += 1u32;
    }
    best.ok_or(Error::NoRepresentation)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValuationCheck {
    pub prime: u64,
    /// `v_p` of `k` (or `l` for primes of `b1`).
    pub observed: u32,
    /// `v_p(a1) + v_p(Z)` (or with `b1`).
    pub expected: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    #[serde(serialize_with = "ser_big")]
    pub k: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub l: BigInt,
    pub a1_divides_k: bool,
    pub b1_divides_l: bool,
    pub quotients_odd: bool,
    /// `v_2` of `l` equals `v_2(b1)` (or `v_2(k) = v_2(a1)`), for whichever of
    /// `a1`, `b1` is even.
    pub two_adic_ok: bool,
    pub odd_prime_checks: Vec<ValuationCheck>,
    pub all_ok: bool,
}

/// Divisibility and valuation identities for `k + l i = (a1 + b1 i)^Z`.
pub fn structure_checks(a1: u64, b1: u64, big_z: u32) -> Result<StructureReport> {
    require_odd("Z", big_z)?;
    if a1 == 0 || b1 == 0 || a1.gcd(&b1) != 1 || (a1 + b1).is_multiple_of(2) {
        return Err(Error::Precondition(format!("({a1}, {b1}) must be nonzero, coprime and of opposite parity")));
    }
    let g = GaussianInt::new(a1, b1).pow(big_z as u64);
    let (k, l) = (g.re, g.im);
    let (ba, bb) = (BigInt::from(a1), BigInt::from(b1));
    let (qk, rk) = k.div_rem(&ba);
    let (ql, rl) = l.div_rem(&bb);
    let a1_divides_k = rk.is_zero();
    let b1_divides_l = rl.is_zero();
    let quotients_odd = a1_divides_k && b1_divides_l && qk.is_odd() && ql.is_odd();
    let two = BigInt::from(2);
    let v = |n: &BigInt, p: &BigInt| val_p(n, p).unwrap_or(u32::MAX);
    let two_adic_ok = if b1.is_multiple_of(2) { v(&l, &two) == v(&bb, &two) } else { v(&k, &two) == v(&ba, &two) };
    let mut odd_prime_checks = Vec::new();
    for (base, image) in [(a1, &k), (b1, &l)] {
        for (p, e) in small_factorize(base) {
            if p == 2 {
                continue;
            }
            let pb = BigInt::from(p);
            odd_prime_checks.push(ValuationCheck {
                prime: p,
                observed: v(image, &pb),
                expected: e + v(&BigInt::from(big_z), &pb),
            });
        }
    }
    let all_ok = a1_divides_k
        && b1_divides_l
        && quotients_odd
        && two_adic_ok
        && odd_prime_checks.iter().all(|c| c.observed == c.expected);
    Ok(StructureReport { k, l, a1_divides_k, b1_divides_l, quotients_odd, two_adic_ok, odd_prime_checks, all_ok })
}
