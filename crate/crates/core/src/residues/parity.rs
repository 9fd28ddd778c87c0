use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::jacobi::jacobi;
use super::quartic::{is_primary, quartic_symbol, QuarticValue};
use crate::numerics::{factorize, val_p, GaussianInt};
use crate::triples::{ser_big, PrimPair};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(v: u64) -> Self {
        if v.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    fn flip(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

impl Serialize for Parity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParityKind {
    YEqZ,
    YEven,
    ZEven,
    XEven,
    XEqY,
}

impl ParityKind {
    /// Whether the exponent triple satisfies this constraint.
    pub fn holds(self, x: u64, y: u64, z: u64) -> bool {
        match self {
            ParityKind::YEqZ => y % 2 == z % 2,
            ParityKind::YEven => y.is_multiple_of(2),
            ParityKind::ZEven => z.is_multiple_of(2),
            ParityKind::XEven => x.is_multiple_of(2),
            ParityKind::XEqY => x % 2 == y % 2,
        }
    }

    // Edge in the GF(2) closure: (u, v) means u + v = 0, node 0 is the constant 0.
    fn edge(self) -> (usize, usize) {
        match self {
            ParityKind::YEqZ => (2, 3),
            ParityKind::YEven => (0, 2),
            ParityKind::ZEven => (0, 3),
            ParityKind::XEven => (0, 1),
            ParityKind::XEqY => (1, 2),
        }
    }
}

impl fmt::Display for ParityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParityKind::YEqZ => "y≡z (mod 2)",
            ParityKind::YEven => "y even",
            ParityKind::ZEven => "z even",
            ParityKind::XEven => "x even",
            ParityKind::XEqY => "x≡y (mod 2)",
        })
    }
}

impl Serialize for ParityKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Identifies the argument a parity constraint comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    EvenM,
    SumFive,
    SumSeven,
    SumThree,
    DiffFive,
    QuarticChain,
    Mod16,
    ResidueEqsMod8,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::EvenM => "even-m",
            Rule::SumFive => "sum-5-mod-8",
            Rule::SumSeven => "sum-7-mod-8",
            Rule::SumThree => "sum-3-mod-8",
            Rule::DiffFive => "diff-5-mod-8",
            Rule::QuarticChain => "quartic-chain",
            Rule::Mod16 => "mod-16",
            Rule::ResidueEqsMod8 => "de-split-mod-8",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Rule::EvenM => "m even, n odd: modulo 4, (-n^2)^x = (n^2)^z forces x even",
            Rule::SumFive => "m+n = 5 (mod 8): modulo m+n, (-2/m+n) = (2/m+n) = -1 gives y = z (mod 2)",
            Rule::SumSeven => "m+n = 7 (mod 8): modulo m+n, (-2/m+n) = -1 and (2/m+n) = 1 give y even",
            Rule::SumThree => "m+n = 3 (mod 8): modulo m+n, (-2/m+n) = 1 and (2/m+n) = -1 give z even",
            Rule::DiffFive => "m-n = 5 (mod 8): modulo m-n, (2/m-n) = -1 gives y = z (mod 2)",
            Rule::QuarticChain => {
                "modulo the primary n-mi: a = -2n^2, b = 2m^2 i; with (-1/.)_4 = 1 and \
                 (2n^2/.)_4 = (2m^2 i/.)_4 = -1 the symbols give (-1)^x = (-1)^y"
            }
            Rule::Mod16 => "4 | m and 16 | b^y: a^x = c^z (mod 16) with the residues of a, c exhausted over their cycles",
            Rule::ResidueEqsMod8 => {
                "x = 2X, z = 2Z with X, Z odd: c^Z - a^X = 2 m1^y n1^y, c^Z + a^X = 2^((alpha+1)y-1) m2^y n2^y; \
                 primes of m1 and n2 have an element of order 8, so m1 = n2 = 1 (mod 8) and \
                 c^Z = (m1 n1)^y (mod 8) leaves only even y"
            }
        }
    }
}

impl Serialize for Rule {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ParityConstraint {
    pub kind: ParityKind,
    pub source: Rule,
}

impl ParityConstraint {
    fn new(kind: ParityKind, source: Rule) -> Self {
        ParityConstraint { kind, source }
    }

    pub fn holds(&self, x: u64, y: u64, z: u64) -> bool {
        self.kind.holds(x, y, z)
    }
}

impl fmt::Display for ParityConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.kind, self.source.id())
    }
}

// Union-find over {0, x, y, z}; every constraint identifies two nodes.
struct Closure([usize; 4]);

impl Closure {
    fn of(cs: &[ParityConstraint]) -> Self {
        let mut c = Closure([0, 1, 2, 3]);
        for k in cs {
            let (u, v) = k.kind.edge();
            let (ru, rv) = (c.find(u), c.find(v));
            c.0[ru] = rv;
        }
        c
    }

    fn find(&mut self, mut u: usize) -> usize {
        while self.0[u] != u {
            u = self.0[u];
        }
        u
    }

    fn even(&mut self, var: usize) -> bool {
        self.find(var) == self.find(0)
    }
}

fn mod_u(v: &BigInt, m: u64) -> u64 {
    v.mod_floor(&BigInt::from(m)).to_u64().expect("residue fits")
}

/// Parity constraints from Jacobi symbols modulo m+n and m-n, plus `x` even
/// for even `m`.
pub fn quadratic_sieve(p: &PrimPair) -> Vec<ParityConstraint> {
    let mut out = Vec::new();
    if p.m_even() {
        out.push(ParityConstraint::new(ParityKind::XEven, Rule::EvenM));
    }
    let s: BigInt = p.m() + p.n();
    let by_symbols = (
        jacobi(&BigInt::from(-2), &s).expect("m+n is odd"),
        jacobi(&BigInt::from(2), &s).expect("m+n is odd"),
    );
    match by_symbols {
        (-1, -1) => out.push(ParityConstraint::new(ParityKind::YEqZ, Rule::SumFive)),
        (-1, 1) => out.push(ParityConstraint::new(ParityKind::YEven, Rule::SumSeven)),
        (1, -1) => out.push(ParityConstraint::new(ParityKind::ZEven, Rule::SumThree)),
        _ => {}
    }
    let d: BigInt = p.m() - p.n();
    if mod_u(&d, 8) == 5 {
        debug_assert_eq!(jacobi(&BigInt::from(2), &d).ok(), Some(-1));
        out.push(ParityConstraint::new(ParityKind::YEqZ, Rule::DiffFive));
    }
    out
}

// Every (exponent parity, residue) reachable by r^e mod m for e ≥ 1.
fn power_states(r: u64, m: u64) -> BTreeSet<(Parity, u64)> {
    let mut seen = BTreeSet::new();
    let mut state = (Parity::Odd, r % m);
    while seen.insert(state) {
        state = (state.0.flip(), ((state.1 as u128 * r as u128) % m as u128) as u64);
    }
    seen
}

const FEASIBLE_MAX_MODULUS: u64 = 1 << 24;

/// Exponent parities `(x mod 2, z mod 2)`, `x, z ≥ 1`, admitting
/// `a^x ≡ c^z (mod M)`. The caller is responsible for `b^y ≡ 0 (mod M)`.
pub fn parity_feasible(a_res: &BigInt, c_res: &BigInt, modulus: &BigInt) -> Result<BTreeSet<(Parity, Parity)>> {
    let m = modulus
        .to_u64()
        .filter(|&m| (2..=FEASIBLE_MAX_MODULUS).contains(&m))
        .ok_or_else(|| Error::InvalidParameter(format!("modulus {modulus} outside [2, 2^24]")))?;
    let sa = power_states(mod_u(a_res, m), m);
    let sc = power_states(mod_u(c_res, m), m);
    let mut out = BTreeSet::new();
    for &(px, va) in &sa {
        for &(pz, vc) in &sc {
            if va == vc {
                out.insert((px, pz));
            }
        }
    }
    Ok(out)
}

/// The factorisation `m = 2^alpha m1 m2`, `n = n1 n2` read off from `E` and `D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeDecomposition {
    pub alpha: u32,
    #[serde(serialize_with = "ser_big")]
    pub m1: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub m2: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub n1: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub n2: BigInt,
    pub m1_mod8: u8,
    pub n1_mod8: u8,
    pub n2_mod8: u8,
    /// `E = 2 m1^y n1^y`
    pub difference_identity: bool,
    /// `D = 2^((alpha+1)y-1) m2^y n2^y`
    pub sum_identity: bool,
    /// `c^Z = 2^((alpha+1)y-2) m2^y n2^y + m1^y n1^y`
    pub half_sum_identity: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeSplit {
    #[serde(serialize_with = "ser_big")]
    pub d: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub e: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub gcd: BigInt,
    pub e_mod_4: u8,
    pub val2_d: Option<u32>,
    /// `D·E = b^y` holds exactly.
    pub exact: bool,
    pub decomposition: Option<DeDecomposition>,
}

/// `D = c^Z + a^X`, `E = c^Z - a^X` with diagnostics; when `D·E = b^y`
/// exactly and `m` is even, also the decomposition of `m` and `n` between them.
pub fn split_de(p: &PrimPair, big_x: u32, big_z: u32, y: u32) -> Result<DeSplit> {
    if big_x.is_multiple_of(2) || big_z.is_multiple_of(2) {
        return Err(Error::Precondition(format!("X = {big_x} and Z = {big_z} must be odd")));
    }
    if y == 0 {
        return Err(Error::Precondition("y must be positive".into()));
    }
    let t = p.triple();
    let cz = t.c.pow(big_z);
    let ax = t.a.pow(big_x);
    let d: BigInt = &cz + &ax;
    let e: BigInt = &cz - &ax;
    let gcd = d.gcd(&e);
    let two = BigInt::from(2);
    let val2_d = if d.is_zero() { None } else { Some(val_p(&d, &two)?) };
    let exact = &d * &e == t.b.pow(y);
    let decomposition = (exact && p.m_even()).then(|| {
        let alpha = val_p(p.m(), &two).expect("m nonzero");
        let m_odd: BigInt = p.m() >> alpha;
        let m1 = e.gcd(&m_odd);
        let m2 = &m_odd / &m1;
        let n1 = e.gcd(p.n());
        let n2 = p.n() / &n1;
        let m1n1y = (&m1 * &n1).pow(y);
        let power = ((alpha + 1) * y) as usize;
        let m2n2y = (&m2 * &n2).pow(y);
        DeDecomposition {
            alpha,
            m1_mod8: mod_u(&m1, 8) as u8,
            n1_mod8: mod_u(&n1, 8) as u8,
            n2_mod8: mod_u(&n2, 8) as u8,
            difference_identity: e == &m1n1y * 2u32,
            sum_identity: power >= 1 && d == (&m2n2y << (power - 1)),
            half_sum_identity: power >= 2 && cz == (&m2n2y << (power - 2)) + &m1n1y,
            m1,
            m2,
            n1,
            n2,
        }
    });
    Ok(DeSplit { e_mod_4: mod_u(&e, 4) as u8, d, e, gcd, val2_d, exact, decomposition })
}

/// Odd prime factors of `base^(2|Z-X|) + 1` with their residues mod 8.
pub fn minus_one_power_primes(base: &BigInt, big_x: u32, big_z: u32) -> Result<Vec<(BigInt, u8)>> {
    let k = 2 * big_x.abs_diff(big_z);
    let v: BigInt = base.pow(k) + 1u32;
    Ok(factorize(&v)?
        .into_iter()
        .filter(|(q, _)| q.is_odd())
        .map(|(q, _)| {
            let r = mod_u(&q, 8) as u8;
            (q, r)
        })
        .collect())
}

/// Quartic symbols modulo the primary `n - mi` used when `4 ∥ m`, `n ≡ 1 (mod 8)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuarticChain {
    pub modulus: GaussianInt,
    pub primary: bool,
    pub unit_i: QuarticValue,
    pub minus_one: QuarticValue,
    pub two: QuarticValue,
    pub two_n_sq: QuarticValue,
    pub two_m_sq_i: QuarticValue,
    /// `(a/·)_4` and `(b/·)_4` evaluated directly on the triple members.
    pub a_symbol: QuarticValue,
    pub b_symbol: QuarticValue,
    /// `a ≡ -2n^2` and `b ≡ 2m^2 i` modulo `n - mi`.
    pub congruences_hold: bool,
    pub forces_x_eq_y: bool,
}

pub fn quartic_chain(p: &PrimPair) -> Result<QuarticChain> {
    let (m, n) = (p.m(), p.n());
    let pi = GaussianInt::new(n.clone(), -m);
    let t = p.triple();
    let two_n_sq = GaussianInt::from(n * n * 2u32);
    let two_m_sq_i = GaussianInt::new(0, m * m * 2u32);
    let a = GaussianInt::from(t.a.clone());
    let b = GaussianInt::from(t.b.clone());
    let sym = |g: &GaussianInt| quartic_symbol(g, &pi);
    let congruences_hold = pi.divides(&(&a + &two_n_sq)) && pi.divides(&(&b - &two_m_sq_i));
    let minus_one = sym(&GaussianInt::from(-1))?;
    let a_symbol = sym(&a)?;
    let b_symbol = sym(&b)?;
    // a^x ≡ -b^y (mod π) gives (a/π)^x = (-1/π)(b/π)^y
    let forces_x_eq_y =
        minus_one == QuarticValue::ONE && a_symbol == QuarticValue::MINUS_ONE && b_symbol == QuarticValue::MINUS_ONE;
    Ok(QuarticChain {
        primary: is_primary(&pi),
        unit_i: sym(&GaussianInt::i())?,
        minus_one,
        two: sym(&GaussianInt::from(2))?,
        two_n_sq: sym(&two_n_sq)?,
        two_m_sq_i: sym(&two_m_sq_i)?,
        a_symbol,
        b_symbol,
        congruences_hold,
        forces_x_eq_y,
        modulus: pi,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityVerdict {
    pub all_even: bool,
    pub constraints: Vec<ParityConstraint>,
    pub applicable: bool,
    /// The verdict relies on `y > 1`.
    pub assumed_y_gt_1: bool,
    /// `m/n > 56`, where solutions with `y = 1` are excluded by a published result.
    pub y_eq_1_excluded: bool,
    /// External results taken as given.
    pub cited: Vec<&'static str>,
    pub case: String,
    pub quartic: Option<QuarticChain>,
    pub mod16: Option<BTreeSet<(Parity, Parity)>>,
}

const HALF_EXPONENTS_ODD: &str = "if x and z are even then x/2 and z/2 are odd";
const Y_EQ_1_EXCLUSION: &str = "no solution with y = 1 when m/n > 56";

/// Decides whether every solution with `4 | m` (and `y > 1`) has `x`, `y`, `z`
/// all even, recording each rule used.
pub fn parity_engine(p: &PrimPair) -> Result<ParityVerdict> {
    let two = BigInt::from(2);
    let v2 = if p.m_even() { val_p(p.m(), &two)? } else { 0 };
    if v2 < 2 {
        return Err(Error::EngineRequiresFourDividesM);
    }
    let n8 = mod_u(p.n(), 8);
    let t = p.triple();
    let mut cs = quadratic_sieve(p);
    let mut verdict = ParityVerdict {
        all_even: false,
        constraints: Vec::new(),
        applicable: true,
        assumed_y_gt_1: false,
        y_eq_1_excluded: p.m() * 100u32 > p.n() * 5600u32,
        cited: Vec::new(),
        case: format!("{}m, n = {n8} (mod 8)", if v2 == 2 { "4 || " } else { "8 | " }),
        quartic: None,
        mod16: None,
    };

    let mut mod16 = |cs: &mut Vec<ParityConstraint>, y_min: u32| -> Result<()> {
        // 16 | b^y needs val_2(b)·y ≥ 4
        if val_p(&t.b, &two)? * y_min < 4 {
            return Ok(());
        }
        let set = parity_feasible(&t.a, &t.c, &BigInt::from(16))?;
        if set.iter().all(|&(_, pz)| pz == Parity::Even) {
            cs.push(ParityConstraint::new(ParityKind::ZEven, Rule::Mod16));
        }
        if set.iter().all(|&(px, _)| px == Parity::Even) && !Closure::of(cs).even(1) {
            cs.push(ParityConstraint::new(ParityKind::XEven, Rule::Mod16));
        }
        verdict.mod16 = Some(set);
        Ok(())
    };

    match n8 {
        1 if v2 == 2 => {
            let chain = quartic_chain(p)?;
            if chain.forces_x_eq_y {
                cs.push(ParityConstraint::new(ParityKind::XEqY, Rule::QuarticChain));
            }
            verdict.quartic = Some(chain);
        }
        3 => {
            if Closure::of(&cs).even(2) {
                mod16(&mut cs, 2)?;
            }
        }
        5 => {
            verdict.assumed_y_gt_1 = true;
            if verdict.y_eq_1_excluded {
                verdict.cited.push(Y_EQ_1_EXCLUSION);
            }
            mod16(&mut cs, 2)?;
            let mut c = Closure::of(&cs);
            if c.even(1) && c.even(3) {
                verdict.cited.push(HALF_EXPONENTS_ODD);
                // m1 ≡ n2 ≡ 1 (mod 8), so m1·n1 ≡ n (mod 8); (α+1)y-2 ≥ 3 kills the power of 2.
                let set = parity_feasible(&BigInt::from(n8), &t.c, &BigInt::from(8))?;
                if set.iter().all(|&(py, _)| py == Parity::Even) {
                    cs.push(ParityConstraint::new(ParityKind::YEven, Rule::ResidueEqsMod8));
                }
            }
        }
        7 if v2 == 2 => {}
        _ => verdict.applicable = false,
    }

    let mut c = Closure::of(&cs);
    verdict.all_even = verdict.applicable && c.even(1) && c.even(2) && c.even(3);
    verdict.constraints = cs;
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(m: i64, n: i64) -> PrimPair {
        PrimPair::new(m, n).unwrap()
    }

    fn kinds(cs: &[ParityConstraint]) -> BTreeSet<ParityKind> {
        cs.iter().map(|c| c.kind).collect()
    }

    fn rules(v: &ParityVerdict) -> BTreeSet<Rule> {
        v.constraints.iter().map(|c| c.source).collect()
    }

    #[test]
    fn sieve_examples() {
        use ParityKind::*;
        assert_eq!(kinds(&quadratic_sieve(&pair(4, 3))), [YEven, XEven].into());
        assert_eq!(kinds(&quadratic_sieve(&pair(4, 1))), [YEqZ, XEven].into());
        let s = quadratic_sieve(&pair(8, 3));
        assert_eq!(kinds(&s), [ZEven, YEqZ, XEven].into());
        assert!(s.iter().any(|c| c.source == Rule::DiffFive));
    }

    #[test]
    fn feasible_examples() {
        let e = Parity::Even;
        let o = Parity::Odd;
        let f = |a: i64, c: i64, m: i64| parity_feasible(&a.into(), &c.into(), &m.into()).unwrap();
        assert_eq!(f(7, 9, 16), [(e, e)].into());
        assert_eq!(f(1, 1, 16), [(e, e), (e, o), (o, e), (o, o)].into());
        for n in [1i64, 3, 5, 7, 9, 11] {
            assert_eq!(f(-n * n, n * n, 4), [(e, e), (e, o)].into());
        }
        assert!(parity_feasible(&1.into(), &1.into(), &1.into()).is_err());
    }

    #[test]
    fn de_split_examples() {
        let p = pair(13, 4);
        let t = p.triple();
        let s = split_de(&p, 1, 1, 2).unwrap();
        assert_eq!(s.d, BigInt::from(2 * 13 * 13));
        assert_eq!(s.e, BigInt::from(2 * 4 * 4));
        assert_eq!(s.gcd, BigInt::from(2));
        assert!(s.exact);
        assert_eq!(&s.d * &s.e, t.b.pow(2));
        let s = split_de(&p, 3, 3, 2).unwrap();
        assert!(!s.exact && s.decomposition.is_none());
        assert_eq!(s.gcd, BigInt::from(2));
        assert!(split_de(&p, 2, 3, 2).is_err());
    }

    #[test]
    fn de_split_decomposition_on_trivial_solution() {
        for (m, n) in [(4, 1), (8, 5), (12, 5), (16, 9)] {
            let s = split_de(&pair(m, n), 1, 1, 2).unwrap();
            let d = s.decomposition.expect("exact");
            assert!(d.difference_identity && d.sum_identity && d.half_sum_identity, "({m},{n})");
        }
    }

    #[test]
    fn order_eight_primes() {
        for base in (3u32..40).step_by(2) {
            for x in (1u32..8).step_by(2) {
                for z in (1u32..8).step_by(2) {
                    for (q, r) in minus_one_power_primes(&BigInt::from(base), x, z).unwrap() {
                        assert_eq!(r, 1, "{q} | {base}^(2|{z}-{x}|) + 1");
                    }
                }
            }
        }
    }

    #[test]
    fn engine_examples() {
        let v = parity_engine(&pair(4, 1)).unwrap();
        assert!(v.all_even);
        assert_eq!(rules(&v), [Rule::EvenM, Rule::SumFive, Rule::QuarticChain].into());
        let q = v.quartic.unwrap();
        assert_eq!((q.two_n_sq, q.two_m_sq_i), (QuarticValue::MINUS_ONE, QuarticValue::MINUS_ONE));

        let v = parity_engine(&pair(4, 3)).unwrap();
        assert!(v.all_even && !v.assumed_y_gt_1);
        assert_eq!(rules(&v), [Rule::EvenM, Rule::SumSeven, Rule::Mod16].into());

        let v = parity_engine(&pair(12, 7)).unwrap();
        assert!(v.all_even);
        assert_eq!(rules(&v), [Rule::EvenM, Rule::SumThree, Rule::DiffFive].into());

        let v = parity_engine(&pair(8, 5)).unwrap();
        assert!(v.all_even && v.assumed_y_gt_1);
        assert!(rules(&v).contains(&Rule::ResidueEqsMod8));

        let v = parity_engine(&pair(8, 1)).unwrap();
        assert!(!v.applicable && !v.all_even);
        assert!(matches!(parity_engine(&pair(6, 1)), Err(Error::EngineRequiresFourDividesM)));
        assert!(parity_engine(&pair(5, 2)).is_err());
    }
}
