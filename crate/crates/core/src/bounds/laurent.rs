use num_bigint::BigInt;
use rug::float::Round;
use rug::{Float, Integer};
use serde::Serialize;

use super::{certainly_le, dec, int};
use crate::numerics::RInterval;
use crate::triples::{ser_big, PrimPair};
use crate::{Error, Result};

fn ratio(num: i64, den: i64, prec: u32) -> RInterval {
    RInterval::from_ratio(num, den, prec)
}

/// Upper bound for `ε(N)`:
/// `(2/N)((3/2) ln N + (1/2) ln 2π + 1/(12N) + ln(1 + ((e-1)/e)^N))`.
pub fn epsilon_n(n: u64, prec: u32) -> Result<RInterval> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("epsilon(N) needs N >= 2, got {n}")));
    }
    let nn = int(n as i64, prec);
    let e = RInterval::e(prec);
    let r = &(&e - &int(1, prec)) / &e;
    let r_pow = (&r.ln()? * &nn).exp();
    let two_pi = &RInterval::pi(prec) * &int(2, prec);
    let inner = &(&(&ratio(3, 2, prec) * &nn.ln()?) + &(&ratio(1, 2, prec) * &two_pi.ln()?))
        + &(&(&int(1, prec) / &(&int(12, prec) * &nn)) + &(&int(1, prec) + &r_pow).ln()?);
    Ok(&(&int(2, prec) / &nn) * &inner)
}

/// `ε(N) = (2/N) ln(N! N^(1-N) (e^N + (e-1)^N))` from the exact factorial.
pub fn epsilon_n_exact(n: u64, prec: u32) -> Result<RInterval> {
    if !(2..=200_000).contains(&n) {
        return Err(Error::InvalidParameter(format!("exact epsilon(N) needs 2 <= N <= 200000, got {n}")));
    }
    let fact = Integer::from(Integer::factorial(n as u32));
    let fact = RInterval::from_bounds(
        Float::with_val_round(prec, &fact, Round::Down).0,
        Float::with_val_round(prec, &fact, Round::Up).0,
    );
    let nn = int(n as i64, prec);
    let e = RInterval::e(prec);
    let r = &(&e - &int(1, prec)) / &e;
    let r_pow = (&r.ln()? * &nn).exp();
    // ln(e^N + (e-1)^N) = N + ln(1 + r^N)
    let inner = &(&fact.ln()? - &(&int(n as i64 - 1, prec) * &nn.ln()?)) + &(&nn + &(&int(1, prec) + &r_pow).ln()?);
    Ok(&(&int(2, prec) / &nn) * &inner)
}

/// Parameters of the two-logarithm lower bound.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LaurentInstance {
    pub k: u64,
    pub l: u64,
    pub r1: u64,
    pub r2: u64,
    pub s1: u64,
    pub s2: u64,
    pub d: u64,
    pub rho: RInterval,
    pub mu: RInterval,
    #[serde(serialize_with = "ser_big")]
    pub b1: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub b2: BigInt,
    pub a1: RInterval,
    pub a2: RInterval,
}

impl LaurentInstance {
    pub fn r(&self) -> u64 {
        self.r1 + self.r2 - 1
    }

    pub fn s(&self) -> u64 {
        self.s1 + self.s2 - 1
    }

    pub fn n(&self) -> u64 {
        self.k * self.l
    }

    fn prec(&self) -> u32 {
        self.rho.prec()
    }

    /// `1/4 - N/(12RS)`
    pub fn g(&self) -> RInterval {
        let p = self.prec();
        let rs = int((12 * self.r() * self.s()) as i64, p);
        &ratio(1, 4, p) - &(&int(self.n() as i64, p) / &rs)
    }

    /// `(1 + 2μ - μ²)/2`
    pub fn sigma(&self) -> RInterval {
        let p = self.prec();
        let mu = &self.mu;
        &(&(&int(1, p) + &(mu * &int(2, p))) - &mu.sqr()) / &int(2, p)
    }

    /// `ln b` with `b = ((R-1) b2 + (S-1) b1)/2 · (∏_{k<K} k!)^(-2/(K²-K))`.
    pub fn log_b(&self) -> Result<RInterval> {
        let p = self.prec();
        let lin: BigInt = &self.b2 * (self.r() - 1) + &self.b1 * (self.s() - 1);
        let mut log_prod = int(0, p);
        for j in 2..self.k {
            log_prod = &log_prod + &(&int((self.k - j) as i64, p) * &int(j as i64, p).ln()?);
        }
        let kk = (self.k * self.k - self.k) as i64;
        Ok(&(&RInterval::from_bigint(&lin, p).ln()? - &RInterval::ln2(p)) - &(&log_prod * &ratio(2, kk, p)))
    }

    /// `gL(R a1 + S a2)`
    pub fn gl_term(&self) -> RInterval {
        let p = self.prec();
        let inner = &(&int(self.r() as i64, p) * &self.a1) + &(&int(self.s() as i64, p) * &self.a2);
        &(&self.g() * &int(self.l as i64, p)) * &inner
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LaurentCheck {
    pub ok: bool,
    /// Left side of the main inequality minus the `ε(N)` majorant.
    pub margin: RInterval,
    pub lhs: RInterval,
    pub epsilon: RInterval,
    pub log_b: RInterval,
    /// `ρ^(-μKL)`, the lower bound on `|Λ'|`.
    pub bound: RInterval,
    pub log_bound: RInterval,
    /// Hypotheses not checked numerically.
    pub attested: Vec<&'static str>,
}

const CARDINALITY_ATTESTATIONS: [&str; 2] = [
    "Card{alpha1^r alpha2^s : r < R1, s < S1} >= L",
    "Card{r b2 + s b1 : r < R2, s < S2} > (K-1) L",
];

/// Certifies `K(σL-1) ln ρ - (D+1) ln N - D(K-1) ln b - gL(Ra1+Sa2) > ε(N)`.
pub fn laurent_check(inst: &LaurentInstance) -> Result<LaurentCheck> {
    let p = inst.prec();
    if inst.mu.certainly_lt(&ratio(1, 3, p)) || inst.mu.certainly_gt(&int(1, p)) {
        return Err(Error::InvalidParameter("mu must lie in [1/3, 1]".into()));
    }
    if !inst.rho.certainly_gt(&int(1, p)) {
        return Err(Error::InvalidParameter("rho must exceed 1".into()));
    }
    if inst.k < 2 || [inst.l, inst.r1, inst.r2, inst.s1, inst.s2, inst.d].contains(&0) {
        return Err(Error::InvalidParameter("K >= 2 and positive L, R1, R2, S1, S2, D required".into()));
    }
    let ln_rho = inst.rho.ln()?;
    let kf = int(inst.k as i64, p);
    let lf = int(inst.l as i64, p);
    let df = int(inst.d as i64, p);
    let log_b = inst.log_b()?;
    let first = &(&kf * &(&(&inst.sigma() * &lf) - &int(1, p))) * &ln_rho;
    let second = &(&df + &int(1, p)) * &int(inst.n() as i64, p).ln()?;
    let third = &(&df * &int(inst.k as i64 - 1, p)) * &log_b;
    let lhs = &(&(&first - &second) - &third) - &inst.gl_term();
    let epsilon = epsilon_n(inst.n(), p)?;
    let margin = &lhs - &epsilon;
    let log_bound = -&(&(&inst.mu * &int(inst.n() as i64, p)) * &ln_rho);
    Ok(LaurentCheck {
        ok: margin.certainly_positive(),
        bound: log_bound.exp(),
        margin,
        lhs,
        epsilon,
        log_b,
        log_bound,
        attested: CARDINALITY_ATTESTATIONS.to_vec(),
    })
}

/// The constants of the two-logarithm lemma recomputed from its parameters.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaConstants {
    pub rho: RInterval,
    pub a1: RInterval,
    pub kappa: RInterval,
    pub mu: RInterval,
    pub sigma: RInterval,
    /// `μ · ln ρ · κ · a1 · (45/62)²`, stated as 3.741.
    pub leading: RInterval,
    /// `√κ`, stated as 0.222.
    pub sqrt_kappa: RInterval,
}

pub fn lemma_constants(prec: u32) -> Result<LemmaConstants> {
    let rho = dec("3.1", prec).exp();
    let a1 = &rho * &RInterval::pi(prec);
    let kappa = dec("0.04927", prec);
    let mu = ratio(2, 3, prec);
    let sigma = ratio(17, 18, prec);
    let leading = &(&(&(&mu * &rho.ln()?) * &kappa) * &a1) * &ratio(45, 62, prec).sqr();
    let sqrt_kappa = kappa.sqrt()?;
    Ok(LemmaConstants { rho, a1, kappa, mu, sigma, leading, sqrt_kappa })
}

fn floor_exact(v: &RInterval, what: &str) -> Result<i64> {
    let (lo, hi) = v.floor_range();
    if lo != hi {
        return Err(Error::InvalidParameter(format!("floor of {what} undetermined at this precision")));
    }
    lo.to_i64().ok_or_else(|| Error::InvalidParameter(format!("{what} out of range")))
}

// L before and after the floor at 3, and whether ⌊·⌋ was ambiguous (then the
// larger candidate is used, which only weakens the bound).
fn lemma_l(bprime: &RInterval, prec: u32) -> Result<(i64, u64, bool)> {
    let v = &ratio(45, 62, prec) * &(&bprime.ln()? + &dec("5.49", prec));
    let (lo, hi) = v.floor_range();
    let formula = hi.to_i64().ok_or_else(|| Error::InvalidParameter("L out of range".into()))? + 1;
    Ok((formula, formula.max(3) as u64, lo != hi))
}

fn lemma_preconditions(a2: &RInterval, bprime: &RInterval, a1: &RInterval, prec: u32) -> Result<()> {
    let min_a2 = &int(1000, prec) + a1;
    if a2.lo() < min_a2.hi() {
        return Err(Error::LemmaInapplicable(format!("a2 = {} is not >= 1000 + a1", a2.mid_f64())));
    }
    if !bprime.certainly_gt(&dec("0.056", prec)) {
        return Err(Error::LemmaInapplicable(format!("b' = {} is not > 0.056", bprime.mid_f64())));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaCheck {
    pub instance: LaurentInstance,
    pub check: LaurentCheck,
    /// `L` from the displayed formula, before flooring at 3.
    pub l_formula: i64,
    pub l_floored: bool,
    /// `b1/a2 + b2/a1` for the integer `b1`, `b2` chosen.
    pub bprime: RInterval,
    pub gl_term: RInterval,
    /// `K(31L/20 + 0.0612)`
    pub gl_claim: RInterval,
    pub gl_claim_holds: Option<bool>,
    /// `ln b' + 2.3264`
    pub log_b_claim: RInterval,
    pub log_b_claim_holds: Option<bool>,
    /// `LR < L(2 + √κ a2 L)`
    pub lr_claim_holds: Option<bool>,
}

/// The parameter choice of the two-logarithm lemma for given `a2` and `b'`,
/// run through [`laurent_check`] with the lemma's intermediate claims rechecked.
/// `b1`, `b2` are taken as `⌈b' a2 / 2⌉`, `⌈b' a1 / 2⌉`.
pub fn lemma_instance(a2: &RInterval, bprime: &RInterval, prec: u32) -> Result<LemmaCheck> {
    let c = lemma_constants(prec)?;
    lemma_preconditions(a2, bprime, &c.a1, prec)?;
    let (l_formula, l, _) = lemma_l(bprime, prec)?;
    let lf = int(l as i64, prec);
    let k = 1 + floor_exact(&(&(&(&c.kappa * &lf) * &c.a1) * a2), "kappa L a1 a2")? as u64;
    let km1l = &int((k - 1) as i64, prec) * &lf;
    let r2 = 1 + floor_exact(&(&(&km1l * a2) / &c.a1).sqrt()?, "R2")? as u64;
    let s2 = 1 + floor_exact(&(&(&km1l * &c.a1) / a2).sqrt()?, "S2")? as u64;
    let ceil_half = |v: RInterval| -> Result<BigInt> {
        let (_, hi) = (&v / &int(2, prec)).floor_range();
        Ok(BigInt::from(hi.to_i64().ok_or_else(|| Error::InvalidParameter("b out of range".into()))?) + 1)
    };
    let b1 = ceil_half(bprime * a2)?;
    let b2 = ceil_half(bprime * &c.a1)?;
    let instance = LaurentInstance {
        k,
        l,
        r1: 2,
        r2,
        s1: l.div_ceil(2),
        s2,
        d: 1,
        rho: c.rho.clone(),
        mu: c.mu.clone(),
        b1: b1.clone(),
        b2: b2.clone(),
        a1: c.a1.clone(),
        a2: a2.clone(),
    };
    let check = laurent_check(&instance)?;
    let bprime_actual = &(&RInterval::from_bigint(&b1, prec) / a2) + &(&RInterval::from_bigint(&b2, prec) / &c.a1);
    let gl_term = instance.gl_term();
    let gl_claim = &int(k as i64, prec) * &(&(&ratio(31, 20, prec) * &lf) + &dec("0.0612", prec));
    let log_b_claim = &bprime_actual.ln()? + &dec("2.3264", prec);
    let lr = int((l * instance.r()) as i64, prec);
    let lr_claim = &lf * &(&int(2, prec) + &(&(&c.sqrt_kappa * a2) * &lf));
    Ok(LemmaCheck {
        gl_claim_holds: certainly_le(&gl_term, &gl_claim),
        log_b_claim_holds: certainly_le(&check.log_b, &log_b_claim),
        lr_claim_holds: certainly_le(&lr, &lr_claim),
        instance,
        check,
        l_formula,
        l_floored: l_formula < 3,
        bprime: bprime_actual,
        gl_term,
        gl_claim,
        log_b_claim,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KnCheck {
    pub l: u64,
    pub a2: RInterval,
    pub k: u64,
    pub n: u64,
    pub k_claim: u64,
    pub n_claim: u64,
    pub k_ok: bool,
    pub n_ok: bool,
}

/// `K = 1 + ⌊κ L a1 a2⌋` and `N = KL` at `a2 = 1000 + a1`, compared with the
/// claimed `K ≥ 11030`, `N > 33090`.
pub fn k_at_minimum_a2(l: u64, prec: u32) -> Result<KnCheck> {
    let c = lemma_constants(prec)?;
    let a2 = &int(1000, prec) + &c.a1;
    let k = 1 + floor_exact(&(&(&(&c.kappa * &int(l as i64, prec)) * &c.a1) * &a2), "kappa L a1 a2")? as u64;
    let n = k * l;
    Ok(KnCheck { l, a2, k, n, k_claim: 11030, n_claim: 33090, k_ok: k >= 11030, n_ok: n > 33090 })
}

/// Smallest `a2` with `1 + ⌊κ L a1 a2⌋ ≥ k_target`, i.e. `(k_target - 1)/(κ L a1)`.
pub fn min_a2_for_k(k_target: u64, l: u64, prec: u32) -> Result<RInterval> {
    let c = lemma_constants(prec)?;
    Ok(&int(k_target as i64 - 1, prec) / &(&(&c.kappa * &int(l as i64, prec)) * &c.a1))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CorBound {
    /// Encloses the value of the displayed lower bound; its `lo` is the
    /// certified lower bound on `ln |Λ|`.
    pub log_lambda_lower: RInterval,
    pub l: u64,
    pub l_formula: i64,
    pub l_floored: bool,
    pub l_ambiguous: bool,
}

/// `ln|Λ| > -3.741(ln b' + 6.87)² a2 - 31L/15 - ln L - ln(2 + 0.222 L a2)`
/// with `L = max(3, ⌊(45/62)(ln b' + 5.49)⌋ + 1)`.
pub fn cor_lower_bound(a2: &RInterval, bprime: &RInterval, prec: u32) -> Result<CorBound> {
    let c = lemma_constants(prec)?;
    lemma_preconditions(a2, bprime, &c.a1, prec)?;
    let (l_formula, l, l_ambiguous) = lemma_l(bprime, prec)?;
    let lf = int(l as i64, prec);
    let main = &(&dec("3.741", prec) * &(&bprime.ln()? + &dec("6.87", prec)).sqr()) * a2;
    let tail = &(&(&ratio(31, 15, prec) * &lf) + &lf.ln()?)
        + &(&int(2, prec) + &(&(&dec("0.222", prec) * &lf) * a2)).ln()?;
    Ok(CorBound { log_lambda_lower: -&(&main + &tail), l, l_formula, l_floored: l_formula < 3, l_ambiguous })
}

/// Upper bound on `z - x` from `ln c`: `2(-ln Λ_lower + ln π)/ln c` with
/// `a2 = ln c + a1` and `b' = z(1/69.73 + 1/a2)`.
pub fn delta_upper_log_c(ln_c: &RInterval, z: u64, prec: u32) -> Result<RInterval> {
    if ln_c.lo() < &Float::with_val(prec, 1000) {
        return Err(Error::LemmaInapplicable(format!("ln c = {} < 1000", ln_c.mid_f64())));
    }
    if z < 2 {
        return Err(Error::InvalidParameter("z must be at least 2".into()));
    }
    let c = lemma_constants(prec)?;
    let a2 = ln_c + &c.a1;
    let bprime = &int(z as i64, prec) * &(&(&int(1, prec) / &dec("69.73", prec)) + &(&int(1, prec) / &a2));
    let cor = cor_lower_bound(&a2, &bprime, prec)?;
    Ok(&(&int(2, prec) * &(&-&cor.log_lambda_lower + &RInterval::pi(prec).ln()?)) / ln_c)
}

pub fn delta_upper(p: &PrimPair, z: u64, prec: u32) -> Result<RInterval> {
    let ln_c = RInterval::from_bigint(&p.triple().c, prec).ln()?;
    delta_upper_log_c(&ln_c, z, prec)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DeltaBounds {
    pub lower: RInterval,
    pub upper: RInterval,
    /// `false` certifies that no exceptional solution with this `z` exists.
    pub consistent: bool,
}

pub fn delta_bounds(p: &PrimPair, z: u64, prec: u32) -> Result<DeltaBounds> {
    let lower = super::delta_lower(p, prec)?;
    let upper = delta_upper(p, z, prec)?;
    Ok(DeltaBounds { consistent: !lower.certainly_gt(&upper) && lower.lo() < upper.hi(), lower, upper })
}
