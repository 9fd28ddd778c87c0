use rayon::prelude::*;
use rug::Float;
use serde::{Serialize, Serializer};

use super::{dec, int};
use crate::numerics::RInterval;
use crate::{Error, Result};

/// Exponent `f` of the left side `t^f` of the threshold inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ThresholdForm {
    ThreeFifths,
    TwoThirds,
}

impl ThresholdForm {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "3/5" | "0.6" => Ok(ThresholdForm::ThreeFifths),
            "2/3" => Ok(ThresholdForm::TwoThirds),
            other => Err(Error::InvalidParameter(format!("unknown form {other:?}, expected 3/5 or 2/3"))),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ThresholdForm::ThreeFifths => "3/5",
            ThresholdForm::TwoThirds => "2/3",
        }
    }

    pub fn exponent(self, prec: u32) -> RInterval {
        match self {
            ThresholdForm::ThreeFifths => RInterval::from_ratio(3, 5, prec),
            ThresholdForm::TwoThirds => RInterval::from_ratio(2, 3, prec),
        }
    }

    /// `log10 m` beyond which the inequality is claimed to fail.
    pub fn claimed_log10(self) -> u64 {
        match self {
            ThresholdForm::ThreeFifths => 109_948,
            ThresholdForm::TwoThirds => 22_933,
        }
    }

    pub fn claimed_t0(self, prec: u32) -> RInterval {
        &int(self.claimed_log10() as i64, prec) * &int(10, prec).ln().expect("ln 10")
    }
}

impl Serialize for ThresholdForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// `ln` of a number written as `10^k`, `1e50000`, `2.5e100` or a plain decimal.
pub fn ln_of_decimal(s: &str, prec: u32) -> Result<RInterval> {
    let s = s.trim();
    let bad = || Error::InvalidParameter(format!("cannot read {s:?} as a positive number"));
    if let Some((base, exp)) = s.split_once('^') {
        let k: i64 = exp.trim().parse().map_err(|_| bad())?;
        return Ok(&int(k, prec) * &RInterval::from_decimal(base, prec)?.ln()?);
    }
    if let Some(i) = s.find(['e', 'E']) {
        let k: i64 = s[i + 1..].parse().map_err(|_| bad())?;
        let mant = RInterval::from_decimal(&s[..i], prec).map_err(|_| bad())?;
        return Ok(&mant.ln().map_err(|_| bad())? + &(&int(k, prec) * &int(10, prec).ln()?));
    }
    RInterval::from_decimal(s, prec).map_err(|_| bad())?.ln().map_err(|_| bad())
}

struct Terms {
    u: RInterval,
    lp: RInterval,
    first: RInterval,
}

fn terms(t: &RInterval, corrected: bool) -> Result<Terms> {
    let p = t.prec();
    let u = t + &RInterval::ln2(p);
    let w = u.ln()?;
    let lp = &(&RInterval::from_ratio(45, 62, p) * &w) + &dec("1.56", p);
    let first = if corrected { w.clone() } else { u.clone() };
    Ok(Terms { u, lp, first })
}

fn check_domain(t: &RInterval) -> Result<()> {
    if t.lo() <= &Float::with_val(t.prec(), 1000) {
        return Err(Error::Domain(format!("t = {} must exceed 1000", t.lo_f64())));
    }
    Ok(())
}

/// Right side of the threshold inequality in `t = ln m`:
/// `7.482(λ + 2.139)²(1 + 70/u) + (31/(15t)) L' + (ln(6.29 L') + 0.7 L'²(t + 70))/t`
/// where `u = ln 2m`, `L' = (45/62) ln u + 1.56`, and `λ = ln u` when
/// `corrected`, `λ = u` otherwise.
pub fn rhs_final(t: &RInterval, corrected: bool) -> Result<RInterval> {
    check_domain(t)?;
    let p = t.prec();
    let Terms { u, lp, first } = terms(t, corrected)?;
    let a = &(&dec("7.482", p) * &(&first + &dec("2.139", p)).sqr()) * &(&int(1, p) + &(&int(70, p) / &u));
    let b = &(&RInterval::from_ratio(31, 15, p) * &lp) / t;
    let c = &(&(&dec("6.29", p) * &lp).ln()? + &(&(&dec("0.7", p) * &lp.sqr()) * &(t + &int(70, p)))) / t;
    Ok(&(&a + &b) + &c)
}

fn rhs_derivative(t: &RInterval, corrected: bool) -> Result<RInterval> {
    let p = t.prec();
    let Terms { u, lp, first } = terms(t, corrected)?;
    let k1 = RInterval::from_ratio(45, 62, p);
    let one = int(1, p);
    let seventy = int(70, p);
    let fc = &first + &dec("2.139", p);
    let dfirst = if corrected { &one / &u } else { one.clone() };
    let t2 = t.sqr();
    let u2 = u.sqr();
    let da = &dec("7.482", p)
        * &(&(&(&(&int(2, p) * &fc) * &dfirst) * &(&one + &(&seventy / &u))) - &(&(&fc.sqr() * &seventy) / &u2));
    let db = &RInterval::from_ratio(31, 15, p) * &(&(&k1 / &(&u * t)) - &(&lp / &t2));
    let dc = &(&(&k1 / &(&(&u * &lp) * t)) - &(&(&dec("6.29", p) * &lp).ln()? / &t2))
        + &(&dec("0.7", p)
            * &(&(&(&(&(&int(2, p) * &lp) * &k1) / &u) * &(&one + &(&seventy / t))) - &(&(&lp.sqr() * &seventy) / &t2)));
    Ok(&(&da + &db) + &dc)
}

fn lhs(form: ThresholdForm, t: &RInterval) -> Result<RInterval> {
    t.powf(&form.exponent(t.prec()))
}

/// `t^f - RHS(t)`.
fn gap(form: ThresholdForm, t: &RInterval) -> Result<RInterval> {
    Ok(&lhs(form, t)? - &rhs_final(t, true)?)
}

fn gap_derivative(form: ThresholdForm, t: &RInterval) -> Result<RInterval> {
    let p = t.prec();
    let f = form.exponent(p);
    let lhs_d = &f * &t.powf(&(&f - &int(1, p)))?;
    Ok(&lhs_d - &rhs_derivative(t, true)?)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThresholdCert {
    pub form: ThresholdForm,
    pub t0: RInterval,
    /// `t0^f - RHS(t0)`
    pub gap_at_t0: RInterval,
    /// Segments of `[t0, T]` on which the derivative of the gap was shown positive.
    pub checked_at: Vec<RInterval>,
    pub monotone_from: RInterval,
    /// `T`; beyond it an analytic tail bound applies.
    pub tail_from: RInterval,
    /// `f t^f - P(ln t)` at `T`, where `P(ln t)/t` bounds the positive part of `RHS'`.
    pub tail_margin: RInterval,
    pub verdict: bool,
    pub failure: Option<String>,
}

const GRID_RATIO: &str = "1.05";
const GRID_SPAN: i64 = 8;
const MAX_SPLIT_DEPTH: u32 = 16;

fn segment_positive(form: ThresholdForm, lo: &Float, hi: &Float, depth: u32) -> Result<bool> {
    let seg = RInterval::from_bounds(lo.clone(), hi.clone());
    if gap_derivative(form, &seg)?.certainly_positive() {
        return Ok(true);
    }
    if depth == 0 {
        return Ok(false);
    }
    let mid = Float::with_val(lo.prec(), lo + hi) / 2u32;
    Ok(segment_positive(form, lo, &mid, depth - 1)? && segment_positive(form, &mid, hi, depth - 1)?)
}

// For t ≥ T, RHS'(t) ≤ P(w)/t with w = ln(t + ln 2) ≤ ln t + ln2/T and
// P(w) = 14.964(1+70/T)(w+2.139) + 1.4 κ(1+70/T)(κw+1.56) + (31/15)κ/T + κ/(T L'(T)).
// Writing P ≤ α + β s (s = ln t), the gap is increasing for t ≥ T once
// h(s) = f e^(fs) - α - βs > 0 and h'(s) = f² e^(fs) - β > 0 at s = ln T.
fn tail_margin(form: ThresholdForm, big_t: &RInterval) -> Result<(RInterval, bool)> {
    let p = big_t.prec();
    let f = form.exponent(p);
    let k1 = RInterval::from_ratio(45, 62, p);
    let one = int(1, p);
    let damp = &one + &(&int(70, p) / big_t);
    let lp_t = &(&k1 * &(big_t + &RInterval::ln2(p)).ln()?) + &dec("1.56", p);
    let c_a = &dec("14.964", p) * &damp;
    let c_c = &(&dec("1.4", p) * &k1) * &damp;
    let beta = &c_a + &(&c_c * &k1);
    let alpha = &(&(&(&c_a * &dec("2.139", p)) + &(&c_c * &dec("1.56", p)))
        + &(&(&RInterval::from_ratio(31, 15, p) * &k1) / big_t))
        + &(&k1 / &(big_t * &lp_t));
    let alpha_s = &alpha + &(&beta * &(&RInterval::ln2(p) / big_t));
    let s = big_t.ln()?;
    let efs = (&f * &s).exp();
    let h = &(&(&f * &efs) - &alpha_s) - &(&beta * &s);
    let dh = &(&f.sqr() * &efs) - &beta;
    let ok = h.certainly_positive() && dh.certainly_positive();
    Ok((h, ok))
}

/// Certifies `t^f > RHS(t)` for every `t ≥ t0`: strictly at `t0`, then via a
/// positive derivative on a geometric grid up to `8 t0` and an analytic tail.
pub fn certify_threshold(form: ThresholdForm, t0: &RInterval) -> Result<ThresholdCert> {
    check_domain(t0)?;
    let p = t0.prec();
    let gap_at_t0 = gap(form, t0)?;
    let start = t0.lo().clone();
    let end = Float::with_val(p, t0.hi() * GRID_SPAN);
    let ratio = dec(GRID_RATIO, p);
    let mut points = vec![start.clone()];
    while points.last().expect("nonempty") < &end {
        let next = Float::with_val(p, points.last().expect("nonempty") * ratio.hi());
        points.push(if next > end { end.clone() } else { next });
    }
    let results: Vec<Result<bool>> = points
        .par_windows(2)
        .map(|w| segment_positive(form, &w[0], &w[1], MAX_SPLIT_DEPTH))
        .collect();
    let checked_at: Vec<RInterval> =
        points.windows(2).map(|w| RInterval::from_bounds(w[0].clone(), w[1].clone())).collect();
    let tail_from = RInterval::from_bounds(end.clone(), end.clone());
    let (tail_margin, tail_ok) = tail_margin(form, &tail_from)?;

    let mut failure = None;
    if !gap_at_t0.certainly_positive() {
        failure = Some(format!("t0 = {}: t^{} - RHS(t) = {} is not positive", t0, form.label(), gap_at_t0));
    } else {
        for (seg, r) in checked_at.iter().zip(results) {
            if !r? {
                failure = Some(format!("derivative not certified positive on t in {seg}"));
                break;
            }
        }
        if failure.is_none() && !tail_ok {
            failure = Some(format!("tail bound fails at T = {tail_from}"));
        }
    }
    Ok(ThresholdCert {
        form,
        t0: t0.clone(),
        gap_at_t0,
        checked_at,
        monotone_from: t0.clone(),
        tail_from,
        tail_margin,
        verdict: failure.is_none(),
        failure,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Crossover {
    pub form: ThresholdForm,
    /// `[lo, hi]` in `t` with the gap certified negative at `lo`, positive at `hi`.
    pub bracket: RInterval,
    /// The same bracket as `log10 m`.
    pub log10_bracket: RInterval,
    pub steps: u32,
}

/// Brackets the sign change of `t^f - RHS(t)` above `t = 1000` by bisection
/// until the bracket is at most 1 wide.
pub fn crossover(form: ThresholdForm, prec: u32) -> Result<Crossover> {
    let point = |v: &Float| RInterval::from_bounds(v.clone(), v.clone());
    let mut lo = Float::with_val(prec, 1001);
    if !gap(form, &point(&lo))?.certainly_negative() {
        return Err(Error::Domain("gap is not negative at t = 1001".into()));
    }
    let mut hi = Float::with_val(prec, 2000);
    while !gap(form, &point(&hi))?.certainly_positive() {
        lo = hi.clone();
        hi *= 2u32;
        if hi > 1e12 {
            return Err(Error::Domain("no sign change below t = 1e12".into()));
        }
    }
    let mut steps = 0;
    while Float::with_val(prec, &hi - &lo) > 1 {
        let mid = Float::with_val(prec, &lo + &hi) / 2u32;
        let g = gap(form, &point(&mid))?;
        steps += 1;
        if g.certainly_positive() {
            hi = mid;
        } else if g.certainly_negative() {
            lo = mid;
        } else {
            break;
        }
    }
    let bracket = RInterval::from_bounds(lo, hi);
    let log10_bracket = &bracket / &int(10, prec).ln()?;
    Ok(Crossover { form, bracket, log10_bracket, steps })
}
