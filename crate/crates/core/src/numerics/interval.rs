use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use rug::float::{Constant, Round};
use rug::{Float, Integer, Rational};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::{Error, Result};

pub const DEFAULT_PRECISION: u32 = 128;
pub const THRESHOLD_PRECISION: u32 = 256;

/// A closed real interval `[lo, hi]` whose endpoints are MPFR floats rounded
/// outward at every step, so the exact real result is always enclosed.
#[derive(Clone, Debug, PartialEq)]
pub struct RInterval {
    lo: Float,
    hi: Float,
}

fn round_down<T>(prec: u32, v: T) -> Float
where
    Float: rug::ops::AssignRound<T, Round = Round, Ordering = Ordering>,
{
    Float::with_val_round(prec, v, Round::Down).0
}

fn round_up<T>(prec: u32, v: T) -> Float
where
    Float: rug::ops::AssignRound<T, Round = Round, Ordering = Ordering>,
{
    Float::with_val_round(prec, v, Round::Up).0
}

pub(crate) fn to_rug(n: &BigInt) -> Integer {
    Integer::from_str_radix(&n.to_str_radix(16), 16).expect("hex digits from num-bigint")
}

impl RInterval {
    /// Builds `[lo, hi]`; panics if `lo > hi` or either end is NaN.
    pub fn from_bounds(lo: Float, hi: Float) -> Self {
        assert!(lo <= hi, "interval with lo > hi");
        RInterval { lo, hi }
    }

    pub fn from_int(v: i64, prec: u32) -> Self {
        RInterval { lo: round_down(prec, v), hi: round_up(prec, v) }
    }

    pub fn from_bigint(v: &BigInt, prec: u32) -> Self {
        let v = to_rug(v);
        RInterval { lo: round_down(prec, &v), hi: round_up(prec, &v) }
    }

    pub fn from_ratio(num: i64, den: i64, prec: u32) -> Self {
        let q = Rational::from((num, den));
        RInterval { lo: round_down(prec, &q), hi: round_up(prec, &q) }
    }

    /// Encloses a decimal literal such as `"3.741"`, `"-0.056"` or `"1e-3"`.
    pub fn from_decimal(s: &str, prec: u32) -> Result<Self> {
        let q = parse_decimal(s).ok_or_else(|| Error::InvalidParameter(format!("bad decimal {s:?}")))?;
        Ok(RInterval { lo: round_down(prec, &q), hi: round_up(prec, &q) })
    }

    pub fn pi(prec: u32) -> Self {
        RInterval { lo: round_down(prec, Constant::Pi), hi: round_up(prec, Constant::Pi) }
    }

    pub fn ln2(prec: u32) -> Self {
        RInterval { lo: round_down(prec, Constant::Log2), hi: round_up(prec, Constant::Log2) }
    }

    /// Euler's number.
    pub fn e(prec: u32) -> Self {
        Self::from_int(1, prec).exp()
    }

    pub fn lo(&self) -> &Float {
        &self.lo
    }

    pub fn hi(&self) -> &Float {
        &self.hi
    }

    pub fn prec(&self) -> u32 {
        self.lo.prec().max(self.hi.prec())
    }

    /// Re-rounds the endpoints outward to `prec` bits.
    pub fn with_prec(&self, prec: u32) -> Self {
        RInterval { lo: round_down(prec, &self.lo), hi: round_up(prec, &self.hi) }
    }

    pub fn width(&self) -> Float {
        round_up(self.prec(), &self.hi - &self.lo)
    }

    pub fn mid_f64(&self) -> f64 {
        (self.lo.to_f64() + self.hi.to_f64()) / 2.0
    }

    pub fn lo_f64(&self) -> f64 {
        self.lo.to_f64_round(Round::Down)
    }

    pub fn hi_f64(&self) -> f64 {
        self.hi.to_f64_round(Round::Up)
    }

    pub fn contains(&self, x: &Float) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_f64(&self, x: f64) -> bool {
        self.lo <= x && self.hi >= x
    }

    pub fn contains_interval(&self, other: &RInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// `hi(self) < lo(other)`: every point of `self` is below every point of `other`.
    pub fn certainly_lt(&self, other: &RInterval) -> bool {
        self.hi < other.lo
    }

    pub fn certainly_gt(&self, other: &RInterval) -> bool {
        other.certainly_lt(self)
    }

    pub fn certainly_positive(&self) -> bool {
        self.lo > 0
    }

    pub fn certainly_negative(&self) -> bool {
        self.hi < 0
    }

    pub fn hull(&self, other: &RInterval) -> RInterval {
        RInterval {
            lo: if self.lo <= other.lo { self.lo.clone() } else { other.lo.clone() },
            hi: if self.hi >= other.hi { self.hi.clone() } else { other.hi.clone() },
        }
    }

    pub fn min(&self, other: &RInterval) -> RInterval {
        RInterval {
            lo: if self.lo <= other.lo { self.lo.clone() } else { other.lo.clone() },
            hi: if self.hi <= other.hi { self.hi.clone() } else { other.hi.clone() },
        }
    }

    pub fn max(&self, other: &RInterval) -> RInterval {
        RInterval {
            lo: if self.lo >= other.lo { self.lo.clone() } else { other.lo.clone() },
            hi: if self.hi >= other.hi { self.hi.clone() } else { other.hi.clone() },
        }
    }

    /// `(⌊lo⌋, ⌊hi⌋)`; equal components mean the floor is determined.
    pub fn floor_range(&self) -> (Integer, Integer) {
        let lo = Float::with_val(self.lo.prec(), self.lo.floor_ref()).to_integer().expect("finite");
        let hi = Float::with_val(self.hi.prec(), self.hi.floor_ref()).to_integer().expect("finite");
        (lo, hi)
    }

    pub fn ln(&self) -> Result<RInterval> {
        if self.lo <= 0 {
            return Err(Error::Domain(format!("ln of interval with lo = {} <= 0", self.lo.to_f64())));
        }
        let p = self.prec();
        Ok(RInterval { lo: round_down(p, self.lo.ln_ref()), hi: round_up(p, self.hi.ln_ref()) })
    }

    pub fn exp(&self) -> RInterval {
        let p = self.prec();
        RInterval { lo: round_down(p, self.lo.exp_ref()), hi: round_up(p, self.hi.exp_ref()) }
    }

    pub fn sqrt(&self) -> Result<RInterval> {
        if self.lo < 0 {
            return Err(Error::Domain("sqrt of interval with negative lower end".into()));
        }
        let p = self.prec();
        Ok(RInterval { lo: round_down(p, self.lo.sqrt_ref()), hi: round_up(p, self.hi.sqrt_ref()) })
    }

    pub fn sqr(&self) -> RInterval {
        let p = self.prec();
        if self.lo >= 0 {
            RInterval { lo: round_down(p, self.lo.square_ref()), hi: round_up(p, self.hi.square_ref()) }
        } else if self.hi <= 0 {
            RInterval { lo: round_down(p, self.hi.square_ref()), hi: round_up(p, self.lo.square_ref()) }
        } else {
            let a = round_up(p, self.lo.square_ref());
            let b = round_up(p, self.hi.square_ref());
            RInterval { lo: Float::with_val(p, 0), hi: if a > b { a } else { b } }
        }
    }

    /// `self^q` for a positive base, as `exp(q · ln self)`.
    pub fn powf(&self, q: &RInterval) -> Result<RInterval> {
        Ok((&self.ln()? * q).exp())
    }

    pub fn powi(&self, n: u32) -> RInterval {
        let mut acc = RInterval::from_int(1, self.prec());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn recip(&self) -> Result<RInterval> {
        RInterval::from_int(1, self.prec()).checked_div(self)
    }

    pub fn checked_div(&self, d: &RInterval) -> Result<RInterval> {
        if d.lo <= 0 && d.hi >= 0 {
            return Err(Error::Domain("division by an interval containing zero".into()));
        }
        let p = self.prec().max(d.prec());
        let cands_lo = [
            round_down(p, &self.lo / &d.lo),
            round_down(p, &self.lo / &d.hi),
            round_down(p, &self.hi / &d.lo),
            round_down(p, &self.hi / &d.hi),
        ];
        let cands_hi = [
            round_up(p, &self.lo / &d.lo),
            round_up(p, &self.lo / &d.hi),
            round_up(p, &self.hi / &d.lo),
            round_up(p, &self.hi / &d.hi),
        ];
        Ok(RInterval { lo: min_of(cands_lo), hi: max_of(cands_hi) })
    }

    pub fn to_decimal_pair(&self, digits: usize) -> (String, String) {
        (
            self.lo.to_string_radix_round(10, Some(digits), Round::Down),
            self.hi.to_string_radix_round(10, Some(digits), Round::Up),
        )
    }
}

fn min_of<const N: usize>(v: [Float; N]) -> Float {
    v.into_iter().reduce(|a, b| if b < a { b } else { a }).expect("nonempty")
}

fn max_of<const N: usize>(v: [Float; N]) -> Float {
    v.into_iter().reduce(|a, b| if b > a { b } else { a }).expect("nonempty")
}

fn parse_decimal(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (int_part, frac_part) = match mant.split_once('.') {
        Some((a, b)) => (a, b),
        None => (mant, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let mut num = Integer::from_str_radix(if digits.is_empty() { "0" } else { &digits }, 10).ok()?;
    if neg {
        num = -num;
    }
    let scale = exp - frac_part.len() as i32;
    let q = if scale >= 0 {
        Rational::from(num * Integer::from(Integer::u_pow_u(10, scale as u32)))
    } else {
        Rational::from((num, Integer::from(Integer::u_pow_u(10, (-scale) as u32))))
    };
    Some(q)
}

impl fmt::Display for RInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.to_decimal_pair(17);
        write!(f, "[{lo}, {hi}]")
    }
}

impl Serialize for RInterval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (lo, hi) = self.to_decimal_pair(20);
        let mut st = s.serialize_struct("RInterval", 3)?;
        st.serialize_field("lo", &lo)?;
        st.serialize_field("hi", &hi)?;
        st.serialize_field("precision", &self.prec())?;
        st.end()
    }
}

impl<'a> Add<&'a RInterval> for &'a RInterval {
    type Output = RInterval;
    fn add(self, o: &RInterval) -> RInterval {
        let p = self.prec().max(o.prec());
        RInterval { lo: round_down(p, &self.lo + &o.lo), hi: round_up(p, &self.hi + &o.hi) }
    }
}

impl<'a> Sub<&'a RInterval> for &'a RInterval {
    type Output = RInterval;
    fn sub(self, o: &RInterval) -> RInterval {
        let p = self.prec().max(o.prec());
        RInterval { lo: round_down(p, &self.lo - &o.hi), hi: round_up(p, &self.hi - &o.lo) }
    }
}

impl<'a> Mul<&'a RInterval> for &'a RInterval {
    type Output = RInterval;
    fn mul(self, o: &RInterval) -> RInterval {
        let p = self.prec().max(o.prec());
        let lo = [
            round_down(p, &self.lo * &o.lo),
            round_down(p, &self.lo * &o.hi),
            round_down(p, &self.hi * &o.lo),
            round_down(p, &self.hi * &o.hi),
        ];
        let hi = [
            round_up(p, &self.lo * &o.lo),
            round_up(p, &self.lo * &o.hi),
            round_up(p, &self.hi * &o.lo),
            round_up(p, &self.hi * &o.hi),
        ];
        RInterval { lo: min_of(lo), hi: max_of(hi) }
    }
}

/// Panics when the divisor contains zero; use [`RInterval::checked_div`] otherwise.
impl<'a> Div<&'a RInterval> for &'a RInterval {
    type Output = RInterval;
    fn div(self, o: &RInterval) -> RInterval {
        self.checked_div(o).expect("interval division by zero")
    }
}

impl Neg for &RInterval {
    type Output = RInterval;
    fn neg(self) -> RInterval {
        RInterval { lo: Float::with_val(self.hi.prec(), -&self.hi), hi: Float::with_val(self.lo.prec(), -&self.lo) }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RInterval {
            type Output = RInterval;
            fn $m(self, o: RInterval) -> RInterval { (&self).$m(&o) }
        }
        impl<'a> $tr<&'a RInterval> for RInterval {
            type Output = RInterval;
            fn $m(self, o: &RInterval) -> RInterval { (&self).$m(o) }
        }
        impl<'a> $tr<RInterval> for &'a RInterval {
            type Output = RInterval;
            fn $m(self, o: RInterval) -> RInterval { self.$m(&o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RInterval {
    type Output = RInterval;
    fn neg(self) -> RInterval {
        -&self
    }
}

/// Interval functions available through [`iv_fn`].
#[derive(Clone, Debug)]
pub enum IvFn {
    Ln,
    Exp,
    Sqrt,
    /// `x^(num/den)` for positive `x`.
    Pow { num: i64, den: i64 },
    /// Ignores its argument.
    Pi,
    Add(RInterval),
    Sub(RInterval),
    Mul(RInterval),
    Div(RInterval),
}

/// Evaluates `f` on `x` at `prec` bits. The argument is first re-rounded
/// outward to `prec`, so the result always encloses the exact image.
pub fn iv_fn(f: &IvFn, x: &RInterval, prec: u32) -> Result<RInterval> {
    let x = x.with_prec(prec);
    match f {
        IvFn::Ln => x.ln(),
        IvFn::Exp => Ok(x.exp()),
        IvFn::Sqrt => x.sqrt(),
        IvFn::Pow { num, den } => {
            if *den == 0 {
                return Err(Error::InvalidParameter("zero denominator in exponent".into()));
            }
            x.powf(&RInterval::from_ratio(*num, *den, prec))
        }
        IvFn::Pi => Ok(RInterval::pi(prec)),
        IvFn::Add(o) => Ok(&x + &o.with_prec(prec)),
        IvFn::Sub(o) => Ok(&x - &o.with_prec(prec)),
        IvFn::Mul(o) => Ok(&x * &o.with_prec(prec)),
        IvFn::Div(o) => x.checked_div(&o.with_prec(prec)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = DEFAULT_PRECISION;

    #[test]
    fn ln_two_encloses_reference() {
        let v = iv_fn(&IvFn::Ln, &RInterval::from_int(2, P), P).unwrap();
        // ln 2 = 0.693147180559945309417232121458176568...
        let lo = RInterval::from_decimal("0.6931471805599453094172321214581765", P).unwrap();
        let hi = RInterval::from_decimal("0.6931471805599453094172321214581766", P).unwrap();
        assert!(v.lo() >= lo.lo() && v.hi() <= hi.hi());
    }

    #[test]
    fn pi_is_tight() {
        let v = iv_fn(&IvFn::Pi, &RInterval::from_int(0, P), P).unwrap();
        assert!((v.mid_f64() - std::f64::consts::PI).abs() < 1e-15 && v.width() < 1e-30);
    }

    #[test]
    fn exp_ln_round_trip_contains_five() {
        let five = RInterval::from_int(5, P);
        let back = five.ln().unwrap().exp();
        assert!(back.contains(&Float::with_val(P, 5)));
    }

    #[test]
    fn ln_domain_error() {
        let x = RInterval::from_bounds(Float::with_val(P, -1), Float::with_val(P, 2));
        assert!(matches!(iv_fn(&IvFn::Ln, &x, P), Err(Error::Domain(_))));
    }

    #[test]
    fn division_by_zero_interval_is_an_error() {
        let x = RInterval::from_int(1, P);
        let z = RInterval::from_bounds(Float::with_val(P, -1), Float::with_val(P, 1));
        assert!(x.checked_div(&z).is_err());
    }

    #[test]
    fn decimal_parsing() {
        let v = RInterval::from_decimal("3.741", P).unwrap();
        assert!(v.contains_interval(&RInterval::from_ratio(3741, 1000, P)));
        let w = RInterval::from_decimal("-1.5e2", P).unwrap();
        assert!(w.contains_f64(-150.0));
        assert!(RInterval::from_decimal("abc", P).is_err());
    }

    #[test]
    fn multiplication_with_mixed_signs() {
        let a = RInterval::from_bounds(Float::with_val(P, -2), Float::with_val(P, 3));
        let b = RInterval::from_bounds(Float::with_val(P, -5), Float::with_val(P, 4));
        let c = &a * &b;
        assert_eq!(c.lo_f64(), -15.0);
        assert_eq!(c.hi_f64(), 12.0);
    }

    #[test]
    fn width_shrinks_with_precision() {
        let lo = iv_fn(&IvFn::Exp, &RInterval::from_ratio(1, 3, 64), 64).unwrap();
        let hi = iv_fn(&IvFn::Exp, &RInterval::from_ratio(1, 3, 256), 256).unwrap();
        assert!(hi.width() < lo.width());
        assert!(lo.contains_interval(&hi));
    }
}
