use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// An element `re + im·i` of ℤ[i].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInt { re: re.into(), im: im.into() }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn i() -> Self {
        Self::new(0, 1)
    }

    /// `i^k` for `k` taken mod 4.
    pub fn unit(k: u32) -> Self {
        match k % 4 {
            0 => Self::new(1, 0),
            1 => Self::new(0, 1),
            2 => Self::new(-1, 0),
            _ => Self::new(0, -1),
        }
    }

    pub fn units() -> [GaussianInt; 4] {
        [Self::unit(0), Self::unit(1), Self::unit(2), Self::unit(3)]
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        GaussianInt { re: self.re.clone(), im: -&self.im }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// Exponent `k` with `self = i^k`, when `self` is a unit.
    pub fn unit_exponent(&self) -> Option<u32> {
        (0..4).find(|&k| *self == Self::unit(k))
    }

    /// Exact power in ℤ[i] by repeated squaring.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Division with the quotient rounded to the nearest Gaussian integer,
    /// so that `N(remainder) ≤ N(divisor) / 2`.
    pub fn div_rem_round(&self, d: &GaussianInt) -> (GaussianInt, GaussianInt) {
        assert!(!d.is_zero(), "division by zero in Z[i]");
        let n = d.norm();
        let num = self * &d.conj();
        let q = GaussianInt { re: round_div(&num.re, &n), im: round_div(&num.im, &n) };
        let r = self - &(&q * d);
        (q, r)
    }

    pub fn rem(&self, d: &GaussianInt) -> GaussianInt {
        self.div_rem_round(d).1
    }

    /// `Some(self / d)` when `d` divides `self` exactly.
    pub fn div_exact(&self, d: &GaussianInt) -> Option<GaussianInt> {
        let (q, r) = self.div_rem_round(d);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &GaussianInt) -> bool {
        other.div_exact(self).is_some()
    }

    pub fn gcd(&self, other: &GaussianInt) -> GaussianInt {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// `self^e mod modulus`, reduced by nearest-quotient division.
    pub fn pow_mod(&self, e: &BigInt, modulus: &GaussianInt) -> GaussianInt {
        let mut acc = GaussianInt::one().rem(modulus);
        let base = self.rem(modulus);
        for bit in (0..e.bits()).rev() {
            acc = (&acc * &acc).rem(modulus);
            if e.bit(bit) {
                acc = (&acc * &base).rem(modulus);
            }
        }
        acc
    }

    /// Associate in the closed first quadrant: `re > 0`, `im ≥ 0`, together with
    /// the unit `u` such that `self = u · associate`.
    pub fn first_quadrant(&self) -> (GaussianInt, GaussianInt) {
        if self.is_zero() {
            return (self.clone(), GaussianInt::one());
        }
        for k in 0..4 {
            // self = i^k · g  ⇔  g = i^(4-k) · self
            let g = &GaussianInt::unit(4 - k) * self;
            if g.re.is_positive() && !g.im.is_negative() {
                return (g, GaussianInt::unit(k));
            }
        }
        unreachable!("every nonzero Gaussian integer has a first-quadrant associate")
    }
}

fn round_div(a: &BigInt, n: &BigInt) -> BigInt {
    // floor((2a + n) / 2n) for n > 0
    let two_n: BigInt = n * 2;
    let num: BigInt = a * 2 + n;
    num.div_floor(&two_n)
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Serialize for GaussianInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GaussianInt", 2)?;
        st.serialize_field("re", &self.re.to_string())?;
        st.serialize_field("im", &self.im.to_string())?;
        st.end()
    }
}

impl From<BigInt> for GaussianInt {
    fn from(re: BigInt) -> Self {
        GaussianInt { re, im: BigInt::zero() }
    }
}

impl From<i64> for GaussianInt {
    fn from(re: i64) -> Self {
        GaussianInt::new(re, 0)
    }
}

impl<'a> Add<&'a GaussianInt> for &'a GaussianInt {
    type Output = GaussianInt;
    fn add(self, o: &GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a GaussianInt> for &'a GaussianInt {
    type Output = GaussianInt;
    fn sub(self, o: &GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a GaussianInt> for &'a GaussianInt {
    type Output = GaussianInt;
    fn mul(self, o: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Neg for &GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt { re: -&self.re, im: -&self.im }
    }
}

impl Add for GaussianInt {
    type Output = GaussianInt;
    fn add(self, o: GaussianInt) -> GaussianInt {
        &self + &o
    }
}

impl Sub for GaussianInt {
    type Output = GaussianInt;
    fn sub(self, o: GaussianInt) -> GaussianInt {
        &self - &o
    }
}

impl Mul for GaussianInt {
    type Output = GaussianInt;
    fn mul(self, o: GaussianInt) -> GaussianInt {
        &self * &o
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        -&self
    }
}
