use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Largest `e` with `p^e | n`.
pub fn val_p(n: &BigInt, p: &BigInt) -> Result<u32> {
    if n.is_zero() {
        return Err(Error::ZeroValuation);
    }
    if p < &BigInt::from(2) {
        return Err(Error::InvalidBase(format!("valuation base {p} < 2")));
    }
    let mut e = 0;
    let mut rest = n.abs();
    loop {
        let (q, r) = rest.div_rem(p);
        if !r.is_zero() {
            return Ok(e);
        }
        rest = q;
        e += 1;
    }
}

/// The positive `y` with `base^y = n`, if there is one.
///
/// `n = 1` has no positive exponent and yields `None`.
pub fn perfect_power_exponent(n: &BigInt, base: &BigInt) -> Option<u32> {
    if n < &BigInt::one() || base < &BigInt::from(2) {
        return None;
    }
    let mut rest = n.clone();
    let mut y = 0u32;
    while !rest.is_one() {
        let (q, r) = rest.div_rem(base);
        if !r.is_zero() {
            return None;
        }
        rest = q;
        y += 1;
    }
    (y > 0).then_some(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(val_p(&b(48), &b(2)).unwrap(), 4);
        assert_eq!(val_p(&b(1), &b(3)).unwrap(), 0);
        assert_eq!(val_p(&b(343), &b(7)).unwrap(), 3);
        assert_eq!(val_p(&b(-40), &b(2)).unwrap(), 3);
    }

    #[test]
    fn valuation_of_zero() {
        let err = val_p(&b(0), &b(2)).unwrap_err();
        assert_eq!(err.to_string(), "valuation of zero undefined");
    }

    #[test]
    fn power_exponent_examples() {
        assert_eq!(perfect_power_exponent(&b(32768), &b(8)), Some(5));
        assert_eq!(perfect_power_exponent(&b(1), &b(7)), None);
        assert_eq!(perfect_power_exponent(&b(24), &b(2)), None);
        assert_eq!(perfect_power_exponent(&b(2), &b(2)), Some(1));
        assert_eq!(perfect_power_exponent(&b(0), &b(2)), None);
    }
}
