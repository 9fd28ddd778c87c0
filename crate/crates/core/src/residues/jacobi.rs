use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Jacobi symbol `(a / n)` for odd positive `n`, by the reciprocity reduction.
/// `(a / 1) = 1`.
pub fn jacobi(a: &BigInt, n: &BigInt) -> Result<i8> {
    if n.is_even() || !n.is_positive() {
        return Err(Error::EvenModulus(n.to_string()));
    }
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut sign = 1i8;
    let eight = BigInt::from(8);
    while !a.is_zero() {
        let tz = a.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            a >>= tz;
            let r = n.mod_floor(&eight);
            if tz % 2 == 1 && (r == BigInt::from(3) || r == BigInt::from(5)) {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u32) == BigInt::from(3) && (&n % 4u32) == BigInt::from(3) {
            sign = -sign;
        }
        a = a.mod_floor(&n);
    }
    Ok(if n.is_one() { sign } else { 0 })
}
