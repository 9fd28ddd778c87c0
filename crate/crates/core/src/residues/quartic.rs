use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::numerics::{factorize, GaussianInt};
use crate::{Error, Result};

/// A fourth root of unity `i^k`, the value set of the quartic residue symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuarticValue {
    k: u8,
}

impl QuarticValue {
    pub const ONE: QuarticValue = QuarticValue { k: 0 };
    pub const I: QuarticValue = QuarticValue { k: 1 };
    pub const MINUS_ONE: QuarticValue = QuarticValue { k: 2 };
    pub const MINUS_I: QuarticValue = QuarticValue { k: 3 };

    pub fn from_k(k: u32) -> Self {
        QuarticValue { k: (k % 4) as u8 }
    }

    pub fn k(self) -> u8 {
        self.k
    }

    pub fn as_gaussian(self) -> GaussianInt {
        GaussianInt::unit(self.k as u32)
    }

    pub fn pow(self, e: u64) -> Self {
        Self::from_k(((self.k as u64 * (e % 4)) % 4) as u32)
    }

    /// `±1` for real values.
    pub fn sign(self) -> Option<i8> {
        match self.k {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }
}

impl Mul for QuarticValue {
    type Output = QuarticValue;
    fn mul(self, o: QuarticValue) -> QuarticValue {
        QuarticValue::from_k((self.k + o.k) as u32)
    }
}

impl fmt::Display for QuarticValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["1", "i", "-1", "-i"][self.k as usize])
    }
}

impl Serialize for QuarticValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn odd_norm(g: &GaussianInt) -> Result<()> {
    if g.norm().is_even() {
        Err(Error::EvenNorm)
    } else {
        Ok(())
    }
}

/// `g ≡ 1 (mod (1+i)^3)`.
pub fn is_primary(g: &GaussianInt) -> bool {
    let eight_mod = GaussianInt::new(-2, 2);
    eight_mod.divides(&(g - &GaussianInt::one()))
}

/// The unique unit `u` with `u·g` primary, and that primary associate.
pub fn primary_form(g: &GaussianInt) -> Result<(GaussianInt, GaussianInt)> {
    odd_norm(g)?;
    for u in GaussianInt::units() {
        let h = &u * g;
        if is_primary(&h) {
            return Ok((u, h));
        }
    }
    unreachable!("an odd Gaussian integer has exactly one primary associate")
}

/// Gaussian prime factorisation via the rational factorisation of the norm.
/// Odd primes come back in primary form; the unit part is dropped.
pub fn gaussian_prime_factors(g: &GaussianInt) -> Result<Vec<(GaussianInt, u32)>> {
    if g.is_zero() {
        return Err(Error::Domain("cannot factor zero".into()));
    }
    let mut rest = g.clone();
    let mut out = Vec::new();
    for (p, e) in factorize(&g.norm())? {
        if p == BigInt::from(2) {
            out.push((GaussianInt::new(1, 1), e));
            continue;
        }
        if (&p % 4u32) == BigInt::from(3) {
            out.push((primary_form(&GaussianInt::from(p))?.1, e / 2));
            continue;
        }
        let pi = split_prime(&p);
        for q in [pi.clone(), pi.conj()] {
            let mut mult = 0;
            while let Some(next) = rest.div_exact(&q) {
                rest = next;
                mult += 1;
            }
            if mult > 0 {
                out.push((primary_form(&q)?.1, mult));
            }
        }
    }
    Ok(out)
}

// A prime of ℤ[i] above a rational prime p ≡ 1 (mod 4).
fn split_prime(p: &BigInt) -> GaussianInt {
    let e: BigInt = (p - 1u32) / 4u32;
    let minus_one: BigInt = p - 1u32;
    let mut c = BigInt::from(2);
    loop {
        let x = c.modpow(&e, p);
        if (&x * &x) % p == minus_one {
            return GaussianInt::from(p.clone()).gcd(&GaussianInt::new(x, 1));
        }
        c += 1u32;
    }
}

fn symbol_at_prime(a: &GaussianInt, pi: &GaussianInt) -> Result<QuarticValue> {
    let e: BigInt = (pi.norm() - 1u32) / 4u32;
    let r = a.pow_mod(&e, pi);
    (0..4)
        .find(|&k| pi.divides(&(&r - &GaussianInt::unit(k))))
        .map(QuarticValue::from_k)
        .ok_or(Error::NotCoprimeGaussian)
}

/// Quartic residue symbol `(a / modulus)_4`: for a prime modulus `π` the unit
/// congruent to `a^((N(π)-1)/4)`, extended multiplicatively over the prime
/// factors of a composite modulus.
pub fn quartic_symbol(a: &GaussianInt, modulus: &GaussianInt) -> Result<QuarticValue> {
    odd_norm(modulus)?;
    if !a.gcd(modulus).is_unit() {
        return Err(Error::NotCoprimeGaussian);
    }
    let mut acc = QuarticValue::ONE;
    for (pi, e) in gaussian_prime_factors(modulus)? {
        acc = acc * symbol_at_prime(a, &pi)?.pow(e as u64);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::is_probable_prime;
    use num_traits::{One, ToPrimitive};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn g(a: i64, b: i64) -> GaussianInt {
        GaussianInt::new(a, b)
    }

    #[test]
    fn symbol_examples() {
        let m = g(9, -4);
        assert_eq!(quartic_symbol(&g(0, 1), &m).unwrap(), QuarticValue::ONE);
        assert_eq!(quartic_symbol(&g(2, 0), &m).unwrap(), QuarticValue::MINUS_ONE);
        assert_eq!(quartic_symbol(&g(-1, 0), &m).unwrap(), QuarticValue::ONE);
    }

    #[test]
    fn primary_examples() {
        assert_eq!(primary_form(&g(9, -4)).unwrap(), (g(1, 0), g(9, -4)));
        assert_eq!(primary_form(&g(4, 9)).unwrap(), (g(0, -1), g(9, -4)));
        let (u, h) = primary_form(&g(1, 2)).unwrap();
        assert!(u.is_unit() && is_primary(&h) && h == &u * &g(1, 2));
        assert!(matches!(primary_form(&g(1, 1)), Err(Error::EvenNorm)));
    }

    #[test]
    fn errors() {
        assert!(matches!(quartic_symbol(&g(3, 0), &g(1, 1)), Err(Error::EvenNorm)));
        assert!(matches!(quartic_symbol(&g(13, 0), &g(3, 2)), Err(Error::NotCoprimeGaussian)));
    }

    #[test]
    fn composite_modulus_factorisation() {
        let m = &(&g(3, 2) * &g(3, 2)) * &(&g(7, 0) * &g(2, -1));
        let f = gaussian_prime_factors(&m).unwrap();
        let back = f.iter().fold(GaussianInt::one(), |acc, (p, e)| &acc * &p.pow(*e as u64));
        assert_eq!(back.first_quadrant().0, m.first_quadrant().0);
    }

    // Definitional oracle: for π = r + s·i of prime norm p, ℤ[i]/π ≅ ℤ/p with
    // i ↦ -r/s, so the symbol reduces to an exponentiation in ℤ/p.
    fn oracle(a: &GaussianInt, pi: &GaussianInt) -> QuarticValue {
        let p = pi.norm().to_i64().unwrap();
        let s_inv = pi.im.mod_floor(&BigInt::from(p)).modpow(&BigInt::from(p - 2), &BigInt::from(p));
        let iota = (-&pi.re * s_inv).mod_floor(&BigInt::from(p));
        let v = (&a.re + &a.im * &iota).mod_floor(&BigInt::from(p));
        let r = v.modpow(&BigInt::from((p - 1) / 4), &BigInt::from(p));
        let images = [BigInt::one(), iota.clone(), BigInt::from(p - 1), (-&iota).mod_floor(&BigInt::from(p))];
        QuarticValue::from_k(images.iter().position(|x| *x == r).unwrap() as u32)
    }

    #[test]
    fn matches_definitional_oracle_on_random_primes() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x51ab);
        let mut checked = 0;
        while checked < 100 {
            let p: u64 = rng.gen_range(5..1_000_000);
            if p % 4 != 1 || !is_probable_prime(&BigInt::from(p)) {
                continue;
            }
            let pi = primary_form(&split_prime(&BigInt::from(p))).unwrap().1;
            assert!(is_primary(&pi));
            for _ in 0..5 {
                let a = g(rng.gen_range(-5000..5000), rng.gen_range(-5000..5000));
                if !a.gcd(&pi).is_unit() {
                    continue;
                }
                assert_eq!(quartic_symbol(&a, &pi).unwrap(), oracle(&a, &pi), "a = {a}, pi = {pi}");
            }
            checked += 1;
        }
    }
}
