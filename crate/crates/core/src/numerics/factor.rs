use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

const TRIAL_LIMIT: u64 = 1 << 16;
const RHO_BUDGET: u64 = 1 << 22;
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Miller–Rabin with the first twelve prime bases. Deterministic below
/// 3.3·10^24, probabilistic beyond.
pub fn is_probable_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    for p in MR_BASES {
        let p = BigInt::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let one = BigInt::one();
    let n1: BigInt = n - 1;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'bases: for a in MR_BASES {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x == one || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: &BigInt, seed: u64) -> Option<BigInt> {
    let c = BigInt::from(seed);
    let f = |x: &BigInt| (x * x + &c) % n;
    let mut y = BigInt::from(2u32 + seed as u32);
    let mut r: u64 = 1;
    let mut q = BigInt::one();
    let mut g = BigInt::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    let mut spent = 0u64;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..(r - k).min(128) {
                y = f(&y);
                q = (&q * (&x - &y).abs()) % n;
            }
            g = q.gcd(n);
            k += 128;
        }
        r *= 2;
        spent += r;
        if spent > RHO_BUDGET {
            return None;
        }
    }
    if &g == n {
        loop {
            ys = f(&ys);
            g = (&x - &ys).abs().gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    (&g != n).then_some(g)
}

fn split(n: BigInt, out: &mut Vec<BigInt>) -> Result<()> {
    if n.is_one() {
        return Ok(());
    }
    if is_probable_prime(&n) {
        out.push(n);
        return Ok(());
    }
    for seed in 1..20 {
        if let Some(d) = pollard_brent(&n, seed) {
            let other = &n / &d;
            split(d, out)?;
            return split(other, out);
        }
    }
    Err(Error::FactorizationTimeout(n.to_string()))
}

/// Prime factorisation of `|n|` as sorted `(prime, exponent)` pairs.
///
/// Trial division up to 2^16, then Pollard–Brent on the cofactor with a fixed
/// iteration budget.
pub fn factorize(n: &BigInt) -> Result<Vec<(BigInt, u32)>> {
    if n.is_zero() {
        return Err(Error::Domain("cannot factor zero".into()));
    }
    let mut rest = n.abs();
    let mut primes: Vec<BigInt> = Vec::new();
    let mut p = 2u64;
    while p < TRIAL_LIMIT {
        let pb = BigInt::from(p);
        if &pb * &pb > rest {
            break;
        }
        while (&rest % &pb).is_zero() {
            rest /= &pb;
            primes.push(pb.clone());
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        split(rest, &mut primes)?;
    }
    primes.sort();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    for q in primes {
        match out.last_mut() {
            Some((last, e)) if *last == q => *e += 1,
            _ => out.push((q, 1)),
        }
    }
    Ok(out)
}

/// Trial-division factorisation for machine-sized inputs.
pub fn small_factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// True iff `c = p^e` for a prime `p` and `e ≥ 1`.
pub fn is_prime_power(c: &BigInt) -> bool {
    if c < &BigInt::from(2) {
        return false;
    }
    if let Some(small) = c.to_u64() {
        return small_factorize(small).len() == 1;
    }
    match factorize(c) {
        Ok(f) => f.len() == 1,
        // An unsplittable composite cofactor is not reported as a prime power.
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_examples() {
        assert!(is_prime_power(&BigInt::from(169)));
        assert!(!is_prime_power(&BigInt::from(185)));
        assert!(is_prime_power(&BigInt::from(2)));
        assert!(!is_prime_power(&BigInt::from(1)));
        assert!(is_prime_power(&BigInt::from(3u64).pow(40)));
    }

    #[test]
    fn factorize_recovers_input() {
        let n: BigInt = BigInt::from(1_000_003u64) * BigInt::from(999_983u64) * 12u32;
        let f = factorize(&n).unwrap();
        let back = f.iter().fold(BigInt::one(), |acc, (p, e)| acc * p.pow(*e));
        assert_eq!(back, n);
        assert_eq!(f.len(), 4);
    }

    #[test]
    fn miller_rabin_small_range() {
        for n in 0u64..2000 {
            let brute = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_probable_prime(&BigInt::from(n)), brute, "n = {n}");
        }
    }
}
