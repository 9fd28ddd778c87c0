use std::collections::BTreeSet;

use jesman_core::numerics::{BigInt, GaussianInt};
use jesman_core::residues::{
    jacobi, parity_engine, parity_feasible, quartic_chain, quartic_symbol, Parity, QuarticValue,
};
use jesman_core::search::find_solutions;
use jesman_core::triples::PrimPair;
use proptest::prelude::*;

// Legendre symbols by listing squares, multiplied over the factorisation of n.
fn jacobi_oracle(a: u64, n: u64) -> i8 {
    let mut rest = n;
    let mut acc = 1i8;
    let mut p = 3;
    while rest > 1 {
        while rest.is_multiple_of(p) {
            rest /= p;
            let r = a % p;
            let sym = if r == 0 {
                0
            } else if (1..p).any(|x| x * x % p == r) {
                1
            } else {
                -1
            };
            acc *= sym;
        }
        p += 2;
    }
    acc
}

#[test]
fn jacobi_matches_square_enumeration() {
    for n in (3u64..2000).step_by(2) {
        for a in 0..n {
            let got = jacobi(&BigInt::from(a), &BigInt::from(n)).unwrap();
            assert_eq!(got, jacobi_oracle(a, n), "({a}/{n})");
        }
    }
}

#[test]
fn chain_values_for_four_exactly_dividing_m() {
    let mut seen = 0;
    for p in PrimPair::all_up_to(200) {
        let m = p.m().clone();
        let n = p.n().clone();
        if m.clone() % 8u32 != BigInt::from(4) || n.clone() % 8u32 != BigInt::from(1) {
            continue;
        }
        let c = quartic_chain(&p).unwrap();
        assert!(c.primary && c.congruences_hold, "{p}");
        assert_eq!(c.unit_i, QuarticValue::ONE, "{p}");
        assert_eq!(c.minus_one, QuarticValue::ONE, "{p}");
        assert_eq!(c.two, QuarticValue::MINUS_ONE, "{p}");
        assert_eq!(c.two_n_sq, QuarticValue::MINUS_ONE, "{p}");
        assert_eq!(c.two_m_sq_i, QuarticValue::MINUS_ONE, "{p}");
        seen += 1;
    }
    assert!(seen > 100);
}

#[test]
fn mod16_cycle_admits_only_even_parities() {
    let set = parity_feasible(&7.into(), &9.into(), &16.into()).unwrap();
    assert_eq!(set, BTreeSet::from([(Parity::Even, Parity::Even)]));
}

#[test]
fn engine_agrees_with_found_solutions() {
    let mut checked = 0;
    for p in PrimPair::all_up_to(120) {
        if !p.m_even() || p.m().clone() % 4u32 != BigInt::from(0) {
            continue;
        }
        let v = parity_engine(&p).unwrap();
        for rec in find_solutions(&p, 30) {
            let s = rec.sol();
            if s.y <= 1 {
                continue;
            }
            for c in &v.constraints {
                assert!(c.holds(s.x as u64, s.y as u64, s.z as u64), "{p} {s} violates {c}");
            }
            checked += 1;
        }
    }
    assert!(checked > 0);
}

fn odd_gaussian() -> impl Strategy<Value = GaussianInt> {
    (-60i64..60, -60i64..60)
        .prop_filter("odd norm", |(a, b)| (a * a + b * b) % 2 == 1)
        .prop_map(|(a, b)| GaussianInt::new(a, b))
}

fn small_gaussian() -> impl Strategy<Value = GaussianInt> {
    (-500i64..500, -500i64..500).prop_map(|(a, b)| GaussianInt::new(a, b))
}

proptest! {
    #[test]
    fn quartic_symbol_is_multiplicative(a in small_gaussian(), b in small_gaussian(), m in odd_gaussian()) {
        prop_assume!(!m.is_unit());
        prop_assume!(a.gcd(&m).is_unit() && b.gcd(&m).is_unit());
        let ab = &a * &b;
        let lhs = quartic_symbol(&ab, &m).unwrap();
        let rhs = quartic_symbol(&a, &m).unwrap() * quartic_symbol(&b, &m).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jacobi_is_multiplicative_in_modulus(a in -1000i64..1000, n1 in 1u64..500, n2 in 1u64..500) {
        let (n1, n2) = (2 * n1 + 1, 2 * n2 + 1);
        let j = |n: u64| jacobi(&BigInt::from(a), &BigInt::from(n)).unwrap();
        prop_assert_eq!(j(n1 * n2), j(n1) * j(n2));
    }
}
