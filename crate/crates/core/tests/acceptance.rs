//! Acceptance suite. One PASS/FAIL line per criterion; exits non-zero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use jesman_core::bounds::{
    certify_threshold, crossover, epsilon_n, even_power_congruence, k_at_minimum_a2, lemma_constants,
    ordering_predicates, ThresholdForm,
};
use jesman_core::numerics::{is_probable_prime, BigInt, GaussianInt, RInterval, THRESHOLD_PRECISION};
use jesman_core::residues::{
    jacobi, parity_engine, parity_feasible, primary_form, quartic_chain, quartic_symbol, Parity, QuarticValue,
};
use jesman_core::search::{
    find_solutions, find_solutions_unpruned, scan_range, structure_checks, ExponentTriple, Pruner,
};
use jesman_core::triples::{min_c_scan, PrimPair};
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PREC: u32 = 128;

struct Outcome {
    id: &'static str,
    pass: bool,
    detail: String,
    elapsed: Duration,
}

fn run(id: &'static str, f: impl FnOnce() -> Result<String, String>) -> Outcome {
    let t = Instant::now();
    let r = std::panic::catch_unwind(std::panic::AssertUnwindSafe(f))
        .unwrap_or_else(|_| Err("panicked".to_string()));
    let elapsed = t.elapsed();
    let (pass, detail) = match r {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Outcome { id, pass, detail, elapsed }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, t: Instant) -> Result<(), String> {
    ensure(t.elapsed() < limit, || format!("took {:.1?}, limit {limit:?}", t.elapsed()))
}

fn pair(m: u64, n: u64) -> PrimPair {
    PrimPair::new(m, n).unwrap()
}

fn classical_uniqueness() -> Result<String, String> {
    let t = Instant::now();
    for (m, n) in [(2, 1), (3, 2), (4, 3), (5, 4), (6, 5)] {
        let p = pair(m, n);
        let sols: Vec<_> = find_solutions(&p, 40).iter().map(|r| r.sol()).collect();
        ensure(sols == [ExponentTriple::TRIVIAL], || format!("{p}: {sols:?}"))?;
    }
    within(Duration::from_secs(10), t)?;
    Ok("5 triples, only (2,2,2)".into())
}

fn desk_scan() -> Result<String, String> {
    let t = Instant::now();
    let report = scan_range(60, 40, Some(8)).map_err(|e| e.to_string())?;
    ensure(report.nontrivial.is_empty(), || format!("non-trivial: {:?}", report.nontrivial))?;
    for p in PrimPair::all_up_to(20) {
        let fast: Vec<_> = find_solutions(&p, 20).iter().map(|r| r.sol()).collect();
        let slow = find_solutions_unpruned(&p, 20);
        ensure(fast == slow, || format!("{p}: pruned {fast:?} vs unpruned {slow:?}"))?;
    }
    within(Duration::from_secs(300), t)?;
    Ok(format!("{} pairs, {} solutions, all trivial", report.pairs_checked, report.solutions_total))
}

fn c185() -> Result<String, String> {
    let s = min_c_scan(1000);
    let want = [pair(13, 4), pair(11, 8)];
    ensure(s.c_min == Some(BigInt::from(185)), || format!("c_min = {:?}", s.c_min))?;
    let got: BTreeSet<_> = s.pairs.iter().map(|p| (p.m().clone(), p.n().clone())).collect();
    let exp: BTreeSet<_> = want.iter().map(|p| (p.m().clone(), p.n().clone())).collect();
    ensure(got == exp && s.pairs.len() == 2, || format!("pairs = {:?}", s.pairs))?;
    Ok("c = 185 from (13,4), (11,8)".into())
}

fn legendre_by_squares(a: u64, p: u64) -> i8 {
    let r = a % p;
    if r == 0 {
        0
    } else if (1..p).any(|x| x * x % p == r) {
        1
    } else {
        -1
    }
}

fn jacobi_by_squares(a: u64, mut n: u64) -> i8 {
    let mut acc = 1;
    let mut p = 3;
    while n > 1 {
        while n.is_multiple_of(p) {
            n /= p;
            acc *= legendre_by_squares(a, p);
        }
        p += 2;
    }
    acc
}

// ℤ[i]/π ≅ ℤ/p for N(π) = p prime, with i ↦ -re(π)/im(π).
fn quartic_by_definition(a: &GaussianInt, pi: &GaussianInt) -> QuarticValue {
    let p = pi.norm();
    let im_inv = pi.im.mod_floor(&p).modpow(&(&p - 2), &p);
    let iota = (-&pi.re * im_inv).mod_floor(&p);
    let v = (&a.re + &a.im * &iota).mod_floor(&p);
    let r = v.modpow(&((&p - 1) / 4), &p);
    let images = [BigInt::from(1), iota.clone(), &p - 1, (-&iota).mod_floor(&p)];
    QuarticValue::from_k(images.iter().position(|x| *x == r).expect("not a fourth root of unity") as u32)
}

fn two_squares(p: u64) -> (i64, i64) {
    let mut a = 1u64;
    while a * a < p {
        let b2 = p - a * a;
        let b = (b2 as f64).sqrt() as u64;
        for b in b.saturating_sub(1)..=b + 1 {
            if b * b == b2 {
                return (a as i64, b as i64);
            }
        }
        a += 1;
    }
    unreachable!("{p} is not a sum of two squares")
}

fn residue_oracles() -> Result<String, String> {
    let mut jac = 0u64;
    for n in (3u64..2000).step_by(2) {
        for a in 0..n {
            let got = jacobi(&BigInt::from(a), &BigInt::from(n)).map_err(|e| e.to_string())?;
            ensure(got == jacobi_by_squares(a, n), || format!("jacobi({a}/{n}) = {got}"))?;
            jac += 1;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x4a45);
    let mut primes = 0;
    let mut quart = 0;
    while primes < 100 {
        let p: u64 = rng.gen_range(5..1_000_000);
        if p % 4 != 1 || !is_probable_prime(&BigInt::from(p)) {
            continue;
        }
        let (r, s) = two_squares(p);
        let pi = primary_form(&GaussianInt::new(r, s)).map_err(|e| e.to_string())?.1;
        for _ in 0..10 {
            let a = GaussianInt::new(rng.gen_range(-10_000..10_000), rng.gen_range(-10_000..10_000));
            if !a.gcd(&pi).is_unit() {
                continue;
            }
            let got = quartic_symbol(&a, &pi).map_err(|e| e.to_string())?;
            let want = quartic_by_definition(&a, &pi);
            ensure(got == want, || format!("({a}/{pi}) = {got}, expected {want}"))?;
            quart += 1;
        }
        primes += 1;
    }

    let mut chains = 0;
    for p in PrimPair::all_up_to(200) {
        let m8 = p.m().mod_floor(&BigInt::from(8)).to_u8().unwrap();
        let n8 = p.n().mod_floor(&BigInt::from(8)).to_u8().unwrap();
        if m8 != 4 || n8 != 1 {
            continue;
        }
        let c = quartic_chain(&p).map_err(|e| e.to_string())?;
        ensure(
            c.unit_i == QuarticValue::ONE && c.minus_one == QuarticValue::ONE && c.two == QuarticValue::MINUS_ONE,
            || format!("{p}: (i)={} (-1)={} (2)={}", c.unit_i, c.minus_one, c.two),
        )?;
        chains += 1;
    }
    Ok(format!("{jac} Jacobi symbols, {quart} quartic symbols over 100 primes, {chains} chains"))
}

fn parity() -> Result<String, String> {
    let e = Parity::Even;
    let set = parity_feasible(&BigInt::from(7), &BigInt::from(9), &BigInt::from(16)).map_err(|e| e.to_string())?;
    ensure(set == BTreeSet::from([(e, e)]), || format!("(7, 9, 16) -> {set:?}"))?;

    let chain_for = |case: &str| -> Option<&'static [&'static str]> {
        Some(match case {
            "4 || m, n = 1 (mod 8)" => &["even-m", "quartic-chain", "sum-5-mod-8"],
            "4 || m, n = 3 (mod 8)" => &["even-m", "mod-16", "sum-7-mod-8"],
            "4 || m, n = 5 (mod 8)" => &["de-split-mod-8", "even-m", "mod-16"],
            "4 || m, n = 7 (mod 8)" => &["diff-5-mod-8", "even-m", "sum-3-mod-8"],
            "8 | m, n = 3 (mod 8)" => &["diff-5-mod-8", "even-m", "mod-16", "sum-3-mod-8"],
            "8 | m, n = 5 (mod 8)" => &["de-split-mod-8", "even-m", "mod-16", "sum-5-mod-8"],
            _ => return None,
        })
    };
    let mut cases = 0;
    for p in PrimPair::all_up_to(120) {
        if !p.m_even() || !p.m().is_multiple_of(&BigInt::from(4)) {
            continue;
        }
        let v = parity_engine(&p).map_err(|e| e.to_string())?;
        let Some(expected) = chain_for(&v.case) else {
            ensure(!v.applicable, || format!("{p}: unexpected applicable case {}", v.case))?;
            continue;
        };
        ensure(v.applicable && v.all_even, || format!("{p}: verdict not all-even"))?;
        let rules: BTreeSet<&str> = v.constraints.iter().map(|c| c.source.id()).collect();
        ensure(rules == expected.iter().copied().collect(), || format!("{p}: rules {rules:?}"))?;
        cases += 1;
    }
    Ok(format!("{cases} pairs all-even, (7,9,16) -> {{(even, even)}}"))
}

fn gaussian_structure() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a75);
    let mut done = 0;
    while done < 500 {
        let a1: u64 = rng.gen_range(1..1000);
        let b1: u64 = rng.gen_range(1..1000);
        if a1 * a1 + b1 * b1 > 1_000_000 || a1.gcd(&b1) != 1 || (a1 + b1).is_multiple_of(2) {
            continue;
        }
        let z = 2 * rng.gen_range(0..8u32) + 1;
        let r = structure_checks(a1, b1, z).map_err(|e| e.to_string())?;
        ensure(r.all_ok, || format!("({a1}, {b1}, Z = {z}): {r:?}"))?;
        done += 1;
    }
    Ok("500 instances".into())
}

fn close(x: &RInterval, target: f64, tol: f64) -> bool {
    (x.mid_f64() - target).abs() <= tol && x.width() < tol / 100.0
}

fn lemma_leading_constants() -> Result<String, String> {
    let c = lemma_constants(PREC).map_err(|e| e.to_string())?;
    ensure(close(&c.leading, 3.741, 0.001), || format!("leading = {}", c.leading.mid_f64()))?;
    ensure(close(&c.sqrt_kappa, 0.222, 0.0005), || format!("sqrt(kappa) = {}", c.sqrt_kappa.mid_f64()))?;
    let eps = epsilon_n(33_091, PREC).map_err(|e| e.to_string())?;
    let bound = RInterval::from_ratio(11, 10_000, PREC);
    ensure(eps.certainly_lt(&bound), || format!("epsilon(33091) <= {}", eps.hi_f64()))?;
    Ok(format!(
        "leading {:.5}, sqrt(kappa) {:.5}, epsilon(33091) < {:.6}",
        c.leading.mid_f64(),
        c.sqrt_kappa.mid_f64(),
        eps.hi_f64()
    ))
}

fn lemma_k_and_n() -> Result<String, String> {
    let kn = k_at_minimum_a2(3, PREC).map_err(|e| e.to_string())?;
    let detail = format!("L = 3, a2 = 1000 + a1: K = {}, N = {}", kn.k, kn.n);
    ensure(kn.k >= 11_030 && kn.n > 33_090, || format!("{detail}; required K >= 11030 and N > 33090"))?;
    Ok(detail)
}

fn thresholds() -> Result<String, String> {
    let t = Instant::now();
    let mut parts = Vec::new();
    for (form, band) in [(ThresholdForm::ThreeFifths, (95_000.0, 109_948.0)), (ThresholdForm::TwoThirds, (19_000.0, 22_933.0))] {
        let t0 = form.claimed_t0(THRESHOLD_PRECISION);
        let cert = certify_threshold(form, &t0).map_err(|e| e.to_string())?;
        ensure(cert.verdict, || format!("{}: {:?}", form.label(), cert.failure))?;
        let x = crossover(form, THRESHOLD_PRECISION).map_err(|e| e.to_string())?;
        let (lo, hi) = (x.log10_bracket.lo_f64(), x.log10_bracket.hi_f64());
        ensure(lo >= band.0 && hi <= band.1, || format!("{}: crossover log10 in [{lo}, {hi}]", form.label()))?;
        parts.push(format!("{} crossover log10 [{lo:.1}, {hi:.1}]", form.label()));
    }
    within(Duration::from_secs(60), t)?;
    Ok(parts.join(", "))
}

fn identities() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1d);
    let mut done = 0;
    while done < 100 {
        let m: u64 = rng.gen_range(2..100_000);
        let n: u64 = rng.gen_range(1..m);
        let Ok(p) = PrimPair::new(m, n) else { continue };
        let t = p.triple();
        ensure(&t.c * &t.c - &t.a * &t.a == &t.b * &t.b, || format!("{p}: c^2 - a^2 != b^2"))?;
        for x in [2, 4, 6, 8] {
            ensure(even_power_congruence(&p, x).map_err(|e| e.to_string())?, || format!("{p}: x = {x}"))?;
        }
        done += 1;
    }
    let mut scanned = 0;
    for p in PrimPair::all_up_to(60) {
        let report = ordering_predicates(&p, ExponentTriple::TRIVIAL);
        ensure(!report.excluded, || format!("{p}: ordering excludes (2,2,2) via {:?}", report.failed))?;
        ensure(Pruner::new(&p, 40).admits(ExponentTriple::TRIVIAL), || format!("{p}: pruner rejects (2,2,2)"))?;
        scanned += 1;
    }
    Ok(format!("100 random pairs, {scanned} scanned pairs keep (2,2,2)"))
}

fn main() -> ExitCode {
    let outcomes = [
        run("1 classical uniqueness", classical_uniqueness),
        run("2 desk-scale scan", desk_scan),
        run("3 smallest c = 185", c185),
        run("4 residue oracles", residue_oracles),
        run("5 parity engine", parity),
        run("6 gaussian structure", gaussian_structure),
        run("7a lemma constants", lemma_leading_constants),
        run("7b K and N at L = 3", lemma_k_and_n),
        run("8 threshold certification", thresholds),
        run("9 identity suite", identities),
    ];
    let mut failed = 0;
    for o in &outcomes {
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("{tag} [{}] ({:.2?}) {}", o.id, o.elapsed, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("{} passed, {failed} failed", outcomes.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
