use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use anyhow::Context;
use serde_json::json;

use jesman_core::bounds::{
    certify_threshold, cor_lower_bound, crossover, lemma_instance, ln_of_decimal, ordering_predicates,
    y_upper_bound, ThresholdForm,
};
use jesman_core::numerics::{BigInt, GaussianInt, RInterval};
use jesman_core::residues::{jacobi, parity_engine, quartic_symbol, Rule};
use jesman_core::search::{find_solutions, scan_pairs, ScanReport};
use jesman_core::triples::{exclusion_conditions, PrimPair};

use crate::config::RunConfig;
use crate::report::{value_or_error, Report, RuleRef};

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or a domain error from the library; exit code 2.
    Invalid(String),
    Other(anyhow::Error),
}

impl From<jesman_core::Error> for CliError {
    fn from(e: jesman_core::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::Other(e)
    }
}

pub type CmdResult = Result<Outcome, CliError>;

pub struct Outcome {
    pub report: Report,
    pub text: String,
    /// False when a certification or constraint check failed (exit code 1).
    pub ok: bool,
}

fn parse_big(s: &str, what: &str) -> Result<BigInt, CliError> {
    s.trim().parse().map_err(|_| CliError::Invalid(format!("{what}: not an integer: {s:?}")))
}

/// `re,im` or a plain integer.
fn parse_gaussian(s: &str, what: &str) -> Result<GaussianInt, CliError> {
    match s.split_once(',') {
        Some((re, im)) => Ok(GaussianInt::new(parse_big(re, what)?, parse_big(im, what)?)),
        None => Ok(GaussianInt::from(parse_big(s, what)?)),
    }
}

fn decimal(s: &str, what: &str, prec: u32) -> Result<RInterval, CliError> {
    RInterval::from_decimal(s, prec).map_err(|e| CliError::Invalid(format!("{what}: {e}")))
}

fn show(x: &RInterval) -> String {
    let (lo, hi) = x.to_decimal_pair(12);
    format!("[{lo}, {hi}]")
}

pub fn verify(rc: &RunConfig, m: &str, n: &str, cap: Option<u32>) -> CmdResult {
    let cap = rc.pick(cap, "cap", 40)?;
    if cap < 2 {
        return Err(CliError::Invalid(format!("cap must be at least 2, got {cap}")));
    }
    let p = PrimPair::new(parse_big(m, "m")?, parse_big(n, "n")?)?;
    let prec = rc.precision_bits;
    let t = p.triple();
    let solutions = find_solutions(&p, cap);
    let ordering: Vec<_> = solutions.iter().map(|r| ordering_predicates(&p, r.sol())).collect();
    let conditions = exclusion_conditions(&p);
    let profile = p.profile();
    let y_bound = y_upper_bound(&p, prec);
    let four_divides_m = p.m_even() && (p.m() % 4u32) == BigInt::from(0);
    let parity = four_divides_m.then(|| parity_engine(&p));

    let mut rules: Vec<Rule> = Vec::new();
    if let Some(Ok(v)) = &parity {
        for c in &v.constraints {
            if !rules.contains(&c.source) {
                rules.push(c.source);
            }
        }
    }
    let nontrivial: Vec<_> = solutions.iter().filter(|r| !r.is_trivial()).collect();

    let mut text = String::new();
    writeln!(text, "pair {p}: a = {}, b = {}, c = {}", t.a, t.b, t.c).unwrap();
    let sols: Vec<String> = solutions.iter().map(|r| r.sol().to_string()).collect();
    writeln!(text, "solutions with exponents <= {cap}: {}", sols.join(" ")).unwrap();
    match &conditions {
        Ok(c) => writeln!(text, "exclusion conditions all hold: {}", c.all).unwrap(),
        Err(e) => writeln!(text, "exclusion conditions: {e}").unwrap(),
    }
    match &y_bound {
        Ok(y) => writeln!(text, "y bound: Y < {} (from {:.6})", y.bound.hi_f64().ceil(), y.bound.hi_f64()).unwrap(),
        Err(e) => writeln!(text, "y bound: {e}").unwrap(),
    }
    match &parity {
        None => writeln!(text, "parity engine: skipped, needs 4 | m").unwrap(),
        Some(Err(e)) => writeln!(text, "parity engine: {e}").unwrap(),
        Some(Ok(v)) if !v.applicable => writeln!(text, "parity engine: no rule chain for {}", v.case).unwrap(),
        Some(Ok(v)) => {
            writeln!(text, "parity engine ({}): all even = {}", v.case, v.all_even).unwrap();
            for c in &v.constraints {
                writeln!(text, "  {} [{}]", c.kind, c.source.id()).unwrap();
            }
            for c in &v.cited {
                writeln!(text, "  cited: {c}").unwrap();
            }
        }
    }

    let results = json!({
        "triple": t,
        "profile": value_or_error(&profile),
        "solutions": solutions,
        "nontrivial": nontrivial.len(),
        "ordering": ordering,
        "conditions": value_or_error(&conditions),
        "y_bound": value_or_error(&y_bound),
        "parity": match &parity {
            None => json!({ "skipped": "needs 4 | m" }),
            Some(r) => value_or_error(r),
        },
    });
    let inputs = json!({ "m": p.m().to_string(), "n": p.n().to_string(), "cap": cap, "precision_bits": prec });
    Ok(Outcome {
        report: Report::new("verify", inputs, results, rules.into_iter().map(RuleRef::from).collect()),
        text,
        ok: nontrivial.is_empty(),
    })
}

pub fn scan(rc: &RunConfig, m_max: Option<u64>, cap: Option<u32>, csv: Option<&Path>, quiet: bool) -> CmdResult {
    let m_max = rc.pick(m_max, "m_max", 60)?;
    let cap = rc.pick(cap, "cap", 40)?;
    if cap < 2 {
        return Err(CliError::Invalid(format!("cap must be at least 2, got {cap}")));
    }
    let inputs = json!({ "m_max": m_max, "cap": cap });
    let outcomes = if m_max < 2 {
        eprintln!("warning: no primitive pairs with m <= {m_max}");
        Vec::new()
    } else {
        let step = std::sync::atomic::AtomicUsize::new(0);
        let progress = |done: usize, total: usize| {
            if quiet {
                return;
            }
            let tenth = done * 10 / total;
            if step.fetch_max(tenth, std::sync::atomic::Ordering::Relaxed) < tenth {
                eprintln!("scan: {done}/{total} pairs");
            }
        };
        scan_pairs(m_max, cap, rc.jobs, &progress)?
    };
    let report = ScanReport::from_outcomes(m_max, cap, &outcomes);

    if let Some(path) = csv {
        let mut f = std::fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
        writeln!(f, "m,n,a,b,c,solutions,nontrivial").context("writing csv")?;
        for o in &outcomes {
            let t = o.pair.triple();
            let nt = o.solutions.iter().filter(|r| !r.is_trivial()).count();
            writeln!(f, "{},{},{},{},{},{},{nt}", o.pair.m(), o.pair.n(), t.a, t.b, t.c, o.solutions.len())
                .context("writing csv")?;
        }
    }

    let mut text = String::new();
    writeln!(text, "scanned {} pairs with m <= {m_max}, exponents <= {cap}", report.pairs_checked).unwrap();
    writeln!(text, "solutions found: {}", report.solutions_total).unwrap();
    writeln!(text, "other than (2, 2, 2): {} ({} all even)", report.nontrivial.len(), report.exceptional).unwrap();
    for r in &report.nontrivial {
        writeln!(text, "  {} {}", r.pair(), r.sol()).unwrap();
    }
    let ok = report.nontrivial.is_empty();
    let results = serde_json::to_value(&report).expect("scan report serializes");
    Ok(Outcome { report: Report::new("scan", inputs, results, Vec::new()), text, ok })
}

pub fn threshold(rc: &RunConfig, form: Option<&str>, at: Option<&str>) -> CmdResult {
    let form = ThresholdForm::parse(&rc.pick(form.map(str::to_string), "form", "3/5".to_string())?)?;
    let prec = rc.precision_bits;
    let t0 = match at {
        Some(s) => ln_of_decimal(s, prec)?,
        None => form.claimed_t0(prec),
    };
    let cert = certify_threshold(form, &t0)?;
    let cross = crossover(form, prec)?;

    let mut text = String::new();
    let at_label = at.map(str::to_string).unwrap_or_else(|| format!("10^{}", form.claimed_log10()));
    writeln!(text, "form {}: m^{} > RHS for every m >= {at_label}: {}", form.label(), form.label(), cert.verdict)
        .unwrap();
    writeln!(text, "gap at t0 = ln m: {}", show(&cert.gap_at_t0)).unwrap();
    writeln!(text, "derivative checked on {} segments, tail from t = {:.6e}", cert.checked_at.len(), cert.tail_from.lo_f64())
        .unwrap();
    if let Some(f) = &cert.failure {
        writeln!(text, "failure: {f}").unwrap();
    }
    writeln!(
        text,
        "crossover: log10 m in [{:.3}, {:.3}] after {} bisection steps",
        cross.log10_bracket.lo_f64(),
        cross.log10_bracket.hi_f64(),
        cross.steps
    )
    .unwrap();
    if !cert.verdict {
        eprintln!("certification failed: {}", cert.failure.as_deref().unwrap_or("gap not certified"));
    }

    let inputs = json!({ "form": form, "at": at, "precision_bits": prec });
    let results = json!({ "certificate": cert, "crossover": cross });
    Ok(Outcome { report: Report::new("threshold", inputs, results, Vec::new()), text, ok: cert.verdict })
}

pub fn symbols(jacobi_arg: Option<&str>, quartic_arg: Option<&str>, modulus: &str) -> CmdResult {
    let (kind, value, inputs) = match (jacobi_arg, quartic_arg) {
        (Some(a), None) => {
            let (a, n) = (parse_big(a, "jacobi")?, parse_big(modulus, "mod")?);
            let v = jacobi(&a, &n)?;
            ("jacobi", v.to_string(), json!({ "a": a.to_string(), "mod": n.to_string() }))
        }
        (None, Some(a)) => {
            let (a, m) = (parse_gaussian(a, "quartic")?, parse_gaussian(modulus, "mod")?);
            let v = quartic_symbol(&a, &m)?;
            ("quartic", v.to_string(), json!({ "a": a, "mod": m }))
        }
        _ => return Err(CliError::Invalid("give exactly one of --jacobi and --quartic".into())),
    };
    let text = format!("{value}\n");
    let results = json!({ "symbol": kind, "value": value });
    Ok(Outcome { report: Report::new("symbols", inputs, results, Vec::new()), text, ok: true })
}

pub fn laurent(rc: &RunConfig, a2: &str, bprime: &str) -> CmdResult {
    let prec = rc.precision_bits;
    let (a2_iv, b_iv) = (decimal(a2, "a2", prec)?, decimal(bprime, "bprime", prec)?);
    let bound = cor_lower_bound(&a2_iv, &b_iv, prec)?;
    let lemma = lemma_instance(&a2_iv, &b_iv, prec);

    let mut text = String::new();
    writeln!(text, "L = {}{}", bound.l, if bound.l_floored { " (floored at 3)" } else { "" }).unwrap();
    if bound.l_ambiguous {
        writeln!(text, "note: floor in L not decided at this precision; larger value used").unwrap();
    }
    writeln!(text, "ln|Lambda| > {:.6}", bound.log_lambda_lower.lo_f64()).unwrap();
    match &lemma {
        Ok(l) => {
            writeln!(text, "instance with b1 = {}, b2 = {}: bound holds = {}", l.instance.b1, l.instance.b2, l.check.ok)
                .unwrap();
        }
        Err(e) => writeln!(text, "instance: {e}").unwrap(),
    }
    let inputs = json!({ "a2": a2, "bprime": bprime, "precision_bits": prec });
    let results = json!({ "bound": bound, "instance": value_or_error(&lemma) });
    Ok(Outcome { report: Report::new("laurent", inputs, results, Vec::new()), text, ok: true })
}
