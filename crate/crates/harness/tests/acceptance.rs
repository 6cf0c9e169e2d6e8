//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use mhs_core::exactnum::{bernoulli, mod_reduce, rat, QPoint};
use mhs_core::fmzv::{rhs_formula, zeta_p, FmzvQuery, Formula, SumKind, SumTarget};
use mhs_core::indexcore::hoffman_dual;
use mhs_core::qsum::classical;
use mhs_core::{Index, Status, VerificationReport};
use mhs_harness::sweep::formulas_up_to;
use mhs_harness::{plan, run_tasks, PrimeRange, SweepConfig, Task};

struct Outcome {
    ok: bool,
    detail: String,
}

fn q_points(points: &[&str]) -> Vec<QPoint> {
    points.iter().map(|s| QPoint::parse(s).unwrap()).collect()
}

fn config(only: &[&str], max_weight: u32, max_e: u32, max_n: u64) -> SweepConfig {
    SweepConfig {
        max_weight,
        max_e,
        max_n,
        only: only.iter().map(|s| s.to_string()).collect(),
        ..SweepConfig::default()
    }
}

/// Zero FAIL rows, at least one PASS, and SKIPPED only where `allow_skip`.
fn judge(reports: &[VerificationReport], allow_skip: bool) -> Outcome {
    let pass = reports.iter().filter(|r| r.status == Status::Pass).count();
    let fail: Vec<&VerificationReport> = reports.iter().filter(|r| r.status == Status::Fail).collect();
    let skipped = reports.len() - pass - fail.len();
    let mut detail = format!(
        "{} checks, {pass} pass, {} fail, {skipped} skipped",
        reports.len(),
        fail.len()
    );
    if let Some(first) = fail.first() {
        detail.push_str(&format!("; first failure: {first}"));
    }
    Outcome {
        ok: fail.is_empty() && pass > 0 && (allow_skip || skipped == 0),
        detail,
    }
}

fn sweep(cfgs: &[SweepConfig]) -> Vec<VerificationReport> {
    let tasks: Vec<Task> = cfgs.iter().flat_map(plan).collect();
    run_tasks(&tasks)
}

fn classical_identities() -> Outcome {
    judge(
        &sweep(&[config(&["euler"], 1, 0, 50), config(&["hoffman"], 7, 0, 10)]),
        false,
    )
}

fn q_identities() -> Outcome {
    let qs = q_points(&["1/2", "2/3", "3/5"]);
    let mut vh = config(&["van-hamme"], 1, 0, 30);
    vh.q_points = qs.clone();
    let mut br = config(&["bradley"], 7, 0, 10);
    br.q_points = qs;
    judge(&sweep(&[vh, br]), false)
}

/// Ohno-type identities, plus: at `e = 0` both sides must reproduce the
/// Hoffman and Bradley outputs string for string.
fn ohno_identities() -> Outcome {
    let mut cfg = config(&["ohno", "q-ohno"], 5, 3, 6);
    cfg.q_points = q_points(&["1/2", "2/3"]);
    let reports = sweep(&[cfg.clone()]);
    let mut out = judge(&reports, false);

    let mut base = cfg.clone();
    base.max_e = 0;
    let slice = sweep(&[base.clone()]);
    base.only = vec!["hoffman".into(), "bradley".into()];
    let reference = sweep(&[base]);
    let mismatches = slice
        .iter()
        .zip(&reference)
        .filter(|(a, b)| {
            let same_params = a.params.get("k") == b.params.get("k")
                && a.params.get("N") == b.params.get("N")
                && a.params.get("q") == b.params.get("q");
            !(same_params && a.lhs == b.lhs && a.rhs == b.rhs)
        })
        .count();
    let matched = slice.len() == reference.len() && mismatches == 0;
    out.detail.push_str(&format!(
        "; e=0 slice {} of {} rows identical to hoffman/bradley",
        slice.len() - mismatches,
        reference.len()
    ));
    out.ok &= matched;
    out
}

fn connector_suite() -> Outcome {
    let mut cfg = config(&["transport", "pqr", "coefficient-bridge"], 5, 0, 6);
    cfg.series_order = 4;
    cfg.q_points = q_points(&["1/2", "2/3"]);
    let reports = sweep(&[cfg]);
    let mut out = judge(&reports, false);
    // every chain must end at (0; k∨)
    let bad_ends = reports
        .iter()
        .filter(|r| r.identity == "transport")
        .filter(|r| {
            let k: Index = r.params["k"].parse().unwrap();
            let end = format!("(0;{})", hoffman_dual(&k).unwrap().literal());
            !r.rhs.starts_with(&format!("{end} = "))
        })
        .count();
    out.detail.push_str(&format!("; {bad_ends} chains ending elsewhere"));
    out.ok &= bad_ends == 0;
    out
}

fn supporting_expansions() -> Outcome {
    let mut pf = config(&["partial-fraction"], 1, 0, 8);
    pf.series_order = 6;
    let mut ex = config(&["expansion"], 5, 0, 6);
    ex.series_order = 6;
    judge(&sweep(&[pf, ex]), false)
}

fn a_level() -> Outcome {
    let primes = PrimeRange { lo: 7, hi: 53 };
    let mut sums = config(&["kr-sum", "sw", "sw-star", "sw-even", "h-star-bridge"], 7, 0, 1);
    sums.prime_range = primes;
    let mut ones = config(&["ones-star"], 6, 0, 1);
    ones.prime_range = primes;
    let mut hims = config(&["hims"], 4, 2, 1);
    hims.prime_range = primes;
    let mut bridge = config(&["h-star-bridge"], 4, 0, 1);
    bridge.prime_range = primes;
    judge(&sweep(&[sums, ones, hims, bridge]), true)
}

fn sum_formulas() -> Outcome {
    let tasks: Vec<Task> = PrimeRange { lo: 5, hi: 97 }
        .primes()
        .into_iter()
        .flat_map(|p| {
            formulas_up_to(8)
                .into_iter()
                .filter(|f| match *f {
                    Formula::S { k, .. } | Formula::SStar { k, .. } => k <= 7,
                    Formula::T { k, .. } | Formula::TStar { k, .. } => k <= 7,
                    Formula::Si { .. } | Formula::SiStar { .. } => true,
                    _ => false,
                })
                .map(move |f| Task::Formula { f, p })
        })
        .collect();
    judge(&run_tasks(&tasks), true)
}

fn auxiliary() -> Outcome {
    let mut cfg = config(&["a-2", "a-3", "a2-repeat", "a2-2", "a3-single", "antipode"], 7, 0, 1);
    cfg.prime_range = PrimeRange { lo: 5, hi: 97 };
    judge(&sweep(&[cfg]), true)
}

fn binomial_lemmas() -> Outcome {
    let mut cfg = config(&["binom-congruence"], 1, 0, 1);
    cfg.prime_range = PrimeRange { lo: 5, hi: 53 };
    judge(&sweep(&[cfg]), false)
}

fn anchors() -> Outcome {
    let mut checks: Vec<(&str, bool)> = Vec::new();
    let idx = |v: &[u32]| Index::new(v.to_vec()).unwrap();
    let z = |k: &[u32], p: u64, n: u32| zeta_p(&FmzvQuery::new(idx(k), p, n, false).unwrap()).unwrap();

    let h4 = classical::zeta_n(&idx(&[1]), 4).unwrap();
    checks.push(("zeta_4(1) = 25/12", h4 == rat(25, 12)));
    checks.push(("25/12 = 0 mod 25", mod_reduce(&h4, 5, 2).unwrap().value() == 0));
    checks.push(("zeta_A2(1) at p=5 is 0", z(&[1], 5, 2).is_zero()));

    let z2 = z(&[2], 5, 2);
    let direct = mod_reduce(&classical::zeta_n(&idx(&[2]), 4).unwrap(), 5, 2).unwrap();
    let by_hand = mod_reduce(&(rat(2, 1) * bernoulli(2) / rat(3, 1) * rat(5, 1)), 5, 2).unwrap();
    let s21 = rhs_formula(&SumTarget::new(SumKind::S, 2, 1, 0).unwrap().formula(), 5, 2).unwrap();
    checks.push(("zeta_4(2) = 20 mod 25", z2.value() == 20 && direct == z2));
    checks.push((
        "S_{2,1} closed form = 2 (B_2/3) 5 = 20 mod 25",
        s21 == by_hand && s21 == z2,
    ));

    let a3 = rhs_formula(&Formula::A3Single { k: 3 }, 7, 3).unwrap();
    let a3_hand = mod_reduce(&(rat(-6, 1) * bernoulli(2) / rat(5, 1) * rat(49, 1)), 7, 3).unwrap();
    checks.push(("zeta_A3(3) at p=7 = -6 B_2/5 49", a3 == a3_hand && z(&[3], 7, 3) == a3));

    let hs = classical::h_star(&idx(&[2]), 2).unwrap();
    let zs = classical::zeta_star_n(&idx(&[1, 1]), 2).unwrap();
    checks.push(("H*_2(2) = 7/4 = zeta*_2(1,1)", hs == rat(7, 4) && zs == rat(7, 4)));

    let failed: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(name, _)| *name).collect();
    Outcome {
        ok: failed.is_empty(),
        detail: if failed.is_empty() {
            format!("{} anchors hold", checks.len())
        } else {
            format!("failed: {}", failed.join("; "))
        },
    }
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);
    let criteria: [Criterion; 10] = [
        (
            "classical identities",
            classical_identities,
            Some(Duration::from_secs(30)),
        ),
        ("q-identities", q_identities, Some(Duration::from_secs(120))),
        ("Ohno-type identities", ohno_identities, None),
        ("connector suite", connector_suite, Some(Duration::from_secs(180))),
        ("supporting expansions", supporting_expansions, None),
        ("A-level congruences", a_level, None),
        (
            "sum formulas mod p^2, p^3",
            sum_formulas,
            Some(Duration::from_secs(300)),
        ),
        ("auxiliary statements", auxiliary, None),
        ("binomial congruence lemmas", binomial_lemmas, None),
        ("numeric anchors", anchors, None),
    ];
    let mut all_ok = true;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut out = check();
        let elapsed = start.elapsed();
        if let Some(limit) = limit {
            if elapsed > *limit {
                out.ok = false;
                out.detail.push_str(&format!("; over time limit {}s", limit.as_secs()));
            }
        }
        all_ok &= out.ok;
        println!(
            "criterion {:>2} {:<28} {} ({:.1}s) {}",
            i + 1,
            name,
            if out.ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            out.detail
        );
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
