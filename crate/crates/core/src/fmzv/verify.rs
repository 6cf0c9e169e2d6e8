use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;

use super::formulas::sum_with;
use super::{guard, FmzvContext, Formula, SumKind, SumTarget, MIN_PRIME};
use crate::exactnum::{binomial, Residue};
use crate::indexcore::{b_coeff, enum_i, enum_j, hoffman_dual, index_plus, index_succ, Index};
use crate::report::VerificationReport;
use crate::{Error, Result};

fn render_list(values: &[Residue]) -> String {
    let parts: Vec<String> = values.iter().map(|v| v.value().to_string()).collect();
    match values.first() {
        Some(v) => {
            let pp = v.modulus();
            format!("[{}] mod {}^{}", parts.join(", "), pp.p(), pp.n())
        }
        None => "[]".into(),
    }
}

/// Checks `f` at `p`: SKIPPED below the guard or when a Bernoulli
/// denominator is divisible by `p`; otherwise PASS iff both sides agree
/// exactly mod `p^n`.
pub fn verify_formula(f: &Formula, p: u64) -> Result<VerificationReport> {
    f.check()?;
    let start = Instant::now();
    let n = f.exponent();
    let mut report = VerificationReport::new(f.id());
    for (k, v) in f.params() {
        report = report.param(k, v);
    }
    report = report.param("p", p).param("n", n);
    if let Some(reason) = guard(p, f.weight(), n) {
        return Ok(report.skipped(reason).timed(start));
    }
    let ctx = FmzvContext::new(p, n)?;
    let lhs = f.lhs(&ctx)?;
    let rhs = match ctx.modulus().reduce(&f.value(p)?) {
        Ok(r) => r,
        Err(Error::NonInvertibleDenominator { .. }) => {
            return Ok(report.skipped("non-invertible-denominator").timed(start));
        }
        Err(e) => return Err(e),
    };
    Ok(report.compared(lhs == rhs, lhs.render(), rhs.render()).timed(start))
}

/// The sum formula for `t` at `p`.
pub fn verify_sum_formula(t: &SumTarget, p: u64) -> Result<VerificationReport> {
    verify_formula(&t.formula(), p)
}

fn skip_or_context(
    report: VerificationReport,
    p: u64,
    weight: u32,
    n: u32,
    start: Instant,
) -> Result<std::result::Result<FmzvContext, VerificationReport>> {
    match guard(p, weight, n) {
        Some(reason) => Ok(Err(report.skipped(reason).timed(start))),
        None => Ok(Ok(FmzvContext::new(p, n)?)),
    }
}

/// `sum_{J_{e,r}} b(k;e) ζ★_A(k+e) = -sum_{J_{e,s}} ζ★_A(k∨+e')` at `p`.
pub fn verify_hims(k: &Index, e: u32, p: u64) -> Result<VerificationReport> {
    if k.is_empty() {
        return Err(Error::EmptyIndex);
    }
    let start = Instant::now();
    let report = VerificationReport::new("hims")
        .param("k", k.literal())
        .param("e", e)
        .param("p", p)
        .param("n", 1);
    let ctx = match skip_or_context(report.clone(), p, k.weight() + e, 1, start)? {
        Ok(ctx) => ctx,
        Err(skipped) => return Ok(skipped),
    };
    let pp = ctx.modulus();
    let mut lhs = pp.zero();
    for ex in enum_j(e, k.depth())? {
        let b = b_coeff(k, &ex)?;
        if !b.is_zero() {
            lhs += pp.from_bigint(&b) * ctx.zeta(&index_plus(k, &ex)?, true);
        }
    }
    let dual = hoffman_dual(k)?;
    let mut rhs = pp.zero();
    for ex in enum_j(e, dual.depth())? {
        rhs -= ctx.zeta(&index_plus(&dual, &ex)?, true);
    }
    Ok(report.compared(lhs == rhs, lhs.render(), rhs.render()).timed(start))
}

/// The Ohno-type relation mod `p^2`:
/// `sum_j ζ★({1}^{e-j}) sum_{J_{j,r}} ζ★(k+e)
///   = sum_{J_{e,s}} b(k∨;e') {-ζ★(k∨+e') - ζ★(k∨+e',1) p + ζ★((k∨+e')^+) p}`.
pub fn verify_a2_ohno(k: &Index, e: u32, p: u64) -> Result<VerificationReport> {
    if k.is_empty() {
        return Err(Error::EmptyIndex);
    }
    let start = Instant::now();
    let report = VerificationReport::new("a2-ohno")
        .param("k", k.literal())
        .param("e", e)
        .param("p", p)
        .param("n", 2);
    let ctx = match skip_or_context(report.clone(), p, k.weight() + e + 1, 2, start)? {
        Ok(ctx) => ctx,
        Err(skipped) => return Ok(skipped),
    };
    let pp = ctx.modulus();
    let mut lhs = pp.zero();
    for j in 0..=e {
        let ones = ctx.zeta(&Index::repeat(1, (e - j) as usize)?, true);
        let mut inner = pp.zero();
        for ex in enum_j(j, k.depth())? {
            inner += ctx.zeta(&index_plus(k, &ex)?, true);
        }
        lhs += ones * inner;
    }
    let dual = hoffman_dual(k)?;
    let pe = pp.p_elem();
    let mut rhs = pp.zero();
    for ex in enum_j(e, dual.depth())? {
        let b = b_coeff(&dual, &ex)?;
        if b.is_zero() {
            continue;
        }
        let base = index_plus(&dual, &ex)?;
        let term =
            -ctx.zeta(&base, true) - ctx.zeta(&base.appended(1)?, true) * pe + ctx.zeta(&index_succ(&base)?, true) * pe;
        rhs += pp.from_bigint(&b) * term;
    }
    Ok(report.compared(lhs == rhs, lhs.render(), rhs.render()).timed(start))
}

/// `sum_{j=0}^r (-1)^j ζ(k_j, ..., k_1) ζ★(k_{j+1}, ..., k_r) = 0` mod `p^n`.
pub fn verify_antipode(k: &Index, p: u64, n: u32) -> Result<VerificationReport> {
    if k.is_empty() {
        return Err(Error::EmptyIndex);
    }
    let start = Instant::now();
    let report = VerificationReport::new("antipode")
        .param("k", k.literal())
        .param("p", p)
        .param("n", n);
    let ctx = match skip_or_context(report.clone(), p, k.weight(), n, start)? {
        Ok(ctx) => ctx,
        Err(skipped) => return Ok(skipped),
    };
    let r = k.depth();
    let mut lhs = ctx.modulus().zero();
    for j in 0..=r {
        let term = ctx.zeta(&k.slice(0..j).reversed(), false) * ctx.zeta(&k.slice(j..r), true);
        if j % 2 == 0 {
            lhs += term;
        } else {
            lhs -= term;
        }
    }
    let rhs = ctx.modulus().zero();
    Ok(report.compared(lhs == rhs, lhs.render(), rhs.render()).timed(start))
}

/// `H★_{p-1}(k) ≡ -ζ★_A(k) mod p`.
pub fn verify_h_star_bridge(k: &Index, p: u64) -> Result<VerificationReport> {
    if k.is_empty() {
        return Err(Error::EmptyIndex);
    }
    let start = Instant::now();
    let report = VerificationReport::new("h-star-bridge")
        .param("k", k.literal())
        .param("p", p)
        .param("n", 1);
    if p < MIN_PRIME {
        return Ok(report.skipped(format!("guard: p={p} < {MIN_PRIME}")).timed(start));
    }
    let ctx = FmzvContext::new(p, 1)?;
    let lhs = ctx.h_star(k)?;
    let rhs = -ctx.zeta(k, true);
    Ok(report.compared(lhs == rhs, lhs.render(), rhs.render()).timed(start))
}

/// For every `1 <= m < p`, `(-1)^{m-1} C(p-1, m)` against its expansion in
/// harmonic tails: mod `p^2`
/// `-1 - p sum_{m<=t<p} 1/t + p/m`, and mod `p^3` additionally
/// `- p^2 (sum_{m<=t1<=t2<p} 1/(t1 t2) - (1/m) sum_{m<=t<p} 1/t)`.
pub fn verify_binom_congruence(p: u64, n: u32) -> Result<VerificationReport> {
    if !(2..=3).contains(&n) {
        return Err(Error::UnsupportedExponent(n));
    }
    let start = Instant::now();
    let report = VerificationReport::new("binom-congruence").param("p", p).param("n", n);
    if p < MIN_PRIME {
        return Ok(report.skipped(format!("guard: p={p} < {MIN_PRIME}")).timed(start));
    }
    let ctx = FmzvContext::new(p, n)?;
    let pp = ctx.modulus();
    let pe = pp.p_elem();
    // tails from the top: single[m] = sum_{t>=m} 1/t, double[m] = sum_{m<=t1<=t2} 1/(t1 t2)
    let top = p as usize - 1;
    let mut single = vec![pp.zero(); top + 2];
    let mut double = vec![pp.zero(); top + 2];
    for m in (1..=top).rev() {
        single[m] = single[m + 1] + ctx.inv(m as u64);
        double[m] = double[m + 1] + ctx.inv(m as u64) * single[m];
    }
    let mut lhs = Vec::with_capacity(top);
    let mut rhs = Vec::with_capacity(top);
    let mut first_bad = None;
    for m in 1..=top {
        let b = pp.from_bigint(&binomial(p - 1, m as u64));
        let l = if m % 2 == 1 { b } else { -b };
        let inv_m = ctx.inv(m as u64);
        let mut r = -pp.one() - (single[m] - inv_m) * pe;
        if n == 3 {
            r -= (double[m] - inv_m * single[m]) * pe * pe;
        }
        if l != r && first_bad.is_none() {
            first_bad = Some(m);
        }
        lhs.push(l);
        rhs.push(r);
    }
    let report = report.compared(first_bad.is_none(), render_list(&lhs), render_list(&rhs));
    Ok(match first_bad {
        Some(m) => report.failed(format!("mismatch at m={m}")),
        None => report,
    }
    .timed(start))
}

/// The two binomial-sum identities behind the `S★_{k,r,i}` evaluation:
///
/// - `sum_e C(i+e-1, e) C(k-i-e-1, k-r-1-e) = C(k-1, r)`
/// - `sum_e C(i+e-1, e) C(k-i-e-1, k-r-1-e) (-1)^{i-1+e} C(k+1, i+e+1)
///    = (-1)^{i-1} {(k-r) C(k, r-i) + C(k-1, r-i) + (-1)^{r-1} C(k-1, i-1)}`
///
/// with `e` running over `0..=k-r-1`. The second only holds for even `k`.
pub fn verify_binomial_sum_identities(k: u32, r: u32, i: u32) -> Result<VerificationReport> {
    if !(1 <= i && i <= r && r < k) {
        return Err(Error::InvalidRange(format!(
            "needs 1 <= i <= r < k, got k={k}, r={r}, i={i}"
        )));
    }
    if k % 2 == 1 {
        return Err(Error::ParityViolation(format!(
            "alternating binomial sum needs even k, got k={k}"
        )));
    }
    let start = Instant::now();
    let (k, r, i) = (k as i64, r as i64, i as i64);
    let c = |n: i64, m: i64| {
        if n < 0 || m < 0 {
            BigInt::zero()
        } else {
            binomial(n as u64, m as u64)
        }
    };
    let s = |e: i64| {
        if e.rem_euclid(2) == 0 {
            BigInt::from(1)
        } else {
            BigInt::from(-1)
        }
    };
    let mut plain = BigInt::zero();
    let mut alternating = BigInt::zero();
    for e in 0..=k - r - 1 {
        let w = c(i + e - 1, e) * c(k - i - e - 1, k - r - 1 - e);
        alternating += &w * s(i - 1 + e) * c(k + 1, i + e + 1);
        plain += w;
    }
    let plain_rhs = c(k - 1, r);
    let alternating_rhs = s(i - 1) * ((k - r) * c(k, r - i) + c(k - 1, r - i) + s(r - 1) * c(k - 1, i - 1));
    let ok = plain == plain_rhs && alternating == alternating_rhs;
    Ok(VerificationReport::new("binomial-sums")
        .param("k", k)
        .param("r", r)
        .param("i", i)
        .compared(
            ok,
            format!("{plain}, {alternating}"),
            format!("{plain_rhs}, {alternating_rhs}"),
        )
        .timed(start))
}

/// Two routes to the same quantities at `n = 1`:
/// the `S★_{k,r}` closed form reduced mod `p` against the vanishing of
/// `sum_{I_{k,r}} ζ★_A`, and the Saito–Wakabayashi star formulas summed over
/// `i` against `sum_{I_{k,r}} #{i : k_i >= 2} ζ★_A(k)`.
pub fn verify_sum_routes(k: u32, r: u32, p: u64) -> Result<VerificationReport> {
    if !(1 <= r && r < k) {
        return Err(Error::InvalidRange(format!("needs 1 <= r < k, got k={k}, r={r}")));
    }
    let start = Instant::now();
    let report = VerificationReport::new("sum-routes")
        .param("k", k)
        .param("r", r)
        .param("p", p)
        .param("n", 1);
    let ctx = match skip_or_context(report.clone(), p, k, 2, start)? {
        Ok(_) => FmzvContext::new(p, 1)?,
        Err(skipped) => return Ok(skipped),
    };
    let pp = ctx.modulus();
    let s_star = pp.reduce(&Formula::SStar { k, r }.value(p)?)?;
    let kr_sum = sum_with(&ctx, &SumTarget::new(SumKind::SStar, k, r, 0)?)?;
    let mut sw_total = pp.zero();
    for i in 1..=r {
        sw_total += pp.reduce(&Formula::SwStar { k, r, i }.value(p)?)?;
    }
    let mut weighted = pp.zero();
    for idx in enum_i(k, r as usize)? {
        let big = idx.entries().iter().filter(|&&e| e >= 2).count() as u64;
        weighted += pp.from_u64(big) * ctx.zeta(&idx, true);
    }
    let ok = s_star == kr_sum && sw_total == weighted;
    Ok(report
        .compared(
            ok,
            format!("{}, {}", s_star.render(), sw_total.render()),
            format!("{}, {}", kr_sum.render(), weighted.render()),
        )
        .timed(start))
}
