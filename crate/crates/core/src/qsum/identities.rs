use std::time::Instant;

use num_traits::Zero;

use super::{classical, h_star_with, ohno_lhs_with, ohno_rhs_with, z_star_with, QWeights, SymbolicQ};
use crate::exactnum::{binomial, fmt_rational, QPoint, Rational};
use crate::indexcore::{hoffman_dual, Index};
use crate::report::VerificationReport;
use crate::{Error, Result};

/// Identity IDs accepted by [`verify_identity`].
pub const IDENTITY_IDS: &[&str] = &[
    "euler",
    "van-hamme",
    "hoffman",
    "bradley",
    "ohno",
    "q-ohno",
    "bradley-symbolic",
    "q-ohno-symbolic",
];

#[derive(Clone, Debug)]
pub struct IdentityParams {
    pub k: Option<Index>,
    pub e: u32,
    pub n: u64,
    pub q: Option<QPoint>,
}

impl IdentityParams {
    pub fn new(n: u64) -> Self {
        IdentityParams {
            k: None,
            e: 0,
            n,
            q: None,
        }
    }

    pub fn with_index(mut self, k: Index) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_e(mut self, e: u32) -> Self {
        self.e = e;
        self
    }

    pub fn with_q(mut self, q: QPoint) -> Self {
        self.q = Some(q);
        self
    }

    fn index(&self) -> Result<&Index> {
        self.k
            .as_ref()
            .ok_or_else(|| Error::InvalidRange("identity needs an index".into()))
    }

    fn qpoint(&self) -> Result<&QPoint> {
        self.q
            .as_ref()
            .ok_or_else(|| Error::InvalidRange("identity needs a q point".into()))
    }
}

/// Dispatches on the identity ID and checks both sides for exact equality.
pub fn verify_identity(id: &str, params: &IdentityParams) -> Result<VerificationReport> {
    let n = params.n;
    match id {
        "euler" => euler(n),
        "van-hamme" => van_hamme(n, params.qpoint()?),
        "hoffman" => hoffman(params.index()?, n),
        "bradley" => bradley(params.index()?, n, params.qpoint()?),
        "ohno" => ohno(params.index()?, params.e, n),
        "q-ohno" => q_ohno(params.index()?, params.e, n, params.qpoint()?),
        "bradley-symbolic" => bradley_symbolic(params.index()?, n),
        "q-ohno-symbolic" => q_ohno_symbolic(params.index()?, params.e, n),
        other => Err(Error::UnknownIdentity(other.to_string())),
    }
}

fn check_n(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidRange("N must be >= 1".into()));
    }
    Ok(())
}

/// `sum_{m=1}^N (-1)^{m-1} C(N,m) / m = sum_{n=1}^N 1/n`.
pub fn euler(n: u64) -> Result<VerificationReport> {
    check_n(n)?;
    let start = Instant::now();
    let mut lhs = Rational::zero();
    for m in 1..=n {
        let term = Rational::new(binomial(n, m), m.into());
        if m % 2 == 1 {
            lhs += term;
        } else {
            lhs -= term;
        }
    }
    let rhs = (1..=n).fold(Rational::zero(), |acc, j| acc + Rational::new(1.into(), j.into()));
    Ok(VerificationReport::new("euler")
        .param("N", n)
        .compared(lhs == rhs, fmt_rational(&lhs), fmt_rational(&rhs))
        .timed(start))
}

/// The q-analog of Euler's identity:
/// `sum_m (-1)^{m-1} q^{m(m+1)/2} (N choose m)_q / [m]_q = sum_n q^n / [n]_q`.
pub fn van_hamme(n: u64, q: &QPoint) -> Result<VerificationReport> {
    check_n(n)?;
    let start = Instant::now();
    let mut lhs = Rational::zero();
    for m in 1..=n {
        let term = q.pow((m * (m + 1) / 2) as i64) * q.q_binom(n, m)? / q.q_int(m as i64);
        if m % 2 == 1 {
            lhs += term;
        } else {
            lhs -= term;
        }
    }
    let rhs = (1..=n as i64).fold(Rational::zero(), |acc, j| acc + q.pow(j) / q.q_int(j));
    Ok(VerificationReport::new("van-hamme")
        .param("N", n)
        .param("q", q)
        .compared(lhs == rhs, fmt_rational(&lhs), fmt_rational(&rhs))
        .timed(start))
}

/// `H★_N(k) = ζ★_N(k∨)`.
pub fn hoffman(k: &Index, n: u64) -> Result<VerificationReport> {
    let start = Instant::now();
    let lhs = classical::h_star(k, n)?;
    let rhs = classical::zeta_star_n(&hoffman_dual(k)?, n)?;
    Ok(VerificationReport::new("hoffman")
        .param("k", k.literal())
        .param("N", n)
        .compared(lhs == rhs, fmt_rational(&lhs), fmt_rational(&rhs))
        .timed(start))
}

/// `H★_N(k; q) = z★_N(k∨; q)`.
pub fn bradley(k: &Index, n: u64, q: &QPoint) -> Result<VerificationReport> {
    let start = Instant::now();
    let lhs = h_star_with(q, k, n)?;
    let rhs = z_star_with(q, &hoffman_dual(k)?, None, n)?;
    Ok(VerificationReport::new("bradley")
        .param("k", k.literal())
        .param("N", n)
        .param("q", q)
        .compared(lhs == rhs, fmt_rational(&lhs), fmt_rational(&rhs))
        .timed(start))
}

/// The classical Ohno-type identity.
pub fn ohno(k: &Index, e: u32, n: u64) -> Result<VerificationReport> {
    let start = Instant::now();
    let lhs = classical::ohno_lhs(k, e, n)?;
    let rhs = classical::ohno_rhs(k, e, n)?;
    Ok(VerificationReport::new("ohno")
        .param("k", k.literal())
        .param("e", e)
        .param("N", n)
        .compared(lhs == rhs, fmt_rational(&lhs), fmt_rational(&rhs))
        .timed(start))
}

/// The Ohno-type identity for multiple harmonic q-sums at a sample point.
pub fn q_ohno(k: &Index, e: u32, n: u64, q: &QPoint) -> Result<VerificationReport> {
    let start = Instant::now();
    let lhs = ohno_lhs_with(q, k, e, n)?;
    let rhs = ohno_rhs_with(q, k, e, n)?;
    Ok(VerificationReport::new("q-ohno")
        .param("k", k.literal())
        .param("e", e)
        .param("N", n)
        .param("q", q)
        .compared(lhs == rhs, fmt_rational(&lhs), fmt_rational(&rhs))
        .timed(start))
}

fn symbolic_report<W: QWeights>(w: &W, id: &str, lhs: W::Value, rhs: W::Value) -> VerificationReport {
    VerificationReport::new(id).compared(lhs == rhs, w.render(&lhs), w.render(&rhs))
}

/// Bradley's identity as an equality of rational functions in `q`.
pub fn bradley_symbolic(k: &Index, n: u64) -> Result<VerificationReport> {
    let start = Instant::now();
    let lhs = h_star_with(&SymbolicQ, k, n)?;
    let rhs = z_star_with(&SymbolicQ, &hoffman_dual(k)?, None, n)?;
    let mut report = symbolic_report(&SymbolicQ, "bradley-symbolic", lhs, rhs);
    report = report.param("k", k.literal()).param("N", n);
    Ok(report.timed(start))
}

/// The q-Ohno identity as an equality of rational functions in `q`.
pub fn q_ohno_symbolic(k: &Index, e: u32, n: u64) -> Result<VerificationReport> {
    let start = Instant::now();
    let lhs = ohno_lhs_with(&SymbolicQ, k, e, n)?;
    let rhs = ohno_rhs_with(&SymbolicQ, k, e, n)?;
    let mut report = symbolic_report(&SymbolicQ, "q-ohno-symbolic", lhs, rhs);
    report = report.param("k", k.literal()).param("e", e).param("N", n);
    Ok(report.timed(start))
}
