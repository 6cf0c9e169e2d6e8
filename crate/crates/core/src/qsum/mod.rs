//! Multiple harmonic q-sums and their classical limits.
//!
//! The q-sums are written once against [`QWeights`], which supplies the
//! scalar arithmetic and the q-integer building blocks. Three evaluators
//! exist:
//!
//! - [`QPoint`]: exact rationals at a sample point `0 < q < 1`;
//! - [`ClassicalLimit`]: the same formulas with `q = 1` substituted;
//! - [`SymbolicQ`]: rational functions in `q` (denominators are products of
//!   q-integers), used to confirm identities as rational functions.
//!
//! The classical sums in [`classical`] are written independently of this
//! machinery and serve as the second route in cross-checks.

pub mod classical;
mod identities;

pub use identities::{
    bradley, bradley_symbolic, euler, hoffman, ohno, q_ohno, q_ohno_symbolic, van_hamme, verify_identity,
    IdentityParams, IDENTITY_IDS,
};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactnum::{binomial, fmt_rational, QPoint, QPoly, QRatFn, Rational};
use crate::indexcore::{b_coeff, enum_j, hoffman_dual, index_plus, ExponentTuple, Index};
use crate::{Error, Result};

/// Scalar arithmetic plus the q-building blocks the sums are made of.
pub trait QWeights {
    type Value: Clone + PartialEq;

    fn zero(&self) -> Self::Value;
    fn one(&self) -> Self::Value;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    fn lift_int(&self, c: &BigInt) -> Self::Value;
    /// `q^e`.
    fn q_pow(&self, e: u64) -> Self::Value;
    /// `[m]_q^{-k}` for `m >= 1`.
    fn inv_q_int_pow(&self, m: u64, k: u32) -> Self::Value;
    /// `(n choose m)_q` for `0 <= m <= n`.
    fn q_binom(&self, n: u64, m: u64) -> Self::Value;
    fn render(&self, v: &Self::Value) -> String;
}

impl QWeights for QPoint {
    type Value = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn lift_int(&self, c: &BigInt) -> Rational {
        Rational::from_integer(c.clone())
    }
    fn q_pow(&self, e: u64) -> Rational {
        self.pow(e as i64)
    }
    fn inv_q_int_pow(&self, m: u64, k: u32) -> Rational {
        num_traits::Pow::pow(self.q_int(m as i64).recip(), k)
    }
    fn q_binom(&self, n: u64, m: u64) -> Rational {
        QPoint::q_binom(self, n, m).expect("0 <= m <= n")
    }
    fn render(&self, v: &Rational) -> String {
        fmt_rational(v)
    }
}

/// The q-sums with `q = 1` substituted: `[m]_q -> m`, `q^e -> 1`,
/// q-binomials become ordinary binomials.
#[derive(Clone, Copy, Debug, Default)]
pub struct ClassicalLimit;

impl QWeights for ClassicalLimit {
    type Value = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn lift_int(&self, c: &BigInt) -> Rational {
        Rational::from_integer(c.clone())
    }
    fn q_pow(&self, _e: u64) -> Rational {
        Rational::one()
    }
    fn inv_q_int_pow(&self, m: u64, k: u32) -> Rational {
        Rational::new(BigInt::one(), BigInt::from(m).pow(k))
    }
    fn q_binom(&self, n: u64, m: u64) -> Rational {
        Rational::from_integer(binomial(n, m))
    }
    fn render(&self, v: &Rational) -> String {
        fmt_rational(v)
    }
}

/// Rational functions in an indeterminate `q`.
#[derive(Clone, Copy, Debug, Default)]
pub struct SymbolicQ;

impl QWeights for SymbolicQ {
    type Value = QRatFn;

    fn zero(&self) -> QRatFn {
        QRatFn::zero()
    }
    fn one(&self) -> QRatFn {
        QRatFn::one()
    }
    fn add(&self, a: &QRatFn, b: &QRatFn) -> QRatFn {
        a.add(b)
    }
    fn mul(&self, a: &QRatFn, b: &QRatFn) -> QRatFn {
        a.mul(b)
    }
    fn neg(&self, a: &QRatFn) -> QRatFn {
        a.neg()
    }
    fn lift_int(&self, c: &BigInt) -> QRatFn {
        QRatFn::from_poly(QPoly::constant(c.clone()))
    }
    fn q_pow(&self, e: u64) -> QRatFn {
        QRatFn::from_poly(QPoly::monomial(BigInt::one(), e as usize))
    }
    fn inv_q_int_pow(&self, m: u64, k: u32) -> QRatFn {
        QRatFn::inv_q_int_pow(m as usize, k)
    }
    fn q_binom(&self, n: u64, m: u64) -> QRatFn {
        QRatFn::from_poly(QPoly::q_binom(n as usize, m as usize))
    }
    fn render(&self, v: &QRatFn) -> String {
        v.to_string()
    }
}

/// `sum_{1 <= m_1 <= ... <= m_r <= n} prod_i factor(i, m_i)` by prefix
/// accumulation: layer `j` at `m` is `factor(j, m)` times the running sum of
/// layer `j - 1` over `m' <= m`.
pub(crate) fn nested_star_sum<W: QWeights>(
    w: &W,
    depth: usize,
    n: u64,
    mut factor: impl FnMut(usize, u64) -> W::Value,
) -> W::Value {
    if depth == 0 {
        return w.one();
    }
    let mut layer: Vec<W::Value> = (1..=n).map(|m| factor(0, m)).collect();
    for j in 1..depth {
        let mut running = w.zero();
        for (slot, m) in layer.iter_mut().zip(1..=n) {
            running = w.add(&running, slot);
            *slot = w.mul(&factor(j, m), &running);
        }
    }
    layer.iter().fold(w.zero(), |acc, v| w.add(&acc, v))
}

fn check_n(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidRange("N must be >= 1".into()));
    }
    Ok(())
}

/// `H★_N(k; q)`, the alternating q-binomial-weighted sum.
pub fn h_star_with<W: QWeights>(w: &W, k: &Index, n: u64) -> Result<W::Value> {
    check_n(n)?;
    if k.is_empty() {
        return Err(Error::EmptyIndex);
    }
    let ks = k.entries();
    let r = ks.len();
    Ok(nested_star_sum(w, r, n, |i, m| {
        let ki = ks[i];
        let mut f = w.mul(&w.q_pow((ki as u64 - 1) * m), &w.inv_q_int_pow(m, ki));
        if i == r - 1 {
            let tail = w.mul(&w.q_pow(m * (m + 1) / 2), &w.q_binom(n, m));
            f = w.mul(&f, &tail);
            if m % 2 == 0 {
                f = w.neg(&f);
            }
        }
        f
    }))
}

/// `z★_N(k; e; q)`; `z★_N(∅; q) = 1`.
pub fn z_star_with<W: QWeights>(w: &W, k: &Index, e: Option<&ExponentTuple>, n: u64) -> Result<W::Value> {
    check_n(n)?;
    let r = k.depth();
    let zeros;
    let e = match e {
        Some(e) => e,
        None if r == 0 => return Ok(w.one()),
        None => {
            zeros = ExponentTuple::zeros(r)?;
            &zeros
        }
    };
    if e.depth() != r {
        return Err(Error::DepthMismatch {
            left: r,
            right: e.depth(),
        });
    }
    let (ks, es) = (k.entries(), e.entries());
    Ok(nested_star_sum(w, r, n, |i, m| {
        w.mul(&w.q_pow((es[i] as u64 + 1) * m), &w.inv_q_int_pow(m, ks[i] + es[i]))
    }))
}

/// Left side of the q-Ohno identity: `sum_{e in J_{e,r}} b(k;e) H★_N(k+e; q)`.
pub fn ohno_lhs_with<W: QWeights>(w: &W, k: &Index, e: u32, n: u64) -> Result<W::Value> {
    if k.is_empty() {
        return Err(Error::EmptyIndex);
    }
    let mut acc = w.zero();
    for ex in enum_j(e, k.depth())? {
        let b = b_coeff(k, &ex)?;
        if b.is_zero() {
            continue;
        }
        let h = h_star_with(w, &index_plus(k, &ex)?, n)?;
        acc = w.add(&acc, &w.mul(&w.lift_int(&b), &h));
    }
    Ok(acc)
}

/// Right side of the q-Ohno identity:
/// `sum_{j=0}^{e} z★_N({1}^{e-j}; q) sum_{e' in J_{j,s}} z★_N(k∨; e'; q)`.
pub fn ohno_rhs_with<W: QWeights>(w: &W, k: &Index, e: u32, n: u64) -> Result<W::Value> {
    let dual = hoffman_dual(k)?;
    let mut acc = w.zero();
    for j in 0..=e {
        let ones = z_star_with(w, &Index::repeat(1, (e - j) as usize)?, None, n)?;
        let mut inner = w.zero();
        for ex in enum_j(j, dual.depth())? {
            inner = w.add(&inner, &z_star_with(w, &dual, Some(&ex), n)?);
        }
        acc = w.add(&acc, &w.mul(&ones, &inner));
    }
    Ok(acc)
}

/// `[m]_q = (1 - q^m) / (1 - q)`.
pub fn q_int(m: i64, q: &QPoint) -> Rational {
    q.q_int(m)
}

pub fn q_binom(n: u64, m: u64, q: &QPoint) -> Result<Rational> {
    q.q_binom(n, m)
}

pub fn h_star_q(k: &Index, n: u64, q: &QPoint) -> Result<Rational> {
    h_star_with(q, k, n)
}

pub fn z_star_q(k: &Index, e: &ExponentTuple, n: u64, q: &QPoint) -> Result<Rational> {
    if k.is_empty() {
        return Ok(Rational::one());
    }
    z_star_with(q, k, Some(e), n)
}

pub fn ohno_lhs_q(k: &Index, e: u32, n: u64, q: &QPoint) -> Result<Rational> {
    ohno_lhs_with(q, k, e, n)
}

pub fn ohno_rhs_q(k: &Index, e: u32, n: u64, q: &QPoint) -> Result<Rational> {
    ohno_rhs_with(q, k, e, n)
}
