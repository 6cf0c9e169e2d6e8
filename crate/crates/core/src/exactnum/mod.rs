//! Exact scalar kernels.
//!
//! - [`Rational`]: arbitrary-precision rationals, always reduced.
//! - [`QPoint`]: a rational sample point `0 < q < 1`.
//! - [`TruncatedSeries`]: power series in `x` truncated at a fixed order.
//! - [`Residue`]: elements of `Z/p^n Z` for `n` in `1..=3`.
//! - [`BernoulliTable`]: Seki-Bernoulli numbers (`B_1 = +1/2`).
//! - [`QPoly`] / [`QRatFn`]: integer polynomials in `q` and rational functions
//!   whose denominators are products of q-integers, for symbolic checks.

mod bernoulli;
mod qpoint;
mod qpoly;
mod residue;
mod series;

pub use bernoulli::{bernoulli, bernoulli_residue, bernoulli_table, BernoulliTable};
pub use qpoint::QPoint;
pub use qpoly::{QPoly, QRatFn};
pub use residue::{is_prime, mod_reduce, PrimePower, Residue};
pub use series::{series_inv, series_mul, TruncatedSeries};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

/// `num / den` as a reduced rational. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical witness rendering: always `num/den`, even for integers.
pub fn fmt_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `a/b` or `a` into a reduced rational.
pub fn parse_rational(s: &str) -> crate::Result<Rational> {
    let s = s.trim();
    let bad = || crate::Error::Parse(format!("not a rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Binomial coefficient `C(n, m)` for non-negative arguments; zero when `m > n`.
pub fn binomial(n: u64, m: u64) -> BigInt {
    if m > n {
        return BigInt::zero();
    }
    let m = m.min(n - m);
    let mut acc = BigUint::one();
    for j in 0..m {
        acc = acc * BigUint::from(n - j) / BigUint::from(j + 1);
    }
    BigInt::from(acc)
}

/// `C(n, m) = n(n-1)...(n-m+1) / m!` for any integer `n`.
pub fn binomial_falling(n: i64, m: u64) -> BigInt {
    if n >= 0 {
        return binomial(n as u64, m);
    }
    // C(n, m) = (-1)^m C(m - n - 1, m) for negative n
    let b = binomial((m as i64 - n - 1) as u64, m);
    if m % 2 == 1 {
        -b
    } else {
        b
    }
}

/// Binomial coefficient as a small signed integer; panics on overflow.
pub fn binom_i64(n: i64, m: i64) -> i64 {
    if m < 0 || n < 0 || m > n {
        return 0;
    }
    i64::try_from(binomial(n as u64, m as u64)).expect("binomial overflows i64")
}

/// `(-1)^e`.
pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}
