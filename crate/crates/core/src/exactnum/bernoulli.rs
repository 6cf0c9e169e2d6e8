use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{binomial, mod_reduce, Rational, Residue};
use crate::Result;

/// Exact Seki-Bernoulli numbers `B_0 ..= B_max`, with `B_1 = +1/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, j: usize) -> Option<&Rational> {
        self.values.get(j)
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

/// Builds the table from `sum_{j=0}^{n} C(n+1, j) B_j = 0` (the `B_1 = -1/2`
/// convention) and flips the sign of `B_1` afterwards.
pub fn bernoulli_table(max: usize) -> BernoulliTable {
    let mut values: Vec<Rational> = Vec::with_capacity(max + 1);
    values.push(Rational::one());
    for n in 1..=max {
        if n > 1 && n % 2 == 1 {
            values.push(Rational::zero());
            continue;
        }
        let mut acc = Rational::zero();
        for (j, b) in values.iter().enumerate() {
            if !b.is_zero() {
                acc += b * Rational::from_integer(binomial(n as u64 + 1, j as u64));
            }
        }
        values.push(-acc / Rational::from_integer(BigInt::from(n + 1)));
    }
    if max >= 1 {
        values[1] = -values[1].clone();
    }
    BernoulliTable { values }
}

const CACHED_MAX: usize = 256;

fn cached() -> &'static BernoulliTable {
    static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
    TABLE.get_or_init(|| bernoulli_table(CACHED_MAX))
}

/// `B_j` as an exact rational, served from a shared table when `j` is small.
pub fn bernoulli(j: usize) -> Rational {
    match cached().get(j) {
        Some(b) => b.clone(),
        None => bernoulli_table(j).values[j].clone(),
    }
}

/// `B_j mod p^n`. Fails with `NonInvertibleDenominator` exactly when `p`
/// divides the denominator of `B_j`, i.e. `(p - 1) | j` for even `j > 0`.
pub fn bernoulli_residue(j: usize, p: u64, n: u32) -> Result<Residue> {
    mod_reduce(&bernoulli(j), p, n)
}
