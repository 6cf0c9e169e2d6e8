use num_traits::{One, Zero};

use super::{fmt_rational, Rational};
use crate::{Error, Result};

/// A power series in `x` over [`Rational`], known exactly through `x^order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Builds a series from its leading coefficients; missing ones are zero,
    /// extra ones are dropped.
    pub fn new(order: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, Rational::one())
    }

    pub fn constant(order: usize, c: Rational) -> Self {
        Self::new(order, vec![c])
    }

    /// `a + b x`.
    pub fn linear(order: usize, a: Rational, b: Rational) -> Self {
        Self::new(order, vec![a, b])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> &Rational {
        &self.coeffs[e]
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(TruncatedSeries { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(TruncatedSeries { coeffs })
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<()> {
        self.check(other)?;
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let order = self.order();
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Multiplicative inverse through the same order.
    pub fn inv(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let a0_inv = a0.recip();
        let order = self.order();
        let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
        out.push(a0_inv.clone());
        for n in 1..=order {
            let mut acc = Rational::zero();
            for j in 1..=n {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out[n - j];
                }
            }
            out.push(-acc * &a0_inv);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Integer power; negative exponents go through [`TruncatedSeries::inv`].
    pub fn powi(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(self.order());
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// Index and values of the first coefficient where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, Rational, Rational)> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map(|(i, (a, b))| (i, a.clone(), b.clone()))
    }

    /// Witness rendering: `[c0, c1, ...]` with each coefficient as `num/den`.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(fmt_rational).collect();
        format!("[{}]", parts.join(", "))
    }
}

/// `series_mul` with the order check.
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.mul(b)
}

/// `series_inv`: inverse through the same order.
pub fn series_inv(a: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.inv()
}
