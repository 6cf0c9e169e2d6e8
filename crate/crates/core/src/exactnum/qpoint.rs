use std::fmt;

use num_traits::{One, Pow, Zero};

use super::{fmt_rational, parse_rational, Rational};
use crate::{Error, Result};

/// A rational sample point `q` with `0 < q < 1`, so `[m]_q != 0` for `m >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QPoint(Rational);

impl QPoint {
    pub fn new(value: Rational) -> Result<Self> {
        if value <= Rational::zero() || value >= Rational::one() {
            return Err(Error::InvalidQPoint(fmt_rational(&value)));
        }
        Ok(QPoint(value))
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::new(parse_rational(s)?)
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    /// `q^e` for any integer exponent.
    pub fn pow(&self, e: i64) -> Rational {
        Pow::pow(&self.0, e as i32)
    }

    /// The q-integer `[m]_q = (1 - q^m) / (1 - q)`, defined for every integer `m`.
    pub fn q_int(&self, m: i64) -> Rational {
        (Rational::one() - self.pow(m)) / (Rational::one() - &self.0)
    }

    /// `[m]_q! = [1]_q ... [m]_q`, with `[0]_q! = 1`.
    pub fn q_factorial(&self, m: u64) -> Rational {
        (1..=m as i64).fold(Rational::one(), |acc, a| acc * self.q_int(a))
    }

    pub fn q_binom(&self, n: u64, m: u64) -> Result<Rational> {
        if m > n {
            return Err(Error::InvalidRange(format!("q-binomial ({n} choose {m})")));
        }
        Ok(self.q_factorial(n) / (self.q_factorial(m) * self.q_factorial(n - m)))
    }
}

impl fmt::Display for QPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_rational(&self.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn half() -> QPoint {
        QPoint::new(rat(1, 2)).unwrap()
    }

    #[test]
    fn rejects_points_outside_unit_interval() {
        assert!(QPoint::new(int(0)).is_err());
        assert!(QPoint::new(int(1)).is_err());
        assert!(QPoint::new(rat(3, 2)).is_err());
        assert!(QPoint::parse("-1/2").is_err());
        assert!(QPoint::parse("2/3").is_ok());
    }

    #[test]
    fn q_integers() {
        let q = half();
        assert_eq!(q.q_int(1), int(1));
        assert_eq!(q.q_int(0), int(0));
        assert_eq!(q.q_int(3), rat(7, 4));
        // [-1]_q = -q^{-1}
        assert_eq!(q.q_int(-1), int(-2));
    }

    #[test]
    fn q_binomials() {
        let q = half();
        assert_eq!(q.q_binom(5, 0).unwrap(), int(1));
        assert_eq!(q.q_binom(2, 1).unwrap(), rat(3, 2));
        assert_eq!(q.q_binom(4, 2).unwrap(), rat(35, 16));
        assert!(q.q_binom(2, 3).is_err());
    }
}
