use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;

/// Dense polynomial in `q` with integer coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c q^e`.
    pub fn monomial(c: BigInt, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        Self::from_coeffs(coeffs)
    }

    /// `[m]_q = 1 + q + ... + q^{m-1}`.
    pub fn q_int(m: usize) -> Self {
        Self::from_coeffs(vec![BigInt::one(); m])
    }

    /// Gaussian binomial `(n choose m)_q`, built by the q-Pascal rule
    /// `(n, m) = (n-1, m-1) + q^m (n-1, m)`.
    pub fn q_binom(n: usize, m: usize) -> Self {
        if m > n {
            return Self::zero();
        }
        let mut row = vec![QPoly::one()];
        for i in 1..=n {
            let mut next = Vec::with_capacity(i + 1);
            for j in 0..=i {
                let left = if j >= 1 { row[j - 1].clone() } else { QPoly::zero() };
                let right = if j < i {
                    row[j].mul(&QPoly::monomial(BigInt::one(), j))
                } else {
                    QPoly::zero()
                };
                next.push(left.add(&right));
            }
            row = next;
        }
        row.swap_remove(m)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = BigInt::zero();
        let coeffs = (0..len)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, q: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * q + Rational::from_integer(c.clone()))
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| match e {
                0 => format!("{c}"),
                1 => format!("{c}*q"),
                _ => format!("{c}*q^{e}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// A rational function `num(q) / prod_m [m]_q^{den[m-1]}`.
///
/// Denominators are tracked as exponent vectors over the q-integers, so sums
/// never require polynomial gcds; equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct QRatFn {
    num: QPoly,
    den: Vec<u32>,
}

impl QRatFn {
    pub fn from_poly(num: QPoly) -> Self {
        QRatFn { num, den: Vec::new() }
    }

    pub fn zero() -> Self {
        Self::from_poly(QPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(QPoly::one())
    }

    /// `[m]_q^{-k}` for `m >= 1`.
    pub fn inv_q_int_pow(m: usize, k: u32) -> Self {
        assert!(m >= 1, "[0]_q is not invertible");
        let mut den = vec![0; m];
        den[m - 1] = k;
        QRatFn { num: QPoly::one(), den }
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator_exponents(&self) -> &[u32] {
        &self.den
    }

    pub fn denominator(&self) -> QPoly {
        self.den
            .iter()
            .enumerate()
            .fold(QPoly::one(), |acc, (i, &e)| acc.mul(&QPoly::q_int(i + 1).pow(e)))
    }

    /// Numerator rescaled onto the denominator `target` (entrywise >= own).
    fn lift(&self, target: &[u32]) -> QPoly {
        let mut num = self.num.clone();
        for (i, &t) in target.iter().enumerate() {
            let own = self.den.get(i).copied().unwrap_or(0);
            if t > own {
                num = num.mul(&QPoly::q_int(i + 1).pow(t - own));
            }
        }
        num
    }

    fn join(a: &[u32], b: &[u32]) -> Vec<u32> {
        let len = a.len().max(b.len());
        (0..len)
            .map(|i| a.get(i).copied().unwrap_or(0).max(b.get(i).copied().unwrap_or(0)))
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.num.is_zero() {
            return other.clone();
        }
        if other.num.is_zero() {
            return self.clone();
        }
        let den = Self::join(&self.den, &other.den);
        let num = self.lift(&den).add(&other.lift(&den));
        QRatFn { num, den }
    }

    pub fn neg(&self) -> Self {
        QRatFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let len = self.den.len().max(other.den.len());
        let den = (0..len)
            .map(|i| self.den.get(i).copied().unwrap_or(0) + other.den.get(i).copied().unwrap_or(0))
            .collect();
        QRatFn {
            num: self.num.mul(&other.num),
            den,
        }
    }

    pub fn mul_poly(&self, p: &QPoly) -> Self {
        QRatFn {
            num: self.num.mul(p),
            den: self.den.clone(),
        }
    }

    pub fn eval(&self, q: &Rational) -> Rational {
        self.num.eval(q) / self.denominator().eval(q)
    }
}

impl PartialEq for QRatFn {
    fn eq(&self, other: &Self) -> bool {
        let den = Self::join(&self.den, &other.den);
        self.lift(&den) == other.lift(&den)
    }
}

impl Eq for QRatFn {}

impl fmt::Display for QRatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.denominator())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, QPoint};

    #[test]
    fn gaussian_binomials_match_q_factorials() {
        let q = QPoint::new(rat(2, 3)).unwrap();
        for n in 0..7 {
            for m in 0..=n {
                assert_eq!(
                    QPoly::q_binom(n, m).eval(q.value()),
                    q.q_binom(n as u64, m as u64).unwrap(),
                    "({n} choose {m})_q"
                );
            }
        }
        // (4 choose 2)_q = 1 + q + 2q^2 + q^3 + q^4
        let expected: Vec<BigInt> = [1, 1, 2, 1, 1].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(QPoly::q_binom(4, 2).coeffs(), &expected[..]);
    }

    #[test]
    fn rational_function_equality_is_cross_multiplication() {
        // 1/[2] + q/[2] = 1
        let a = QRatFn::inv_q_int_pow(2, 1);
        let b = a.mul_poly(&QPoly::monomial(BigInt::one(), 1));
        assert_eq!(a.add(&b), QRatFn::one());
        // [3]/[3]^2 = 1/[3]
        let c = QRatFn::inv_q_int_pow(3, 2).mul_poly(&QPoly::q_int(3));
        assert_eq!(c, QRatFn::inv_q_int_pow(3, 1));
        assert_ne!(c, QRatFn::one());
        assert_eq!(c.eval(&rat(1, 2)), rat(4, 7));
    }
}
