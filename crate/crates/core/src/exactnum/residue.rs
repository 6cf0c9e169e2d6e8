use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::Rational;
use crate::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The modulus `p^n`, with `p` prime and `n` in `1..=3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimePower {
    p: u64,
    n: u32,
    modulus: u64,
}

impl PrimePower {
    pub fn new(p: u64, n: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if !(1..=3).contains(&n) {
            return Err(Error::UnsupportedExponent(n));
        }
        // p^3 must fit in 63 bits
        if p > 1 << 21 {
            return Err(Error::InvalidRange(format!("prime {p} too large")));
        }
        Ok(PrimePower {
            p,
            n,
            modulus: p.pow(n),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn zero(&self) -> Residue {
        Residue { value: 0, pp: *self }
    }

    pub fn one(&self) -> Residue {
        self.from_u64(1)
    }

    pub fn from_u64(&self, v: u64) -> Residue {
        Residue {
            value: v % self.modulus,
            pp: *self,
        }
    }

    pub fn from_i64(&self, v: i64) -> Residue {
        Residue {
            value: v.rem_euclid(self.modulus as i64) as u64,
            pp: *self,
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Residue {
        let m = BigInt::from(self.modulus);
        let r = v.mod_floor(&m);
        self.from_u64(r.to_u64().expect("reduced value fits in u64"))
    }

    /// `a/b mod p^n`; fails when `p` divides the reduced denominator.
    pub fn reduce(&self, a: &Rational) -> Result<Residue> {
        let num = self.from_bigint(a.numer());
        let den = self.from_bigint(a.denom());
        let inv = den.inv().ok_or(Error::NonInvertibleDenominator { p: self.p })?;
        Ok(num * inv)
    }

    /// The element `p mod p^n`.
    pub fn p_elem(&self) -> Residue {
        self.from_u64(self.p)
    }
}

/// An element of `Z/p^n Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    pp: PrimePower,
}

impl Residue {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> PrimePower {
        self.pp
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn pow(self, mut e: u64) -> Residue {
        let m = self.pp.modulus as u128;
        let mut base = self.value as u128;
        let mut acc = 1 % m;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        self.pp.from_u64(acc as u64)
    }

    /// Inverse by the extended Euclidean algorithm; `None` when `p | value`.
    pub fn inv(&self) -> Option<Residue> {
        let m = self.pp.modulus as i64;
        let (mut old_r, mut r) = (self.value as i64, m);
        let (mut old_s, mut s) = (1i64, 0i64);
        while r != 0 {
            let q = old_r / r;
            (old_r, r) = (r, old_r - q * r);
            (old_s, s) = (s, old_s - q * s);
        }
        (old_r == 1).then(|| self.pp.from_i64(old_s))
    }

    /// Canonical witness rendering: `v mod p^n`.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}^{}", self.value, self.pp.p, self.pp.n)
    }
}

fn same(a: &Residue, b: &Residue) {
    assert_eq!(a.pp, b.pp, "residues with different moduli");
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        same(&self, &rhs);
        self.pp.from_u64(self.value + rhs.value)
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        same(&self, &rhs);
        self.pp.from_u64(self.value + self.pp.modulus - rhs.value)
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        same(&self, &rhs);
        let m = self.pp.modulus as u128;
        let v = self.value as u128 * rhs.value as u128 % m;
        self.pp.from_u64(v as u64)
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        self.pp.from_u64(self.pp.modulus - self.value)
    }
}

impl AddAssign for Residue {
    fn add_assign(&mut self, rhs: Residue) {
        *self = *self + rhs;
    }
}

impl SubAssign for Residue {
    fn sub_assign(&mut self, rhs: Residue) {
        *self = *self - rhs;
    }
}

impl MulAssign for Residue {
    fn mul_assign(&mut self, rhs: Residue) {
        *self = *self * rhs;
    }
}

impl std::iter::Sum for Residue {
    fn sum<I: Iterator<Item = Residue>>(mut iter: I) -> Residue {
        let first = iter.next().expect("sum of residues needs a modulus");
        iter.fold(first, |a, b| a + b)
    }
}

/// `mod_reduce(a, p, n)`: the image of a p-integral rational in `Z/p^n Z`.
pub fn mod_reduce(a: &Rational, p: u64, n: u32) -> Result<Residue> {
    let pp = PrimePower::new(p, n)?;
    if a.is_zero() {
        return Ok(pp.zero());
    }
    pp.reduce(a)
}
