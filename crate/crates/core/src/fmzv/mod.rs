//! Finite multiple zeta values: `ζ_{p-1}(k)` and `ζ★_{p-1}(k)` modulo `p^n`,
//! closed-form right-hand sides built from Bernoulli numbers, and verifiers
//! for the sum formulas and auxiliary congruences between them.
//!
//! Each statement holds "for almost all primes"; we check it prime by prime
//! over an explicit window. Rows with `p < 5` or `p <= wt + n + 1` are
//! reported SKIPPED, as are rows where a Bernoulli denominator is divisible
//! by `p`.

mod formulas;
mod verify;

pub use formulas::{rhs_formula, sum_lhs, Formula, SumKind, SumTarget};
pub use verify::{
    verify_a2_ohno, verify_antipode, verify_binom_congruence, verify_binomial_sum_identities, verify_formula,
    verify_h_star_bridge, verify_hims, verify_sum_formula, verify_sum_routes,
};

use crate::exactnum::{binomial, PrimePower, Residue};
use crate::indexcore::Index;
use crate::{Error, Result};

/// Smallest prime any statement here is checked at.
pub const MIN_PRIME: u64 = 5;

/// One finite multiple zeta value: `ζ_{p-1}(k)` (or its star version) mod `p^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FmzvQuery {
    pub k: Index,
    pub p: u64,
    pub n: u32,
    pub star: bool,
}

impl FmzvQuery {
    pub fn new(k: Index, p: u64, n: u32, star: bool) -> Result<Self> {
        PrimePower::new(p, n)?;
        if p < MIN_PRIME {
            return Err(Error::InvalidRange(format!("prime {p} is below {MIN_PRIME}")));
        }
        Ok(FmzvQuery { k, p, n, star })
    }
}

/// Why a statement of weight `weight` mod `p^n` is not checked at `p`, if it isn't.
pub fn guard(p: u64, weight: u32, n: u32) -> Option<String> {
    let bound = weight as u64 + n as u64 + 1;
    if p < MIN_PRIME {
        Some(format!("guard: p={p} < {MIN_PRIME}"))
    } else if p <= bound {
        Some(format!("guard: p={p} <= wt+n+1={bound}"))
    } else {
        None
    }
}

/// Inverses of `1..p-1` mod `p^n`, built once per `(p, n)`.
#[derive(Clone, Debug)]
pub struct FmzvContext {
    pp: PrimePower,
    inv: Vec<Residue>,
}

impl FmzvContext {
    pub fn new(p: u64, n: u32) -> Result<Self> {
        let pp = PrimePower::new(p, n)?;
        if p < MIN_PRIME {
            return Err(Error::InvalidRange(format!("prime {p} is below {MIN_PRIME}")));
        }
        let mut inv = Vec::with_capacity(p as usize);
        inv.push(pp.zero());
        for m in 1..p {
            inv.push(pp.from_u64(m).inv().ok_or(Error::NonInvertibleDenominator { p })?);
        }
        Ok(FmzvContext { pp, inv })
    }

    pub fn modulus(&self) -> PrimePower {
        self.pp
    }

    pub fn p(&self) -> u64 {
        self.pp.p()
    }

    pub fn n(&self) -> u32 {
        self.pp.n()
    }

    /// `1/m mod p^n` for `1 <= m < p`.
    pub fn inv(&self, m: u64) -> Residue {
        self.inv[m as usize]
    }

    fn inv_pow(&self, m: usize, k: u32) -> Residue {
        self.inv[m].pow(k as u64)
    }

    /// Nested sum over `1 <= m_1 (<|<=) ... (<|<=) m_r <= p - 1` of
    /// `w(m_r) prod_i m_i^{-k_i}`.
    fn nested(&self, k: &[u32], strict: bool, weight: impl Fn(usize) -> Residue) -> Residue {
        if k.is_empty() {
            return self.pp.one();
        }
        let top = self.p() as usize - 1;
        let mut layer: Vec<Residue> = (1..=top).map(|m| self.inv_pow(m, k[0])).collect();
        for &kj in &k[1..] {
            let mut prefix = self.pp.zero();
            for m in 1..=top {
                let cur = layer[m - 1];
                if !strict {
                    prefix += cur;
                }
                layer[m - 1] = self.inv_pow(m, kj) * prefix;
                if strict {
                    prefix += cur;
                }
            }
        }
        layer.iter().enumerate().map(|(i, &v)| v * weight(i + 1)).sum()
    }

    /// `ζ_{p-1}(k)` (`star = false`) or `ζ★_{p-1}(k)` mod `p^n`; the empty index gives 1.
    pub fn zeta(&self, k: &Index, star: bool) -> Residue {
        let one = self.pp.one();
        self.nested(k.entries(), !star, |_| one)
    }

    /// `H★_{p-1}(k) mod p^n`, with `C(p-1, m)` reduced exactly.
    pub fn h_star(&self, k: &Index) -> Result<Residue> {
        if k.is_empty() {
            return Err(Error::EmptyIndex);
        }
        let p = self.p();
        let signed: Vec<Residue> = (1..p)
            .map(|m| {
                let b = self.pp.from_bigint(&binomial(p - 1, m));
                if m % 2 == 1 {
                    b
                } else {
                    -b
                }
            })
            .collect();
        Ok(self.nested(k.entries(), false, |m| signed[m - 1]))
    }
}

/// `ζ_{p-1}(k)` or `ζ★_{p-1}(k)` mod `p^n`.
pub fn zeta_p(q: &FmzvQuery) -> Result<Residue> {
    Ok(FmzvContext::new(q.p, q.n)?.zeta(&q.k, q.star))
}

/// `H★_{p-1}(k) mod p^n`.
pub fn h_star_mod(k: &Index, p: u64, n: u32) -> Result<Residue> {
    FmzvContext::new(p, n)?.h_star(k)
}
