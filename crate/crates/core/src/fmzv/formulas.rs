//! Closed-form right-hand sides and the sums they evaluate.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::FmzvContext;
use crate::exactnum::{bernoulli, binomial, PrimePower, Rational, Residue};
use crate::indexcore::{enum_i, enum_i_i, Index};
use crate::{Error, Result};

/// The six sums over `I_{k,r}` / `I_{k,r,i}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SumKind {
    /// `S_{k,r}`, non-star, mod `p^2`
    S,
    SStar,
    /// `S_{k,r,i}`, non-star, mod `p^2`
    Si,
    SiStar,
    /// `T_{k,r}`, non-star, mod `p^3`
    T,
    TStar,
}

impl SumKind {
    pub const ALL: [SumKind; 6] = [
        SumKind::S,
        SumKind::SStar,
        SumKind::Si,
        SumKind::SiStar,
        SumKind::T,
        SumKind::TStar,
    ];

    pub fn star(self) -> bool {
        matches!(self, SumKind::SStar | SumKind::SiStar | SumKind::TStar)
    }

    pub fn has_i(self) -> bool {
        matches!(self, SumKind::Si | SumKind::SiStar)
    }

    /// Exponent `n` of the modulus `p^n` the sum lives in.
    pub fn exponent(self) -> u32 {
        match self {
            SumKind::T | SumKind::TStar => 3,
            _ => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SumKind::S => "S",
            SumKind::SStar => "S*",
            SumKind::Si => "Si",
            SumKind::SiStar => "Si*",
            SumKind::T => "T",
            SumKind::TStar => "T*",
        }
    }
}

/// A sum target `(kind, k, r, i)`; `i` is ignored unless `kind.has_i()`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SumTarget {
    pub kind: SumKind,
    pub k: u32,
    pub r: u32,
    pub i: u32,
}

impl SumTarget {
    pub fn new(kind: SumKind, k: u32, r: u32, i: u32) -> Result<Self> {
        if r < 1 || r > k {
            return Err(Error::InvalidRange(format!(
                "sum target needs 1 <= r <= k, got k={k}, r={r}"
            )));
        }
        if kind.has_i() && !(1 <= i && i <= r && r < k) {
            return Err(Error::InvalidRange(format!(
                "sum target needs 1 <= i <= r < k, got k={k}, r={r}, i={i}"
            )));
        }
        let i = if kind.has_i() { i } else { 0 };
        Ok(SumTarget { kind, k, r, i })
    }

    pub fn indices(&self) -> Result<Vec<Index>> {
        if self.kind.has_i() {
            enum_i_i(self.k, self.r as usize, self.i as usize)
        } else {
            enum_i(self.k, self.r as usize)
        }
    }

    /// The closed form this sum is claimed to equal.
    pub fn formula(&self) -> Formula {
        let SumTarget { kind, k, r, i } = *self;
        match kind {
            SumKind::S => Formula::S { k, r },
            SumKind::SStar => Formula::SStar { k, r },
            SumKind::Si => Formula::Si { k, r, i },
            SumKind::SiStar => Formula::SiStar { k, r, i },
            SumKind::T => Formula::T { k, r },
            SumKind::TStar => Formula::TStar { k, r },
        }
    }
}

impl fmt::Display for SumTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.kind.has_i() {
            write!(f, "{}({},{},{})", self.kind.name(), self.k, self.r, self.i)
        } else {
            write!(f, "{}({},{})", self.kind.name(), self.k, self.r)
        }
    }
}

/// `sum over I_{k,r}` (or `I_{k,r,i}`) of `ζ_{p-1}` / `ζ★_{p-1}` mod `p^n`,
/// with `n` fixed by the kind.
pub fn sum_lhs(t: &SumTarget, p: u64) -> Result<Residue> {
    let ctx = FmzvContext::new(p, t.kind.exponent())?;
    sum_with(&ctx, t)
}

pub(crate) fn sum_with(ctx: &FmzvContext, t: &SumTarget) -> Result<Residue> {
    Ok(t.indices()?.iter().map(|k| ctx.zeta(k, t.kind.star())).sum())
}

/// A named closed-form statement `lhs = rhs` about finite multiple zeta values.
///
/// Each variant knows its left side (a direct sum), its right side (an exact
/// rational in Bernoulli numbers and powers of `p`), the modulus exponent and
/// its hypotheses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    /// `sum_{I_{k,r,i}} ζ_A(k)`, Saito–Wakabayashi
    Sw {
        k: u32,
        r: u32,
        i: u32,
    },
    SwStar {
        k: u32,
        r: u32,
        i: u32,
    },
    /// both Saito–Wakabayashi sums vanish for even `k`
    SwEven {
        k: u32,
        r: u32,
        i: u32,
        star: bool,
    },
    /// `sum_{I_{k,r}} ζ_A(k) = sum_{I_{k,r}} ζ★_A(k) = 0`
    KrSum {
        k: u32,
        r: u32,
        star: bool,
    },
    /// `ζ★_A({1}^e) = 0` for `e >= 1`
    OnesStar {
        e: u32,
    },
    S {
        k: u32,
        r: u32,
    },
    SStar {
        k: u32,
        r: u32,
    },
    Si {
        k: u32,
        r: u32,
        i: u32,
    },
    SiStar {
        k: u32,
        r: u32,
        i: u32,
    },
    T {
        k: u32,
        r: u32,
    },
    TStar {
        k: u32,
        r: u32,
    },
    /// `ζ★_A(k1, k2)`
    A2 {
        k1: u32,
        k2: u32,
    },
    /// `ζ★_A(k1, k2, k3)`, odd weight
    A3 {
        k1: u32,
        k2: u32,
        k3: u32,
    },
    /// `ζ★_{A_2}({k}^r)`
    A2Repeat {
        k: u32,
        r: u32,
    },
    /// `ζ★_{A_2}(k1, k2)`, even weight
    A2Depth2 {
        k1: u32,
        k2: u32,
    },
    /// `ζ_{A_3}(k)`, odd `k`
    A3Single {
        k: u32,
    },
}

fn int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

fn binom(n: u32, m: i64) -> Rational {
    if m < 0 {
        return Rational::zero();
    }
    int(binomial(n as u64, m as u64))
}

fn sgn(e: i64) -> Rational {
    int(if e.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// `B_{p-d} / d`.
fn bp(p: u64, d: u32) -> Result<Rational> {
    if d as u64 > p {
        return Err(Error::InvalidRange(format!(
            "Bernoulli index p-{d} is negative at p={p}"
        )));
    }
    Ok(bernoulli((p - d as u64) as usize) / int(d))
}

fn p_pow(p: u64, e: u32) -> Rational {
    int(BigInt::from(p).pow(e))
}

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

/// `a_{k,r,i}`.
pub fn a_coeff(k: u32, r: u32, i: u32) -> BigInt {
    let (k, r, i) = (k as i64, r as i64, i as i64);
    let c = |n: i64, m: i64| {
        if m < 0 {
            BigInt::zero()
        } else {
            binomial(n as u64, m as u64)
        }
    };
    let s = |e: i64| if e.rem_euclid(2) == 0 { 1 } else { -1 };
    c(k - 1, r) + s(r - i) * ((k - r) * c(k, i - 1) + c(k - 1, i - 1) + s(r - 1) * c(k - 1, r - i))
}

/// `b_{k,r,i}`.
pub fn b_coeff_sum(k: u32, r: u32, i: u32) -> BigInt {
    let (k, r, i) = (k as i64, r as i64, i as i64);
    let c = |n: i64, m: i64| {
        if m < 0 {
            BigInt::zero()
        } else {
            binomial(n as u64, m as u64)
        }
    };
    let s = |e: i64| if e.rem_euclid(2) == 0 { 1 } else { -1 };
    c(k - 1, r) + s(i - 1) * ((k - r) * c(k, r - i) + c(k - 1, r - i) + s(r - 1) * c(k - 1, i - 1))
}

impl Formula {
    pub fn id(&self) -> &'static str {
        match self {
            Formula::Sw { .. } => "sw",
            Formula::SwStar { .. } => "sw-star",
            Formula::SwEven { .. } => "sw-even",
            Formula::KrSum { .. } => "kr-sum",
            Formula::OnesStar { .. } => "ones-star",
            Formula::S { .. } => "s",
            Formula::SStar { .. } => "s-star",
            Formula::Si { .. } => "si",
            Formula::SiStar { .. } => "si-star",
            Formula::T { .. } => "t",
            Formula::TStar { .. } => "t-star",
            Formula::A2 { .. } => "a-2",
            Formula::A3 { .. } => "a-3",
            Formula::A2Repeat { .. } => "a2-repeat",
            Formula::A2Depth2 { .. } => "a2-2",
            Formula::A3Single { .. } => "a3-single",
        }
    }

    /// Parameters as `(name, value)` pairs, in a fixed order.
    pub fn params(&self) -> Vec<(&'static str, String)> {
        let s = |v: &u32| v.to_string();
        match self {
            Formula::Sw { k, r, i }
            | Formula::SwStar { k, r, i }
            | Formula::Si { k, r, i }
            | Formula::SiStar { k, r, i } => {
                vec![("k", s(k)), ("r", s(r)), ("i", s(i))]
            }
            Formula::SwEven { k, r, i, star } => {
                vec![("k", s(k)), ("r", s(r)), ("i", s(i)), ("star", star.to_string())]
            }
            Formula::KrSum { k, r, star } => vec![("k", s(k)), ("r", s(r)), ("star", star.to_string())],
            Formula::OnesStar { e } => vec![("e", s(e))],
            Formula::S { k, r }
            | Formula::SStar { k, r }
            | Formula::T { k, r }
            | Formula::TStar { k, r }
            | Formula::A2Repeat { k, r } => vec![("k", s(k)), ("r", s(r))],
            Formula::A2 { k1, k2 } | Formula::A2Depth2 { k1, k2 } => vec![("k1", s(k1)), ("k2", s(k2))],
            Formula::A3 { k1, k2, k3 } => vec![("k1", s(k1)), ("k2", s(k2)), ("k3", s(k3))],
            Formula::A3Single { k } => vec![("k", s(k))],
        }
    }

    /// Modulus exponent `n`: the statement is a congruence mod `p^n`.
    pub fn exponent(&self) -> u32 {
        match self {
            Formula::S { .. }
            | Formula::SStar { .. }
            | Formula::Si { .. }
            | Formula::SiStar { .. }
            | Formula::A2Repeat { .. }
            | Formula::A2Depth2 { .. } => 2,
            Formula::T { .. } | Formula::TStar { .. } | Formula::A3Single { .. } => 3,
            _ => 1,
        }
    }

    /// Weight of the indices summed on the left.
    pub fn weight(&self) -> u32 {
        match *self {
            Formula::Sw { k, .. }
            | Formula::SwStar { k, .. }
            | Formula::SwEven { k, .. }
            | Formula::KrSum { k, .. }
            | Formula::S { k, .. }
            | Formula::SStar { k, .. }
            | Formula::Si { k, .. }
            | Formula::SiStar { k, .. }
            | Formula::T { k, .. }
            | Formula::TStar { k, .. }
            | Formula::A3Single { k } => k,
            Formula::OnesStar { e } => e,
            Formula::A2 { k1, k2 } | Formula::A2Depth2 { k1, k2 } => k1 + k2,
            Formula::A3 { k1, k2, k3 } => k1 + k2 + k3,
            Formula::A2Repeat { k, r } => k * r,
        }
    }

    /// Checks ranges and parity hypotheses.
    pub fn check(&self) -> Result<()> {
        let range = |ok: bool, what: &str| {
            if ok {
                Ok(())
            } else {
                Err(Error::InvalidRange(format!("{}: needs {what}", self.id())))
            }
        };
        let parity = |ok: bool, what: &str| {
            if ok {
                Ok(())
            } else {
                Err(Error::ParityViolation(format!(
                    "{}: needs {what}, got {:?}",
                    self.id(),
                    self
                )))
            }
        };
        match *self {
            Formula::Sw { k, r, i } | Formula::SwStar { k, r, i } => {
                range(1 <= i && i <= r && r < k, "1 <= i <= r < k")
            }
            Formula::SwEven { k, r, i, .. } => {
                range(1 <= i && i <= r && r < k, "1 <= i <= r < k")?;
                parity(k % 2 == 0, "even k")
            }
            Formula::KrSum { k, r, .. } | Formula::S { k, r } | Formula::SStar { k, r } => {
                range(1 <= r && r <= k, "1 <= r <= k")
            }
            Formula::T { k, r } | Formula::TStar { k, r } => {
                range(1 <= r && r <= k, "1 <= r <= k")?;
                parity(k % 2 == 1, "odd k")
            }
            Formula::Si { k, r, i } | Formula::SiStar { k, r, i } => {
                range(1 <= i && i <= r && r < k, "1 <= i <= r < k")?;
                parity(k % 2 == 0, "even k")
            }
            Formula::OnesStar { e } => range(e >= 1, "e >= 1"),
            Formula::A2 { k1, k2 } => range(k1 >= 1 && k2 >= 1, "positive entries"),
            Formula::A3 { k1, k2, k3 } => {
                range(k1 >= 1 && k2 >= 1 && k3 >= 1, "positive entries")?;
                parity((k1 + k2 + k3) % 2 == 1, "odd weight")
            }
            Formula::A2Repeat { k, r } => range(k >= 1 && r >= 1, "k, r >= 1"),
            Formula::A2Depth2 { k1, k2 } => {
                range(k1 >= 1 && k2 >= 1, "positive entries")?;
                parity((k1 + k2) % 2 == 0, "even weight")
            }
            Formula::A3Single { k } => {
                range(k >= 1, "k >= 1")?;
                parity(k % 2 == 1, "odd k")
            }
        }
    }

    /// The left side, summed directly; `ctx` must be mod `p^{exponent}`.
    pub fn lhs(&self, ctx: &FmzvContext) -> Result<Residue> {
        self.check()?;
        let sum = |kind: SumKind, k: u32, r: u32, i: u32| sum_with(ctx, &SumTarget::new(kind, k, r, i)?);
        let z = |v: Vec<u32>, star: bool| -> Result<Residue> { Ok(ctx.zeta(&Index::new(v)?, star)) };
        match *self {
            Formula::Sw { k, r, i } => sum(SumKind::Si, k, r, i),
            Formula::SwStar { k, r, i } => sum(SumKind::SiStar, k, r, i),
            Formula::SwEven { k, r, i, star } => sum(if star { SumKind::SiStar } else { SumKind::Si }, k, r, i),
            Formula::KrSum { k, r, star } => sum(if star { SumKind::SStar } else { SumKind::S }, k, r, 0),
            Formula::OnesStar { e } => z(vec![1; e as usize], true),
            Formula::S { k, r } => sum(SumKind::S, k, r, 0),
            Formula::SStar { k, r } => sum(SumKind::SStar, k, r, 0),
            Formula::Si { k, r, i } => sum(SumKind::Si, k, r, i),
            Formula::SiStar { k, r, i } => sum(SumKind::SiStar, k, r, i),
            Formula::T { k, r } => sum(SumKind::T, k, r, 0),
            Formula::TStar { k, r } => sum(SumKind::TStar, k, r, 0),
            Formula::A2 { k1, k2 } | Formula::A2Depth2 { k1, k2 } => z(vec![k1, k2], true),
            Formula::A3 { k1, k2, k3 } => z(vec![k1, k2, k3], true),
            Formula::A2Repeat { k, r } => z(vec![k; r as usize], true),
            Formula::A3Single { k } => z(vec![k], false),
        }
    }

    /// The right side as an exact rational at the prime `p`.
    pub fn value(&self, p: u64) -> Result<Rational> {
        self.check()?;
        let v = match *self {
            Formula::Sw { k, r, i } => {
                let (r, i) = (r as i64, i as i64);
                sgn(i) * (binom(k - 1, i - 1) + sgn(r) * binom(k - 1, r - i)) * bp(p, k)?
            }
            Formula::SwStar { k, r, i } => {
                let (r, i) = (r as i64, i as i64);
                sgn(i) * (binom(k - 1, r - i) + sgn(r) * binom(k - 1, i - 1)) * bp(p, k)?
            }
            Formula::SwEven { .. } | Formula::KrSum { .. } | Formula::OnesStar { .. } => Rational::zero(),
            Formula::S { k, r } => sgn(r as i64 - 1) * binom(k, r as i64) * bp(p, k + 1)? * p_pow(p, 1),
            Formula::SStar { k, r } => binom(k, r as i64) * bp(p, k + 1)? * p_pow(p, 1),
            Formula::Si { k, r, i } => sgn(r as i64 - 1) * int(a_coeff(k, r, i)) * half() * bp(p, k + 1)? * p_pow(p, 1),
            Formula::SiStar { k, r, i } => int(b_coeff_sum(k, r, i)) * half() * bp(p, k + 1)? * p_pow(p, 1),
            Formula::T { k, r } => {
                sgn(r as i64) * int(k + 1) * half() * binom(k, r as i64) * bp(p, k + 2)? * p_pow(p, 2)
            }
            Formula::TStar { k, r } => -int(k + 1) * half() * binom(k, r as i64) * bp(p, k + 2)? * p_pow(p, 2),
            Formula::A2 { k1, k2 } => sgn(k2 as i64) * binom(k1 + k2, k1 as i64) * bp(p, k1 + k2)?,
            Formula::A3 { k1, k2, k3 } => {
                let l = k1 + k2 + k3;
                half() * (sgn(k3 as i64) * binom(l, k3 as i64) - sgn(k1 as i64) * binom(l, k1 as i64)) * bp(p, l)?
            }
            Formula::A2Repeat { k, r } => int(k) * bp(p, r * k + 1)? * p_pow(p, 1),
            Formula::A2Depth2 { k1, k2 } => {
                let l = k1 + k2;
                let bracket = sgn(k1 as i64) * int(k2) * binom(l + 1, k1 as i64)
                    - sgn(k2 as i64) * int(k1) * binom(l + 1, k2 as i64)
                    + int(l);
                half() * bracket * bp(p, l + 1)? * p_pow(p, 1)
            }
            Formula::A3Single { k } => -int(k * (k + 1)) * half() * bp(p, k + 2)? * p_pow(p, 2),
        };
        Ok(v)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}[{}]", self.id(), params.join(","))
    }
}

/// The right side of `f` reduced mod `p^n`. No prime guard is applied here;
/// a denominator divisible by `p` gives `NonInvertibleDenominator`.
pub fn rhs_formula(f: &Formula, p: u64, n: u32) -> Result<Residue> {
    PrimePower::new(p, n)?.reduce(&f.value(p)?)
}
