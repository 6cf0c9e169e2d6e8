//! Classical (`q = 1`) multiple harmonic sums over exact rationals.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactnum::{binomial, Rational};
use crate::indexcore::{b_coeff, enum_j, hoffman_dual, index_plus, Index};
use crate::{Error, Result};

fn inv_pow(m: u64, k: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(m).pow(k))
}

/// Nested sum of `prod_i m_i^{-k_i}` over `1 <= m_1 (<|<=) ... (<|<=) m_r <= n`,
/// with an optional extra weight on the last variable.
fn nested(k: &[u32], n: u64, strict: bool, last_weight: impl Fn(u64) -> Rational) -> Rational {
    if k.is_empty() {
        return Rational::one();
    }
    let n = n as usize;
    // sums[m] = sum over tuples whose current last variable equals m
    let mut sums: Vec<Rational> = (1..=n as u64).map(|m| inv_pow(m, k[0])).collect();
    for &kj in &k[1..] {
        let mut prefix = Rational::zero();
        let mut next = vec![Rational::zero(); n];
        for m in 0..n {
            if !strict {
                prefix += &sums[m];
            }
            next[m] = inv_pow(m as u64 + 1, kj) * &prefix;
            if strict {
                prefix += &sums[m];
            }
        }
        sums = next;
    }
    sums.iter()
        .enumerate()
        .map(|(i, s)| s * last_weight(i as u64 + 1))
        .fold(Rational::zero(), |a, b| a + b)
}

/// `H★_N(k) = sum (-1)^{m_r - 1} C(N, m_r) / (m_1^{k_1} ... m_r^{k_r})` over
/// `1 <= m_1 <= ... <= m_r <= N`.
pub fn h_star(k: &Index, n: u64) -> Result<Rational> {
    if k.is_empty() {
        return Err(Error::EmptyIndex);
    }
    if n == 0 {
        return Err(Error::InvalidRange("N must be >= 1".into()));
    }
    Ok(nested(k.entries(), n, false, |m| {
        let b = Rational::from_integer(binomial(n, m));
        if m % 2 == 1 {
            b
        } else {
            -b
        }
    }))
}

/// `ζ★_N(k)`, non-strict nesting; `ζ★_N(∅) = 1`.
pub fn zeta_star_n(k: &Index, n: u64) -> Result<Rational> {
    Ok(nested(k.entries(), n, false, |_| Rational::one()))
}

/// `ζ_N(k)`, strict nesting; `ζ_N(∅) = 1`.
pub fn zeta_n(k: &Index, n: u64) -> Result<Rational> {
    Ok(nested(k.entries(), n, true, |_| Rational::one()))
}

/// `sum_{e in J_{e,r}} b(k;e) H★_N(k+e)`.
pub fn ohno_lhs(k: &Index, e: u32, n: u64) -> Result<Rational> {
    if k.is_empty() {
        return Err(Error::EmptyIndex);
    }
    let mut acc = Rational::zero();
    for ex in enum_j(e, k.depth())? {
        let b = b_coeff(k, &ex)?;
        if !b.is_zero() {
            acc += Rational::from_integer(b) * h_star(&index_plus(k, &ex)?, n)?;
        }
    }
    Ok(acc)
}

/// `sum_{j=0}^{e} ζ★_N({1}^{e-j}) sum_{e' in J_{j,s}} ζ★_N(k∨ + e')`.
pub fn ohno_rhs(k: &Index, e: u32, n: u64) -> Result<Rational> {
    let dual = hoffman_dual(k)?;
    let mut acc = Rational::zero();
    for j in 0..=e {
        let ones = zeta_star_n(&Index::repeat(1, (e - j) as usize)?, n)?;
        let mut inner = Rational::zero();
        for ex in enum_j(j, dual.depth())? {
            inner += zeta_star_n(&index_plus(&dual, &ex)?, n)?;
        }
        acc += ones * inner;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use crate::indexcore::indices_up_to_weight;

    fn idx(v: &[u32]) -> Index {
        Index::new(v.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(h_star(&idx(&[1]), 1).unwrap(), int(1));
        assert_eq!(h_star(&idx(&[1]), 2).unwrap(), rat(3, 2));
        assert_eq!(h_star(&idx(&[2]), 2).unwrap(), rat(7, 4));
        assert_eq!(h_star(&Index::empty(), 2), Err(Error::EmptyIndex));
        assert_eq!(zeta_star_n(&idx(&[1, 1]), 2).unwrap(), rat(7, 4));
        assert_eq!(zeta_n(&idx(&[1, 2]), 2).unwrap(), rat(1, 4));
        assert_eq!(zeta_n(&Index::empty(), 5).unwrap(), int(1));
        assert_eq!(zeta_star_n(&Index::empty(), 5).unwrap(), int(1));
        assert_eq!(zeta_n(&idx(&[1]), 4).unwrap(), rat(25, 12));
    }

    #[test]
    fn ohno_examples() {
        assert_eq!(ohno_lhs(&idx(&[2]), 0, 2).unwrap(), rat(7, 4));
        assert_eq!(ohno_rhs(&idx(&[2]), 0, 2).unwrap(), rat(7, 4));
        assert_eq!(ohno_lhs(&idx(&[1]), 0, 1).unwrap(), ohno_rhs(&idx(&[1]), 0, 1).unwrap());
        let k = idx(&[1, 1]);
        assert_eq!(ohno_lhs(&k, 2, 5).unwrap(), ohno_rhs(&k, 2, 5).unwrap());
    }

    /// Brute force over all r-tuples in [1, N]^r, filtering the ordering.
    fn brute(k: &[u32], n: u64, strict: bool) -> Rational {
        let r = k.len();
        let mut total = Rational::zero();
        let mut m = vec![1u64; r];
        loop {
            let ordered = m.windows(2).all(|w| if strict { w[0] < w[1] } else { w[0] <= w[1] });
            if ordered {
                total += m
                    .iter()
                    .zip(k)
                    .map(|(&mi, &ki)| inv_pow(mi, ki))
                    .fold(Rational::one(), |a, b| a * b);
            }
            let mut pos = 0;
            loop {
                if pos == r {
                    return total;
                }
                m[pos] += 1;
                if m[pos] <= n {
                    break;
                }
                m[pos] = 1;
                pos += 1;
            }
        }
    }

    #[test]
    fn nested_sums_match_brute_force() {
        for k in indices_up_to_weight(5) {
            for n in 1..=5 {
                assert_eq!(zeta_star_n(&k, n).unwrap(), brute(k.entries(), n, false));
                assert_eq!(zeta_n(&k, n).unwrap(), brute(k.entries(), n, true));
            }
        }
    }

    #[test]
    fn star_dominates_strict() {
        for k in indices_up_to_weight(6) {
            for n in 1..=8 {
                let s = zeta_star_n(&k, n).unwrap();
                let t = zeta_n(&k, n).unwrap();
                assert!(s >= t && t >= Rational::zero(), "{k} N={n}");
            }
        }
    }
}
