//! Indices, exponent tuples and their combinatorics.
//!
//! An [`Index`] is a tuple of positive integers `(k_1, ..., k_r)`; the empty
//! index is allowed and has weight and depth zero. An [`ExponentTuple`] is a
//! nonempty tuple of non-negative integers.
//!
//! Enumeration orders are fixed so that reports are reproducible:
//! [`enum_i`] and [`enum_i_i`] list compositions in ascending lexicographic
//! order, [`enum_j`] lists weak compositions in descending lexicographic order
//! (the first entry decreases first).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::exactnum::binomial_falling;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Index(Vec<u32>);

impl Index {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.contains(&0) {
            return Err(Error::InvalidEntry);
        }
        Ok(Index(entries))
    }

    pub fn empty() -> Self {
        Index(Vec::new())
    }

    /// `{k}^r`.
    pub fn repeat(k: u32, r: usize) -> Result<Self> {
        Self::new(vec![k; r])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Index {
        Index(self.0.iter().rev().copied().collect())
    }

    /// `(k_1, ..., k_r, extra)`.
    pub fn appended(&self, extra: u32) -> Result<Index> {
        let mut v = self.0.clone();
        v.push(extra);
        Index::new(v)
    }

    /// Slice `k[range]` as an index (possibly empty).
    pub fn slice(&self, range: std::ops::Range<usize>) -> Index {
        Index(self.0[range].to_vec())
    }

    /// Comma-separated entries, the literal syntax accepted by [`FromStr`].
    pub fn literal(&self) -> String {
        self.0.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.literal())
    }
}

impl FromStr for Index {
    type Err = Error;

    /// Parses `"1,1,2"` (optionally wrapped in parentheses); `""` or `"()"` is ∅.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() || s == "∅" {
            return Ok(Index::empty());
        }
        let entries = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad index entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Index::new(entries)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentTuple(Vec<u32>);

impl ExponentTuple {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidRange("exponent tuple must be nonempty".into()));
        }
        Ok(ExponentTuple(entries))
    }

    pub fn zeros(r: usize) -> Result<Self> {
        Self::new(vec![0; r])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for ExponentTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The Hoffman dual `k∨`.
///
/// `k` is read as `({1}^{a_1-1}, b_1+1, ..., {1}^{a_{s-1}-1}, b_{s-1}+1, {1}^{a_s-1}, b_s)`
/// and mapped to `(a_1, {1}^{b_1-1}, a_2+1, {1}^{b_2-1}, ..., a_s+1, {1}^{b_s-1})`.
pub fn hoffman_dual(k: &Index) -> Result<Index> {
    let entries = k.entries();
    let Some((&last, init)) = entries.split_last() else {
        return Err(Error::EmptyIndex);
    };
    let mut blocks: Vec<(u32, u32)> = Vec::new();
    let mut ones = 0u32;
    for &e in init {
        if e == 1 {
            ones += 1;
        } else {
            blocks.push((ones + 1, e - 1));
            ones = 0;
        }
    }
    blocks.push((ones + 1, last));

    let mut out = Vec::with_capacity((k.weight() as usize + 1).saturating_sub(k.depth()));
    for (j, &(a, b)) in blocks.iter().enumerate() {
        out.push(if j == 0 { a } else { a + 1 });
        out.extend(std::iter::repeat_n(1, b as usize - 1));
    }
    Ok(Index(out))
}

/// `k + e`, entrywise.
pub fn index_plus(k: &Index, e: &ExponentTuple) -> Result<Index> {
    if k.depth() != e.depth() {
        return Err(Error::DepthMismatch {
            left: k.depth(),
            right: e.depth(),
        });
    }
    Ok(Index(k.0.iter().zip(&e.0).map(|(a, b)| a + b).collect()))
}

/// `k^+ = (k_1, ..., k_{r-1}, k_r + 1)`.
pub fn index_succ(k: &Index) -> Result<Index> {
    let mut v = k.0.clone();
    match v.last_mut() {
        Some(last) => *last += 1,
        None => return Err(Error::EmptyIndex),
    }
    Ok(Index(v))
}

fn compositions(total: u32, parts: usize, min_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if parts == 1 {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    let rest_min = min_part * (parts as u32 - 1);
    for first in min_part..=total - rest_min {
        prefix.push(first);
        compositions(total - first, parts - 1, min_part, prefix, out);
        prefix.pop();
    }
}

/// `I_{k,r}`: all indices of weight `k` and depth `r`, ascending lexicographic.
pub fn enum_i(k: u32, r: usize) -> Result<Vec<Index>> {
    if r < 1 || r as u32 > k {
        return Err(Error::InvalidRange(format!("I_{{{k},{r}}} needs 1 <= r <= k")));
    }
    let mut out = Vec::new();
    compositions(k, r, 1, &mut Vec::with_capacity(r), &mut out);
    Ok(out.into_iter().map(Index).collect())
}

/// `I_{k,r,i}`: the members of `I_{k,r}` with `k_i >= 2`.
pub fn enum_i_i(k: u32, r: usize, i: usize) -> Result<Vec<Index>> {
    if i < 1 || i > r || r as u32 >= k {
        return Err(Error::InvalidRange(format!("I_{{{k},{r},{i}}} needs 1 <= i <= r < k")));
    }
    Ok(enum_i(k, r)?.into_iter().filter(|idx| idx.0[i - 1] >= 2).collect())
}

/// `J_{e,r}`: all exponent tuples of weight `e` and depth `r`, descending
/// lexicographic.
pub fn enum_j(e: u32, r: usize) -> Result<Vec<ExponentTuple>> {
    if r < 1 {
        return Err(Error::InvalidRange("J_{e,r} needs r >= 1".into()));
    }
    let mut out = Vec::new();
    compositions(e, r, 0, &mut Vec::with_capacity(r), &mut out);
    out.reverse();
    Ok(out.into_iter().map(ExponentTuple).collect())
}

/// `b(k; e) = prod_i C(k_i + e_i + δ_{i1} + δ_{ir} - 2, e_i)`, with the binomial
/// taken as a falling factorial over `e_i!`.
pub fn b_coeff(k: &Index, e: &ExponentTuple) -> Result<BigInt> {
    let r = k.depth();
    if r != e.depth() {
        return Err(Error::DepthMismatch {
            left: r,
            right: e.depth(),
        });
    }
    let mut acc = BigInt::one();
    for (i, (&ki, &ei)) in k.0.iter().zip(&e.0).enumerate() {
        let delta = (i == 0) as i64 + (i == r - 1) as i64;
        let upper = ki as i64 + ei as i64 + delta - 2;
        acc *= binomial_falling(upper, ei as u64);
    }
    Ok(acc)
}

/// Every nonempty index of weight at most `max_weight`, ordered by weight,
/// then depth, then lexicographically.
pub fn indices_up_to_weight(max_weight: u32) -> Vec<Index> {
    let mut out = Vec::new();
    for k in 1..=max_weight {
        for r in 1..=k as usize {
            out.extend(enum_i(k, r).expect("1 <= r <= k"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::binomial;
    use proptest::prelude::*;

    fn idx(v: &[u32]) -> Index {
        Index::new(v.to_vec()).unwrap()
    }

    fn ex(v: &[u32]) -> ExponentTuple {
        ExponentTuple::new(v.to_vec()).unwrap()
    }

    /// Independent oracle: an index of weight w is the set of its partial sums
    /// inside {1, ..., w-1}; the dual index is the complementary set.
    fn dual_by_complement(k: &Index) -> Index {
        let w = k.weight();
        let cuts: Vec<u32> =
            k.0.iter()
                .scan(0, |s, &x| {
                    *s += x;
                    Some(*s)
                })
                .filter(|&s| s < w)
                .collect();
        let mut out = Vec::new();
        let mut prev = 0;
        for c in (1..w).filter(|c| !cuts.contains(c)) {
            out.push(c - prev);
            prev = c;
        }
        out.push(w - prev);
        idx(&out)
    }

    #[test]
    fn dual_examples() {
        assert_eq!(hoffman_dual(&idx(&[1])).unwrap(), idx(&[1]));
        assert_eq!(hoffman_dual(&idx(&[1, 1, 2])).unwrap(), idx(&[3, 1]));
        assert_eq!(hoffman_dual(&idx(&[2])).unwrap(), idx(&[1, 1]));
        assert_eq!(hoffman_dual(&Index::empty()), Err(Error::EmptyIndex));
    }

    #[test]
    fn dual_is_an_involution_matching_the_complement_oracle() {
        for k in indices_up_to_weight(10) {
            let d = hoffman_dual(&k).unwrap();
            assert_eq!(d, dual_by_complement(&k), "{k}");
            assert_eq!(hoffman_dual(&d).unwrap(), k);
            assert_eq!(d.weight(), k.weight());
            assert_eq!(d.depth() + k.depth(), k.weight() as usize + 1);
        }
    }

    #[test]
    fn plus_and_succ() {
        assert_eq!(index_plus(&idx(&[1, 2]), &ex(&[0, 0])).unwrap(), idx(&[1, 2]));
        assert_eq!(index_plus(&idx(&[1, 1]), &ex(&[1, 0])).unwrap(), idx(&[2, 1]));
        assert_eq!(index_plus(&idx(&[2]), &ex(&[3])).unwrap(), idx(&[5]));
        assert_eq!(
            index_plus(&idx(&[2]), &ex(&[3, 0])),
            Err(Error::DepthMismatch { left: 1, right: 2 })
        );
        assert_eq!(index_succ(&idx(&[1])).unwrap(), idx(&[2]));
        assert_eq!(index_succ(&idx(&[3, 1])).unwrap(), idx(&[3, 2]));
        assert_eq!(index_succ(&idx(&[1, 1, 2])).unwrap(), idx(&[1, 1, 3]));
        assert_eq!(index_succ(&Index::empty()), Err(Error::EmptyIndex));
    }

    #[test]
    fn enumerations() {
        assert_eq!(enum_i(3, 2).unwrap(), vec![idx(&[1, 2]), idx(&[2, 1])]);
        assert_eq!(enum_i(4, 1).unwrap(), vec![idx(&[4])]);
        assert_eq!(enum_i(7, 3).unwrap().len(), 15);
        assert!(enum_i(2, 3).is_err());
        assert!(enum_i(2, 0).is_err());

        assert_eq!(enum_i_i(4, 2, 2).unwrap(), vec![idx(&[1, 3]), idx(&[2, 2])]);
        assert_eq!(enum_i_i(3, 2, 1).unwrap(), vec![idx(&[2, 1])]);
        assert_eq!(enum_i_i(5, 1, 1).unwrap(), vec![idx(&[5])]);
        assert!(enum_i_i(3, 3, 1).is_err());
        assert!(enum_i_i(5, 2, 3).is_err());

        assert_eq!(enum_j(1, 2).unwrap(), vec![ex(&[1, 0]), ex(&[0, 1])]);
        assert_eq!(enum_j(0, 3).unwrap(), vec![ex(&[0, 0, 0])]);
        assert_eq!(enum_j(3, 3).unwrap().len(), 10);
        assert!(enum_j(1, 0).is_err());
    }

    #[test]
    fn enumeration_counts_and_contents() {
        for k in 1..=9u32 {
            for r in 1..=k as usize {
                let all = enum_i(k, r).unwrap();
                assert_eq!(BigInt::from(all.len()), binomial(k as u64 - 1, r as u64 - 1));
                let mut sorted = all.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted, all, "distinct and lexicographic");
                assert!(all.iter().all(|i| i.weight() == k && i.depth() == r));
                if r < k as usize {
                    for i in 1..=r {
                        assert_eq!(
                            BigInt::from(enum_i_i(k, r, i).unwrap().len()),
                            binomial(k as u64 - 2, r as u64 - 1)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn weak_composition_counts_match_series_coefficients() {
        use crate::exactnum::{int, TruncatedSeries};
        // coefficient of x^e in (1 - x)^{-r}
        for r in 1..=5usize {
            let geom = TruncatedSeries::new(8, vec![int(1), int(-1)])
                .powi(-(r as i64))
                .unwrap();
            for e in 0..=8u32 {
                let all = enum_j(e, r).unwrap();
                assert_eq!(int(all.len() as i64), *geom.coeff(e as usize));
                assert!(all.iter().all(|t| t.weight() == e && t.depth() == r));
            }
        }
    }

    #[test]
    fn b_coefficients() {
        assert_eq!(b_coeff(&idx(&[1, 1]), &ex(&[0, 0])).unwrap(), BigInt::from(1));
        assert_eq!(b_coeff(&idx(&[1]), &ex(&[1])).unwrap(), BigInt::from(2));
        assert_eq!(b_coeff(&idx(&[1, 1, 1]), &ex(&[0, 1, 0])).unwrap(), BigInt::from(0));
        assert_eq!(
            b_coeff(&idx(&[1]), &ex(&[1, 0])),
            Err(Error::DepthMismatch { left: 1, right: 2 })
        );
        for k in indices_up_to_weight(6) {
            let zeros = ExponentTuple::zeros(k.depth()).unwrap();
            assert_eq!(b_coeff(&k, &zeros).unwrap(), BigInt::from(1));
        }
    }

    #[test]
    fn parsing() {
        assert_eq!("1,1,2".parse::<Index>().unwrap(), idx(&[1, 1, 2]));
        assert_eq!("(3, 1)".parse::<Index>().unwrap(), idx(&[3, 1]));
        assert_eq!("".parse::<Index>().unwrap(), Index::empty());
        assert_eq!("1,0".parse::<Index>(), Err(Error::InvalidEntry));
        assert!("1,a".parse::<Index>().is_err());
        assert_eq!(idx(&[3, 1]).to_string(), "(3,1)");
    }

    proptest! {
        #[test]
        fn dual_roundtrip_random(v in prop::collection::vec(1u32..5, 1..8)) {
            let k = idx(&v);
            prop_assert_eq!(hoffman_dual(&hoffman_dual(&k).unwrap()).unwrap(), k);
        }
    }
}
