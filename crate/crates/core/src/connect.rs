//! Connected sums `Z★_N(k; l; q; x)` and the transport moves between them.
//!
//! A connected sum joins a nested sum over `m_1 <= ... <= m_r` (factor `F₁`)
//! to one over `n_1 <= ... <= n_s` (factor `F₂`) through the connector
//! `C(m_r, n_1)`. Everything is a power series in `x` truncated at a
//! caller-chosen order, with coefficients exact at a rational `q`.
//!
//! Two telescoping moves shift weight from the left half to the right half
//! without changing the value:
//!
//! - move A: `(k_1, ..., k_r + 1; l) -> (k_1, ..., k_r; 1, l)`
//! - move B: `(k_1, ..., k_r + 1, 0; l_1, ...) -> (k_1, ..., k_r; 1 + l_1, ...)`
//!
//! Applying them `wt(k)` times walks `(k; ∅)` to `(0; k∨)`.

use std::fmt;
use std::time::Instant;

use num_traits::{One, Zero};

use crate::exactnum::{binomial_falling, fmt_rational, QPoint, Rational, TruncatedSeries};
use crate::indexcore::{hoffman_dual, Index};
use crate::qsum::{ohno_lhs_q, ohno_rhs_q};
use crate::report::VerificationReport;
use crate::{Error, Result};

/// A pair `(k; l)`: `k` nonempty with only its last entry allowed to be 0,
/// `l` an index (possibly empty).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConnState {
    left: Vec<u32>,
    right: Index,
}

impl ConnState {
    pub fn new(left: Vec<u32>, right: Index) -> Result<Self> {
        let Some((_, init)) = left.split_last() else {
            return Err(Error::InvalidRange(
                "left part of a connected sum must be nonempty".into(),
            ));
        };
        if init.contains(&0) {
            return Err(Error::InvalidRange("only the last left entry may be 0".into()));
        }
        Ok(ConnState { left, right })
    }

    /// The starting state `(k; ∅)`.
    pub fn initial(k: &Index) -> Result<Self> {
        if k.is_empty() {
            return Err(Error::EmptyIndex);
        }
        Self::new(k.entries().to_vec(), Index::empty())
    }

    pub fn left(&self) -> &[u32] {
        &self.left
    }

    pub fn right(&self) -> &Index {
        &self.right
    }

    fn left_weight(&self) -> u32 {
        self.left.iter().sum()
    }

    /// `(0; l)`: nothing left to transport.
    pub fn is_terminal(&self) -> bool {
        self.left == [0]
    }
}

impl fmt::Display for ConnState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let left: Vec<String> = self.left.iter().map(u32::to_string).collect();
        write!(f, "({};{})", left.join(","), self.right.literal())
    }
}

/// Move A: `(..., k_r; l) -> (..., k_r - 1; 1, l)` for `k_r >= 1`.
pub fn transport_a(st: &ConnState) -> Result<ConnState> {
    let last = *st.left.last().expect("left is nonempty");
    if last == 0 {
        return Err(Error::InapplicableMove(format!(
            "move A needs a positive last left entry, got {st}"
        )));
    }
    let mut left = st.left.clone();
    *left.last_mut().expect("nonempty") -= 1;
    let mut right = vec![1];
    right.extend_from_slice(st.right.entries());
    ConnState::new(left, Index::new(right)?)
}

/// Move B: `(..., c, 0; l_1, l_2, ...) -> (..., c - 1; 1 + l_1, l_2, ...)`
/// for `c >= 1` and `l` nonempty.
pub fn transport_b(st: &ConnState) -> Result<ConnState> {
    let r = st.left.len();
    if r < 2 || st.left[r - 1] != 0 || st.right.is_empty() {
        return Err(Error::InapplicableMove(format!(
            "move B needs the shape (..., c, 0; l) with l nonempty, got {st}"
        )));
    }
    let mut left = st.left[..r - 1].to_vec();
    *left.last_mut().expect("r >= 2") -= 1;
    let mut right = st.right.entries().to_vec();
    right[0] += 1;
    ConnState::new(left, Index::new(right)?)
}

/// The move dictated by the state's shape: A while the last left entry is
/// positive, B once it is 0; `None` at the terminal state `(0; l)`.
pub fn next_move(st: &ConnState) -> Option<(char, Result<ConnState>)> {
    if st.is_terminal() {
        None
    } else if *st.left.last().expect("nonempty") >= 1 {
        Some(('A', transport_a(st)))
    } else {
        Some(('B', transport_b(st)))
    }
}

/// Per-`(N, q, E)` lookup tables shared by all series computations.
struct Tables {
    order: usize,
    q: QPoint,
    /// `[m]_q`, index `m` (slot 0 unused)
    qint: Vec<Rational>,
    /// `[m]_q - q^m x`
    lin: Vec<TruncatedSeries>,
    /// `([m]_q - q^m x)^{-1}`
    lin_inv: Vec<TruncatedSeries>,
    /// `[m]_q!`
    qfact: Vec<Rational>,
    /// `prod_{h=1}^{n} ([h]_q - q^h x)`
    lin_prod: Vec<TruncatedSeries>,
}

impl Tables {
    fn new(n: u64, q: &QPoint, order: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRange("N must be >= 1".into()));
        }
        let n = n as usize;
        let mut qint = vec![Rational::zero()];
        let mut lin = vec![TruncatedSeries::one(order)];
        let mut lin_inv = vec![TruncatedSeries::one(order)];
        let mut qfact = vec![Rational::one()];
        let mut lin_prod = vec![TruncatedSeries::one(order)];
        for m in 1..=n {
            let im = q.q_int(m as i64);
            let l = TruncatedSeries::linear(order, im.clone(), -q.pow(m as i64));
            lin_inv.push(l.inv()?);
            lin_prod.push(lin_prod[m - 1].mul(&l)?);
            qfact.push(&qfact[m - 1] * &im);
            lin.push(l);
            qint.push(im);
        }
        Ok(Tables {
            order,
            q: q.clone(),
            qint,
            lin,
            lin_inv,
            qfact,
            lin_prod,
        })
    }

    fn n(&self) -> usize {
        self.qint.len() - 1
    }

    /// `[m] / ([m] - q^m x)`.
    fn edge(&self, m: usize) -> TruncatedSeries {
        self.lin_inv[m].scale(&self.qint[m])
    }

    /// `q^{(k-1)m} / ([m] ([m] - q^m x)^{k-1})`; `k = 0` gives exponent -1.
    fn left_factor(&self, k: u32, m: usize) -> Result<TruncatedSeries> {
        let scalar = self.q.pow((k as i64 - 1) * m as i64) / &self.qint[m];
        let series = if k == 0 {
            self.lin[m].clone()
        } else {
            self.lin_inv[m].powi(k as i64 - 1)?
        };
        Ok(series.scale(&scalar))
    }

    /// `q^n / (([n] - q^n x) [n]^{l-1})`.
    fn right_factor(&self, l: u32, n: usize) -> TruncatedSeries {
        let scalar = self.q.pow(n as i64) / num_traits::Pow::pow(&self.qint[n], l - 1);
        self.lin_inv[n].scale(&scalar)
    }

    fn connector(&self, m: usize, n: usize) -> TruncatedSeries {
        let mut scalar = self.q.pow((m * (m + 1) / 2) as i64) / (&self.qfact[m] * &self.qfact[n - m]);
        if m.is_multiple_of(2) {
            scalar = -scalar;
        }
        self.lin_prod[n].scale(&scalar)
    }

    /// `L(m) = sum_{m_1 <= ... <= m_r = m} F₁(k; m_1, ..., m_r)` for `m = 1..=N`.
    fn left_sums(&self, k: &[u32]) -> Result<Vec<TruncatedSeries>> {
        let n = self.n();
        let r = k.len();
        let mut layer = Vec::with_capacity(n);
        for m in 1..=n {
            layer.push(self.edge(m).mul(&self.left_factor(k[0], m)?)?);
        }
        for &kj in &k[1..] {
            let mut running = TruncatedSeries::zero(self.order);
            for m in 1..=n {
                running.add_assign(&layer[m - 1])?;
                layer[m - 1] = self.left_factor(kj, m)?.mul(&running)?;
            }
        }
        debug_assert!(r >= 1);
        for m in 1..=n {
            layer[m - 1] = layer[m - 1].mul(&self.edge(m))?;
        }
        Ok(layer)
    }

    /// `G(n_1) = sum_{n_1 <= n_2 <= ... <= n_s <= N} F₂(l; n)` for `n_1 = 1..=N`.
    fn right_sums(&self, l: &[u32]) -> Result<Vec<TruncatedSeries>> {
        let n = self.n();
        let mut layer: Vec<TruncatedSeries> = (1..=n).map(|m| self.right_factor(l[l.len() - 1], m)).collect();
        for &lj in l[..l.len() - 1].iter().rev() {
            let mut running = TruncatedSeries::zero(self.order);
            for m in (1..=n).rev() {
                running.add_assign(&layer[m - 1])?;
                layer[m - 1] = self.right_factor(lj, m).mul(&running)?;
            }
        }
        Ok(layer)
    }
}

/// The connector `C(m, n, q, x)` truncated at order `order`.
pub fn connector(m: u64, n: u64, q: &QPoint, order: usize) -> Result<TruncatedSeries> {
    if m < 1 || m > n {
        return Err(Error::InvalidRange(format!(
            "connector needs 1 <= m <= n, got m={m}, n={n}"
        )));
    }
    Ok(Tables::new(n, q, order)?.connector(m as usize, n as usize))
}

/// `Z★_N(k; l; q; x)` through `x^order`.
pub fn z_star(st: &ConnState, n: u64, q: &QPoint, order: usize) -> Result<TruncatedSeries> {
    let t = Tables::new(n, q, order)?;
    z_star_with(&t, st)
}

fn z_star_with(t: &Tables, st: &ConnState) -> Result<TruncatedSeries> {
    let n = t.n();
    let left = t.left_sums(&st.left)?;
    let mut total = TruncatedSeries::zero(t.order);
    if st.right.is_empty() {
        for m in 1..=n {
            total.add_assign(&left[m - 1].mul(&t.connector(m, n))?)?;
        }
        return Ok(total);
    }
    let right = t.right_sums(st.right.entries())?;
    for n1 in 1..=n {
        let mut joined = TruncatedSeries::zero(t.order);
        for m in 1..=n1 {
            joined.add_assign(&left[m - 1].mul(&t.connector(m, n1))?)?;
        }
        total.add_assign(&joined.mul(&right[n1 - 1])?)?;
    }
    Ok(total)
}

/// One materialized step of a transport chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStep {
    pub state: ConnState,
    /// `'A'` or `'B'` for the move that produced this state; `None` at the start.
    pub via: Option<char>,
    pub value: TruncatedSeries,
}

/// Walks `(k; ∅)` to `(0; k∨)` by `wt(k)` moves, evaluating `Z★` at every state.
///
/// Fails with `ChainBroken` at the first move that changes the value, or if
/// the endpoint's right part is not the Hoffman dual of `k`.
pub fn transport_chain(k: &Index, n: u64, q: &QPoint, order: usize) -> Result<Vec<ChainStep>> {
    let t = Tables::new(n, q, order)?;
    let mut state = ConnState::initial(k)?;
    let mut steps = vec![ChainStep {
        value: z_star_with(&t, &state)?,
        state: state.clone(),
        via: None,
    }];
    while let Some((via, next)) = next_move(&state) {
        let next = next?;
        debug_assert_eq!(next.left_weight() + 1, state.left_weight());
        let value = z_star_with(&t, &next)?;
        let prev = &steps[steps.len() - 1].value;
        if let Some((e, a, b)) = prev.first_difference(&value) {
            return Err(Error::ChainBroken {
                step: steps.len(),
                detail: format!(
                    "{} -> {} changes x^{e} coefficient from {} to {}",
                    state,
                    next,
                    fmt_rational(&a),
                    fmt_rational(&b)
                ),
            });
        }
        steps.push(ChainStep {
            state: next.clone(),
            via: Some(via),
            value,
        });
        state = next;
    }
    let dual = hoffman_dual(k)?;
    if state.right != dual {
        return Err(Error::ChainBroken {
            step: steps.len() - 1,
            detail: format!("chain ends at {state}, expected (0;{})", dual.literal()),
        });
    }
    Ok(steps)
}

/// `P_N(k; q; x)`: the left nested sum against `(-1)^{m_r-1} q^{m_r(m_r+1)/2} (N choose m_r)_q`.
pub fn p_n(k: &Index, n: u64, q: &QPoint, order: usize) -> Result<TruncatedSeries> {
    if k.is_empty() {
        return Err(Error::EmptyIndex);
    }
    let t = Tables::new(n, q, order)?;
    let left = t.left_sums(k.entries())?;
    let mut total = TruncatedSeries::zero(order);
    for (m, l) in (1..=n).zip(&left) {
        let mut scalar = q.pow((m * (m + 1) / 2) as i64) * q.q_binom(n, m)?;
        if m % 2 == 0 {
            scalar = -scalar;
        }
        total.add_assign(&l.scale(&scalar))?;
    }
    Ok(total)
}

/// `Q_N(l; q; x) = sum_{m_1 <= ... <= m_s} prod_i q^{m_i} / (([m_i] - q^{m_i} x) [m_i]^{l_i - 1})`.
pub fn q_n(l: &Index, n: u64, q: &QPoint, order: usize) -> Result<TruncatedSeries> {
    if l.is_empty() {
        return Ok(TruncatedSeries::one(order));
    }
    let t = Tables::new(n, q, order)?;
    let mut total = TruncatedSeries::zero(order);
    for g in t.right_sums(l.entries())? {
        total.add_assign(&g)?;
    }
    Ok(total)
}

/// `R_N(q; x) = prod_{h=1}^{N} (1 - q^h x / [h]_q)^{-1}`.
pub fn r_n(n: u64, q: &QPoint, order: usize) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::one(order);
    for h in 1..=n as i64 {
        let factor = TruncatedSeries::linear(order, Rational::one(), -(q.pow(h) / q.q_int(h)));
        acc = acc.mul(&factor.inv()?)?;
    }
    Ok(acc)
}

fn series_report(id: &str, lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> VerificationReport {
    let report = VerificationReport::new(id).compared(lhs == rhs, lhs.render(), rhs.render());
    match lhs.first_difference(rhs) {
        Some((e, _, _)) => report.failed(format!("first differing coefficient at x^{e}")),
        None => report,
    }
}

/// `P_N(k) = Q_N(k∨) R_N` through order `order`.
pub fn verify_pqr(k: &Index, n: u64, q: &QPoint, order: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let lhs = p_n(k, n, q, order)?;
    let rhs = q_n(&hoffman_dual(k)?, n, q, order)?.mul(&r_n(n, q, order)?)?;
    Ok(series_report("pqr", &lhs, &rhs)
        .param("k", k.literal())
        .param("N", n)
        .param("q", q)
        .param("E", order)
        .timed(start))
}

/// Runs [`transport_chain`] and reports its outcome.
pub fn verify_transport(k: &Index, n: u64, q: &QPoint, order: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let base = VerificationReport::new("transport")
        .param("k", k.literal())
        .param("N", n)
        .param("q", q)
        .param("E", order);
    let report = match transport_chain(k, n, q, order) {
        Ok(steps) => {
            let first = &steps[0];
            let last = &steps[steps.len() - 1];
            let moves: String = steps.iter().filter_map(|s| s.via).collect();
            base.param("moves", moves).compared(
                true,
                format!("{} = {}", first.state, first.value.render()),
                format!("{} = {}", last.state, last.value.render()),
            )
        }
        Err(Error::ChainBroken { step, detail }) => {
            let base = base.param("step", step);
            let (lhs, rhs) = (detail.clone(), detail.clone());
            base.compared(false, lhs, rhs).failed(detail)
        }
        Err(e) => return Err(e),
    };
    Ok(report.timed(start))
}

/// Coefficients of `P_N` against the q-Ohno left side and of `Q_N R_N`
/// against its right side, for every `e` up to `order`.
pub fn verify_coefficient_bridge(k: &Index, n: u64, q: &QPoint, order: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let p = p_n(k, n, q, order)?;
    let qr = q_n(&hoffman_dual(k)?, n, q, order)?.mul(&r_n(n, q, order)?)?;
    let mut lhs_coeffs = Vec::with_capacity(order + 1);
    let mut rhs_coeffs = Vec::with_capacity(order + 1);
    for e in 0..=order as u32 {
        lhs_coeffs.push(ohno_lhs_q(k, e, n, q)?);
        rhs_coeffs.push(ohno_rhs_q(k, e, n, q)?);
    }
    let lhs_series = TruncatedSeries::new(order, lhs_coeffs);
    let rhs_series = TruncatedSeries::new(order, rhs_coeffs);
    let ok = p == lhs_series && qr == rhs_series;
    let render = |a: &TruncatedSeries, b: &TruncatedSeries| format!("{} vs {}", a.render(), b.render());
    let mut report = VerificationReport::new("coefficient-bridge")
        .param("k", k.literal())
        .param("N", n)
        .param("q", q)
        .param("E", order)
        .compared(ok, render(&p, &lhs_series), render(&qr, &rhs_series));
    if !ok {
        report = report.failed("series coefficients differ from the q-Ohno sides");
    }
    Ok(report.timed(start))
}

/// `sum_{m=1}^{n1} [m]/([m]-q^m x) (-1)^{m-1} q^{m(m-1)/2} / ([m]! [n1-m]!) = 1 / prod_{h<=n1} ([h]-q^h x)`.
pub fn verify_partial_fraction(n1: u64, q: &QPoint, order: usize) -> Result<VerificationReport> {
    if n1 < 1 {
        return Err(Error::InvalidRange("partial fraction needs n1 >= 1".into()));
    }
    let start = Instant::now();
    let mut lhs = TruncatedSeries::zero(order);
    let mut prod = TruncatedSeries::one(order);
    for m in 1..=n1 as i64 {
        let im = q.q_int(m);
        let lin = TruncatedSeries::linear(order, im.clone(), -q.pow(m));
        let mut scalar = im * q.pow(m * (m - 1) / 2) / (q.q_factorial(m as u64) * q.q_factorial(n1 - m as u64));
        if m % 2 == 0 {
            scalar = -scalar;
        }
        lhs.add_assign(&lin.inv()?.scale(&scalar))?;
        prod = prod.mul(&lin)?;
    }
    let rhs = prod.inv()?;
    Ok(series_report("partial-fraction", &lhs, &rhs)
        .param("n1", n1)
        .param("q", q)
        .param("E", order)
        .timed(start))
}

/// `([m] - q^m x)^{-k} = sum_e C(k+e-1, e) q^{em} x^e / [m]^{k+e}`.
pub fn verify_expansion(m: u64, k: u32, q: &QPoint, order: usize) -> Result<VerificationReport> {
    if m < 1 {
        return Err(Error::InvalidRange("expansion needs m >= 1".into()));
    }
    let start = Instant::now();
    let mi = m as i64;
    let im = q.q_int(mi);
    let lhs = TruncatedSeries::linear(order, im.clone(), -q.pow(mi)).powi(-(k as i64))?;
    let coeffs = (0..=order as i64)
        .map(|e| {
            let c = Rational::from_integer(binomial_falling(k as i64 + e - 1, e as u64));
            c * q.pow(e * mi) / num_traits::Pow::pow(&im, (k as i64 + e) as u32)
        })
        .collect();
    let rhs = TruncatedSeries::new(order, coeffs);
    Ok(series_report("expansion", &lhs, &rhs)
        .param("m", m)
        .param("k", k)
        .param("q", q)
        .param("E", order)
        .timed(start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use crate::indexcore::{enum_j, ExponentTuple};
    use crate::qsum::{h_star_q, z_star_q};

    fn q(n: i64, d: i64) -> QPoint {
        QPoint::new(rat(n, d)).unwrap()
    }

    fn idx(v: &[u32]) -> Index {
        Index::new(v.to_vec()).unwrap()
    }

    fn st(left: &[u32], right: &[u32]) -> ConnState {
        ConnState::new(left.to_vec(), idx(right)).unwrap()
    }

    #[test]
    fn state_validation() {
        assert!(ConnState::new(vec![], Index::empty()).is_err());
        assert!(ConnState::new(vec![0, 1], Index::empty()).is_err());
        assert!(ConnState::new(vec![1, 0], idx(&[1])).is_ok());
        assert_eq!(ConnState::initial(&Index::empty()), Err(Error::EmptyIndex));
    }

    #[test]
    fn connector_examples() {
        let h = q(1, 2);
        assert_eq!(
            connector(1, 1, &h, 1).unwrap(),
            TruncatedSeries::new(1, vec![rat(1, 2), rat(-1, 4)])
        );
        assert!(connector(0, 2, &h, 1).is_err());
        assert!(connector(3, 2, &h, 1).is_err());

        // m = 1, n = 2: q (1 - q x)([2] - q^2 x) / [1]! [1]! = (1/2)(1 - x/2)(3/2 - x/4)
        let c = connector(1, 2, &h, 2).unwrap();
        let expected = TruncatedSeries::linear(2, int(1), rat(-1, 2))
            .mul(&TruncatedSeries::linear(2, rat(3, 2), rat(-1, 4)))
            .unwrap()
            .scale(&rat(1, 2));
        assert_eq!(c, expected);

        // constant term: (-1)^{m-1} q^{m(m+1)/2} (n choose m)_q
        for n in 1..=5u64 {
            for m in 1..=n {
                let c = connector(m, n, &h, 0).unwrap();
                let mut expect = h.pow((m * (m + 1) / 2) as i64) * h.q_binom(n, m).unwrap();
                if m % 2 == 0 {
                    expect = -expect;
                }
                assert_eq!(c.coeff(0), &expect);
            }
        }
    }

    #[test]
    fn z_star_examples() {
        let h = q(1, 2);
        // ((1); ∅), N = 1: q / (1 - q x)
        let z = z_star(&st(&[1], &[]), 1, &h, 3).unwrap();
        assert_eq!(
            z,
            TruncatedSeries::new(3, vec![rat(1, 2), rat(1, 4), rat(1, 8), rat(1, 16)])
        );

        // constant term of Z★(k; ∅) is H★_N(k; q)
        for k in [idx(&[1]), idx(&[2, 1]), idx(&[1, 1, 2])] {
            let z = z_star(&ConnState::initial(&k).unwrap(), 4, &h, 2).unwrap();
            assert_eq!(z.coeff(0), &h_star_q(&k, 4, &h).unwrap());
        }

        // Z★((0); k∨) = Q_N(k∨)
        let dual = hoffman_dual(&idx(&[1, 1, 2])).unwrap();
        let z = z_star(&ConnState::new(vec![0], dual.clone()).unwrap(), 3, &h, 3).unwrap();
        assert_eq!(z, q_n(&dual, 3, &h, 3).unwrap());
    }

    #[test]
    fn moves() {
        assert_eq!(transport_a(&st(&[1, 1, 2], &[])).unwrap(), st(&[1, 1, 1], &[1]));
        assert_eq!(transport_a(&st(&[1, 1, 1], &[1])).unwrap(), st(&[1, 1, 0], &[1, 1]));
        assert_eq!(transport_b(&st(&[1, 1, 0], &[1, 1])).unwrap(), st(&[1, 0], &[2, 1]));
        assert_eq!(transport_b(&st(&[1, 0], &[2, 1])).unwrap(), st(&[0], &[3, 1]));
        assert!(matches!(transport_b(&st(&[1], &[3])), Err(Error::InapplicableMove(_))));
        assert!(matches!(transport_a(&st(&[0], &[3])), Err(Error::InapplicableMove(_))));
        assert!(matches!(transport_b(&st(&[0], &[3])), Err(Error::InapplicableMove(_))));
        assert!(matches!(
            transport_b(&st(&[2, 0], &[])),
            Err(Error::InapplicableMove(_))
        ));
    }

    #[test]
    fn chains() {
        let steps = transport_chain(&idx(&[1, 1, 2]), 3, &q(1, 2), 2).unwrap();
        let states: Vec<String> = steps.iter().map(|s| s.state.to_string()).collect();
        assert_eq!(states, ["(1,1,2;)", "(1,1,1;1)", "(1,1,0;1,1)", "(1,0;2,1)", "(0;3,1)"]);
        let vias: String = steps.iter().filter_map(|s| s.via).collect();
        assert_eq!(vias, "AABB");

        let steps = transport_chain(&idx(&[1]), 2, &q(1, 2), 2).unwrap();
        assert_eq!(steps.len(), 2);
        assert_eq!(steps[1].state, st(&[0], &[1]));

        let steps = transport_chain(&idx(&[3]), 4, &q(2, 3), 3).unwrap();
        assert_eq!(steps.last().unwrap().state, st(&[0], &[1, 1, 1]));
    }

    #[test]
    fn pqr_coefficients() {
        let h = q(1, 2);
        let order = 3;
        let r = r_n(3, &h, order).unwrap();
        for e in 0..=order {
            assert_eq!(
                r.coeff(e),
                &z_star_q(
                    &Index::repeat(1, e).unwrap(),
                    &ExponentTuple::zeros(e.max(1)).unwrap(),
                    3,
                    &h
                )
                .unwrap()
            );
        }
        let k = idx(&[2, 1]);
        let p = p_n(&k, 3, &h, order).unwrap();
        let dual = hoffman_dual(&k).unwrap();
        let qn = q_n(&dual, 3, &h, order).unwrap();
        for e in 0..=order as u32 {
            assert_eq!(p.coeff(e as usize), &ohno_lhs_q(&k, e, 3, &h).unwrap());
            let expected = enum_j(e, dual.depth())
                .unwrap()
                .iter()
                .map(|ex| z_star_q(&dual, ex, 3, &h).unwrap())
                .fold(Rational::zero(), |a, b| a + b);
            assert_eq!(qn.coeff(e as usize), &expected);
        }
    }

    #[test]
    fn verifiers() {
        assert!(verify_pqr(&idx(&[2]), 2, &q(1, 2), 3).unwrap().passed());
        assert!(verify_pqr(&idx(&[1, 1, 2]), 4, &q(2, 3), 4).unwrap().passed());
        let r0 = verify_pqr(&idx(&[1, 2]), 5, &q(3, 5), 0).unwrap();
        assert!(r0.passed());
        assert_eq!(
            r0.lhs,
            format!("[{}]", fmt_rational(&h_star_q(&idx(&[1, 2]), 5, &q(3, 5)).unwrap()))
        );

        assert!(verify_partial_fraction(1, &q(1, 2), 3).unwrap().passed());
        assert!(verify_partial_fraction(3, &q(1, 2), 4).unwrap().passed());
        assert!(verify_expansion(2, 3, &q(2, 3), 5).unwrap().passed());
        assert!(verify_expansion(1, 0, &q(2, 3), 5).unwrap().passed());
        assert!(verify_transport(&idx(&[2, 1, 1]), 4, &q(1, 2), 2).unwrap().passed());
        assert!(verify_coefficient_bridge(&idx(&[1, 2]), 3, &q(2, 3), 3)
            .unwrap()
            .passed());
    }

    #[test]
    fn partial_fraction_single_term() {
        // n1 = 1: both sides are 1 / ([1] - q x)
        let h = q(1, 2);
        let r = verify_partial_fraction(1, &h, 2).unwrap();
        let expected = TruncatedSeries::linear(2, int(1), rat(-1, 2)).inv().unwrap();
        assert_eq!(r.rhs, expected.render());
    }
}
