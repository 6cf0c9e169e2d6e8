use mhs_core::connect::{p_n, q_n, r_n, transport_chain};
use mhs_core::exactnum::{mod_reduce, QPoint, Rational};
use mhs_core::fmzv::{verify_antipode, verify_formula, FmzvContext, Formula};
use mhs_core::indexcore::{enum_i, hoffman_dual};
use mhs_core::qsum::{classical, ohno_lhs_q, ohno_rhs_q};
use mhs_core::{Index, Status};
use proptest::prelude::*;

fn index(max_weight: u32) -> impl Strategy<Value = Index> {
    (1..=max_weight)
        .prop_flat_map(|w| proptest::collection::vec(1..=w, 1..=w as usize))
        .prop_filter_map("weight bound", move |v| {
            (v.iter().sum::<u32>() <= max_weight).then(|| Index::new(v).unwrap())
        })
}

fn qpoint() -> impl Strategy<Value = QPoint> {
    (1i64..6, 2i64..7)
        .prop_filter("0 < q < 1", |(a, b)| a < b)
        .prop_map(|(a, b)| QPoint::new(Rational::new(a.into(), b.into())).unwrap())
}

const PRIMES: [u64; 10] = [7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dual_preserves_weight_and_balances_depth(k in index(10)) {
        let d = hoffman_dual(&k).unwrap();
        prop_assert_eq!(d.weight(), k.weight());
        prop_assert_eq!(d.depth() + k.depth(), k.weight() as usize + 1);
        prop_assert_eq!(hoffman_dual(&d).unwrap(), k);
    }

    #[test]
    fn ohno_holds(k in index(5), e in 0u32..=3, n in 1u64..=6) {
        prop_assert_eq!(classical::ohno_lhs(&k, e, n).unwrap(), classical::ohno_rhs(&k, e, n).unwrap());
    }

    #[test]
    fn q_ohno_holds(k in index(4), e in 0u32..=2, n in 1u64..=4, q in qpoint()) {
        prop_assert_eq!(ohno_lhs_q(&k, e, n, &q).unwrap(), ohno_rhs_q(&k, e, n, &q).unwrap());
    }

    #[test]
    fn transport_preserves_value(k in index(4), n in 1u64..=4, q in qpoint()) {
        let steps = transport_chain(&k, n, &q, 2).unwrap();
        prop_assert_eq!(steps.len(), k.weight() as usize + 1);
        prop_assert!(steps.windows(2).all(|w| w[0].value == w[1].value));
    }

    #[test]
    fn pqr_holds(k in index(4), n in 1u64..=4, q in qpoint()) {
        let lhs = p_n(&k, n, &q, 3).unwrap();
        let rhs = q_n(&hoffman_dual(&k).unwrap(), n, &q, 3).unwrap().mul(&r_n(n, &q, 3).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fmzv_agrees_with_exact_reduction(k in index(4), pi in 0usize..4, n in 1u32..=3, star in any::<bool>()) {
        let p = PRIMES[pi];
        let exact = if star {
            classical::zeta_star_n(&k, p - 1).unwrap()
        } else {
            classical::zeta_n(&k, p - 1).unwrap()
        };
        let ctx = FmzvContext::new(p, n).unwrap();
        prop_assert_eq!(ctx.zeta(&k, star), mod_reduce(&exact, p, n).unwrap());
    }

    #[test]
    fn antipode_vanishes(k in index(6), pi in 0usize..PRIMES.len(), n in 1u32..=3) {
        let r = verify_antipode(&k, PRIMES[pi], n).unwrap();
        prop_assert_ne!(r.status, Status::Fail, "{}", r);
    }

    #[test]
    fn depth_sums_vanish_mod_p(k in 1u32..=7, pi in 0usize..PRIMES.len(), star in any::<bool>()) {
        let p = PRIMES[pi];
        let ctx = FmzvContext::new(p, 1).unwrap();
        for r in 1..=k {
            let total = enum_i(k, r as usize).unwrap().iter().map(|i| ctx.zeta(i, star)).sum::<mhs_core::exactnum::Residue>();
            if p > k as u64 + 2 {
                prop_assert!(total.is_zero(), "k={} r={} p={}", k, r, p);
            }
        }
    }

    #[test]
    fn sum_formulas_never_fail(k in 1u32..=8, r in 1u32..=8, pi in 0usize..PRIMES.len()) {
        prop_assume!(r <= k);
        let p = PRIMES[pi];
        let mut fs = vec![Formula::S { k, r }, Formula::SStar { k, r }];
        if k % 2 == 1 {
            fs.extend([Formula::T { k, r }, Formula::TStar { k, r }]);
        }
        for f in fs {
            let rep = verify_formula(&f, p).unwrap();
            prop_assert_ne!(rep.status, Status::Fail, "{}", rep);
        }
    }
}
