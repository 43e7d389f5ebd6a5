//! Randomized laws: field axioms for rational functions, plethystic
//! identities on small series, bilinearity of the Euler form, and the
//! monoid structure of the partition alphabet.

use num::BigInt;
use proptest::prelude::*;
use quiver_dt::lieword::{is_super_lyndon, Letter};
use quiver_dt::partitions::{self, Partition, PrefixRule};
use quiver_dt::{DimVector, IntPoly, MSeries, QRat, Quiver};
use std::cmp::Ordering;

fn poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-3i64..=3, 0..5)
        .prop_map(|cs| IntPoly::from_coeffs(cs.into_iter().map(BigInt::from).collect()))
}

fn nonzero_poly() -> impl Strategy<Value = IntPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn qrat() -> impl Strategy<Value = QRat> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| QRat::new(n, d))
}

fn nonzero_qrat() -> impl Strategy<Value = QRat> {
    qrat().prop_filter("nonzero", |r| !r.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn qrat_field_laws(a in qrat(), b in qrat(), c in qrat()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, QRat::zero());
    }

    #[test]
    fn qrat_division_inverts(a in qrat(), b in nonzero_qrat()) {
        prop_assert_eq!(&(&a / &b) * &b, a);
        prop_assert_eq!(&b * &b.recip(), QRat::one());
    }

    #[test]
    fn qrat_powers(a in nonzero_qrat(), e in 0i64..4) {
        let mut by_mul = QRat::one();
        for _ in 0..e {
            by_mul = &by_mul * &a;
        }
        prop_assert_eq!(a.pow(e), by_mul.clone());
        prop_assert_eq!(a.pow(-e), by_mul.recip());
    }

    #[test]
    fn qrat_substitution_is_multiplicative(a in qrat(), b in qrat(), n in 1u32..4) {
        prop_assert_eq!((&a * &b).subst_u_pow(n), &a.subst_u_pow(n) * &b.subst_u_pow(n));
        prop_assert_eq!((&a + &b).subst_u_pow(n), &a.subst_u_pow(n) + &b.subst_u_pow(n));
    }

    #[test]
    fn qrat_laurent_expansion_is_additive(a in qrat(), b in qrat()) {
        let cap = 8;
        let ea = a.laurent(cap);
        let eb = b.laurent(cap);
        let es = (&a + &b).laurent(cap);
        for e in -10..=cap {
            prop_assert_eq!(es.coeff(e), ea.coeff(e) + eb.coeff(e));
        }
    }

    #[test]
    fn qrat_serde_roundtrip(a in qrat()) {
        let json = serde_json::to_string(&a).unwrap();
        let back: QRat = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, a);
    }
}

fn small_series(order: u32) -> impl Strategy<Value = MSeries> {
    let n = order as usize;
    prop::collection::vec((-2i64..=2, 0i64..=2), n).prop_map(move |picks| {
        MSeries::from_fn(1, order, |d| {
            if d.is_zero() {
                return QRat::zero();
            }
            let (c, v) = picks[(d.0[0] - 1) as usize];
            QRat::integer(c) * QRat::u_pow(v) / QRat::one_minus_u_pow(2)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn pleth_log_inverts_pleth_exp(f in small_series(4)) {
        let e = f.pleth_exp().unwrap();
        prop_assert_eq!(e.pleth_log().unwrap(), f);
    }

    #[test]
    fn pleth_exp_turns_sums_into_products(f in small_series(4), g in small_series(4)) {
        let lhs = f.add(&g).pleth_exp().unwrap();
        let rhs = f.pleth_exp().unwrap().mul(&g.pleth_exp().unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn series_inverse_inverts(f in small_series(4)) {
        let unit = f.add(&MSeries::one(1, 4));
        let inv = unit.invert().unwrap();
        prop_assert_eq!(unit.mul(&inv), MSeries::one(1, 4));
    }
}

fn symmetric_quiver() -> impl Strategy<Value = Quiver> {
    (prop::collection::vec(0u32..=3, 3), prop::collection::vec(0u32..=3, 3)).prop_map(
        |(diag, off)| {
            let arrows = vec![
                vec![diag[0], off[0], off[1]],
                vec![off[0], diag[1], off[2]],
                vec![off[1], off[2], diag[2]],
            ];
            Quiver::new(arrows).unwrap()
        },
    )
}

fn dim3() -> impl Strategy<Value = DimVector> {
    prop::collection::vec(0u32..=3, 3).prop_map(DimVector)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn euler_form_is_symmetric_and_bilinear(q in symmetric_quiver(), d in dim3(), e in dim3(), f in dim3()) {
        prop_assert_eq!(q.euler_form(&d, &e), q.euler_form(&e, &d));
        let sum = DimVector(d.0.iter().zip(&e.0).map(|(a, b)| a + b).collect());
        prop_assert_eq!(q.euler_form(&sum, &f), q.euler_form(&d, &f) + q.euler_form(&e, &f));
    }
}

fn staircase_partition(m: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0u32..=4, 0..4).prop_map(move |deltas| {
        let mut parts = Vec::new();
        let mut prev = 0;
        for (i, delta) in deltas.into_iter().enumerate() {
            let cap = (m - 1) * i as u32;
            let next = (prev + delta).min(cap);
            parts.push(next);
            prev = next;
        }
        Partition::new(parts)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn star_is_associative_and_stays_in_staircase(m in 1u32..=4, a in staircase_partition(4), b in staircase_partition(4), c in staircase_partition(4)) {
        let clamp = |p: &Partition| {
            let parts = p
                .0
                .iter()
                .enumerate()
                .map(|(i, &x)| x.min((m - 1) * i as u32))
                .collect();
            Partition::new(parts)
        };
        let (a, b, c) = (clamp(&a), clamp(&b), clamp(&c));
        prop_assert!(a.in_staircase(m) && b.in_staircase(m) && c.in_staircase(m));
        let ab = partitions::star(&a, &b, m);
        prop_assert!(ab.in_staircase(m));
        prop_assert_eq!(ab.0.len(), a.0.len() + b.0.len());
        let lhs = partitions::star(&ab, &c, m);
        let rhs = partitions::star(&a, &partitions::star(&b, &c, m), m);
        prop_assert_eq!(lhs.0, rhs.0);
    }

    #[test]
    fn letter_comparison_is_transitive(
        a in prop::collection::vec(0u32..3, 1..4),
        b in prop::collection::vec(0u32..3, 1..4),
        c in prop::collection::vec(0u32..3, 1..4),
    ) {
        for rule in [PrefixRule::ShorterLarger, PrefixRule::ShorterSmaller] {
            let (ab, bc, ac) = (
                partitions::compare_letters(&a, &b, rule),
                partitions::compare_letters(&b, &c, rule),
                partitions::compare_letters(&a, &c, rule),
            );
            if ab != Ordering::Greater && bc != Ordering::Greater {
                prop_assert_ne!(ac, Ordering::Greater);
            }
            prop_assert_eq!(
                partitions::compare_letters(&b, &a, rule),
                ab.reverse()
            );
        }
    }

    #[test]
    fn super_lyndon_survives_level_shift(levels in prop::collection::vec(0u32..5, 1..5)) {
        let word = |shift: u32| -> Vec<Letter> {
            levels.iter().map(|&p| Letter { vertex: 0, level: p + shift }).collect()
        };
        for odd in [false, true] {
            prop_assert_eq!(
                is_super_lyndon(&word(0), |_| odd),
                is_super_lyndon(&word(1), |_| odd)
            );
        }
    }
}
