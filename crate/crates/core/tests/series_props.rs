mod common;

use kmarked::series::{
    add, inverse, mul, neg, pochhammer, sub, PochhammerLength, SeriesError, TruncatedSeries,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn triple() -> impl Strategy<Value = (TruncatedSeries, TruncatedSeries, TruncatedSeries)> {
    common::shape().prop_flat_map(|(n, k)| {
        (
            common::series(n, k, 0),
            common::series(n, k, 0),
            common::series(n, k, 0),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn addition_is_a_group((a, b, c) in triple()) {
        let zero = TruncatedSeries::zero(a.order(), a.var_count());
        prop_assert_eq!(add(&a, &b)?, add(&b, &a)?);
        prop_assert_eq!(add(&add(&a, &b)?, &c)?, add(&a, &add(&b, &c)?)?);
        prop_assert_eq!(add(&a, &zero)?, a.clone());
        prop_assert_eq!(add(&a, &neg(&a))?, zero.clone());
        prop_assert_eq!(sub(&a, &a)?, zero);
    }

    #[test]
    fn multiplication_is_commutative_ring((a, b, c) in triple()) {
        let one = TruncatedSeries::one(a.order(), a.var_count());
        prop_assert_eq!(mul(&a, &b)?, mul(&b, &a)?);
        prop_assert_eq!(mul(&mul(&a, &b)?, &c)?, mul(&a, &mul(&b, &c)?)?);
        prop_assert_eq!(mul(&a, &one)?, a.clone());
        prop_assert_eq!(mul(&a, &add(&b, &c)?)?, add(&mul(&a, &b)?, &mul(&a, &c)?)?);
        prop_assert!(mul(&a, &b)?.is_well_formed());
    }

    #[test]
    fn inverse_is_two_sided(
        a in common::shape().prop_flat_map(|(n, k)| common::unit_series(n, k))
    ) {
        let one = TruncatedSeries::one(a.order(), a.var_count());
        let inv = inverse(&a)?;
        prop_assert_eq!(mul(&a, &inv)?, one.clone());
        prop_assert_eq!(mul(&inv, &a)?, one);
        prop_assert_eq!(inverse(&inv)?, a);
    }

    #[test]
    fn non_units_have_no_inverse(
        a in common::shape().prop_flat_map(|(n, k)| common::series(n, k, 1))
    ) {
        let mut twice = a.clone();
        twice.add_assign(&TruncatedSeries::one(a.order(), a.var_count()).scale(&BigInt::from(2)))?;
        prop_assert_eq!(inverse(&a), Err(SeriesError::NonUnitConstant));
        prop_assert_eq!(inverse(&twice), Err(SeriesError::NonUnitConstant));
    }

    #[test]
    fn pochhammer_telescopes(
        (order, k, spec, n, m) in common::shape()
            .prop_flat_map(|(order, k)| (Just(order), Just(k), common::factor(k), 0usize..=5, 0usize..=5))
    ) {
        let whole = pochhammer(&spec, PochhammerLength::Finite(n + m), order, k)?;
        let head = pochhammer(&spec, PochhammerLength::Finite(n), order, k)?;
        let tail = pochhammer(&spec.shifted(n), PochhammerLength::Finite(m), order, k)?;
        prop_assert_eq!(mul(&head, &tail)?, whole);
    }

    #[test]
    fn pochhammer_division_undoes_multiplication(
        (s, spec, n) in common::shape().prop_flat_map(|(order, k)| {
            (common::series(order, k, 0), common::factor(k), 0usize..=5)
        })
    ) {
        let mut t = s.clone();
        t.mul_pochhammer(&spec, PochhammerLength::Finite(n))?;
        if spec.q_offset == 0 && n > 0 {
            prop_assert_eq!(
                t.div_pochhammer(&spec, PochhammerLength::Finite(n)),
                Err(SeriesError::NonUnitConstant)
            );
        } else {
            t.div_pochhammer(&spec, PochhammerLength::Finite(n))?;
            prop_assert_eq!(t, s);
        }
    }

    #[test]
    fn truncation_commutes_with_products((a, b, _c) in triple()) {
        let lower = a.order() / 2;
        prop_assert_eq!(
            mul(&a, &b)?.truncate(lower),
            mul(&a.truncate(lower), &b.truncate(lower))?
        );
    }
}
