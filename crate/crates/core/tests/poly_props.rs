use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use secmat::poly::{
    determinant, multivariate_gcd, parse_polynomial, Polynomial, PowerProduct, Ring, TermOrder,
};

fn ring() -> Arc<Ring> {
    Ring::new(&["x", "y", "z"]).unwrap()
}

/// Up to five terms of degree <= `max_deg` in three variables.
fn poly(max_deg: u32) -> impl Strategy<Value = Polynomial> {
    let term = (
        (0..=max_deg, 0..=max_deg, 0..=max_deg),
        -20i64..=20,
        1i64..=6,
    );
    prop::collection::vec(term, 0..5).prop_map(move |terms| {
        let r = ring();
        let mut f = Polynomial::zero(&r);
        for ((a, b, c), num, den) in terms {
            if a + b + c > max_deg || num == 0 {
                continue;
            }
            let coeff = BigRational::new(BigInt::from(num), BigInt::from(den));
            f = &f + &Polynomial::monomial(&r, PowerProduct::new(vec![a, b, c]), coeff);
        }
        f
    })
}

fn invertible_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 3)
        .prop_filter("singular", |m| determinant(m) != BigInt::from(0))
}

fn power_product() -> impl Strategy<Value = PowerProduct> {
    prop::collection::vec(0u32..4, 3).prop_map(PowerProduct::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(f in poly(4), g in poly(4), h in poly(4)) {
        let r = ring();
        let zero = Polynomial::zero(&r);
        let one = Polynomial::one(&r);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f + &zero, f.clone());
        prop_assert_eq!(&f * &one, f.clone());
        prop_assert!((&f + &(-&f)).is_zero());
        prop_assert_eq!(&f - &g, &f + &(-&g));
    }

    #[test]
    fn display_parses_back(f in poly(4)) {
        let r = ring();
        prop_assert_eq!(parse_polynomial(&f.to_string(), &r).unwrap(), f);
    }

    #[test]
    fn orders_are_multiplicative(a in power_product(), b in power_product(), c in power_product()) {
        for order in [TermOrder::DegRevLex, TermOrder::Lex, TermOrder::DegLex] {
            prop_assert_eq!(order.compare(&a, &b), order.compare(&a.mul(&c), &b.mul(&c)));
            prop_assert_eq!(order.compare(&a, &b), order.compare(&b, &a).reverse());
            if !c.is_one() {
                prop_assert_eq!(order.compare(&a.mul(&c), &a), std::cmp::Ordering::Greater);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn linear_change_is_a_homomorphism(f in poly(3), g in poly(3), m in invertible_matrix()) {
        let h = |p: &Polynomial| p.apply_linear_change(&m).unwrap();
        prop_assert_eq!(h(&(&f * &g)), &h(&f) * &h(&g));
        prop_assert_eq!(h(&(&f + &g)), &h(&f) + &h(&g));
        if f.is_homogeneous() {
            prop_assert_eq!(h(&f).degree(), f.degree());
        }
    }

    #[test]
    fn gcd_of_multiples(f in poly(2), g in poly(2), h in poly(2)) {
        prop_assume!(!h.is_zero() && !(f.is_zero() && g.is_zero()));
        let a = &f * &h;
        let b = &g * &h;
        let d = multivariate_gcd(&a, &b);
        prop_assert!(a.exact_div(&d).is_some());
        prop_assert!(b.exact_div(&d).is_some());
        prop_assert!(d.exact_div(&h).is_some(), "{} is not divisible by {}", d, h);
        // the cofactors are coprime
        let (ca, cb) = (a.exact_div(&d).unwrap(), b.exact_div(&d).unwrap());
        prop_assert!(multivariate_gcd(&ca, &cb).is_constant());
    }
}
