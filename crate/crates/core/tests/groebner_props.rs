mod common;

use proptest::prelude::*;

use secmat::groebner::{
    buchberger, ideal_equal, is_member, leading_term_ideal, s_polynomials_reduce_to_zero,
    truncation_ideal, IdealPresentation,
};
use secmat::monomial::MonomialIdeal;
use secmat::poly::TermOrder;

const ORDERS: [TermOrder; 3] = [TermOrder::DegRevLex, TermOrder::Lex, TermOrder::DegLex];

fn hf(j: &MonomialIdeal, up_to: u32) -> Vec<u64> {
    (0..=up_to).map(|d| j.hilbert_function_value(d)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bases_are_reduced_groebner_bases(seed in any::<u64>()) {
        let ideal = common::random_ideal(seed, 3, 3, 3);
        for order in ORDERS {
            let gb = buchberger(&ideal, order, None).unwrap();
            prop_assert!(s_polynomials_reduce_to_zero(gb.elements(), order));
            for g in ideal.generators() {
                prop_assert!(gb.contains(g));
            }
            let lts = gb.leading_monomials();
            for (k, g) in gb.elements().iter().enumerate() {
                for (t, _) in g.terms() {
                    for (j, l) in lts.iter().enumerate() {
                        prop_assert!(j == k || !l.divides(t), "{} is not reduced", g);
                    }
                }
            }
        }
    }

    #[test]
    fn hilbert_function_does_not_depend_on_the_order(seed in any::<u64>()) {
        let ideal = common::random_ideal(seed, 3, 3, 3);
        let values: Vec<Vec<u64>> = ORDERS
            .iter()
            .map(|&o| hf(&leading_term_ideal(&buchberger(&ideal, o, None).unwrap()).unwrap(), 12))
            .collect();
        prop_assert_eq!(&values[0], &values[1]);
        prop_assert_eq!(&values[0], &values[2]);
    }

    #[test]
    fn capped_basis_spans_low_degrees(seed in any::<u64>(), cap in 1u32..6) {
        let ideal = common::random_ideal(seed, 4, 3, 4);
        let full = buchberger(&ideal, TermOrder::DegRevLex, None).unwrap();
        let capped = buchberger(&ideal, TermOrder::DegRevLex, Some(cap)).unwrap();
        prop_assert_eq!(capped.degree_cap(), Some(cap));
        prop_assert!(leading_term_ideal(&capped).is_err());
        let low: Vec<_> = capped
            .elements()
            .iter()
            .filter(|g| g.degree().unwrap() <= cap)
            .inspect(|g| assert!(full.contains(g)))
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect();
        let lt_low = MonomialIdeal::new(ideal.ring(), low);
        let lt_full = leading_term_ideal(&full).unwrap();
        prop_assert_eq!(hf(&lt_low, cap), hf(&lt_full, cap));
    }

    #[test]
    fn truncation_keeps_low_degrees(seed in any::<u64>(), delta in 1u32..5) {
        let ideal = common::random_ideal(seed, 4, 3, 4);
        let t = truncation_ideal(&ideal, delta).unwrap();
        for g in t.generators() {
            prop_assert!(g.degree().unwrap() <= delta);
            prop_assert!(is_member(g, &ideal));
        }
        let lt = |i: &IdealPresentation| {
            leading_term_ideal(&buchberger(i, TermOrder::DegRevLex, None).unwrap()).unwrap()
        };
        prop_assert_eq!(hf(&lt(&t), delta), hf(&lt(&ideal), delta));
        // every generator of degree <= delta survives
        for g in ideal.generators().iter().filter(|g| g.degree().unwrap() <= delta) {
            prop_assert!(is_member(g, &t));
        }
    }

    #[test]
    fn presentation_does_not_matter(seed in any::<u64>()) {
        let ideal = common::random_ideal(seed, 3, 4, 3);
        let mut gens = ideal.generators().to_vec();
        gens.reverse();
        let sum = gens.iter().fold(gens[0].clone(), |acc, g| &acc + g);
        gens.push(sum);
        let other = IdealPresentation::new(ideal.ring(), gens).unwrap();
        prop_assert!(ideal_equal(&ideal, &other).unwrap());
    }
}

#[test]
fn running_example_basis() {
    let ideal = common::fixture("ex-first");
    let gb = buchberger(&ideal, TermOrder::DegRevLex, None).unwrap();
    let lt = leading_term_ideal(&gb).unwrap();
    assert_eq!(lt.to_string(), "(x*y^2, x^4, x^3*y*z^2, y^5*z^2)");
    assert_eq!(gb.minimal_generator_degrees(), &[3, 4]);
}

#[test]
fn inhomogeneous_input_is_rejected_when_capped() {
    let r = secmat::poly::Ring::new(&["x", "y"]).unwrap();
    let f = secmat::poly::parse_polynomial("x^2 + y", &r).unwrap();
    let ideal = IdealPresentation::new(&r, [f]).unwrap();
    assert!(buchberger(&ideal, TermOrder::DegRevLex, Some(3)).is_err());
    assert!(truncation_ideal(&ideal, 2).is_err());
    // uncapped bases work for any input
    assert!(buchberger(&ideal, TermOrder::Lex, None).is_ok());
}
