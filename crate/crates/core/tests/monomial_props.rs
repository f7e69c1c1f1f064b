mod common;

use proptest::prelude::*;

use secmat::monomial::{count_monomials_oracle, MonomialIdeal};
use secmat::poly::{monomials_of_degree, PowerProduct, Ring};

fn monomial_ideal(max_vars: usize, max_gens: usize, max_deg: u32) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_vars).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(0..=max_deg, n), 0..=max_gens).prop_map(move |gens| {
            let ring = Ring::with_arity(n);
            let gens = gens
                .into_iter()
                .filter(|e| e.iter().sum::<u32>() <= max_deg)
                .map(PowerProduct::new);
            MonomialIdeal::new(&ring, gens)
        })
    })
}

fn strongly_stable(max_vars: usize) -> impl Strategy<Value = MonomialIdeal> {
    monomial_ideal(max_vars, 3, 5).prop_map(|j| common::borel_closure(j.ring(), j.generators().to_vec()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn numerator_matches_counting(j in monomial_ideal(4, 5, 5)) {
        let num = j.hilbert_numerator();
        for d in 0..=12 {
            let brute = common::brute_force_hf(&j, d);
            prop_assert_eq!(j.hilbert_function_value(d), brute, "degree {}", d);
            prop_assert_eq!(count_monomials_oracle(&j, d).unwrap(), brute);
            prop_assert_eq!(num.series_coefficient(d), brute as i128);
        }
    }

    #[test]
    fn saturation_paths_agree(j in monomial_ideal(4, 4, 4)) {
        let sat = j.saturate();
        prop_assert_eq!(sat.colon_by_irrelevant(), sat.clone());
        for g in j.generators() {
            prop_assert!(sat.contains(g));
        }
        // J : m^k grows into the saturation
        let once = j.colon_by_irrelevant();
        for g in once.generators() {
            prop_assert!(sat.contains(g));
        }
    }

    #[test]
    fn strongly_stable_saturation_drops_the_last_variable(j in strongly_stable(4)) {
        prop_assert!(j.is_strongly_stable());
        prop_assert_eq!(j.saturate(), j.drop_last_variable());
        prop_assert_eq!(j.involves_last_variable(), j.saturate() != j);
    }

    #[test]
    fn restriction_is_the_quotient_by_the_last_variables(j in strongly_stable(4)) {
        let n = j.arity();
        for i in 1..=n {
            let r = j.restrict_to_first_vars(i).unwrap();
            prop_assert!(r.is_strongly_stable());
            for d in 0..=8 {
                // monomials of P/(J + (x_{i+1}, ..., x_n)) live in the first i variables
                let brute = monomials_of_degree(n, d)
                    .iter()
                    .filter(|t| t.supported_in_first(i) && !j.contains(t))
                    .count() as u64;
                prop_assert_eq!(r.hilbert_function_value(d), brute);
            }
        }
    }

    #[test]
    fn intersection_is_elementwise(j in monomial_ideal(3, 3, 4), k in monomial_ideal(3, 3, 4)) {
        prop_assume!(j.arity() == k.arity());
        let both = j.intersection(&k);
        for d in 0..=7 {
            for t in monomials_of_degree(j.arity(), d) {
                prop_assert_eq!(both.contains(&t), j.contains(&t) && k.contains(&t));
            }
        }
    }
}

#[test]
fn dimension_and_multiplicity() {
    let r = Ring::new(&["x", "y", "z"]).unwrap();
    // (x^2, xy): a line plus an embedded point, degree 1, dimension 2
    let j = MonomialIdeal::new(&r, [PowerProduct::new(vec![2, 0, 0]), PowerProduct::new(vec![1, 1, 0])]);
    let num = j.hilbert_numerator();
    assert_eq!((num.dimension(), num.multiplicity()), (2, 1));
    assert_eq!(num.reduced(), (vec![1, 1, -1], 2));
    let zero = MonomialIdeal::zero(&r).hilbert_numerator();
    assert_eq!((zero.dimension(), zero.multiplicity()), (3, 1));
}
