mod common;

use hypercone::realroot::{
    count_real_roots, is_real_rooted, no_positive_root, nonneg_coeff_shortcut, Interval, Shortcut, UniPoly,
};
use hypercone::scalar::{ratio, Rational};
use proptest::prelude::*;

#[test]
fn brute_force_oracle_sanity() {
    // (t - 1)(t + 2)(t^2 + 1): roots 1, -2 and a complex pair
    assert_eq!(common::brute_force_counts(&[-2, 1, -1, 1, 1]), (2, 1));
    // t^2 (t + 1)^2
    assert_eq!(common::brute_force_counts(&[0, 0, 1, 2, 1]), (2, 0));
}

#[test]
fn sturm_agrees_with_brute_force() {
    common::sturm_vs_brute_force(1000, 1).unwrap();
}

fn roots_strategy() -> impl Strategy<Value = Vec<(Rational, u32)>> {
    prop::collection::vec(((-30i64..=30, 1i64..=7).prop_map(|(a, b)| ratio(a, b)), 1u32..=3), 1..5)
}

fn product(roots: &[(Rational, u32)]) -> UniPoly {
    roots.iter().fold(UniPoly::one(), |acc, (r, k)| {
        acc.mul(&UniPoly::from_roots(std::slice::from_ref(r)).pow(*k))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn products_of_linear_factors_are_real_rooted(roots in roots_strategy()) {
        let u = product(&roots);
        prop_assert!(is_real_rooted(&u).unwrap());
        let mut distinct: Vec<Rational> = roots.iter().map(|r| r.0.clone()).collect();
        distinct.sort();
        distinct.dedup();
        prop_assert_eq!(count_real_roots(&u, &Interval::real_line()).unwrap(), distinct.len());
    }

    #[test]
    fn shortcut_is_exact_for_real_rooted(roots in roots_strategy()) {
        let u = product(&roots);
        let shortcut = nonneg_coeff_shortcut(&u).unwrap() == Shortcut::True;
        prop_assert_eq!(shortcut, no_positive_root(&u).unwrap());
    }

    #[test]
    fn an_irreducible_quadratic_breaks_real_rootedness(roots in roots_strategy(), c in 1i64..20) {
        let u = product(&roots).mul(&UniPoly::from_ints(&[c, 0, 1]));
        prop_assert!(!is_real_rooted(&u).unwrap());
    }
}
