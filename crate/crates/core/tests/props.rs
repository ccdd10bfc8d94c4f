//! Property suite: structural invariants of the equation model and the
//! oracle agreement between the two counting kernels.

use num_bigint::BigUint;
use proptest::prelude::*;

use diagcount::{
    best_lower_bound, count_brute, count_mitm, grouping_heuristic, parse_equation,
    symmetric_pair_count, two_term_count, Cube, DiagonalEquation, EngineConfig,
};

fn cfg() -> EngineConfig {
    EngineConfig::default()
}

/// Nonzero coefficient in [-bound, bound].
fn coeff(bound: i64) -> impl Strategy<Value = i64> {
    (1..=bound, prop::bool::ANY).prop_map(|(m, neg)| if neg { -m } else { m })
}

fn equation(max_s: usize, max_coeff: i64, max_k: u32) -> impl Strategy<Value = DiagonalEquation> {
    (
        prop::collection::vec(coeff(max_coeff), 2..=max_s),
        1..=max_k,
    )
        .prop_map(|(coeffs, k)| DiagonalEquation::new(coeffs, k).unwrap())
}

fn brute(eq: &DiagonalEquation, n: u64) -> u128 {
    count_brute(eq, Cube::new(n).unwrap(), &cfg()).unwrap().count
}

fn mitm(eq: &DiagonalEquation, n: u64) -> u128 {
    count_mitm(eq, Cube::new(n).unwrap(), &cfg()).unwrap().count
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn normalize_is_idempotent(eq in equation(8, 24, 6)) {
        let once = eq.normalize();
        prop_assert_eq!(once.normalize(), once);
    }

    #[test]
    fn normalize_preserves_counts(eq in equation(4, 6, 3), n in 1u64..=10) {
        prop_assert_eq!(brute(&eq, n), brute(&eq.normalize(), n));
    }

    #[test]
    fn pretty_then_parse_is_identity(eq in equation(7, 30, 9)) {
        let back = parse_equation(&eq.pretty()).unwrap();
        prop_assert_eq!(back, eq);
    }

    #[test]
    fn mitm_agrees_with_brute(eq in equation(4, 3, 4), n in 1u64..=12) {
        prop_assert_eq!(mitm(&eq, n), brute(&eq, n));
    }

    #[test]
    fn count_is_permutation_invariant(
        (eq, shuffled) in equation(4, 4, 3).prop_flat_map(|eq| {
            let k = eq.degree();
            let coeffs = eq.coeffs().to_vec();
            (Just(eq), Just(coeffs).prop_shuffle().prop_map(move |c| {
                DiagonalEquation::new(c, k).unwrap()
            }))
        }),
        n in 1u64..=8,
    ) {
        prop_assert_eq!(brute(&eq, n), brute(&shuffled, n));
    }

    #[test]
    fn count_is_sign_and_scale_invariant(eq in equation(4, 4, 3), n in 1u64..=8, m in 1i64..=3) {
        let negated = DiagonalEquation::new(
            eq.coeffs().iter().map(|&c| -c).collect(), eq.degree()).unwrap();
        let scaled = DiagonalEquation::new(
            eq.coeffs().iter().map(|&c| m * c).collect(), eq.degree()).unwrap();
        let base = brute(&eq, n);
        prop_assert_eq!(brute(&negated, n), base);
        prop_assert_eq!(brute(&scaled, n), base);
    }

    #[test]
    fn count_is_monotone_in_side(eq in equation(4, 4, 3), n in 1u64..=8) {
        prop_assert!(brute(&eq, n) <= brute(&eq, n + 1));
    }

    #[test]
    fn two_term_matches_two_variable_oracle(
        a1 in 1u64..=32, a2 in 1u64..=32, k in 1u32..=4, n in 1u64..=50,
    ) {
        let eq = DiagonalEquation::new(vec![a1 as i64, -(a2 as i64)], k).unwrap();
        prop_assert_eq!(two_term_count(a1, a2, k, n).count as u128, brute(&eq, n));
    }

    #[test]
    fn grouping_trace_multiplies_to_value(eq in equation(5, 6, 3), n in 1u64..=20) {
        let out = grouping_heuristic(&eq, n, n, &cfg());
        prop_assert_eq!(out.bound.trace_product(), out.bound.value);
    }

    #[test]
    fn lower_bounds_are_sound(eq in equation(4, 5, 3), n in 1u64..=10) {
        let bound = best_lower_bound(&eq, n, n, &cfg());
        let exact = brute(&eq, n);
        prop_assert!(
            bound.value <= BigUint::from(exact),
            "bound {} exceeds exact {} for {} at N={}",
            bound.value, exact, eq.pretty(), n
        );
    }
}

#[test]
fn symmetric_quadratic_tightness_boundary() {
    // For the alternating quadratic on 4 variables the symmetric classes
    // are everything up to N = 6. The first collision among sums of two
    // squares with entries that small is 1^2 + 7^2 = 5^2 + 5^2 = 50, so the
    // formula goes strict at N = 7 (95 > 91); 1^2 + 8^2 = 4^2 + 7^2 = 65
    // adds more at N = 8 (132 > 120).
    let eq = DiagonalEquation::new(vec![1, -1, 1, -1], 2).unwrap();
    for n in 1..=6u64 {
        let exact = brute(&eq, n);
        assert_eq!(BigUint::from(exact), symmetric_pair_count(2, n), "N = {n}");
    }
    assert_eq!(brute(&eq, 7), 95);
    assert_eq!(symmetric_pair_count(2, 7), BigUint::from(91u32));
    assert_eq!(brute(&eq, 8), 132);
    assert_eq!(symmetric_pair_count(2, 8), BigUint::from(120u32));
}

#[test]
fn symmetric_bound_holds_for_octic_form() {
    let eq = DiagonalEquation::new(vec![1, -1, 1, -1, 1, -1, 1, -1], 3).unwrap();
    for n in [1u64, 2, 3, 5] {
        let exact = mitm(&eq, n);
        assert!(symmetric_pair_count(3, n) <= BigUint::from(exact), "N = {n}");
    }
}
