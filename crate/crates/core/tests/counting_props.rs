use num_bigint::BigUint;
use num_traits::ToPrimitive;
use proptest::prelude::*;

use tilings::counting::{
    aztec_count, aztec_sample, catalan_partial_sum, count_domino_tilings, dof_per_square, kasteleyn_count,
    sample_tiling,
};
use tilings::lattice::{build_aztec, build_rectangle, validate_tiling};
use tilings::Cell;

#[test]
fn kasteleyn_agrees_with_profile_count() {
    for m in 1..=4u64 {
        for n in 1..=4u64 {
            let dp = count_domino_tilings(&build_rectangle(2 * m as usize, 2 * n as usize).unwrap()).unwrap();
            assert_eq!(kasteleyn_count(m, n).unwrap(), dp, "m={m} n={n}");
        }
    }
}

#[test]
fn aztec_profile_count_is_closed_form() {
    for n in 1..=6usize {
        let dp = count_domino_tilings(&build_aztec(n).unwrap()).unwrap();
        assert_eq!(dp, aztec_count(n as u64));
        assert_eq!(dp, BigUint::from(2u32).pow((n * (n + 1) / 2) as u32));
    }
}

/// Fibonacci oracle for `2 x n` strips.
fn fib(n: usize) -> u64 {
    let (mut a, mut b) = (1u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

proptest! {
    #[test]
    fn strips_follow_fibonacci(n in 1usize..60) {
        let count = count_domino_tilings(&build_rectangle(2, n).unwrap()).unwrap();
        prop_assert_eq!(count, BigUint::from(fib(n)));
    }

    #[test]
    fn counts_are_translation_invariant(rows in 1usize..7, cols in 1usize..7, dr in -20i32..20, dc in -20i32..20) {
        let region = build_rectangle(rows, cols).unwrap();
        let moved = region.translate(dr, dc).unwrap();
        prop_assert_eq!(count_domino_tilings(&region).unwrap(), count_domino_tilings(&moved).unwrap());
    }

    #[test]
    fn profile_sampler_is_seeded_and_valid(
        rows in 1usize..7,
        cols in 1usize..7,
        hole in (0i32..7, 0i32..7),
        seed in any::<u64>(),
    ) {
        let mut region = build_rectangle(rows, cols).unwrap();
        if (rows * cols) % 2 == 1 {
            region = region.remove_cells(&[Cell::new(2 * (hole.0 % rows as i32 / 2), 2 * (hole.1 % cols as i32 / 2))]).unwrap();
        }
        let a = sample_tiling(&region, seed).unwrap();
        prop_assert_eq!(&a, &sample_tiling(&region, seed).unwrap());
        prop_assert!(validate_tiling(&region, a.placements()).is_ok());
    }

    #[test]
    fn shuffling_sampler_is_seeded_and_valid(n in 1usize..15, seed in any::<u64>()) {
        let region = build_aztec(n).unwrap();
        let a = aztec_sample(n, seed).unwrap();
        prop_assert_eq!(&a, &aztec_sample(n, seed).unwrap());
        prop_assert!(validate_tiling(&region, a.placements()).is_ok());
    }

    #[test]
    fn dof_matches_floating_point(rows in 1usize..9, cols in 1usize..9) {
        let count = count_domino_tilings(&build_rectangle(rows, cols).unwrap()).unwrap();
        prop_assume!(count > BigUint::from(0u32));
        let cells = (rows * cols) as f64;
        let oracle = (count.to_f64().unwrap().ln() / cells).exp();
        let dof = dof_per_square((rows * cols) as u64, &count).unwrap();
        prop_assert!(dof.within(oracle, 1e-12), "{} vs {oracle}", dof.to_decimal(15));
    }

    #[test]
    fn catalan_partial_sums_alternate_around_the_limit(k in 1u64..200) {
        let g = 0.915_965_594_177_219_f64;
        let s = catalan_partial_sum(k).to_f64().unwrap();
        let t = catalan_partial_sum(k + 1).to_f64().unwrap();
        prop_assert!((s - g) * (t - g) < 0.0);
        prop_assert!((t - g).abs() < (s - g).abs());
    }
}
