use nalgebra::{DMatrix, Schur};
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;

use tilings::exact_cover::{find_tiling, SolveOptions};
use tilings::lattice::build_rectangle;
use tilings::rect::{
    cube_root_family, debruijn_klarner, find_similar_guillotine_tiling, row_stack_layout, row_stack_roots,
    similar_rect_square_tileable, verify_row_stack_layout, IntPolynomial,
};
use tilings::TileShape;

/// Roots of `p` as eigenvalues of its companion matrix, or `None` if the
/// Schur iteration does not converge.
fn companion_roots(p: &IntPolynomial) -> Option<Vec<(f64, f64)>> {
    let c: Vec<f64> = p.coeffs().iter().map(|x| x.to_f64().unwrap()).collect();
    let d = c.len() - 1;
    let lead = c[d];
    let m = DMatrix::from_fn(d, d, |i, j| {
        if j == d - 1 {
            -c[i] / lead
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    let schur = Schur::try_new(m, 1e-14, 10_000)?;
    Some(schur.complex_eigenvalues().iter().map(|z| (z.re, z.im)).collect())
}

fn polynomial() -> impl Strategy<Value = IntPolynomial> {
    (1usize..=6)
        .prop_flat_map(|d| (prop::collection::vec(-9i64..=9, d), prop::sample::select(vec![-9i64, -3, -1, 1, 2, 5, 9])))
        .prop_map(|(mut c, lead)| {
            c.push(lead);
            IntPolynomial::new(c).unwrap()
        })
}

proptest! {
    #[test]
    fn brick_rule_matches_brute_force(m in 1usize..=8, n in 1usize..=8, pair in 0usize..4) {
        let (a, b) = [(1usize, 2usize), (1, 3), (2, 3), (1, 6)][pair];
        let brick = TileShape::rectangle(a, b).unwrap();
        let brute = find_tiling(&build_rectangle(m, n).unwrap(), &[brick], &SolveOptions::unlimited())
            .unwrap()
            .is_some();
        let rule = debruijn_klarner(m as u64, n as u64, a as u64, b as u64).unwrap();
        prop_assert_eq!(rule.verdict, brute);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn routh_matches_companion_eigenvalues(p in polynomial()) {
        let v = similar_rect_square_tileable(&p).unwrap();
        for r in &v.stripped_roots {
            prop_assert!(p.eval_rational(r).is_zero());
        }
        let roots = companion_roots(&v.reduced);
        prop_assume!(roots.is_some());
        let roots = roots.unwrap();
        prop_assume!(roots.iter().all(|(re, _)| re.abs() > 1e-6));
        let oracle = roots.iter().all(|(re, _)| *re > 0.0);
        prop_assert_eq!(v.tileable, oracle, "{} reduced to {}: {:?}", p, v.reduced, roots);
    }
}

proptest! {
    #[test]
    fn cube_family_matches_integer_inequality(r in -60i64..=60, s in 1i64..=60) {
        let oracle = 4 * (r as i128).pow(3) > (s as i128).pow(3);
        let f = cube_root_family(r, s).unwrap();
        prop_assert_eq!(f.tileable, oracle);
        prop_assert_eq!(f.inequality, oracle);
    }

    #[test]
    fn row_stacks_verify_for_real_roots(k in 1u64..200) {
        match row_stack_roots(k, 128).unwrap() {
            Some((a, b)) => {
                prop_assert!(k >= 4);
                for x in [a.to_f64(), b.to_f64()] {
                    if x > 0.0 && x < 1.0 && (k as f64 * x * (1.0 - x) - 1.0).abs() <= 1e-12 {
                        prop_assert!(verify_row_stack_layout(x, k));
                        prop_assert!(row_stack_layout(x, k).verify(1e-9));
                    }
                }
            }
            None => prop_assert!(k < 4),
        }
    }

    #[test]
    fn guillotine_layouts_reverify(num in 1u32..40, den in 1u32..40) {
        let x = num as f64 / den as f64;
        if let Some(layout) = find_similar_guillotine_tiling(x, 4).unwrap() {
            prop_assert!(layout.verify(1e-9));
            prop_assert!(layout.pieces.len() <= 4);
        }
    }
}
