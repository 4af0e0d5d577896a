use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

use tilings::squared::{
    is_squared_square, reconstruct, solve_layout, to_smith_network, total_resistance, validate_kirchhoff, SquareSpec,
    SquaredLayout,
};
use tilings::TilingError;

/// Squares `(x, y, side)` dissecting a `w x h` rectangle by guillotine cuts;
/// `choices` decide each cut.
fn dissect(x: u64, y: u64, w: u64, h: u64, choices: &mut impl Iterator<Item = u64>, out: &mut Vec<(u64, u64, u64)>) {
    if w == h {
        out.push((x, y, w));
        return;
    }
    let pick = choices.next().unwrap_or(0);
    let s = w.min(h);
    if pick.is_multiple_of(3) {
        // cut off the largest square
        out.push((x, y, s));
        if w > h {
            dissect(x + s, y, w - s, h, choices, out);
        } else {
            dissect(x, y + s, w, h - s, choices, out);
        }
    } else if w > h {
        let cut = 1 + pick % (w - 1);
        dissect(x, y, cut, h, choices, out);
        dissect(x + cut, y, w - cut, h, choices, out);
    } else {
        let cut = 1 + pick % (h - 1);
        dissect(x, y, w, cut, choices, out);
        dissect(x, y + cut, w, h - cut, choices, out);
    }
}

fn layout_of(squares: &[(u64, u64, u64)]) -> SquaredLayout {
    let ys: BTreeSet<u64> = squares.iter().flat_map(|&(_, y, s)| [y, y + s]).collect();
    let xs: BTreeSet<u64> = squares.iter().flat_map(|&(x, _, s)| [x, x + s]).collect();
    SquaredLayout {
        hlines: ys.iter().map(|y| format!("y{y}")).collect(),
        vlines: xs.iter().map(|x| format!("x{x}")).collect(),
        squares: squares
            .iter()
            .enumerate()
            .map(|(i, &(x, y, s))| SquareSpec {
                label: format!("s{i}"),
                top: format!("y{y}"),
                bottom: format!("y{}", y + s),
                left: format!("x{x}"),
                right: format!("x{}", x + s),
            })
            .collect(),
    }
}

fn squared_rectangle() -> impl Strategy<Value = (u64, u64, Vec<(u64, u64, u64)>)> {
    (1u64..14, 1u64..14, prop::collection::vec(any::<u64>(), 0..40)).prop_map(|(w, h, choices)| {
        let mut out = Vec::new();
        dissect(0, 0, w, h, &mut choices.into_iter(), &mut out);
        (w, h, out)
    })
}

proptest! {
    #[test]
    fn solved_layouts_obey_the_network_laws((w, h, squares) in squared_rectangle()) {
        let layout = layout_of(&squares);
        let sol = match solve_layout(&layout) {
            Ok(sol) => sol,
            Err(TilingError::Degenerate(d)) => {
                prop_assert!(d > 1);
                return Ok(());
            }
            Err(other) => return Err(TestCaseError::fail(format!("{other:?}"))),
        };
        // the one-dimensional solution space contains the true sides
        let (s0, t0) = (sol.sides[0] as u128, squares[0].2 as u128);
        for (&s, &(_, _, t)) in sol.sides.iter().zip(&squares) {
            prop_assert_eq!(s as u128 * t0, t as u128 * s0);
        }
        prop_assert_eq!(sol.width as u128 * h as u128, sol.height as u128 * w as u128);
        prop_assert!(reconstruct(&layout, &sol).is_ok());
        let net = to_smith_network(&layout).unwrap();
        prop_assert_eq!(net.edges.len(), squares.len());
        prop_assert!(validate_kirchhoff(&net, &sol.sides));
        let r = total_resistance(&net).unwrap();
        prop_assert_eq!(&r, &BigRational::new((sol.height as i64).into(), (sol.width as i64).into()));
        prop_assert_eq!(is_squared_square(&sol), r.is_one());
    }

    #[test]
    fn perturbed_sides_break_kirchhoff((_w, _h, squares) in squared_rectangle(), pick in any::<usize>()) {
        prop_assume!(squares.len() > 1);
        let layout = layout_of(&squares);
        let net = to_smith_network(&layout).unwrap();
        let mut sides: Vec<u64> = squares.iter().map(|s| s.2).collect();
        prop_assert!(validate_kirchhoff(&net, &sides));
        sides[pick % squares.len()] += 1;
        prop_assert!(!validate_kirchhoff(&net, &sides));
    }
}
