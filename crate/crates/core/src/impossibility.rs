//! Coloring obstructions and the tribone criterion for triangular arrays.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Result, TilingError};
use crate::exact_cover::{enumerate_placements, find_tiling, tribone, SolveOptions, TriboneKind};
use crate::lattice::{build_triangle, Coloring, Region, TileShape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ObstructionKind {
    /// Every placement covers two designated colors equally, the region does not.
    Balance,
    /// Every placement covers an even number of each color, the region has an odd total.
    Parity,
}

/// A machine-checkable coloring argument against tilability.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    /// The designated colors (both for balance, the odd ones for parity).
    pub colors: Vec<usize>,
    pub region_totals: Vec<usize>,
    pub shapes: Vec<String>,
    pub coloring_name: String,
    /// Every distinct per-placement color count vector.
    pub profiles: BTreeSet<Vec<usize>>,
}

impl Obstruction {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": self.kind,
            "colors": self.colors,
            "region_totals": self.region_totals,
            "shapes": self.shapes,
            "coloring_name": self.coloring_name,
        })
    }

    /// Recomputes the profiles and totals and checks the argument.
    pub fn verify(&self, region: &Region, shapes: &[TileShape], coloring: &Coloring) -> bool {
        let profiles = all_profiles(region, shapes, coloring);
        let totals = coloring.totals(region);
        if profiles != self.profiles || totals != self.region_totals {
            return false;
        }
        match self.kind {
            ObstructionKind::Balance => {
                let (a, b) = (self.colors[0], self.colors[1]);
                profiles.iter().all(|p| p[a] == p[b]) && totals[a] != totals[b]
            }
            ObstructionKind::Parity => {
                profiles.iter().all(|p| p.iter().all(|x| x % 2 == 0))
                    && !self.colors.is_empty()
                    && self.colors.iter().all(|&c| totals[c] % 2 == 1)
            }
        }
    }
}

/// Distinct color-count vectors over all placements of `shape` in `region`.
pub fn placement_color_profiles(region: &Region, shape: &TileShape, coloring: &Coloring) -> BTreeSet<Vec<usize>> {
    enumerate_placements(region, std::slice::from_ref(shape), &SolveOptions::unlimited())
        .iter()
        .map(|p| coloring.profile(&p.cells))
        .collect()
}

fn all_profiles(region: &Region, shapes: &[TileShape], coloring: &Coloring) -> BTreeSet<Vec<usize>> {
    shapes.iter().flat_map(|s| placement_color_profiles(region, s, coloring)).collect()
}

fn check_coloring(region: &Region, coloring: &Coloring) -> Result<()> {
    if !coloring.covers(region) {
        return Err(TilingError::InvalidArgument("coloring does not cover the region".into()));
    }
    Ok(())
}

pub fn balance_obstruction(
    region: &Region,
    shapes: &[TileShape],
    coloring: &Coloring,
    color_a: usize,
    color_b: usize,
) -> Result<Option<Obstruction>> {
    for c in [color_a, color_b] {
        if c >= coloring.num_colors() {
            return Err(TilingError::ColorOutOfRange(c));
        }
    }
    check_coloring(region, coloring)?;
    let profiles = all_profiles(region, shapes, coloring);
    let totals = coloring.totals(region);
    let balanced = profiles.iter().all(|p| p[color_a] == p[color_b]);
    if !balanced || totals[color_a] == totals[color_b] {
        return Ok(None);
    }
    Ok(Some(Obstruction {
        kind: ObstructionKind::Balance,
        colors: vec![color_a, color_b],
        region_totals: totals,
        shapes: shapes.iter().map(|s| s.name().to_string()).collect(),
        coloring_name: coloring.name().to_string(),
        profiles,
    }))
}

pub fn parity_obstruction(region: &Region, shapes: &[TileShape], coloring: &Coloring) -> Result<Option<Obstruction>> {
    check_coloring(region, coloring)?;
    let profiles = all_profiles(region, shapes, coloring);
    let totals = coloring.totals(region);
    let even = profiles.iter().all(|p| p.iter().all(|x| x % 2 == 0));
    let odd: Vec<usize> = (0..totals.len()).filter(|&c| totals[c] % 2 == 1).collect();
    if !even || odd.is_empty() {
        return Ok(None);
    }
    Ok(Some(Obstruction {
        kind: ObstructionKind::Parity,
        colors: odd,
        region_totals: totals,
        shapes: shapes.iter().map(|s| s.name().to_string()).collect(),
        coloring_name: coloring.name().to_string(),
        profiles,
    }))
}

/// Closed form: `T(n)` tiles by tribones iff `n mod 12` is 0, 2, 9 or 11.
pub fn tribone_tileable(n: u64) -> bool {
    matches!(n % 12, 0 | 2 | 9 | 11)
}

/// The tribone shape the library uses by default; [`select_tribone`]
/// re-derives it by brute force.
pub const DEFAULT_TRIBONE: TriboneKind = TriboneKind::Triangle;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriboneSurvey {
    pub kind: TriboneKind,
    /// Brute-force feasibility of `T(n)` for `n = 0..=max_n`.
    pub feasible: Vec<bool>,
    pub agrees: bool,
}

/// Brute-force feasibility of `T(0..=max_n)` for one tribone candidate.
pub fn survey_tribone(kind: TriboneKind, max_n: usize) -> TriboneSurvey {
    let shape = [tribone(kind)];
    let feasible: Vec<bool> = (0..=max_n)
        .map(|n| find_tiling(&build_triangle(n), &shape, &SolveOptions::unlimited()).expect("valid options").is_some())
        .collect();
    let agrees = feasible.iter().enumerate().all(|(n, &f)| f == tribone_tileable(n as u64));
    TriboneSurvey { kind, feasible, agrees }
}

/// Picks the first candidate whose brute-force feasibility on `n <= max_n`
/// matches the closed form.
pub fn select_tribone(max_n: usize) -> (Option<TriboneKind>, Vec<TriboneSurvey>) {
    let surveys: Vec<TriboneSurvey> =
        [TriboneKind::Triangle, TriboneKind::Straight].into_iter().map(|k| survey_tribone(k, max_n)).collect();
    let pick = surveys.iter().find(|s| s.agrees).map(|s| s.kind);
    (pick, surveys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_cover::count_tilings;
    use crate::lattice::{block4_coloring, build_rectangle, chessboard_coloring, Cell, SymmetryMode};
    use num_traits::Zero;

    fn bar() -> TileShape {
        TileShape::rectangle(1, 4).unwrap()
    }

    #[test]
    fn profiles() {
        let board = build_rectangle(8, 8).unwrap();
        let chess = chessboard_coloring(&board).unwrap();
        let p = placement_color_profiles(&board, &TileShape::domino(), &chess);
        assert_eq!(p, BTreeSet::from([vec![1, 1]]));
        let mono = TileShape::new("mono", crate::Lattice::Square, SymmetryMode::Free, [Cell::new(0, 0)]).unwrap();
        assert_eq!(placement_color_profiles(&board, &mono, &chess), BTreeSet::from([vec![1, 0], vec![0, 1]]));
        let ten = build_rectangle(10, 10).unwrap();
        let b4 = block4_coloring(&ten).unwrap();
        assert!(placement_color_profiles(&ten, &bar(), &b4).iter().all(|v| v.iter().all(|x| x % 2 == 0)));
    }

    #[test]
    fn mutilated_chessboard() {
        let board = build_rectangle(8, 8).unwrap();
        let cut = board.remove_cells(&[Cell::new(0, 0), Cell::new(7, 7)]).unwrap();
        let chess = chessboard_coloring(&cut).unwrap();
        let dom = [TileShape::domino()];
        let ob = balance_obstruction(&cut, &dom, &chess, 0, 1).unwrap().unwrap();
        assert_eq!(ob.region_totals, vec![30, 32]);
        assert!(ob.verify(&cut, &dom, &chess));
        let full = chessboard_coloring(&board).unwrap();
        assert!(balance_obstruction(&board, &dom, &full, 0, 1).unwrap().is_none());
        let small = build_rectangle(2, 3).unwrap();
        assert!(balance_obstruction(&small, &dom, &chessboard_coloring(&small).unwrap(), 0, 1).unwrap().is_none());
        assert_eq!(balance_obstruction(&board, &dom, &full, 0, 2), Err(TilingError::ColorOutOfRange(2)));
    }

    #[test]
    fn ten_by_ten_bars() {
        let ten = build_rectangle(10, 10).unwrap();
        let b4 = block4_coloring(&ten).unwrap();
        let ob = parity_obstruction(&ten, &[bar()], &b4).unwrap().unwrap();
        assert_eq!(ob.region_totals, vec![25; 4]);
        assert_eq!(ob.colors, vec![0, 1, 2, 3]);
        assert!(ob.verify(&ten, &[bar()], &b4));
        let eight = build_rectangle(8, 8).unwrap();
        assert!(parity_obstruction(&eight, &[bar()], &block4_coloring(&eight).unwrap()).unwrap().is_none());
    }

    #[test]
    fn four_by_four_bars_not_obstructed() {
        // brute-force color totals of the 4x4 under block4: 4 of each, all even
        let four = build_rectangle(4, 4).unwrap();
        let mut totals = [0usize; 4];
        for r in 0..4 {
            for c in 0..4 {
                totals[(2 * (r % 2) + c % 2) as usize] += 1;
            }
        }
        assert_eq!(totals, [4; 4]);
        let b4 = block4_coloring(&four).unwrap();
        assert!(parity_obstruction(&four, &[bar()], &b4).unwrap().is_none());
    }

    #[test]
    fn obstructions_are_sound_on_small_regions() {
        let dom = [TileShape::domino()];
        let board = build_rectangle(4, 5).unwrap();
        for a in board.cells() {
            for b in board.cells().filter(|b| *b > a) {
                let r = board.remove_cells(&[a, b]).unwrap();
                let col = chessboard_coloring(&r).unwrap();
                if balance_obstruction(&r, &dom, &col, 0, 1).unwrap().is_some() {
                    assert!(count_tilings(&r, &dom, &SolveOptions::unlimited()).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn closed_form() {
        assert!(tribone_tileable(9));
        assert!(!tribone_tileable(3));
        assert!(!tribone_tileable(5));
        assert!(tribone_tileable(14));
        let listed: Vec<u64> = (0..36).filter(|&n| tribone_tileable(n)).collect();
        assert_eq!(listed, vec![0, 2, 9, 11, 12, 14, 21, 23, 24, 26, 33, 35]);
    }
}
