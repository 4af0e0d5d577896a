use proptest::prelude::*;

use tilings::lattice::{parse_region, render_region};
use tilings::{Cell, Lattice, Region, SymmetryMode, TileShape};

fn square_region() -> impl Strategy<Value = Region> {
    prop::collection::btree_set((0i32..7, 0i32..7), 1..30)
        .prop_map(|cells| Region::new(Lattice::Square, cells.into_iter().map(|(r, c)| Cell::new(r, c))).unwrap())
}

fn hex_region() -> impl Strategy<Value = Region> {
    prop::collection::btree_set((0i32..7, 0i32..7), 1..20).prop_map(|cells| {
        let cells = cells.into_iter().filter(|(r, c)| c <= r).map(|(r, c)| Cell::new(r, c));
        Region::new(Lattice::HexTriangular, cells).unwrap()
    })
}

/// A random connected polyomino grown cell by cell.
fn polyomino() -> impl Strategy<Value = Vec<Cell>> {
    prop::collection::vec((0usize..64, 0usize..4), 0..9).prop_map(|steps| {
        let mut cells = vec![Cell::new(0, 0)];
        for (pick, dir) in steps {
            let base = cells[pick % cells.len()];
            let (dr, dc) = [(0, 1), (1, 0), (0, -1), (-1, 0)][dir];
            let next = base.offset(dr, dc);
            if !cells.contains(&next) {
                cells.push(next);
            }
        }
        cells
    })
}

fn rotate(c: Cell) -> Cell {
    Cell::new(c.col, -c.row)
}

fn reflect(c: Cell) -> Cell {
    Cell::new(c.row, -c.col)
}

proptest! {
    #[test]
    fn square_text_round_trip(region in square_region()) {
        let text = render_region(&region);
        prop_assert_eq!(parse_region(&text, Lattice::Square).unwrap(), region);
    }

    #[test]
    fn hex_text_round_trip(region in hex_region()) {
        prop_assume!(!region.is_empty());
        let text = render_region(&region);
        prop_assert_eq!(parse_region(&text, Lattice::HexTriangular).unwrap(), region);
    }

    #[test]
    fn canonical_form_ignores_allowed_symmetries(
        cells in polyomino(),
        turns in 0usize..4,
        flip in any::<bool>(),
        dr in -5i32..5,
        dc in -5i32..5,
    ) {
        let mut image: Vec<Cell> = cells.iter().map(|c| c.offset(dr, dc)).collect();
        for _ in 0..turns {
            image = image.into_iter().map(rotate).collect();
        }
        let rotated = image.clone();
        if flip {
            image = image.into_iter().map(reflect).collect();
        }
        let free = |cs: &[Cell]| TileShape::new("p", Lattice::Square, SymmetryMode::Free, cs.iter().copied()).unwrap();
        let rot = |cs: &[Cell]| {
            TileShape::new("p", Lattice::Square, SymmetryMode::RotationsOnly, cs.iter().copied()).unwrap()
        };
        let fixed = |cs: &[Cell]| TileShape::new("p", Lattice::Square, SymmetryMode::Fixed, cs.iter().copied()).unwrap();
        prop_assert_eq!(free(&cells), free(&image));
        prop_assert_eq!(rot(&cells), rot(&rotated));
        let translated: Vec<Cell> = cells.iter().map(|c| c.offset(dr, dc)).collect();
        prop_assert_eq!(fixed(&cells), fixed(&translated));
    }

    #[test]
    fn placements_are_images_of_the_shape(cells in polyomino()) {
        let shape = TileShape::new("p", Lattice::Square, SymmetryMode::Free, cells).unwrap();
        let board = tilings::lattice::build_rectangle(6, 6).unwrap();
        let placements = tilings::exact_cover::enumerate_placements(
            &board,
            std::slice::from_ref(&shape),
            &tilings::exact_cover::SolveOptions::unlimited(),
        );
        for p in placements {
            prop_assert!(shape.matches(&p.cells));
            prop_assert!(p.cells.iter().all(|c| board.contains(*c)));
        }
    }
}
