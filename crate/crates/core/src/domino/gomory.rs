//! Tiling a board minus two opposite-colored cells along a closed path.

use std::sync::Arc;

use crate::error::{Result, TilingError};
use crate::lattice::{build_rectangle, chess_color, Cell, Placement, Tiling};

/// The fixed Hamiltonian cycle of an even board: along row 0, snake back and
/// forth over columns `1..` of the remaining rows, then up column 0.
pub fn gomory_cycle(rows: usize, cols: usize) -> Result<Vec<Cell>> {
    if rows == 0 || cols == 0 {
        return Err(TilingError::ZeroDimension);
    }
    if rows % 2 == 1 || cols % 2 == 1 {
        return Err(TilingError::OddDimensions);
    }
    let (rows, cols) = (rows as i32, cols as i32);
    let mut cycle: Vec<Cell> = (0..cols).map(|c| Cell::new(0, c)).collect();
    for r in 1..rows {
        if r % 2 == 1 {
            cycle.extend((1..cols).rev().map(|c| Cell::new(r, c)));
        } else {
            cycle.extend((1..cols).map(|c| Cell::new(r, c)));
        }
    }
    cycle.extend((1..rows).rev().map(|r| Cell::new(r, 0)));
    Ok(cycle)
}

/// Dominoes pairing consecutive cells of the cycle on each of the two arcs
/// between the holes.
pub fn gomory_tiling(rows: usize, cols: usize, hole1: Cell, hole2: Cell) -> Result<Tiling> {
    let cycle = gomory_cycle(rows, cols)?;
    let region = build_rectangle(rows, cols)?;
    for h in [hole1, hole2] {
        if !region.contains(h) {
            return Err(TilingError::CellNotInRegion(h));
        }
    }
    if hole1 == hole2 {
        return Err(TilingError::CoincidentHoles);
    }
    if chess_color(hole1) == chess_color(hole2) {
        return Err(TilingError::SameColorHoles);
    }
    let pos = |h: Cell| cycle.iter().position(|&c| c == h).expect("cycle covers the board");
    let (i, j) = (pos(hole1), pos(hole2));
    let len = cycle.len();
    let mut placements = Vec::with_capacity(len / 2 - 1);
    for (from, to) in [(i, j), (j, i)] {
        let mut k = (from + 1) % len;
        while k != to {
            let next = (k + 1) % len;
            placements.push(Placement::domino(cycle[k], cycle[next]));
            k = (next + 1) % len;
        }
    }
    let board = region.remove_cells(&[hole1, hole2])?;
    Tiling::new(Arc::new(board), placements)
}
