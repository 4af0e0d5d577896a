//! Broken-profile dynamic program over a bitmask frontier.
//!
//! Cells are scanned row by row over the shorter side of the bounding box
//! (the region is transposed when that makes the frontier narrower). Bit `c`
//! of the mask says that the next unscanned cell in column `c` is already
//! covered by a domino placed earlier.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::{BigUint, RandBigInt};
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Result, TilingError};
use crate::lattice::{Cell, Lattice, Placement, Region, Tiling};

/// Default maximum frontier width.
pub const DEFAULT_MAX_WIDTH: usize = 24;

/// A placed domino as `(cell, partner)` in grid coordinates.
type Move = Option<((usize, usize), (usize, usize))>;

struct Grid {
    h: usize,
    w: usize,
    inside: Vec<bool>,
    transposed: bool,
    min_row: i32,
    min_col: i32,
}

impl Grid {
    fn new(region: &Region, max_width: usize) -> Result<Option<Grid>> {
        if region.lattice() != Lattice::Square {
            return Err(TilingError::LatticeMismatch);
        }
        let Some(bb) = region.bounding_box() else {
            return Ok(None);
        };
        let (h, w) = (bb.height(), bb.width());
        let transposed = w > h;
        let (h, w) = if transposed { (w, h) } else { (h, w) };
        if w > max_width || w > 31 {
            return Err(TilingError::GuardExceeded { what: "profile width", limit: max_width.min(31) as u64 });
        }
        let mut grid = Grid { h, w, inside: vec![false; h * w], transposed, min_row: bb.min_row, min_col: bb.min_col };
        for c in region.cells() {
            let (r, k) = ((c.row - bb.min_row) as usize, (c.col - bb.min_col) as usize);
            let (r, k) = if transposed { (k, r) } else { (r, k) };
            grid.inside[r * w + k] = true;
        }
        Ok(Some(grid))
    }

    fn inside(&self, r: usize, c: usize) -> bool {
        r < self.h && c < self.w && self.inside[r * self.w + c]
    }

    fn cell(&self, r: usize, c: usize) -> Cell {
        let (r, c) = if self.transposed { (c, r) } else { (r, c) };
        Cell::new(r as i32 + self.min_row, c as i32 + self.min_col)
    }

    /// Successor masks from `mask` at scan position `pos`, with the domino
    /// placed (if any) as `(pos_cell, partner)` in grid coordinates.
    fn transitions(&self, pos: usize, mask: u32) -> impl Iterator<Item = (u32, Move)> {
        let (r, c) = (pos / self.w, pos % self.w);
        let bit = 1u32 << c;
        let mut out: [Option<(u32, Move)>; 2] = [None, None];
        if !self.inside(r, c) {
            if mask & bit == 0 {
                out[0] = Some((mask, None));
            }
        } else if mask & bit != 0 {
            out[0] = Some((mask & !bit, None));
        } else {
            if self.inside(r + 1, c) {
                out[0] = Some((mask | bit, Some(((r, c), (r + 1, c)))));
            }
            if self.inside(r, c + 1) && mask & (bit << 1) == 0 {
                out[1] = Some((mask | (bit << 1), Some(((r, c), (r, c + 1)))));
            }
        }
        out.into_iter().flatten()
    }
}

/// Exact number of domino tilings of a square-lattice region.
pub fn count_domino_tilings(region: &Region) -> Result<BigUint> {
    count_domino_tilings_with(region, DEFAULT_MAX_WIDTH)
}

pub fn count_domino_tilings_with(region: &Region, max_width: usize) -> Result<BigUint> {
    if region.len() % 2 == 1 {
        return Ok(BigUint::zero());
    }
    let Some(grid) = Grid::new(region, max_width)? else {
        return Ok(BigUint::one());
    };
    let mut states: HashMap<u32, BigUint> = HashMap::from([(0, BigUint::one())]);
    for pos in 0..grid.h * grid.w {
        let mut next: HashMap<u32, BigUint> = HashMap::with_capacity(states.len() * 2);
        for (mask, count) in &states {
            for (m, _) in grid.transitions(pos, *mask) {
                *next.entry(m).or_default() += count;
            }
        }
        states = next;
    }
    Ok(states.remove(&0).unwrap_or_default())
}

/// Suffix counts for every reachable state, enabling exact sampling.
pub struct ProfileTable {
    grid: Option<Grid>,
    /// `suffix[pos][mask]`: completions from scan position `pos`.
    suffix: Vec<HashMap<u32, BigUint>>,
    region: Arc<Region>,
}

impl ProfileTable {
    pub fn new(region: &Region, max_width: usize) -> Result<Self> {
        let grid = Grid::new(region, max_width)?;
        let mut suffix = Vec::new();
        if let Some(g) = &grid {
            let n = g.h * g.w;
            let mut reach: Vec<Vec<u32>> = vec![vec![0]];
            for pos in 0..n {
                let mut next: Vec<u32> =
                    reach[pos].iter().flat_map(|&m| g.transitions(pos, m).map(|(x, _)| x)).collect();
                next.sort_unstable();
                next.dedup();
                reach.push(next);
            }
            suffix = vec![HashMap::new(); n + 1];
            if reach[n].contains(&0) {
                suffix[n].insert(0, BigUint::one());
            }
            for pos in (0..n).rev() {
                let mut layer = HashMap::with_capacity(reach[pos].len());
                for &m in &reach[pos] {
                    let total: BigUint = g.transitions(pos, m).filter_map(|(x, _)| suffix[pos + 1].get(&x)).sum();
                    if !total.is_zero() {
                        layer.insert(m, total);
                    }
                }
                suffix[pos] = layer;
            }
        }
        Ok(ProfileTable { grid, suffix, region: Arc::new(region.clone()) })
    }

    pub fn count(&self) -> BigUint {
        match &self.grid {
            None => BigUint::one(),
            Some(_) => self.suffix[0].get(&0).cloned().unwrap_or_default(),
        }
    }

    /// A uniformly random tiling: each step picks a transition with
    /// probability proportional to its completion count.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Tiling> {
        let Some(g) = &self.grid else {
            return Tiling::new(self.region.clone(), Vec::new());
        };
        if self.count().is_zero() {
            return Err(TilingError::NotTileable);
        }
        let mut mask = 0u32;
        let mut placements = Vec::with_capacity(self.region.len() / 2);
        for pos in 0..g.h * g.w {
            let total = &self.suffix[pos][&mask];
            let mut pick = rng.gen_biguint_below(total);
            let mut chosen = None;
            for (m, dom) in g.transitions(pos, mask) {
                let Some(w) = self.suffix[pos + 1].get(&m) else { continue };
                if &pick < w {
                    chosen = Some((m, dom));
                    break;
                }
                pick -= w;
            }
            let (m, dom) = chosen.expect("weights sum to the total");
            if let Some(((r0, c0), (r1, c1))) = dom {
                placements.push(Placement::domino(g.cell(r0, c0), g.cell(r1, c1)));
            }
            mask = m;
        }
        Tiling::new(self.region.clone(), placements)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build_aztec, build_rectangle, parse_region};

    fn count(r: &Region) -> u64 {
        count_domino_tilings(r).unwrap().try_into().unwrap()
    }

    #[test]
    fn known_counts() {
        assert_eq!(count(&build_rectangle(4, 6).unwrap()), 281);
        assert_eq!(count(&build_rectangle(6, 4).unwrap()), 281);
        assert_eq!(count(&build_rectangle(8, 8).unwrap()), 12_988_816);
        assert_eq!(count(&build_rectangle(2, 10).unwrap()), 89);
        assert_eq!(count(&build_aztec(2).unwrap()), 8);
        assert_eq!(count(&build_rectangle(3, 3).unwrap()), 0);
        assert_eq!(count(&Region::empty(Lattice::Square)), 1);
    }

    #[test]
    fn holes_and_offsets() {
        let holey = parse_region("###\n#.#\n###", Lattice::Square).unwrap();
        assert_eq!(count(&holey), 2);
        let shifted = build_rectangle(4, 6).unwrap().translate(-3, 7).unwrap();
        assert_eq!(count(&shifted), 281);
    }

    #[test]
    fn width_guard() {
        let wide = build_rectangle(30, 30).unwrap();
        assert!(matches!(count_domino_tilings(&wide), Err(TilingError::GuardExceeded { .. })));
        assert!(count_domino_tilings_with(&build_rectangle(4, 6).unwrap(), 3).is_err());
    }

    #[test]
    fn table_count_matches_forward_dp() {
        for region in [build_aztec(3).unwrap(), build_rectangle(5, 6).unwrap()] {
            let t = ProfileTable::new(&region, 24).unwrap();
            assert_eq!(t.count(), count_domino_tilings(&region).unwrap());
        }
    }

    #[test]
    fn sample_untileable_errors() {
        let t = ProfileTable::new(&build_rectangle(3, 3).unwrap(), 24).unwrap();
        let mut rng = crate::counting::rng::stream(1, 0);
        assert_eq!(t.sample(&mut rng).unwrap_err(), TilingError::NotTileable);
    }
}
