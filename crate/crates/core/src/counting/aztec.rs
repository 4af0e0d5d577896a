//! Domino shuffling for the Aztec diamond and the frozen-region statistic.
//!
//! Internally a cell is the unit square `[x, x+1] x [y, y+1]`; the diamond of
//! order `n` holds the cells with `|x + 1/2| + |y + 1/2| <= n`. A domino is
//! stored by its lower-left cell.

use std::collections::HashSet;
use std::sync::Arc;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::rng;
use crate::error::{Result, TilingError};
use crate::lattice::{build_aztec, Cell, Placement, Tiling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Dom {
    horizontal: bool,
    x: i32,
    y: i32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Heading {
    North,
    South,
    East,
    West,
}

impl Dom {
    fn heading(&self, order: i32) -> Heading {
        let even = (self.x + self.y + order).rem_euclid(2) == 0;
        match (self.horizontal, even) {
            (true, true) => Heading::North,
            (true, false) => Heading::South,
            (false, true) => Heading::East,
            (false, false) => Heading::West,
        }
    }

    fn cells(&self) -> [(i32, i32); 2] {
        if self.horizontal {
            [(self.x, self.y), (self.x + 1, self.y)]
        } else {
            [(self.x, self.y), (self.x, self.y + 1)]
        }
    }
}

fn in_diamond(x: i32, y: i32, order: i32) -> bool {
    // doubled to stay in integers
    (2 * x + 1).abs() + (2 * y + 1).abs() <= 2 * order
}

fn shuffle_step<R: Rng + ?Sized>(doms: Vec<Dom>, order: i32, rng: &mut R) -> Vec<Dom> {
    let horiz: HashSet<(i32, i32)> = doms.iter().filter(|d| d.horizontal).map(|d| (d.x, d.y)).collect();
    let vert: HashSet<(i32, i32)> = doms.iter().filter(|d| !d.horizontal).map(|d| (d.x, d.y)).collect();
    let mut doomed: HashSet<Dom> = HashSet::new();
    for d in &doms {
        match d.heading(order) {
            Heading::North if horiz.contains(&(d.x, d.y + 1)) => {
                doomed.insert(*d);
                doomed.insert(Dom { y: d.y + 1, ..*d });
            }
            Heading::East if vert.contains(&(d.x + 1, d.y)) => {
                doomed.insert(*d);
                doomed.insert(Dom { x: d.x + 1, ..*d });
            }
            _ => {}
        }
    }
    let mut next: Vec<Dom> = doms
        .into_iter()
        .filter(|d| !doomed.contains(d))
        .map(|d| match d.heading(order) {
            Heading::North => Dom { y: d.y + 1, ..d },
            Heading::South => Dom { y: d.y - 1, ..d },
            Heading::East => Dom { x: d.x + 1, ..d },
            Heading::West => Dom { x: d.x - 1, ..d },
        })
        .collect();
    let order = order + 1;
    // the uncovered cells split into 2x2 blocks; the lowest, leftmost
    // uncovered cell is always a block's lower-left corner
    let mut covered: HashSet<(i32, i32)> = next.iter().flat_map(|d| d.cells()).collect();
    for y in -order..order {
        for x in -order..order {
            if !in_diamond(x, y, order) || covered.contains(&(x, y)) {
                continue;
            }
            let block = [(x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)];
            debug_assert!((x + y + order).rem_euclid(2) == 1);
            debug_assert!(block.iter().all(|&(a, b)| in_diamond(a, b, order) && !covered.contains(&(a, b))));
            covered.extend(block);
            let horizontal = rng.gen_bool(0.5);
            let other = if horizontal { Dom { horizontal, x, y: y + 1 } } else { Dom { horizontal, x: x + 1, y } };
            next.push(Dom { horizontal, x, y });
            next.push(other);
        }
    }
    next
}

fn to_cell(x: i32, y: i32, order: i32) -> Cell {
    Cell::new(order - 1 - y, x + order)
}

/// A uniformly random tiling of the Aztec diamond of order `n`, grown by
/// domino shuffling from the empty diamond.
pub fn aztec_sample(n: usize, seed: u64) -> Result<Tiling> {
    aztec_sample_stream(n, seed, 0)
}

/// As [`aztec_sample`], drawing from stream `index` of `seed`.
pub fn aztec_sample_stream(n: usize, seed: u64, index: u64) -> Result<Tiling> {
    let region = Arc::new(build_aztec(n)?);
    let mut rng = rng::stream(seed, index);
    let mut doms = Vec::new();
    for order in 0..n as i32 {
        doms = shuffle_step(doms, order, &mut rng);
    }
    let order = n as i32;
    let placements = doms
        .iter()
        .map(|d| {
            let [(x0, y0), (x1, y1)] = d.cells();
            Placement::domino(to_cell(x0, y0, order), to_cell(x1, y1, order))
        })
        .collect();
    Tiling::new(region, placements)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ArcticStatistic {
    pub order: usize,
    /// Dominoes lying entirely outside the inscribed circle.
    pub outside: usize,
    /// Of those, the ones matching the brick pattern of their corner.
    pub frozen: usize,
    /// `frozen / outside`, or 1 when nothing lies outside.
    pub fraction: f64,
    /// Dominoes meeting the closed disc, and how many of those are frozen.
    pub inside: usize,
    pub inside_frozen: usize,
}

/// Frozen fraction outside the circle of radius `n / sqrt 2` inscribed in
/// the diamond. The two diagonals split the diamond into four corners; a
/// domino is frozen when it is the kind that would slide toward its own
/// corner (north corner: northbound horizontals, and so on).
pub fn arctic_statistic(tiling: &Tiling) -> Result<ArcticStatistic> {
    let region = tiling.region();
    let cells = region.len();
    let n = (0..).find(|&k: &usize| 2 * k * (k + 1) >= cells).unwrap_or(0);
    if n == 0 || *region != build_aztec(n)? {
        return Err(TilingError::InvalidArgument("tiling is not of an Aztec diamond".into()));
    }
    let order = n as i32;
    let r2 = (n * n) as f64 / 2.0;
    let (mut outside, mut frozen, mut inside, mut inside_frozen) = (0, 0, 0, 0);
    for p in tiling.placements() {
        let [a, b] = [p.cells[0], p.cells[1]];
        let (xa, ya) = (a.col - order, order - 1 - a.row);
        let (xb, yb) = (b.col - order, order - 1 - b.row);
        let dom = Dom { horizontal: p.is_horizontal_domino(), x: xa.min(xb), y: ya.min(yb) };
        let (x0, y0) = (dom.x as f64, dom.y as f64);
        let (x1, y1) = if dom.horizontal { (x0 + 2.0, y0 + 1.0) } else { (x0 + 1.0, y0 + 2.0) };
        let nx = 0f64.clamp(x0, x1);
        let ny = 0f64.clamp(y0, y1);
        let (cx, cy) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
        let corner = if cy.abs() > cx.abs() {
            if cy > 0.0 {
                Heading::North
            } else {
                Heading::South
            }
        } else if cx > 0.0 {
            Heading::East
        } else {
            Heading::West
        };
        let is_frozen = dom.heading(order) == corner;
        if nx * nx + ny * ny <= r2 {
            inside += 1;
            inside_frozen += usize::from(is_frozen);
        } else {
            outside += 1;
            frozen += usize::from(is_frozen);
        }
    }
    let fraction = if outside == 0 { 1.0 } else { frozen as f64 / outside as f64 };
    Ok(ArcticStatistic { order: n, outside, frozen, fraction, inside, inside_frozen })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ArcticSurvey {
    pub order: usize,
    pub samples: usize,
    pub mean: f64,
    /// Standard error of the mean.
    pub std_error: f64,
    pub fractions: Vec<f64>,
}

/// Frozen fractions of `samples` independent shuffled tilings, sample `i`
/// drawn from stream `i` of `seed`.
pub fn arctic_survey(n: usize, samples: usize, seed: u64) -> Result<ArcticSurvey> {
    if samples == 0 {
        return Err(TilingError::InvalidArgument("need at least one sample".into()));
    }
    let fractions: Vec<f64> = (0..samples as u64)
        .into_par_iter()
        .map(|i| Ok(arctic_statistic(&aztec_sample_stream(n, seed, i)?)?.fraction))
        .collect::<Result<_>>()?;
    let k = samples as f64;
    let mean = fractions.iter().sum::<f64>() / k;
    let var = if samples > 1 { fractions.iter().map(|f| (f - mean).powi(2)).sum::<f64>() / (k - 1.0) } else { 0.0 };
    Ok(ArcticSurvey { order: n, samples, mean, std_error: (var / k).sqrt(), fractions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count_domino_tilings;
    use crate::lattice::build_rectangle;
    use std::collections::BTreeSet;

    #[test]
    fn samples_are_valid_and_seeded() {
        for n in 1..8 {
            let t = aztec_sample(n, 11).unwrap();
            assert_eq!(t.len(), n * (n + 1));
            assert_eq!(t, aztec_sample(n, 11).unwrap());
        }
    }

    #[test]
    fn reaches_every_small_tiling() {
        let seen: BTreeSet<_> = (0..400).map(|s| aztec_sample(2, s).unwrap().placements().to_vec()).collect();
        assert_eq!(seen.len() as u64, u64::try_from(count_domino_tilings(&build_aztec(2).unwrap()).unwrap()).unwrap());
    }

    #[test]
    fn all_horizontal_tiling_is_frozen_north_and_south() {
        let n = 20i32;
        let region = Arc::new(build_aztec(n as usize).unwrap());
        let mut placements = Vec::new();
        for r in 0..2 * n {
            let half = if r < n { r + 1 } else { 2 * n - r };
            for c in (n - half..n + half).step_by(2) {
                placements.push(Placement::domino(Cell::new(r, c), Cell::new(r, c + 1)));
            }
        }
        let t = Tiling::new(region, placements).unwrap();
        let s = arctic_statistic(&t).unwrap();
        // the east and west corners hold horizontals, which are never frozen there
        let mut x_outside = 0;
        let r2 = (n * n) as f64 / 2.0;
        for p in t.placements() {
            let (row, col) = (p.cells[0].row, p.cells[0].col);
            let (x0, y0) = ((col - n) as f64, (n - 1 - row) as f64);
            let nx = 0f64.clamp(x0, x0 + 2.0);
            let ny = 0f64.clamp(y0, y0 + 1.0);
            let (cx, cy) = (x0 + 1.0, y0 + 0.5);
            if nx * nx + ny * ny > r2 && cy.abs() < cx.abs() {
                x_outside += 1;
            }
        }
        assert!(x_outside > 0);
        assert_eq!(s.frozen + x_outside, s.outside, "{s:?}");
    }

    #[test]
    fn disc_is_not_frozen() {
        let s = arctic_statistic(&aztec_sample(40, 5).unwrap()).unwrap();
        assert_eq!(s.inside + s.outside, 40 * 41);
        let inside = s.inside_frozen as f64 / s.inside as f64;
        assert!(s.fraction > 0.95 && inside < 0.75, "{s:?}");
    }

    #[test]
    fn rejects_other_regions() {
        let t = crate::counting::sample_tiling(&build_rectangle(2, 4).unwrap(), 0).unwrap();
        assert!(arctic_statistic(&t).is_err());
    }
}
