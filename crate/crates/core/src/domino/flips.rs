//! Flips of 2x2 blocks and the flip graph.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Result, TilingError};
use crate::exact_cover::{all_tilings, SolveOptions};
use crate::lattice::{Cell, Lattice, Placement, Region, TileShape, Tiling};

/// Default cap on the number of tilings a flip-graph search may visit.
pub const DEFAULT_FLIP_GUARD: u64 = 100_000;

/// Two parallel dominoes filling the 2x2 block at `anchor` (its top-left).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Flip {
    pub anchor: Cell,
    /// Orientation before the flip.
    pub horizontal: bool,
}

impl Flip {
    fn before(&self) -> [Placement; 2] {
        let a = self.anchor;
        if self.horizontal {
            [Placement::domino(a, a.offset(0, 1)), Placement::domino(a.offset(1, 0), a.offset(1, 1))]
        } else {
            [Placement::domino(a, a.offset(1, 0)), Placement::domino(a.offset(0, 1), a.offset(1, 1))]
        }
    }

    fn after(&self) -> [Placement; 2] {
        Flip { anchor: self.anchor, horizontal: !self.horizontal }.before()
    }
}

/// Every applicable flip, sorted by anchor then orientation.
pub fn flip_moves(tiling: &Tiling) -> Vec<Flip> {
    let owners = tiling.owner_map();
    let ps = tiling.placements();
    let mut flips = Vec::new();
    for p in ps {
        let a = p.cells[0];
        let (horizontal, partner) = if p.is_horizontal_domino() {
            (true, a.offset(1, 0))
        } else if p.is_vertical_domino() {
            (false, a.offset(0, 1))
        } else {
            continue;
        };
        let flip = Flip { anchor: a, horizontal };
        if owners.get(&partner).is_some_and(|&i| ps[i] == flip.before()[1]) {
            flips.push(flip);
        }
    }
    flips.sort();
    flips
}

pub fn apply_flip(tiling: &Tiling, flip: Flip) -> Result<Tiling> {
    let before = flip.before();
    let ps = tiling.placements();
    if !before.iter().all(|b| ps.binary_search(b).is_ok()) {
        return Err(TilingError::InvalidFlip);
    }
    let mut next: Vec<Placement> = ps.iter().filter(|p| !before.contains(p)).cloned().collect();
    next.extend(flip.after());
    Tiling::new(tiling.region_arc().clone(), next)
}

#[derive(Debug, Clone)]
pub struct FlipComponents {
    pub tilings: Vec<Tiling>,
    /// Component index of each tiling.
    pub component: Vec<usize>,
    /// Tiling indices per component, in discovery order.
    pub components: Vec<Vec<usize>>,
}

/// Partitions all domino tilings of `region` into flip-connected classes.
pub fn flip_components(region: &Region, guard: u64) -> Result<FlipComponents> {
    if region.lattice() != Lattice::Square {
        return Err(TilingError::LatticeMismatch);
    }
    let options = SolveOptions::unlimited().with_limit(guard.saturating_add(1));
    let tilings = all_tilings(region, &[TileShape::domino()], &options)?;
    if tilings.len() as u64 > guard {
        return Err(TilingError::GuardExceeded { what: "flip graph tilings", limit: guard });
    }
    let index: HashMap<&[Placement], usize> = tilings.iter().enumerate().map(|(i, t)| (t.placements(), i)).collect();
    let mut component = vec![usize::MAX; tilings.len()];
    let mut components = Vec::new();
    for start in 0..tilings.len() {
        if component[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut members = vec![start];
        component[start] = id;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for f in flip_moves(&tilings[i]) {
                let next = apply_flip(&tilings[i], f)?;
                let j = index[next.placements()];
                if component[j] == usize::MAX {
                    component[j] = id;
                    members.push(j);
                    queue.push_back(j);
                }
            }
        }
        components.push(members);
    }
    Ok(FlipComponents { tilings, component, components })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FlipDistance {
    Steps(u64),
    Unreachable,
}

/// Length of a shortest flip sequence from `from` to `to`, by BFS.
pub fn flip_distance(region: &Region, from: &Tiling, to: &Tiling, guard: u64) -> Result<FlipDistance> {
    for t in [from, to] {
        if t.region() != region {
            return Err(TilingError::InvalidArgument("tiling is not of the given region".into()));
        }
    }
    let mut dist: HashMap<Vec<Placement>, u64> = HashMap::from([(from.placements().to_vec(), 0)]);
    let mut queue = VecDeque::from([from.clone()]);
    while let Some(t) = queue.pop_front() {
        let d = dist[t.placements()];
        if t.placements() == to.placements() {
            return Ok(FlipDistance::Steps(d));
        }
        for f in flip_moves(&t) {
            let next = apply_flip(&t, f)?;
            if !dist.contains_key(next.placements()) {
                if dist.len() as u64 >= guard {
                    return Err(TilingError::GuardExceeded { what: "flip distance states", limit: guard });
                }
                dist.insert(next.placements().to_vec(), d + 1);
                queue.push_back(next);
            }
        }
    }
    Ok(FlipDistance::Unreachable)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_rectangle;
    use std::sync::Arc;

    fn ring() -> Region {
        build_rectangle(3, 3).unwrap().remove_cells(&[Cell::new(1, 1)]).unwrap()
    }

    #[test]
    fn moves() {
        let sq = Arc::new(build_rectangle(2, 2).unwrap());
        let h = Tiling::new(
            sq.clone(),
            vec![
                Placement::domino(Cell::new(0, 0), Cell::new(0, 1)),
                Placement::domino(Cell::new(1, 0), Cell::new(1, 1)),
            ],
        )
        .unwrap();
        let flips = flip_moves(&h);
        assert_eq!(flips, vec![Flip { anchor: Cell::new(0, 0), horizontal: true }]);
        let v = apply_flip(&h, flips[0]).unwrap();
        assert!(v.placements().iter().all(|p| p.is_vertical_domino()));
        assert_eq!(apply_flip(&v, flip_moves(&v)[0]).unwrap(), h);
        assert_eq!(apply_flip(&v, flips[0]).unwrap_err(), TilingError::InvalidFlip);

        let three = Arc::new(build_rectangle(2, 3).unwrap());
        let verticals =
            Tiling::new(three, (0..3).map(|c| Placement::domino(Cell::new(0, c), Cell::new(1, c))).collect()).unwrap();
        assert_eq!(flip_moves(&verticals).len(), 2);
    }

    #[test]
    fn ring_is_disconnected() {
        let comps = flip_components(&ring(), DEFAULT_FLIP_GUARD).unwrap();
        assert_eq!(comps.tilings.len(), 2);
        assert_eq!(comps.components.len(), 2);
        for t in &comps.tilings {
            assert!(flip_moves(t).is_empty());
        }
        let (a, b) = (&comps.tilings[0], &comps.tilings[1]);
        assert_eq!(flip_distance(&ring(), a, b, 100).unwrap(), FlipDistance::Unreachable);
        assert_eq!(flip_distance(&ring(), a, a, 100).unwrap(), FlipDistance::Steps(0));
    }

    #[test]
    fn rectangles_are_connected() {
        for (r, c, n) in [(2, 4, 5), (4, 4, 36)] {
            let comps = flip_components(&build_rectangle(r, c).unwrap(), DEFAULT_FLIP_GUARD).unwrap();
            assert_eq!(comps.tilings.len(), n);
            assert_eq!(comps.components.len(), 1);
        }
        assert!(matches!(flip_components(&build_rectangle(4, 4).unwrap(), 10), Err(TilingError::GuardExceeded { .. })));
    }

    #[test]
    fn involution_on_two_by_four() {
        let comps = flip_components(&build_rectangle(2, 4).unwrap(), DEFAULT_FLIP_GUARD).unwrap();
        for t in &comps.tilings {
            for f in flip_moves(t) {
                let once = apply_flip(t, f).unwrap();
                let back = Flip { anchor: f.anchor, horizontal: !f.horizontal };
                assert_eq!(&apply_flip(&once, back).unwrap(), t);
            }
        }
    }
}
