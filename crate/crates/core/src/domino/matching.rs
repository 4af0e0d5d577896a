//! Chessboard bipartite matching and Hall-violator certificates.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Result, TilingError};
use crate::lattice::{chess_color, Cell, Lattice, Placement, Region, Tiling};

const NIL: usize = usize::MAX;

/// Cells split by chessboard color with adjacency from color 0 to color 1.
struct Bipartite {
    sides: [Vec<Cell>; 2],
    adj: [Vec<Vec<usize>>; 2],
}

impl Bipartite {
    fn new(region: &Region) -> Result<Self> {
        if region.lattice() != Lattice::Square {
            return Err(TilingError::LatticeMismatch);
        }
        let mut sides: [Vec<Cell>; 2] = [Vec::new(), Vec::new()];
        for c in region.cells() {
            sides[chess_color(c)].push(c);
        }
        let index: [HashMap<Cell, usize>; 2] =
            [0, 1].map(|s| sides[s].iter().enumerate().map(|(i, &c)| (c, i)).collect());
        let adj = [0, 1]
            .map(|s| sides[s].iter().map(|&c| region.neighbors(c).map(|nb| index[1 - s][&nb]).collect()).collect());
        Ok(Bipartite { sides, adj })
    }

    /// Hopcroft–Karp; returns `mate[side][i]`.
    fn matching(&self) -> [Vec<usize>; 2] {
        let (nl, nr) = (self.sides[0].len(), self.sides[1].len());
        let mut mate_l = vec![NIL; nl];
        let mut mate_r = vec![NIL; nr];
        let mut dist = vec![0usize; nl];
        loop {
            // layer the free left vertices
            let mut queue = VecDeque::new();
            for u in 0..nl {
                if mate_l[u] == NIL {
                    dist[u] = 0;
                    queue.push_back(u);
                } else {
                    dist[u] = NIL;
                }
            }
            let mut found = false;
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[0][u] {
                    let w = mate_r[v];
                    if w == NIL {
                        found = true;
                    } else if dist[w] == NIL {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            if !found {
                break;
            }
            for u in 0..nl {
                if mate_l[u] == NIL {
                    self.augment(u, &mut mate_l, &mut mate_r, &mut dist);
                }
            }
        }
        [mate_l, mate_r]
    }

    fn augment(&self, u: usize, mate_l: &mut [usize], mate_r: &mut [usize], dist: &mut [usize]) -> bool {
        // iterative DFS along the layered graph
        let mut stack: Vec<(usize, usize)> = vec![(u, 0)];
        let mut path: Vec<(usize, usize)> = Vec::new();
        while let Some(top) = stack.last_mut() {
            let x = top.0;
            if top.1 >= self.adj[0][x].len() {
                dist[x] = NIL;
                stack.pop();
                path.pop();
                continue;
            }
            let v = self.adj[0][x][top.1];
            top.1 += 1;
            let w = mate_r[v];
            if w == NIL {
                path.push((x, v));
                for &(a, b) in &path {
                    mate_l[a] = b;
                    mate_r[b] = a;
                }
                return true;
            }
            if dist[w] != NIL && dist[w] == dist[x] + 1 {
                path.push((x, v));
                stack.push((w, 0));
            }
        }
        false
    }
}

/// A maximum matching between the two color classes, as dominoes.
pub fn maximum_matching(region: &Region) -> Result<Vec<Placement>> {
    let g = Bipartite::new(region)?;
    let [mate_l, _] = g.matching();
    Ok(mate_l
        .iter()
        .enumerate()
        .filter(|(_, &v)| v != NIL)
        .map(|(u, &v)| Placement::domino(g.sides[0][u], g.sides[1][v]))
        .collect())
}

/// True iff the region has a domino tiling (a perfect color-class matching).
pub fn is_domino_tileable(region: &Region) -> Result<bool> {
    if region.len() % 2 == 1 {
        return Ok(false);
    }
    Ok(maximum_matching(region)?.len() * 2 == region.len())
}

/// A tiling from a perfect matching, if one exists.
pub fn matching_tiling(region: &Region) -> Result<Option<Tiling>> {
    let dominoes = maximum_matching(region)?;
    if dominoes.len() * 2 != region.len() {
        return Ok(None);
    }
    Tiling::new(Arc::new(region.clone()), dominoes).map(Some)
}

/// `k` same-colored cells with fewer than `k` neighbors in the region.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HallViolator {
    #[serde(rename = "S")]
    pub set: Vec<Cell>,
    #[serde(rename = "N")]
    pub neighborhood: Vec<Cell>,
}

impl HallViolator {
    pub fn to_json(&self) -> serde_json::Value {
        let cells = |v: &[Cell]| v.iter().map(|c| [c.row, c.col]).collect::<Vec<_>>();
        serde_json::json!({ "S": cells(&self.set), "N": cells(&self.neighborhood) })
    }

    /// Checks the certificate against `region` from scratch.
    pub fn verify(&self, region: &Region) -> bool {
        let Some(&first) = self.set.first() else { return false };
        if !self.set.iter().all(|&c| region.contains(c) && chess_color(c) == chess_color(first)) {
            return false;
        }
        let nbhd: BTreeSet<Cell> = self.set.iter().flat_map(|&c| region.neighbors(c)).collect();
        let claimed: BTreeSet<Cell> = self.neighborhood.iter().copied().collect();
        let distinct: BTreeSet<Cell> = self.set.iter().copied().collect();
        nbhd == claimed && distinct.len() == self.set.len() && nbhd.len() < distinct.len()
    }
}

/// A Hall violator iff the region has no domino tiling.
///
/// Alternating search from the unmatched cells of a deficient class: the
/// reached cells of that class form `S`, the reached cells of the other
/// class are exactly `N(S)`, and all of them are matched.
pub fn hall_certificate(region: &Region) -> Result<Option<HallViolator>> {
    let g = Bipartite::new(region)?;
    let mate = g.matching();
    let Some(side) = (0..2).find(|&s| mate[s].contains(&NIL)) else {
        return Ok(None);
    };
    // adjacency from `side` to the other class
    let adj_from = |s: usize, u: usize| -> &[usize] { &g.adj[s][u] };
    let other = 1 - side;
    let mut seen_s = vec![false; g.sides[side].len()];
    let mut seen_o = vec![false; g.sides[other].len()];
    let mut queue: VecDeque<usize> = (0..g.sides[side].len()).filter(|&u| mate[side][u] == NIL).collect();
    for &u in &queue {
        seen_s[u] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &v in adj_from(side, u) {
            if seen_o[v] {
                continue;
            }
            seen_o[v] = true;
            let w = mate[other][v];
            debug_assert!(w != NIL, "maximum matching has no augmenting path");
            if w != NIL && !seen_s[w] {
                seen_s[w] = true;
                queue.push_back(w);
            }
        }
    }
    let pick = |cells: &[Cell], seen: &[bool]| -> Vec<Cell> {
        cells.iter().zip(seen).filter(|(_, &s)| s).map(|(&c, _)| c).collect()
    };
    Ok(Some(HallViolator { set: pick(&g.sides[side], &seen_s), neighborhood: pick(&g.sides[other], &seen_o) }))
}
