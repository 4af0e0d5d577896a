//! Exact-cover tiling solver built on dancing links.
//!
//! Every region cell is a primary item; with [`Multiplicity::OnceEach`] each
//! shape contributes one more primary item so that it is used exactly once.
//! Branching always picks the item with the fewest remaining candidates.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::ops::ControlFlow;
use std::sync::Arc;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Result, TilingError};
use crate::lattice::{close_group, Cell, CellMap, Lattice, Placement, Region, SymmetryMode, TileShape, Tiling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Multiplicity {
    OnceEach,
    #[default]
    Unlimited,
}

#[derive(Debug, Clone, Default)]
pub struct SolveOptions {
    pub multiplicity: Multiplicity,
    /// Overrides each shape's own symmetry mode when set.
    pub mode: Option<SymmetryMode>,
    /// Stop after this many solutions.
    pub limit: Option<u64>,
    /// Generators of a region symmetry group for orbit counting.
    pub group: Option<Vec<CellMap>>,
}

impl SolveOptions {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn once_each() -> Self {
        SolveOptions { multiplicity: Multiplicity::OnceEach, ..Self::default() }
    }

    pub fn with_limit(mut self, limit: u64) -> Self {
        self.limit = Some(limit);
        self
    }

    pub fn with_group(mut self, generators: Vec<CellMap>) -> Self {
        self.group = Some(generators);
        self
    }

    fn check(&self) -> Result<()> {
        if self.limit == Some(0) {
            return Err(TilingError::InvalidArgument("limit must be at least 1".into()));
        }
        Ok(())
    }
}

/// Every placement of every allowed image of every shape inside `region`,
/// deduplicated and sorted.
pub fn enumerate_placements(region: &Region, shapes: &[TileShape], options: &SolveOptions) -> Vec<Placement> {
    let mut out = Vec::new();
    for (idx, shape) in shapes.iter().enumerate() {
        if shape.lattice() != region.lattice() {
            continue;
        }
        let shape = match options.mode {
            Some(m) if m != shape.mode() => shape.with_mode(m),
            _ => shape.clone(),
        };
        for orient in shape.orientations() {
            let anchor = orient[0];
            for target in region.cells() {
                let (dr, dc) = (target.row - anchor.row, target.col - anchor.col);
                let cells: Vec<Cell> = orient.iter().map(|c| c.offset(dr, dc)).collect();
                if cells.iter().all(|&c| region.contains(c)) {
                    out.push(Placement::new(idx, shape.name(), cells));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Array-backed dancing links over primary items.
#[derive(Clone)]
struct Dlx {
    left: Vec<usize>,
    right: Vec<usize>,
    up: Vec<usize>,
    down: Vec<usize>,
    col: Vec<usize>,
    row_of: Vec<usize>,
    len: Vec<usize>,
}

impl Dlx {
    fn new(n_items: usize, rows: &[Vec<usize>]) -> Self {
        let n = n_items + 1;
        let mut d = Dlx {
            left: (0..n).map(|i| if i == 0 { n - 1 } else { i - 1 }).collect(),
            right: (0..n).map(|i| (i + 1) % n).collect(),
            up: (0..n).collect(),
            down: (0..n).collect(),
            col: (0..n).collect(),
            row_of: vec![usize::MAX; n],
            len: vec![0; n],
        };
        for (r, items) in rows.iter().enumerate() {
            let first = d.col.len();
            for (k, &item) in items.iter().enumerate() {
                let c = item + 1;
                let node = d.col.len();
                d.col.push(c);
                d.row_of.push(r);
                d.up.push(d.up[c]);
                d.down.push(c);
                let last = d.up[c];
                d.down[last] = node;
                d.up[c] = node;
                d.len[c] += 1;
                d.left.push(if k == 0 { node } else { node - 1 });
                d.right.push(first);
                if k > 0 {
                    d.right[node - 1] = node;
                    d.left[first] = node;
                }
            }
        }
        d
    }

    fn cover(&mut self, c: usize) {
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = r;
        self.left[r] = l;
        let mut i = self.down[c];
        while i != c {
            let mut j = self.right[i];
            while j != i {
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = d;
                self.up[d] = u;
                self.len[self.col[j]] -= 1;
                j = self.right[j];
            }
            i = self.down[i];
        }
    }

    fn uncover(&mut self, c: usize) {
        let mut i = self.up[c];
        while i != c {
            let mut j = self.left[i];
            while j != i {
                self.len[self.col[j]] += 1;
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = j;
                self.up[d] = j;
                j = self.left[j];
            }
            i = self.up[i];
        }
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = c;
        self.left[r] = c;
    }

    /// Active item with fewest candidates; `None` when all are covered.
    fn choose(&self) -> Option<usize> {
        let mut best = None;
        let mut best_len = usize::MAX;
        let mut c = self.right[0];
        while c != 0 {
            if self.len[c] < best_len {
                best_len = self.len[c];
                best = Some(c);
                if best_len == 0 {
                    break;
                }
            }
            c = self.right[c];
        }
        best
    }

    fn rows_of_item(&self, c: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut i = self.down[c];
        while i != c {
            out.push(i);
            i = self.down[i];
        }
        out
    }

    fn select(&mut self, node: usize) {
        let mut j = self.right[node];
        while j != node {
            self.cover(self.col[j]);
            j = self.right[j];
        }
    }

    fn deselect(&mut self, node: usize) {
        let mut j = self.left[node];
        while j != node {
            self.uncover(self.col[j]);
            j = self.left[j];
        }
    }

    fn search<F>(&mut self, partial: &mut Vec<usize>, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let Some(c) = self.choose() else {
            return visit(partial);
        };
        if self.len[c] == 0 {
            return ControlFlow::Continue(());
        }
        self.cover(c);
        let mut r = self.down[c];
        let mut flow = ControlFlow::Continue(());
        while r != c {
            partial.push(self.row_of[r]);
            self.select(r);
            flow = self.search(partial, visit);
            self.deselect(r);
            partial.pop();
            if flow.is_break() {
                break;
            }
            r = self.down[r];
        }
        self.uncover(c);
        flow
    }

    fn count(&mut self) -> u64 {
        let Some(c) = self.choose() else { return 1 };
        if self.len[c] == 0 {
            return 0;
        }
        self.cover(c);
        let mut total = 0;
        let mut r = self.down[c];
        while r != c {
            self.select(r);
            total += self.count();
            self.deselect(r);
            r = self.down[r];
        }
        self.uncover(c);
        total
    }

    /// Splits the search at the first branching item: one detached solver
    /// per candidate row (with that row selected), in search order.
    fn branches(&self) -> Option<Vec<(usize, Dlx)>> {
        let c = self.choose()?;
        let mut base = self.clone();
        base.cover(c);
        Some(
            self.rows_of_item(c)
                .into_iter()
                .map(|node| {
                    let mut b = base.clone();
                    b.select(node);
                    (self.row_of[node], b)
                })
                .collect(),
        )
    }
}

/// A prepared exact-cover instance for one region and shape list.
pub struct TilingProblem {
    region: Arc<Region>,
    placements: Vec<Placement>,
    dlx: Dlx,
}

impl TilingProblem {
    pub fn new(region: &Region, shapes: &[TileShape], options: &SolveOptions) -> Result<Self> {
        options.check()?;
        let placements = enumerate_placements(region, shapes, options);
        let index: HashMap<Cell, usize> = region.cells().enumerate().map(|(i, c)| (c, i)).collect();
        let n_cells = region.len();
        let once = options.multiplicity == Multiplicity::OnceEach;
        let n_items = n_cells + if once { shapes.len() } else { 0 };
        let rows: Vec<Vec<usize>> = placements
            .iter()
            .map(|p| {
                let mut items: Vec<usize> = p.cells.iter().map(|c| index[c]).collect();
                if once {
                    items.push(n_cells + p.shape_index);
                }
                items
            })
            .collect();
        Ok(TilingProblem { region: Arc::new(region.clone()), dlx: Dlx::new(n_items, &rows), placements })
    }

    pub fn placements(&self) -> &[Placement] {
        &self.placements
    }

    fn materialize(&self, rows: &[usize]) -> Tiling {
        let ps = rows.iter().map(|&r| self.placements[r].clone()).collect();
        Tiling::new(self.region.clone(), ps).expect("exact cover yields a valid tiling")
    }

    /// Visits solutions (as placement indices) in the deterministic search order.
    pub fn for_each_solution<F>(&self, mut visit: F)
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let mut dlx = self.dlx.clone();
        let _ = dlx.search(&mut Vec::new(), &mut visit);
    }

    pub fn first(&self) -> Option<Tiling> {
        let mut found = None;
        self.for_each_solution(|rows| {
            found = Some(rows.to_vec());
            ControlFlow::Break(())
        });
        found.map(|rows| self.materialize(&rows))
    }

    pub fn all(&self, limit: Option<u64>) -> Vec<Tiling> {
        let mut out = Vec::new();
        self.for_each_solution(|rows| {
            out.push(self.materialize(rows));
            if limit.is_some_and(|l| out.len() as u64 >= l) {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        out
    }

    /// Number of solutions; subtrees under the first branching item are
    /// counted in parallel and summed.
    pub fn count(&self, limit: Option<u64>) -> BigUint {
        if let Some(l) = limit {
            let mut n = 0u64;
            self.for_each_solution(|_| {
                n += 1;
                if n >= l {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            });
            return BigUint::from(n);
        }
        match self.dlx.branches() {
            None => BigUint::from(1u8),
            Some(branches) => branches
                .into_par_iter()
                .map(|(_, mut b)| BigUint::from(b.count()))
                .reduce(BigUint::default, |a, b| a + b),
        }
    }

    /// Solutions grouped by first-level branch, computed in parallel and
    /// returned in sequential search order.
    fn par_solutions(&self) -> Vec<Vec<usize>> {
        let Some(branches) = self.dlx.branches() else {
            return vec![Vec::new()];
        };
        let parts: Vec<Vec<Vec<usize>>> = branches
            .into_par_iter()
            .map(|(row, mut b)| {
                let mut sols = Vec::new();
                let mut partial = vec![row];
                let _ = b.search(&mut partial, &mut |s: &[usize]| {
                    sols.push(s.to_vec());
                    ControlFlow::Continue(())
                });
                sols
            })
            .collect();
        parts.into_iter().flatten().collect()
    }
}

pub fn find_tiling(region: &Region, shapes: &[TileShape], options: &SolveOptions) -> Result<Option<Tiling>> {
    Ok(TilingProblem::new(region, shapes, options)?.first())
}

pub fn all_tilings(region: &Region, shapes: &[TileShape], options: &SolveOptions) -> Result<Vec<Tiling>> {
    Ok(TilingProblem::new(region, shapes, options)?.all(options.limit))
}

/// Exact number of distinct tilings (as labeled placement sets).
pub fn count_tilings(region: &Region, shapes: &[TileShape], options: &SolveOptions) -> Result<BigUint> {
    Ok(TilingProblem::new(region, shapes, options)?.count(options.limit))
}

/// Orbit decomposition of a tiling set under a region symmetry group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalCount {
    /// Number of orbits.
    pub orbits: BigUint,
    /// Number of tilings before reduction.
    pub raw: BigUint,
    pub group_order: usize,
    /// Orbit size -> number of orbits of that size.
    pub orbit_sizes: BTreeMap<usize, u64>,
}

type TilingKey = Vec<(usize, Vec<Cell>)>;

fn image_key(
    rows: &[usize],
    placements: &[Placement],
    g: &CellMap,
    valid: &HashSet<(usize, Vec<Cell>)>,
) -> Result<TilingKey> {
    let mut key: TilingKey = Vec::with_capacity(rows.len());
    for &r in rows {
        let p = &placements[r];
        let mut cells: Vec<Cell> =
            p.cells.iter().map(|&c| g.apply(c).ok_or(TilingError::InvalidSymmetry)).collect::<Result<_>>()?;
        cells.sort();
        let entry = (p.shape_index, cells);
        if !valid.contains(&entry) {
            return Err(TilingError::InvalidSymmetry);
        }
        key.push(entry);
    }
    key.sort();
    Ok(key)
}

/// Counts tilings up to the symmetry group generated by `options.group`,
/// keeping a tiling only when its key is least in its orbit.
pub fn count_canonical(region: &Region, shapes: &[TileShape], options: &SolveOptions) -> Result<CanonicalCount> {
    let gens =
        options.group.as_ref().ok_or_else(|| TilingError::InvalidArgument("a symmetry group is required".into()))?;
    let group = close_group(region, gens)?;
    let problem = TilingProblem::new(region, shapes, &SolveOptions { limit: None, ..options.clone() })?;
    let placements = problem.placements();
    let valid: HashSet<(usize, Vec<Cell>)> = placements.iter().map(|p| (p.shape_index, p.cells.clone())).collect();
    let solutions = problem.par_solutions();
    let verdicts: Vec<Result<Option<usize>>> = solutions
        .par_iter()
        .map(|rows| {
            let own = image_key(rows, placements, &CellMap::identity(region), &valid)?;
            let mut images = Vec::with_capacity(group.len());
            for g in &group {
                images.push(image_key(rows, placements, g, &valid)?);
            }
            if images.iter().any(|k| *k < own) {
                return Ok(None);
            }
            images.sort();
            images.dedup();
            Ok(Some(images.len()))
        })
        .collect();
    let mut orbit_sizes: BTreeMap<usize, u64> = BTreeMap::new();
    for v in verdicts {
        if let Some(size) = v? {
            *orbit_sizes.entry(size).or_default() += 1;
        }
    }
    Ok(CanonicalCount {
        orbits: BigUint::from(orbit_sizes.values().sum::<u64>()),
        raw: BigUint::from(solutions.len()),
        group_order: group.len(),
        orbit_sizes,
    })
}

const PENTOMINOES: [(&str, &str); 12] = [
    ("F", ".##\n##.\n.#."),
    ("I", "#####"),
    ("L", "####\n#..."),
    ("N", "##..\n.###"),
    ("P", "##\n##\n#."),
    ("T", "###\n.#.\n.#."),
    ("U", "#.#\n###"),
    ("V", "#..\n#..\n###"),
    ("W", "#..\n##.\n.##"),
    ("X", ".#.\n###\n.#."),
    ("Y", "####\n.#.."),
    ("Z", "##.\n.#.\n.##"),
];

/// The twelve free pentominoes, in alphabetical order of their names.
pub fn pentomino_catalog() -> Vec<TileShape> {
    PENTOMINOES
        .iter()
        .map(|(name, text)| TileShape::from_text(*name, SymmetryMode::Free, text).expect("valid pentomino"))
        .collect()
}

/// The two tribone candidates on the hexagonal lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TriboneKind {
    /// Three mutually adjacent hexagons (the `T(2)` triangle).
    Triangle,
    /// Three hexagons in a line.
    Straight,
}

pub fn tribone(kind: TriboneKind) -> TileShape {
    let cells = match kind {
        TriboneKind::Triangle => [Cell::new(0, 0), Cell::new(1, 0), Cell::new(1, 1)],
        TriboneKind::Straight => [Cell::new(0, 0), Cell::new(0, 1), Cell::new(0, 2)],
    };
    let name = match kind {
        TriboneKind::Triangle => "tribone",
        TriboneKind::Straight => "straight-tribone",
    };
    TileShape::new(name, Lattice::HexTriangular, SymmetryMode::Free, cells).expect("valid tribone")
}
