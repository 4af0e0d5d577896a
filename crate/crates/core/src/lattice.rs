//! Cells, regions, colorings, tile shapes, placements and tilings.
//!
//! Coordinates are `(row, col)` with the origin at the top left and rows
//! growing downward. Two lattices are supported: the square lattice and the
//! triangular array of hexagons, where row `r` holds columns `0..=r`.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Result, TilingError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Lattice {
    Square,
    HexTriangular,
}

impl Lattice {
    /// Unit steps to adjacent cells.
    pub fn directions(self) -> &'static [(i32, i32)] {
        match self {
            Lattice::Square => &[(-1, 0), (0, -1), (0, 1), (1, 0)],
            // (r,i) ~ (r,i±1), (r-1,i-1), (r-1,i), (r+1,i), (r+1,i+1)
            Lattice::HexTriangular => &[(-1, -1), (-1, 0), (0, -1), (0, 1), (1, 0), (1, 1)],
        }
    }

    /// Point symmetries of the lattice about the origin, as linear maps on
    /// `(row, col)`. Rotations come first.
    fn transforms(self, mode: SymmetryMode) -> Vec<fn(Cell) -> Cell> {
        let all: Vec<fn(Cell) -> Cell> = match self {
            Lattice::Square => vec![
                |c| Cell::new(c.row, c.col),
                |c| Cell::new(c.col, -c.row),
                |c| Cell::new(-c.row, -c.col),
                |c| Cell::new(-c.col, c.row),
                |c| Cell::new(c.row, -c.col),
                |c| Cell::new(c.col, c.row),
                |c| Cell::new(-c.row, c.col),
                |c| Cell::new(-c.col, -c.row),
            ],
            // 60 degree rotation: (r, c) -> (c, c - r); reflection: (r, c) -> (c, r)
            Lattice::HexTriangular => vec![
                |c| c,
                |c| Cell::new(c.col, c.col - c.row),
                |c| Cell::new(c.col - c.row, -c.row),
                |c| Cell::new(-c.row, -c.col),
                |c| Cell::new(-c.col, c.row - c.col),
                |c| Cell::new(c.row - c.col, c.row),
                |c| Cell::new(c.col, c.row),
                |c| Cell::new(c.col - c.row, c.col),
                |c| Cell::new(-c.row, c.col - c.row),
                |c| Cell::new(-c.col, -c.row),
                |c| Cell::new(c.row - c.col, -c.col),
                |c| Cell::new(c.row, c.row - c.col),
            ],
        };
        let rotations = all.len() / 2;
        match mode {
            SymmetryMode::Free => all,
            SymmetryMode::RotationsOnly => all[..rotations].to_vec(),
            SymmetryMode::Fixed => all[..1].to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: i32,
    pub col: i32,
}

impl Cell {
    pub const fn new(row: i32, col: i32) -> Self {
        Cell { row, col }
    }

    pub fn offset(self, dr: i32, dc: i32) -> Self {
        Cell::new(self.row + dr, self.col + dc)
    }
}

impl From<(i32, i32)> for Cell {
    fn from((row, col): (i32, i32)) -> Self {
        Cell::new(row, col)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

/// A finite set of lattice cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Region {
    lattice: Lattice,
    cells: BTreeSet<Cell>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundingBox {
    pub min_row: i32,
    pub min_col: i32,
    pub max_row: i32,
    pub max_col: i32,
}

impl BoundingBox {
    pub fn height(&self) -> usize {
        (self.max_row - self.min_row + 1) as usize
    }

    pub fn width(&self) -> usize {
        (self.max_col - self.min_col + 1) as usize
    }
}

impl Region {
    /// Builds a region, rejecting duplicates and (for the hexagonal lattice)
    /// cells outside the triangular array.
    pub fn new(lattice: Lattice, cells: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for c in cells {
            if lattice == Lattice::HexTriangular && !(0 <= c.col && c.col <= c.row) {
                return Err(TilingError::OutsideTriangle(c));
            }
            if !set.insert(c) {
                return Err(TilingError::DuplicateCell(c));
            }
        }
        Ok(Region { lattice, cells: set })
    }

    pub fn empty(lattice: Lattice) -> Self {
        Region { lattice, cells: BTreeSet::new() }
    }

    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    /// Cells in sorted (row-major) order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn cell_set(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn bounding_box(&self) -> Option<BoundingBox> {
        let first = self.cells.iter().next()?;
        let mut bb = BoundingBox { min_row: first.row, max_row: first.row, min_col: first.col, max_col: first.col };
        for c in &self.cells {
            bb.min_row = bb.min_row.min(c.row);
            bb.max_row = bb.max_row.max(c.row);
            bb.min_col = bb.min_col.min(c.col);
            bb.max_col = bb.max_col.max(c.col);
        }
        Some(bb)
    }

    /// Region neighbors of `cell` under the lattice adjacency.
    pub fn neighbors(&self, cell: Cell) -> impl Iterator<Item = Cell> + '_ {
        self.lattice
            .directions()
            .iter()
            .map(move |&(dr, dc)| cell.offset(dr, dc))
            .filter(move |n| self.cells.contains(n))
    }

    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.cells.iter().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            for n in self.neighbors(c) {
                if seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        seen.len() == self.cells.len()
    }

    /// Connected and without holes: the complement inside the bounding box
    /// grown by a one-cell border is connected (square lattice).
    pub fn is_simply_connected(&self) -> bool {
        if !self.is_connected() {
            return false;
        }
        let Some(bb) = self.bounding_box() else {
            return true;
        };
        let outside: Vec<Cell> = (bb.min_row - 1..=bb.max_row + 1)
            .flat_map(|r| (bb.min_col - 1..=bb.max_col + 1).map(move |c| Cell::new(r, c)))
            .filter(|c| !self.contains(*c))
            .collect();
        let complement = Region { lattice: Lattice::Square, cells: outside.into_iter().collect() };
        complement.is_connected()
    }

    /// The region minus `cells`; every removed cell must be present.
    pub fn remove_cells(&self, cells: &[Cell]) -> Result<Region> {
        let mut out = self.clone();
        for c in cells {
            if !out.cells.remove(c) {
                return Err(TilingError::CellNotInRegion(*c));
            }
        }
        Ok(out)
    }

    pub fn union(&self, other: &Region) -> Result<Region> {
        if self.lattice != other.lattice {
            return Err(TilingError::LatticeMismatch);
        }
        Region::new(self.lattice, self.cells().chain(other.cells()))
    }

    pub fn translate(&self, dr: i32, dc: i32) -> Result<Region> {
        Region::new(self.lattice, self.cells().map(|c| c.offset(dr, dc)))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "lattice": self.lattice,
            "cells": self.cells.iter().map(|c| [c.row, c.col]).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Region> {
        #[derive(Deserialize)]
        struct Raw {
            lattice: Lattice,
            cells: Vec<(i32, i32)>,
        }
        let raw: Raw =
            serde_json::from_value(value.clone()).map_err(|e| TilingError::Parse { line: 0, msg: e.to_string() })?;
        Region::new(raw.lattice, raw.cells.into_iter().map(Cell::from))
    }
}

/// `rows x cols` rectangle anchored at the origin.
pub fn build_rectangle(rows: usize, cols: usize) -> Result<Region> {
    if rows == 0 || cols == 0 {
        return Err(TilingError::ZeroDimension);
    }
    let cells = (0..rows as i32).flat_map(|r| (0..cols as i32).map(move |c| Cell::new(r, c)));
    Region::new(Lattice::Square, cells)
}

/// Aztec diamond of the given order: centered rows of length
/// 2, 4, ..., 2n, 2n, ..., 4, 2 inside a `2n x 2n` box.
pub fn build_aztec(order: usize) -> Result<Region> {
    if order == 0 {
        return Err(TilingError::ZeroDimension);
    }
    let n = order as i32;
    let mut cells = Vec::with_capacity(2 * order * (order + 1));
    for r in 0..2 * n {
        let half = if r < n { r + 1 } else { 2 * n - r };
        for c in n - half..n + half {
            cells.push(Cell::new(r, c));
        }
    }
    Region::new(Lattice::Square, cells)
}

/// Triangular array `T(n)` of `n(n+1)/2` hexagons.
pub fn build_triangle(n: usize) -> Region {
    let cells = (0..n as i32).flat_map(|r| (0..=r).map(move |c| Cell::new(r, c)));
    Region { lattice: Lattice::HexTriangular, cells: cells.collect() }
}

/// A total assignment of color indices to the cells of a region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    name: String,
    k: usize,
    colors: BTreeMap<Cell, usize>,
}

impl Coloring {
    pub fn new(name: impl Into<String>, k: usize, colors: BTreeMap<Cell, usize>) -> Result<Self> {
        if let Some(&bad) = colors.values().find(|&&c| c >= k) {
            return Err(TilingError::ColorOutOfRange(bad));
        }
        Ok(Coloring { name: name.into(), k, colors })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn num_colors(&self) -> usize {
        self.k
    }

    pub fn color(&self, cell: Cell) -> Option<usize> {
        self.colors.get(&cell).copied()
    }

    /// Whether every cell of `region` is colored.
    pub fn covers(&self, region: &Region) -> bool {
        region.cells().all(|c| self.colors.contains_key(&c))
    }

    /// Number of region cells of each color.
    pub fn totals(&self, region: &Region) -> Vec<usize> {
        let mut t = vec![0; self.k];
        for c in region.cells() {
            if let Some(col) = self.color(c) {
                t[col] += 1;
            }
        }
        t
    }

    /// Color counts of an arbitrary cell set.
    pub fn profile(&self, cells: &[Cell]) -> Vec<usize> {
        let mut t = vec![0; self.k];
        for &c in cells {
            if let Some(col) = self.color(c) {
                t[col] += 1;
            }
        }
        t
    }
}

/// Chessboard parity of a square cell: 0 ("black") when `row + col` is even.
pub fn chess_color(cell: Cell) -> usize {
    (cell.row + cell.col).rem_euclid(2) as usize
}

pub fn chessboard_coloring(region: &Region) -> Result<Coloring> {
    if region.lattice() != Lattice::Square {
        return Err(TilingError::LatticeMismatch);
    }
    Coloring::new("chessboard", 2, region.cells().map(|c| (c, chess_color(c))).collect())
}

/// 2x2-block coloring: `2 * (row mod 2) + (col mod 2)`.
pub fn block4_coloring(region: &Region) -> Result<Coloring> {
    if region.lattice() != Lattice::Square {
        return Err(TilingError::LatticeMismatch);
    }
    let colors = region.cells().map(|c| (c, (2 * c.row.rem_euclid(2) + c.col.rem_euclid(2)) as usize)).collect();
    Coloring::new("block4", 4, colors)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum SymmetryMode {
    /// Rotations and reflections.
    #[default]
    Free,
    RotationsOnly,
    Fixed,
}

/// A polyomino (or polyhex) in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TileShape {
    name: String,
    lattice: Lattice,
    mode: SymmetryMode,
    offsets: Vec<Cell>,
}

fn normalize(cells: &[Cell]) -> Vec<Cell> {
    let min_r = cells.iter().map(|c| c.row).min().unwrap_or(0);
    let min_c = cells.iter().map(|c| c.col).min().unwrap_or(0);
    let mut out: Vec<Cell> = cells.iter().map(|c| c.offset(-min_r, -min_c)).collect();
    out.sort();
    out
}

impl TileShape {
    pub fn new(
        name: impl Into<String>,
        lattice: Lattice,
        mode: SymmetryMode,
        cells: impl IntoIterator<Item = Cell>,
    ) -> Result<Self> {
        let cells: Vec<Cell> = cells.into_iter().collect();
        let as_region = Region { lattice, cells: cells.iter().copied().collect() };
        if cells.is_empty() || as_region.len() != cells.len() || !as_region.is_connected() {
            return Err(TilingError::InvalidShape);
        }
        let mut shape = TileShape { name: name.into(), lattice, mode, offsets: Vec::new() };
        shape.offsets = shape.images_of(&cells).into_iter().min().expect("at least the identity image");
        Ok(shape)
    }

    fn images_of(&self, cells: &[Cell]) -> Vec<Vec<Cell>> {
        self.lattice
            .transforms(self.mode)
            .into_iter()
            .map(|t| normalize(&cells.iter().map(|&c| t(c)).collect::<Vec<_>>()))
            .collect()
    }

    /// Square-lattice polyomino from text rows of '#' and '.'.
    pub fn from_text(name: impl Into<String>, mode: SymmetryMode, text: &str) -> Result<Self> {
        let region = parse_region(text, Lattice::Square)?;
        TileShape::new(name, Lattice::Square, mode, region.cells())
    }

    pub fn domino() -> Self {
        TileShape::new("domino", Lattice::Square, SymmetryMode::Free, [Cell::new(0, 0), Cell::new(0, 1)])
            .expect("domino is valid")
    }

    /// `a x b` rectangle, placed in both orientations.
    pub fn rectangle(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(TilingError::ZeroDimension);
        }
        let cells = (0..a as i32).flat_map(|r| (0..b as i32).map(move |c| Cell::new(r, c)));
        TileShape::new(format!("{a}x{b}"), Lattice::Square, SymmetryMode::Free, cells)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    pub fn mode(&self) -> SymmetryMode {
        self.mode
    }

    pub fn offsets(&self) -> &[Cell] {
        &self.offsets
    }

    pub fn len(&self) -> usize {
        self.offsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offsets.is_empty()
    }

    /// Distinct normalized images under the allowed symmetries, sorted.
    pub fn orientations(&self) -> Vec<Vec<Cell>> {
        let mut imgs = self.images_of(&self.offsets);
        imgs.sort();
        imgs.dedup();
        imgs
    }

    /// Whether `cells` is a translated allowed image of this shape.
    pub fn matches(&self, cells: &[Cell]) -> bool {
        let n = normalize(cells);
        self.orientations().contains(&n)
    }

    /// Same shape with a different symmetry mode.
    pub fn with_mode(&self, mode: SymmetryMode) -> Self {
        TileShape::new(self.name.clone(), self.lattice, mode, self.offsets.iter().copied()).expect("already validated")
    }
}

/// A shape instance occupying absolute cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Placement {
    /// Index of the shape in the list the placement was generated from.
    #[serde(skip)]
    pub shape_index: usize,
    pub shape: String,
    /// Sorted absolute cells.
    pub cells: Vec<Cell>,
}

impl Placement {
    pub fn new(shape_index: usize, shape: impl Into<String>, mut cells: Vec<Cell>) -> Self {
        cells.sort();
        Placement { shape_index, shape: shape.into(), cells }
    }

    pub fn domino(a: Cell, b: Cell) -> Self {
        Placement::new(0, "domino", vec![a, b])
    }

    pub fn is_horizontal_domino(&self) -> bool {
        self.cells.len() == 2 && self.cells[0].row == self.cells[1].row
    }

    pub fn is_vertical_domino(&self) -> bool {
        self.cells.len() == 2 && self.cells[0].col == self.cells[1].col
    }
}

/// A set of placements that exactly partitions a region.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tiling {
    region: Arc<Region>,
    placements: Vec<Placement>,
}

impl Tiling {
    /// Validates disjointness and exact coverage; placements are stored sorted.
    pub fn new(region: Arc<Region>, mut placements: Vec<Placement>) -> Result<Self> {
        validate_tiling(&region, &placements)?;
        placements.sort();
        Ok(Tiling { region, placements })
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn region_arc(&self) -> &Arc<Region> {
        &self.region
    }

    pub fn placements(&self) -> &[Placement] {
        &self.placements
    }

    pub fn len(&self) -> usize {
        self.placements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.placements.is_empty()
    }

    /// Map from cell to the index of the placement covering it.
    pub fn owner_map(&self) -> HashMap<Cell, usize> {
        self.placements.iter().enumerate().flat_map(|(i, p)| p.cells.iter().map(move |&c| (c, i))).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "placements": self.placements.iter().map(|p| serde_json::json!({
                "shape": p.shape,
                "cells": p.cells.iter().map(|c| [c.row, c.col]).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Checks that the placements cover every cell of `region` exactly once.
pub fn validate_tiling(region: &Region, placements: &[Placement]) -> Result<()> {
    let mut counts: BTreeMap<Cell, usize> = BTreeMap::new();
    for p in placements {
        if p.cells.is_empty() {
            return Err(TilingError::InvalidTiling("empty placement".into()));
        }
        for &c in &p.cells {
            *counts.entry(c).or_default() += 1;
        }
    }
    for (c, n) in &counts {
        if !region.contains(*c) {
            return Err(TilingError::InvalidTiling(format!("cell {c} outside region")));
        }
        if *n != 1 {
            return Err(TilingError::InvalidTiling(format!("cell {c} covered {n} times")));
        }
    }
    if counts.len() != region.len() {
        return Err(TilingError::InvalidTiling(format!("{} of {} cells covered", counts.len(), region.len())));
    }
    Ok(())
}

/// Parses the text format: '#' is a cell, '.' a hole. Blank lines at either
/// end are ignored. On the hexagonal lattice row `r` must have `r + 1` symbols.
pub fn parse_region(text: &str, lattice: Lattice) -> Result<Region> {
    let lines: Vec<&str> = text.lines().map(|l| l.trim_end_matches('\r')).collect();
    let first = lines.iter().position(|l| !l.trim().is_empty());
    let last = lines.iter().rposition(|l| !l.trim().is_empty());
    let (Some(first), Some(last)) = (first, last) else {
        return Ok(Region::empty(lattice));
    };
    let mut cells = Vec::new();
    let mut width = None;
    for (r, line) in lines[first..=last].iter().enumerate() {
        let line_no = first + r + 1;
        let len = line.chars().count();
        match lattice {
            Lattice::Square => {
                if *width.get_or_insert(len) != len {
                    return Err(TilingError::Parse { line: line_no, msg: "ragged row".into() });
                }
            }
            Lattice::HexTriangular => {
                if len != r + 1 {
                    return Err(TilingError::Parse {
                        line: line_no,
                        msg: format!("row {r} must have {} symbols", r + 1),
                    });
                }
            }
        }
        for (c, ch) in line.chars().enumerate() {
            match ch {
                '#' => cells.push(Cell::new(r as i32, c as i32)),
                '.' => {}
                other => return Err(TilingError::Parse { line: line_no, msg: format!("illegal character {other:?}") }),
            }
        }
    }
    Region::new(lattice, cells)
}

/// Renders a region in the text format. Regions with nonnegative
/// coordinates keep their offset from the origin.
pub fn render_region(region: &Region) -> String {
    let Some(bb) = region.bounding_box() else {
        return String::new();
    };
    let (r0, c0) = (bb.min_row.min(0), bb.min_col.min(0));
    let mut out = String::new();
    for r in r0..=bb.max_row {
        let (from, to) = match region.lattice() {
            Lattice::Square => (c0, bb.max_col),
            Lattice::HexTriangular => (0, r),
        };
        for c in from..=to {
            out.push(if region.contains(Cell::new(r, c)) { '#' } else { '.' });
        }
        out.push('\n');
    }
    out
}

/// A permutation of region cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CellMap(pub BTreeMap<Cell, Cell>);

impl CellMap {
    pub fn apply(&self, cell: Cell) -> Option<Cell> {
        self.0.get(&cell).copied()
    }

    pub fn compose(&self, then: &CellMap) -> Option<CellMap> {
        self.0.iter().map(|(&k, &v)| then.apply(v).map(|w| (k, w))).collect::<Option<BTreeMap<_, _>>>().map(CellMap)
    }

    pub fn identity(region: &Region) -> CellMap {
        CellMap(region.cells().map(|c| (c, c)).collect())
    }

    /// Whether this is a bijection of `region` onto itself.
    pub fn preserves(&self, region: &Region) -> bool {
        self.0.len() == region.len()
            && self.0.keys().all(|c| region.contains(*c))
            && self.0.values().copied().collect::<BTreeSet<_>>() == *region.cell_set()
    }
}

/// Closes a set of generators into the full group they generate.
pub fn close_group(region: &Region, generators: &[CellMap]) -> Result<Vec<CellMap>> {
    for g in generators {
        if !g.preserves(region) {
            return Err(TilingError::InvalidSymmetry);
        }
    }
    let id = CellMap::identity(region);
    let mut group = vec![id.clone()];
    let mut seen: BTreeSet<Vec<(Cell, Cell)>> = BTreeSet::from([id.0.clone().into_iter().collect()]);
    let mut frontier = vec![id];
    while let Some(el) = frontier.pop() {
        for g in generators {
            let next = el.compose(g).ok_or(TilingError::InvalidSymmetry)?;
            if seen.insert(next.0.clone().into_iter().collect()) {
                group.push(next.clone());
                frontier.push(next);
            }
        }
    }
    Ok(group)
}

/// The symmetry group of a `rows x cols` rectangle placed at `(r0, c0)`:
/// order 4, or 8 when square.
pub fn rectangle_symmetries(r0: i32, c0: i32, rows: usize, cols: usize) -> Vec<CellMap> {
    let (h, w) = (rows as i32, cols as i32);
    let cells: Vec<Cell> = (0..h).flat_map(|r| (0..w).map(move |c| Cell::new(r, c))).collect();
    type Transform = fn(i32, i32, i32, i32) -> (i32, i32);
    let mut maps: Vec<Transform> =
        vec![|r, c, _, _| (r, c), |r, c, _, w| (r, w - 1 - c), |r, c, h, _| (h - 1 - r, c), |r, c, h, w| {
            (h - 1 - r, w - 1 - c)
        }];
    if rows == cols {
        maps.extend_from_slice(&[
            |r, c, _, _| (c, r),
            |r, c, h, _| (c, h - 1 - r),
            |r, c, _, w| (w - 1 - c, r),
            |r, c, h, w| (w - 1 - c, h - 1 - r),
        ]);
    }
    maps.into_iter()
        .map(|f| {
            CellMap(
                cells
                    .iter()
                    .map(|c| {
                        let (r, cc) = f(c.row, c.col, h, w);
                        (c.offset(r0, c0), Cell::new(r + r0, cc + c0))
                    })
                    .collect(),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rectangles() {
        assert_eq!(build_rectangle(2, 3).unwrap().len(), 6);
        assert_eq!(build_rectangle(8, 8).unwrap().len(), 64);
        let one = build_rectangle(1, 1).unwrap();
        assert_eq!(one.cells().collect::<Vec<_>>(), vec![Cell::new(0, 0)]);
        assert_eq!(build_rectangle(0, 3), Err(TilingError::ZeroDimension));
    }

    #[test]
    fn aztec_sizes() {
        let az1 = build_aztec(1).unwrap();
        assert_eq!(az1.len(), 4);
        assert_eq!(render_region(&az1), "##\n##\n");
        assert_eq!(build_aztec(2).unwrap().len(), 12);
        assert_eq!(build_aztec(50).unwrap().len(), 5100);
        assert_eq!(render_region(&build_aztec(2).unwrap()), ".##.\n####\n####\n.##.\n");
        for n in 1..=100 {
            assert_eq!(build_aztec(n).unwrap().len(), 2 * n * (n + 1));
        }
        assert!(build_aztec(0).is_err());
    }

    #[test]
    fn triangles() {
        assert!(build_triangle(0).is_empty());
        assert_eq!(build_triangle(2).len(), 3);
        assert_eq!(build_triangle(9).len(), 45);
        for n in 0..40 {
            assert_eq!(build_triangle(n).len(), n * (n + 1) / 2);
        }
        let t3 = build_triangle(3);
        assert_eq!(render_region(&t3), "#\n##\n###\n");
        assert_eq!(t3.neighbors(Cell::new(1, 0)).count(), 4);
    }

    #[test]
    fn removing_cells() {
        let board = build_rectangle(8, 8).unwrap();
        let d = board.remove_cells(&[Cell::new(0, 0), Cell::new(7, 7)]).unwrap();
        assert_eq!(d.len(), 62);
        assert_eq!(board.remove_cells(&[]).unwrap(), board);
        let holey = build_rectangle(3, 3).unwrap().remove_cells(&[Cell::new(1, 1)]).unwrap();
        assert_eq!(holey.len(), 8);
        assert!(!holey.is_simply_connected());
        assert!(matches!(d.remove_cells(&[Cell::new(0, 0)]), Err(TilingError::CellNotInRegion(_))));
    }

    #[test]
    fn colorings() {
        let board = build_rectangle(8, 8).unwrap();
        assert_eq!(chessboard_coloring(&board).unwrap().totals(&board), vec![32, 32]);
        let d = board.remove_cells(&[Cell::new(0, 0), Cell::new(7, 7)]).unwrap();
        assert_eq!(chessboard_coloring(&d).unwrap().totals(&d), vec![30, 32]);
        let one = build_rectangle(1, 1).unwrap();
        assert_eq!(chessboard_coloring(&one).unwrap().totals(&one), vec![1, 0]);

        let ten = build_rectangle(10, 10).unwrap();
        assert_eq!(block4_coloring(&ten).unwrap().totals(&ten), vec![25; 4]);
        let two = build_rectangle(2, 2).unwrap();
        assert_eq!(block4_coloring(&two).unwrap().totals(&two), vec![1; 4]);
        let col = block4_coloring(&ten).unwrap();
        for r in 0..10 {
            for c in 0..7 {
                let cells: Vec<Cell> = (0..4).map(|k| Cell::new(r, c + k)).collect();
                let p = col.profile(&cells);
                assert_eq!(p.iter().filter(|&&x| x == 2).count(), 2);
                assert_eq!(p.iter().filter(|&&x| x == 0).count(), 2);
            }
        }
        assert!(chessboard_coloring(&build_triangle(3)).is_err());
    }

    #[test]
    fn parse_and_render() {
        let sq = parse_region("##\n##", Lattice::Square).unwrap();
        assert_eq!(sq, build_rectangle(2, 2).unwrap());
        let l = parse_region("\n\n##\n.#\n\n", Lattice::Square).unwrap();
        assert_eq!(l.len(), 3);
        assert_eq!(render_region(&l), "##\n.#\n");
        assert!(matches!(parse_region("##\n#", Lattice::Square), Err(TilingError::Parse { line: 2, .. })));
        assert!(matches!(parse_region("#x", Lattice::Square), Err(TilingError::Parse { .. })));
        assert!(parse_region("#\n##\n##", Lattice::HexTriangular).is_err());
        let hex = parse_region("#\n.#\n###", Lattice::HexTriangular).unwrap();
        assert_eq!(hex.len(), 5);
        assert_eq!(render_region(&hex), "#\n.#\n###\n");
    }

    #[test]
    fn json_round_trip() {
        let az = build_aztec(3).unwrap();
        assert_eq!(Region::from_json(&az.to_json()).unwrap(), az);
        let t = build_triangle(4);
        assert_eq!(Region::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn shape_canonical_forms() {
        let l1 = TileShape::from_text("L", SymmetryMode::Free, "#.\n#.\n##").unwrap();
        let l2 = TileShape::from_text("L", SymmetryMode::Free, "..#\n###").unwrap();
        let j = TileShape::from_text("L", SymmetryMode::Free, ".#\n.#\n##").unwrap();
        assert_eq!(l1, l2);
        assert_eq!(l1, j);
        assert_eq!(l1.orientations().len(), 8);
        assert_eq!(j.with_mode(SymmetryMode::RotationsOnly).orientations().len(), 4);
        let lr = TileShape::from_text("L", SymmetryMode::RotationsOnly, "#.\n#.\n##").unwrap();
        let lr2 = TileShape::from_text("L", SymmetryMode::RotationsOnly, "..#\n###").unwrap();
        assert_eq!(lr, lr2);
        let jr = TileShape::from_text("L", SymmetryMode::RotationsOnly, ".#\n.#\n##").unwrap();
        assert_ne!(lr, jr);
        assert_eq!(TileShape::domino().orientations().len(), 2);
        assert_eq!(TileShape::domino().with_mode(SymmetryMode::Fixed).orientations().len(), 1);
        assert!(TileShape::new("gap", Lattice::Square, SymmetryMode::Free, [Cell::new(0, 0), Cell::new(0, 2)]).is_err());
    }

    #[test]
    fn hex_shapes() {
        let tri = TileShape::new(
            "tri",
            Lattice::HexTriangular,
            SymmetryMode::Free,
            [Cell::new(0, 0), Cell::new(1, 0), Cell::new(1, 1)],
        )
        .unwrap();
        assert_eq!(tri.orientations().len(), 2);
        let line = TileShape::new(
            "line",
            Lattice::HexTriangular,
            SymmetryMode::Free,
            [Cell::new(0, 0), Cell::new(0, 1), Cell::new(0, 2)],
        )
        .unwrap();
        assert_eq!(line.orientations().len(), 3);
        // every image stays a connected hex shape
        for o in line.orientations().iter().chain(tri.orientations().iter()) {
            let r = Region { lattice: Lattice::HexTriangular, cells: o.iter().copied().collect() };
            assert!(r.is_connected());
        }
    }

    #[test]
    fn tiling_validation() {
        let r = Arc::new(build_rectangle(2, 2).unwrap());
        let ok = vec![
            Placement::domino(Cell::new(0, 0), Cell::new(0, 1)),
            Placement::domino(Cell::new(1, 0), Cell::new(1, 1)),
        ];
        assert!(Tiling::new(r.clone(), ok).is_ok());
        let overlap = vec![
            Placement::domino(Cell::new(0, 0), Cell::new(0, 1)),
            Placement::domino(Cell::new(0, 1), Cell::new(1, 1)),
        ];
        assert!(Tiling::new(r.clone(), overlap).is_err());
        let short = vec![Placement::domino(Cell::new(0, 0), Cell::new(0, 1))];
        assert!(Tiling::new(r, short).is_err());
    }

    #[test]
    fn rectangle_groups() {
        let region = build_rectangle(6, 10).unwrap();
        let g = rectangle_symmetries(0, 0, 6, 10);
        assert_eq!(g.len(), 4);
        assert!(g.iter().all(|m| m.preserves(&region)));
        assert_eq!(close_group(&region, &g[1..3]).unwrap().len(), 4);
        assert_eq!(rectangle_symmetries(0, 0, 4, 4).len(), 8);
    }
}
