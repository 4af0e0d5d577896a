//! Region and tile arguments shared by several subcommands.

use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use tilings::exact_cover::{pentomino_catalog, tribone, TriboneKind};
use tilings::lattice::{build_aztec, build_rectangle, build_triangle, parse_region};
use tilings::{Cell, Lattice, Region, Result, SymmetryMode, TileShape, TilingError};

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum LatticeArg {
    Square,
    Hex,
}

impl From<LatticeArg> for Lattice {
    fn from(l: LatticeArg) -> Self {
        match l {
            LatticeArg::Square => Lattice::Square,
            LatticeArg::Hex => Lattice::HexTriangular,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct RegionArgs {
    /// Rectangle with ROWS and COLS.
    #[arg(long, num_args = 2, value_names = ["ROWS", "COLS"])]
    pub rect: Option<Vec<usize>>,
    /// Aztec diamond of the given order.
    #[arg(long, value_name = "ORDER")]
    pub aztec: Option<usize>,
    /// Triangular array of hexagons with N rows.
    #[arg(long, value_name = "N")]
    pub triangle: Option<usize>,
    /// Region file: JSON `{lattice, cells}` or a `#`/`.` grid.
    #[arg(long, value_name = "FILE")]
    pub region: Option<PathBuf>,
    /// Lattice of a grid region file.
    #[arg(long, value_enum, default_value = "square")]
    pub lattice: LatticeArg,
    /// Cell to delete, as `ROW,COL`; repeatable.
    #[arg(long = "remove", value_name = "ROW,COL")]
    pub remove: Vec<String>,
}

pub fn parse_cell(text: &str) -> Result<Cell> {
    let bad = || TilingError::InvalidArgument(format!("expected ROW,COL, got {text:?}"));
    let (r, c) = text.split_once(',').ok_or_else(bad)?;
    Ok(Cell::new(r.trim().parse().map_err(|_| bad())?, c.trim().parse().map_err(|_| bad())?))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| TilingError::InvalidArgument(format!("{}: {e}", path.display())))
}

pub fn read_json(path: &Path) -> Result<serde_json::Value> {
    serde_json::from_str(&read(path)?).map_err(|e| TilingError::Parse { line: e.line(), msg: e.to_string() })
}

impl RegionArgs {
    pub fn build(&self) -> Result<Region> {
        let given = [self.rect.is_some(), self.aztec.is_some(), self.triangle.is_some(), self.region.is_some()];
        if given.iter().filter(|&&g| g).count() != 1 {
            return Err(TilingError::InvalidArgument(
                "give exactly one of --rect, --aztec, --triangle, --region".into(),
            ));
        }
        let region = if let Some(rc) = &self.rect {
            build_rectangle(rc[0], rc[1])?
        } else if let Some(n) = self.aztec {
            build_aztec(n)?
        } else if let Some(n) = self.triangle {
            build_triangle(n)
        } else {
            let path = self.region.as_ref().expect("checked above");
            let text = read(path)?;
            if path.extension().is_some_and(|e| e == "json") {
                let v = serde_json::from_str(&text)
                    .map_err(|e| TilingError::Parse { line: e.line(), msg: e.to_string() })?;
                Region::from_json(&v)?
            } else {
                parse_region(&text, self.lattice.into())?
            }
        };
        let holes = self.remove.iter().map(|t| parse_cell(t)).collect::<Result<Vec<_>>>()?;
        if holes.is_empty() {
            Ok(region)
        } else {
            region.remove_cells(&holes)
        }
    }

    /// `(rows, cols)` when the region is a plain rectangle.
    pub fn rectangle(&self) -> Option<(usize, usize)> {
        match (&self.rect, self.remove.is_empty()) {
            (Some(rc), true) => Some((rc[0], rc[1])),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Free,
    Rotations,
    Fixed,
}

impl From<ModeArg> for SymmetryMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Free => SymmetryMode::Free,
            ModeArg::Rotations => SymmetryMode::RotationsOnly,
            ModeArg::Fixed => SymmetryMode::Fixed,
        }
    }
}

/// Tile names: `domino`, `pentominoes`, `tribone`, `straight-tribone`,
/// `AxB` for a bar or brick, or a path to a `#`/`.` shape file.
pub fn parse_tiles(names: &[String], mode: Option<ModeArg>) -> Result<Vec<TileShape>> {
    let mut shapes = Vec::new();
    for name in names {
        match name.as_str() {
            "domino" => shapes.push(TileShape::domino()),
            "pentominoes" => shapes.extend(pentomino_catalog()),
            "tribone" => shapes.push(tribone(TriboneKind::Triangle)),
            "straight-tribone" => shapes.push(tribone(TriboneKind::Straight)),
            other => {
                if let Some((a, b)) = other.split_once('x') {
                    if let (Ok(a), Ok(b)) = (a.parse(), b.parse()) {
                        shapes.push(TileShape::rectangle(a, b)?);
                        continue;
                    }
                }
                let path = Path::new(other);
                let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or(other);
                shapes.push(TileShape::from_text(stem, SymmetryMode::Free, &read(path)?)?);
            }
        }
    }
    if shapes.is_empty() {
        shapes.push(TileShape::domino());
    }
    if let Some(m) = mode {
        shapes = shapes.iter().map(|s| s.with_mode(m.into())).collect();
    }
    Ok(shapes)
}

pub fn is_domino_set(shapes: &[TileShape]) -> bool {
    shapes.len() == 1 && shapes[0].lattice() == Lattice::Square && shapes[0].len() == 2
}
