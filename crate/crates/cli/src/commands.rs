//! Subcommand definitions and their implementations.

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tilings::counting::{
    arctic_statistic, arctic_survey, aztec_count, aztec_sample, catalan_constant, count_domino_tilings_with,
    dof_per_square, kasteleyn_count, square_dof_constant, ProfileTable,
};
use tilings::domino::{flip_components, flip_distance, gomory_tiling, hall_certificate, matching_tiling, FlipDistance};
use tilings::exact_cover::{count_canonical, count_tilings, find_tiling, SolveOptions};
use tilings::impossibility::{balance_obstruction, parity_obstruction};
use tilings::lattice::{block4_coloring, chessboard_coloring, rectangle_symmetries, Placement};
use tilings::rect::{
    cube_root_family, debruijn_klarner, find_similar_guillotine_tiling, row_stack_roots, similar_rect_square_tileable,
    verify_row_stack_layout, IntPolynomial,
};
use tilings::squared::{
    is_perfect, is_squared_square, reconstruct, solve_layout, to_smith_network, total_resistance, validate_kirchhoff,
    SquaredLayout,
};
use tilings::svg::{render_squares, render_tiling};
use tilings::{BigCount, Region, Tiling, TilingError};

use crate::input::{is_domino_set, parse_cell, parse_tiles, read_json, LatticeArg, ModeArg, RegionArgs};

#[derive(Debug, Parser)]
#[command(name = "tilings", version, about = "Exact tiling computations")]
pub struct Cli {
    /// Worker threads (default: all cores, or the TILINGS_THREADS variable).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CountMethod {
    Auto,
    Dp,
    Exact,
    Kasteleyn,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SampleMethod {
    Auto,
    Dp,
    Shuffle,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CertifyKind {
    /// Matching: a tiling or a Hall violator.
    Matching,
    /// Two colors covered equally by every placement.
    Balance,
    /// Every placement covers each color an even number of times.
    Parity,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ColoringArg {
    Chessboard,
    Block4,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count tilings of a region.
    Count {
        #[command(flatten)]
        region: RegionArgs,
        /// Tile set: domino, pentominoes, tribone, straight-tribone, AxB, or a shape file; repeatable.
        #[arg(long = "tile", value_name = "TILE")]
        tiles: Vec<String>,
        /// Symmetry mode applied to every tile.
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        /// Counting method; auto picks the profile DP for dominoes.
        #[arg(long, value_enum, default_value = "auto")]
        method: CountMethod,
        /// Each shape used exactly once.
        #[arg(long)]
        once_each: bool,
        /// Count up to the rectangle's symmetries.
        #[arg(long)]
        canonical: bool,
        /// Widest frontier the profile DP may use.
        #[arg(long, default_value_t = tilings::counting::DEFAULT_MAX_WIDTH)]
        max_width: usize,
    },
    /// Draw a uniformly random domino tiling.
    Sample {
        #[command(flatten)]
        region: RegionArgs,
        /// Seed for the random stream.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sampler; auto shuffles Aztec diamonds and uses the DP otherwise.
        #[arg(long, value_enum, default_value = "auto")]
        method: SampleMethod,
        /// Also write the tiling as SVG to this file.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Frozen fraction outside the inscribed circle of random Aztec tilings.
    Arctic {
        /// Order of the Aztec diamond.
        #[arg(long)]
        order: usize,
        /// Number of independent samples.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Seed for the random stream.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Prove or refute domino tilability of a region.
    Certify {
        #[command(flatten)]
        region: RegionArgs,
        /// Kind of certificate to search for.
        #[arg(long, value_enum, default_value = "matching")]
        kind: CertifyKind,
        /// Tile set: domino, pentominoes, tribone, straight-tribone, AxB, or a shape file; repeatable.
        #[arg(long = "tile", value_name = "TILE")]
        tiles: Vec<String>,
        /// Coloring used by the balance and parity arguments.
        #[arg(long, value_enum, default_value = "chessboard")]
        coloring: ColoringArg,
        /// The two colors compared by a balance argument.
        #[arg(long, num_args = 2, default_values_t = [0usize, 1])]
        colors: Vec<usize>,
    },
    /// Tile a board minus two cells along a closed path.
    Gomory {
        /// Board rows (even).
        #[arg(long)]
        rows: usize,
        /// Board columns (even).
        #[arg(long)]
        cols: usize,
        /// The two removed cells.
        #[arg(long, num_args = 2, value_names = ["ROW,COL", "ROW,COL"])]
        holes: Vec<String>,
    },
    /// Flip-graph structure of domino tilings.
    Flips {
        #[command(subcommand)]
        action: FlipAction,
    },
    /// Find a tiling with arbitrary shapes by exact cover.
    Solve {
        #[command(flatten)]
        region: RegionArgs,
        /// Tile set: domino, pentominoes, tribone, straight-tribone, AxB, or a shape file; repeatable.
        #[arg(long = "tile", value_name = "TILE")]
        tiles: Vec<String>,
        /// Symmetry mode applied to every tile.
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        /// Each shape used exactly once.
        #[arg(long)]
        once_each: bool,
        /// Also write the tiling as SVG to this file.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Decide whether an M x N rectangle can be tiled by A x B bricks.
    DecideRect { m: u64, n: u64, a: u64, b: u64 },
    /// Tiling a square with rectangles similar to 1 x x.
    Similar {
        /// Coefficients `c0,c1,...` of the minimal polynomial of x.
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
        /// x = R/S + cube root of 2.
        #[arg(long, num_args = 2, value_names = ["R", "S"], allow_hyphen_values = true)]
        cube_family: Option<Vec<i64>>,
        /// Roots of K x^2 - K x + 1 and their row-stack layouts.
        #[arg(long, value_name = "K")]
        row_stack: Option<u64>,
        /// Search slicing layouts for this x.
        #[arg(long, value_name = "X")]
        search: Option<f64>,
        /// Most pieces the search may use (at most 5).
        #[arg(long, default_value_t = 5)]
        max_pieces: usize,
    },
    /// Squared rectangles from a line layout.
    Squared {
        #[command(subcommand)]
        action: SquaredAction,
    },
    /// Render a tiling JSON file as SVG.
    Render {
        /// Tiling JSON as printed by `sample` or `solve`.
        tiling: PathBuf,
        /// Lattice of the tiling.
        #[arg(long, value_enum, default_value = "square")]
        lattice: LatticeArg,
        /// Pixels per cell.
        #[arg(long, default_value_t = 20)]
        scale: u32,
    },
    /// Growth constants.
    Constants {
        /// Decimal digits printed.
        #[arg(long, default_value_t = 30)]
        digits: usize,
        /// Also report T^(1/N) for these N and T.
        #[arg(long, num_args = 2, value_names = ["N", "T"])]
        dof: Option<Vec<String>>,
    },
}

#[derive(Debug, Subcommand)]
pub enum FlipAction {
    /// Partition all tilings into flip-connected classes.
    Components {
        #[command(flatten)]
        region: RegionArgs,
        /// Most tilings the enumeration may visit.
        #[arg(long, default_value_t = tilings::domino::flips::DEFAULT_FLIP_GUARD)]
        guard: u64,
        /// List the tilings in each class.
        #[arg(long)]
        list: bool,
    },
    /// Shortest flip sequence between two tilings, by enumeration index.
    Distance {
        #[command(flatten)]
        region: RegionArgs,
        /// Index of the start tiling in enumeration order.
        from: usize,
        /// Index of the target tiling.
        to: usize,
        /// Most tilings the enumeration may visit.
        #[arg(long, default_value_t = tilings::domino::flips::DEFAULT_FLIP_GUARD)]
        guard: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum SquaredAction {
    /// Side lengths, dimensions and checks.
    Solve {
        /// Layout JSON file.
        layout: PathBuf,
        /// Also write the solved rectangle as SVG to this file.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Effective resistance of the layout's network.
    Resistance {
        /// Layout JSON file.
        layout: PathBuf,
    },
}

pub struct Outcome {
    pub code: u8,
    pub stdout: String,
}

impl Outcome {
    fn json(code: u8, v: Value) -> Self {
        Outcome { code, stdout: pretty(&v) }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

type CmdResult = Result<Outcome, TilingError>;

pub fn run(cli: Cli) -> Outcome {
    match dispatch(cli.command) {
        Ok(o) => o,
        Err(e) => {
            let code = match e {
                TilingError::GuardExceeded { .. } | TilingError::PrecisionInsufficient => 3,
                _ => 2,
            };
            eprintln!("error: {e}");
            Outcome::json(code, json!({ "error": e.to_string() }))
        }
    }
}

fn dispatch(cmd: Command) -> CmdResult {
    match cmd {
        Command::Count { region, tiles, mode, method, once_each, canonical, max_width } => {
            count(region, tiles, mode, method, once_each, canonical, max_width)
        }
        Command::Sample { region, seed, method, svg } => sample(region, seed, method, svg),
        Command::Arctic { order, samples, seed } => {
            let s = arctic_survey(order, samples, seed)?;
            Ok(Outcome::json(
                0,
                json!({ "order": s.order, "samples": s.samples, "seed": seed, "mean": s.mean, "std_error": s.std_error }),
            ))
        }
        Command::Certify { region, kind, tiles, coloring, colors } => certify(region, kind, tiles, coloring, colors),
        Command::Gomory { rows, cols, holes } => {
            let h1 = parse_cell(&holes[0])?;
            let h2 = parse_cell(&holes[1])?;
            match gomory_tiling(rows, cols, h1, h2) {
                Ok(t) => Ok(Outcome::json(0, t.to_json())),
                Err(TilingError::SameColorHoles) => Ok(Outcome::json(
                    1,
                    json!({
                        "tileable": false,
                        "reason": "SAME_COLOR",
                        "holes": [[h1.row, h1.col], [h2.row, h2.col]],
                        "colors": [tilings::lattice::chess_color(h1), tilings::lattice::chess_color(h2)],
                    }),
                )),
                Err(e) => Err(e),
            }
        }
        Command::Flips { action } => flips(action),
        Command::Solve { region, tiles, mode, once_each, svg } => solve(region, tiles, mode, once_each, svg),
        Command::DecideRect { m, n, a, b } => {
            let d = debruijn_klarner(m, n, a, b)?;
            let reason = if d.verdict {
                None
            } else if !d.area_divisible {
                Some("area")
            } else if d.m_representable.witness.is_none() || d.n_representable.witness.is_none() {
                Some("representability")
            } else {
                Some("divisibility")
            };
            let mut v = d.to_json();
            v["reason"] = json!(reason);
            Ok(Outcome::json(u8::from(!d.verdict), v))
        }
        Command::Similar { poly, cube_family, row_stack, search, max_pieces } => {
            similar(poly, cube_family, row_stack, search, max_pieces)
        }
        Command::Squared { action } => squared(action),
        Command::Render { tiling, lattice, scale } => {
            let t = tiling_from_json(&read_json(&tiling)?, lattice)?;
            Ok(Outcome { code: 0, stdout: render_tiling(&t, scale) })
        }
        Command::Constants { digits, dof } => {
            let tol = 10f64.powi(-(digits as i32).min(300) - 2);
            let g = catalan_constant(tol.max(1e-300))?;
            let c = square_dof_constant();
            let az = dof_per_square(4, &BigCount::from(2u8))?;
            let mut v = json!({
                "catalan": g.to_decimal(digits),
                "square_board": c.to_decimal(digits.min(40)),
                "aztec": az.to_decimal(digits.min(40)),
            });
            if let Some(nt) = dof {
                let n: u64 = nt[0].parse().map_err(|_| TilingError::InvalidArgument("N must be an integer".into()))?;
                let t: BigCount =
                    nt[1].parse().map_err(|_| TilingError::InvalidArgument("T must be an integer".into()))?;
                v["dof"] = json!(dof_per_square(n, &t)?.to_decimal(digits.min(40)));
            }
            Ok(Outcome::json(0, v))
        }
    }
}

fn count(
    region: RegionArgs,
    tiles: Vec<String>,
    mode: Option<ModeArg>,
    method: CountMethod,
    once_each: bool,
    canonical: bool,
    max_width: usize,
) -> CmdResult {
    let shapes = parse_tiles(&tiles, mode)?;
    let r = region.build()?;
    let mut options = if once_each { SolveOptions::once_each() } else { SolveOptions::unlimited() };
    if let Some(m) = mode {
        options.mode = Some(m.into());
    }
    if canonical {
        let (rows, cols) = region
            .rectangle()
            .ok_or_else(|| TilingError::InvalidArgument("--canonical needs a plain --rect region".into()))?;
        let c = count_canonical(&r, &shapes, &options.with_group(rectangle_symmetries(0, 0, rows, cols)))?;
        return Ok(Outcome::json(
            0,
            json!({
                "orbits": c.orbits.to_string(),
                "raw": c.raw.to_string(),
                "group_order": c.group_order,
                "orbit_sizes": c.orbit_sizes,
            }),
        ));
    }
    let n: BigCount = match method {
        CountMethod::Kasteleyn => {
            let (rows, cols) =
                region
                    .rectangle()
                    .filter(|(a, b)| a % 2 == 0 && b % 2 == 0 && is_domino_set(&shapes))
                    .ok_or_else(|| TilingError::InvalidArgument("kasteleyn needs dominoes on an even --rect".into()))?;
            kasteleyn_count(rows as u64 / 2, cols as u64 / 2)?
        }
        CountMethod::Dp => count_domino_tilings_with(&r, max_width)?,
        CountMethod::Exact => count_tilings(&r, &shapes, &options)?,
        CountMethod::Auto if is_domino_set(&shapes) && !once_each => count_domino_tilings_with(&r, max_width)?,
        CountMethod::Auto => count_tilings(&r, &shapes, &options)?,
    };
    Ok(Outcome { code: 0, stdout: format!("{n}\n") })
}

fn write_svg(path: &Option<PathBuf>, svg: &str) -> Result<(), TilingError> {
    if let Some(p) = path {
        std::fs::write(p, svg).map_err(|e| TilingError::InvalidArgument(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn sample(region: RegionArgs, seed: u64, method: SampleMethod, svg: Option<PathBuf>) -> CmdResult {
    let shuffle = match method {
        SampleMethod::Shuffle => true,
        SampleMethod::Dp => false,
        SampleMethod::Auto => region.aztec.is_some() && region.remove.is_empty(),
    };
    let t = if shuffle {
        let n = region
            .aztec
            .filter(|_| region.remove.is_empty())
            .ok_or_else(|| TilingError::InvalidArgument("shuffling samples only --aztec regions".into()))?;
        aztec_sample(n, seed)?
    } else {
        let r = region.build()?;
        let table = ProfileTable::new(&r, tilings::counting::DEFAULT_MAX_WIDTH)?;
        if table.count() == BigCount::from(0u8) {
            return Ok(Outcome::json(1, json!({ "tileable": false, "count": "0" })));
        }
        table.sample(&mut tilings::counting::rng::stream(seed, 0))?
    };
    write_svg(&svg, &render_tiling(&t, 20))?;
    let mut v = t.to_json();
    v["seed"] = json!(seed);
    if region.aztec.is_some() && region.remove.is_empty() {
        let stat = arctic_statistic(&t)?;
        v["arctic"] = json!({ "outside": stat.outside, "frozen": stat.frozen, "fraction": stat.fraction });
        v["total"] = json!(aztec_count(stat.order as u64).to_string());
    }
    Ok(Outcome::json(0, v))
}

fn certify(
    region: RegionArgs,
    kind: CertifyKind,
    tiles: Vec<String>,
    coloring: ColoringArg,
    colors: Vec<usize>,
) -> CmdResult {
    let r = region.build()?;
    if let CertifyKind::Matching = kind {
        if let Some(t) = matching_tiling(&r)? {
            return Ok(Outcome::json(0, json!({ "tileable": true, "tiling": t.to_json() })));
        }
        let v = hall_certificate(&r)?.expect("untileable regions have a violator");
        debug_assert!(v.verify(&r));
        return Ok(Outcome::json(
            1,
            json!({ "tileable": false, "certificate": v.to_json(), "s": v.set.len(), "n": v.neighborhood.len() }),
        ));
    }
    let shapes = parse_tiles(&tiles, None)?;
    let col = match coloring {
        ColoringArg::Chessboard => chessboard_coloring(&r)?,
        ColoringArg::Block4 => block4_coloring(&r)?,
    };
    let ob = match kind {
        CertifyKind::Balance => balance_obstruction(&r, &shapes, &col, colors[0], colors[1])?,
        _ => parity_obstruction(&r, &shapes, &col)?,
    };
    Ok(match ob {
        Some(o) => Outcome::json(1, json!({ "obstructed": true, "certificate": o.to_json() })),
        None => Outcome::json(0, json!({ "obstructed": false })),
    })
}

fn flips(action: FlipAction) -> CmdResult {
    match action {
        FlipAction::Components { region, guard, list } => {
            let c = flip_components(&region.build()?, guard)?;
            let mut v = json!({
                "tilings": c.tilings.len(),
                "components": c.components.len(),
                "sizes": c.components.iter().map(Vec::len).collect::<Vec<_>>(),
            });
            if list {
                v["members"] = json!(c.components);
                v["all"] = json!(c.tilings.iter().map(Tiling::to_json).collect::<Vec<_>>());
            }
            Ok(Outcome::json(0, v))
        }
        FlipAction::Distance { region, from, to, guard } => {
            let r = region.build()?;
            let c = flip_components(&r, guard)?;
            let pick = |i: usize| {
                c.tilings.get(i).ok_or_else(|| TilingError::InvalidArgument(format!("tiling index {i} out of range")))
            };
            Ok(match flip_distance(&r, pick(from)?, pick(to)?, guard)? {
                FlipDistance::Steps(d) => Outcome::json(0, json!({ "distance": d })),
                FlipDistance::Unreachable => Outcome::json(1, json!({ "distance": "UNREACHABLE" })),
            })
        }
    }
}

fn solve(
    region: RegionArgs,
    tiles: Vec<String>,
    mode: Option<ModeArg>,
    once_each: bool,
    svg: Option<PathBuf>,
) -> CmdResult {
    let shapes = parse_tiles(&tiles, mode)?;
    let r = region.build()?;
    let options = if once_each { SolveOptions::once_each() } else { SolveOptions::unlimited() };
    match find_tiling(&r, &shapes, &options)? {
        Some(t) => {
            write_svg(&svg, &render_tiling(&t, 20))?;
            Ok(Outcome::json(0, json!({ "tileable": true, "tiling": t.to_json() })))
        }
        None => Ok(Outcome::json(1, json!({ "tileable": false, "cells": r.len() }))),
    }
}

fn similar(
    poly: Option<String>,
    cube_family: Option<Vec<i64>>,
    row_stack: Option<u64>,
    search: Option<f64>,
    max_pieces: usize,
) -> CmdResult {
    let given = [poly.is_some(), cube_family.is_some(), row_stack.is_some(), search.is_some()];
    if given.iter().filter(|&&g| g).count() != 1 {
        return Err(TilingError::InvalidArgument(
            "give exactly one of --poly, --cube-family, --row-stack, --search".into(),
        ));
    }
    if let Some(text) = poly {
        let p = IntPolynomial::parse(&text)?;
        let v = similar_rect_square_tileable(&p)?;
        let mut out = serde_json::to_value(&v).expect("plain data");
        out["polynomial"] = json!(p.to_string());
        return Ok(Outcome::json(u8::from(!v.tileable), out));
    }
    if let Some(rs) = cube_family {
        let f = cube_root_family(rs[0], rs[1])?;
        return Ok(Outcome::json(
            u8::from(!f.tileable),
            json!({ "r": rs[0], "s": rs[1], "tileable": f.tileable, "inequality": f.inequality }),
        ));
    }
    if let Some(k) = row_stack {
        return Ok(match row_stack_roots(k, 192)? {
            None => Outcome::json(1, json!({ "k": k, "roots": Value::Null })),
            Some((a, b)) => {
                let verified = [&a, &b].map(|x| verify_row_stack_layout(x.to_f64(), k));
                Outcome::json(
                    0,
                    json!({ "k": k, "roots": [a.to_decimal(30), b.to_decimal(30)], "layouts_verified": verified }),
                )
            }
        });
    }
    let x = search.expect("checked above");
    Ok(match find_similar_guillotine_tiling(x, max_pieces)? {
        Some(layout) => Outcome::json(0, serde_json::to_value(&layout).expect("plain data")),
        None => Outcome::json(1, json!({ "ratio": x, "max_pieces": max_pieces, "layout": Value::Null })),
    })
}

fn load_layout(path: &PathBuf) -> Result<SquaredLayout, TilingError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| TilingError::InvalidArgument(format!("{}: {e}", path.display())))?;
    SquaredLayout::from_json_str(&text)
}

fn squared(action: SquaredAction) -> CmdResult {
    match action {
        SquaredAction::Solve { layout, svg } => {
            let l = load_layout(&layout)?;
            let s = solve_layout(&l)?;
            let net = to_smith_network(&l)?;
            let placed = reconstruct(&l, &s)?;
            write_svg(&svg, &render_squares(&placed, s.width, s.height, 10))?;
            let mut v = s.to_json();
            v["resistance"] = json!(total_resistance(&net)?.to_string());
            v["kirchhoff"] = json!(validate_kirchhoff(&net, &s.sides));
            v["perfect"] = json!(is_perfect(&s.sides));
            v["squared_square"] = json!(is_squared_square(&s));
            Ok(Outcome::json(0, v))
        }
        SquaredAction::Resistance { layout } => {
            let net = to_smith_network(&load_layout(&layout)?)?;
            Ok(Outcome::json(0, json!({ "resistance": total_resistance(&net)?.to_string() })))
        }
    }
}

fn tiling_from_json(v: &Value, lattice: LatticeArg) -> Result<Tiling, TilingError> {
    let bad = |m: &str| TilingError::Parse { line: 0, msg: m.to_string() };
    let list = v
        .get("tiling")
        .unwrap_or(v)
        .get("placements")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing placements"))?;
    let mut placements = Vec::with_capacity(list.len());
    for p in list {
        let shape = p.get("shape").and_then(Value::as_str).unwrap_or("piece");
        let cells: Vec<(i32, i32)> =
            serde_json::from_value(p.get("cells").cloned().unwrap_or(Value::Null)).map_err(|e| bad(&e.to_string()))?;
        placements.push(Placement::new(0, shape, cells.into_iter().map(Into::into).collect()));
    }
    let region = Region::new(lattice.into(), placements.iter().flat_map(|p| p.cells.clone()))?;
    Tiling::new(Arc::new(region), placements)
}
