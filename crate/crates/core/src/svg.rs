//! SVG rendering of tilings and squared rectangles.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::lattice::Tiling;
use crate::squared::PlacedSquare;

const HORIZONTAL_FILL: &str = "#4f81bd";
const VERTICAL_FILL: &str = "#c0504d";
const PALETTE: [&str; 8] = ["#9bbb59", "#8064a2", "#4bacc6", "#f79646", "#2c4d75", "#772c2a", "#5f7530", "#7f6000"];

/// One `scale`-sized square per cell, filled by piece: horizontal and
/// vertical dominoes get fixed colors, other shapes a color per name.
pub fn render_tiling(tiling: &Tiling, scale: u32) -> String {
    let scale = scale.max(1) as i64;
    let Some(bb) = tiling.region().bounding_box() else {
        return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"0\" height=\"0\"/>\n".to_string();
    };
    let (w, h) = (bb.width() as i64 * scale, bb.height() as i64 * scale);
    let mut shape_colors: BTreeMap<&str, &str> = BTreeMap::new();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    for p in tiling.placements() {
        let fill = if p.is_horizontal_domino() {
            HORIZONTAL_FILL
        } else if p.is_vertical_domino() {
            VERTICAL_FILL
        } else {
            let next = PALETTE[shape_colors.len() % PALETTE.len()];
            shape_colors.entry(p.shape.as_str()).or_insert(next)
        };
        let _ = writeln!(out, "  <g fill=\"{fill}\" stroke=\"#000\" stroke-width=\"1\">");
        for c in &p.cells {
            let x = (c.col - bb.min_col) as i64 * scale;
            let y = (c.row - bb.min_row) as i64 * scale;
            let _ = writeln!(out, "    <rect x=\"{x}\" y=\"{y}\" width=\"{scale}\" height=\"{scale}\"/>");
        }
        out.push_str("  </g>\n");
    }
    out.push_str("</svg>\n");
    out
}

/// The solved rectangle with each square labeled by its name and side.
pub fn render_squares(squares: &[PlacedSquare], width: u64, height: u64, scale: u32) -> String {
    let s = scale.max(1) as u64;
    let (w, h) = (width * s, height * s);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    for (i, q) in squares.iter().enumerate() {
        let fill = PALETTE[i % PALETTE.len()];
        let (x, y, side) = (q.x * s, q.y * s, q.side * s);
        let _ = writeln!(
            out,
            "  <rect x=\"{x}\" y=\"{y}\" width=\"{side}\" height=\"{side}\" fill=\"{fill}\" stroke=\"#000\"/>"
        );
        let (cx, cy) = (x + side / 2, y + side / 2);
        let _ = writeln!(
            out,
            "  <text x=\"{cx}\" y=\"{cy}\" text-anchor=\"middle\" dominant-baseline=\"middle\">{} = {}</text>",
            q.label, q.side
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::sample_tiling;
    use crate::lattice::build_rectangle;
    use crate::squared::{reconstruct, solve_layout, SquaredLayout};

    #[test]
    fn dominoes_get_orientation_colors() {
        let t = sample_tiling(&build_rectangle(4, 4).unwrap(), 3).unwrap();
        let svg = render_tiling(&t, 10);
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<rect").count(), 16);
        let h = t.placements().iter().filter(|p| p.is_horizontal_domino()).count();
        assert_eq!(svg.matches(HORIZONTAL_FILL).count(), h);
        assert_eq!(svg.matches(VERTICAL_FILL).count(), 8 - h);
    }

    #[test]
    fn squared_rectangle() {
        let l = SquaredLayout::nine_square();
        let s = solve_layout(&l).unwrap();
        let svg = render_squares(&reconstruct(&l, &s).unwrap(), s.width, s.height, 10);
        assert!(svg.contains("width=\"320\" height=\"330\""));
        assert!(svg.contains(">e = 1<"));
    }
}
