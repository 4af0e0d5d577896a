//! Squared rectangles: side lengths from line equations, and the
//! corresponding resistor network.
//!
//! A layout names, for every square, the horizontal lines through its top
//! and bottom edges and the vertical lines through its left and right edges.

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Result, TilingError};
use crate::scalar::{nullspace, solve};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareSpec {
    pub label: String,
    pub top: String,
    pub bottom: String,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquaredLayout {
    /// Top boundary first.
    pub hlines: Vec<String>,
    /// Left boundary first.
    pub vlines: Vec<String>,
    pub squares: Vec<SquareSpec>,
}

/// Indices into `hlines`/`vlines` for one square.
#[derive(Debug, Clone, Copy)]
struct Span {
    top: usize,
    bottom: usize,
    left: usize,
    right: usize,
}

impl SquaredLayout {
    pub fn from_json_str(text: &str) -> Result<Self> {
        let layout: SquaredLayout =
            serde_json::from_str(text).map_err(|e| TilingError::InvalidLayout(e.to_string()))?;
        layout.spans()?;
        Ok(layout)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data")
    }

    /// The nine-square layout shipped with the crate.
    pub fn nine_square() -> Self {
        Self::from_json_str(include_str!("../layouts/nine_square.json")).expect("shipped layout is valid")
    }

    fn spans(&self) -> Result<Vec<Span>> {
        let bad = |m: String| Err(TilingError::InvalidLayout(m));
        if self.hlines.len() < 2 || self.vlines.len() < 2 || self.squares.is_empty() {
            return bad("need two lines each way and at least one square".into());
        }
        let index = |lines: &[String]| -> Result<HashMap<String, usize>> {
            let map: HashMap<String, usize> = lines.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
            if map.len() != lines.len() {
                return Err(TilingError::InvalidLayout("duplicate line identifier".into()));
            }
            Ok(map)
        };
        let (hi, vi) = (index(&self.hlines)?, index(&self.vlines)?);
        let labels: BTreeSet<&str> = self.squares.iter().map(|s| s.label.as_str()).collect();
        if labels.len() != self.squares.len() {
            return bad("duplicate square label".into());
        }
        let mut spans = Vec::with_capacity(self.squares.len());
        for s in &self.squares {
            let look = |map: &HashMap<String, usize>, id: &str| -> Result<usize> {
                map.get(id)
                    .copied()
                    .ok_or_else(|| TilingError::InvalidLayout(format!("square {}: unknown line {id}", s.label)))
            };
            let span = Span {
                top: look(&hi, &s.top)?,
                bottom: look(&hi, &s.bottom)?,
                left: look(&vi, &s.left)?,
                right: look(&vi, &s.right)?,
            };
            if span.top >= span.bottom || span.left >= span.right {
                return bad(format!("square {}: lines out of order", s.label));
            }
            spans.push(span);
        }
        let (hl, vl) = (self.hlines.len() - 1, self.vlines.len() - 1);
        let used = |f: &dyn Fn(&Span) -> bool| spans.iter().any(f);
        if !used(&|s| s.top == 0) || !used(&|s| s.bottom == hl) || !used(&|s| s.left == 0) || !used(&|s| s.right == vl)
        {
            return bad("a boundary line touches no square".into());
        }
        Ok(spans)
    }

    /// Rows of the homogeneous system in the side lengths: for each interior
    /// line, the squares on one side balance those on the other; the two
    /// closure rows equate opposite boundaries.
    pub fn equations(&self) -> Result<Vec<Vec<BigRational>>> {
        let spans = self.spans()?;
        let n = spans.len();
        let (hl, vl) = (self.hlines.len() - 1, self.vlines.len() - 1);
        let row = |plus: &dyn Fn(&Span) -> bool, minus: &dyn Fn(&Span) -> bool| -> Vec<BigRational> {
            spans
                .iter()
                .map(|s| {
                    let v = i64::from(plus(s)) - i64::from(minus(s));
                    BigRational::from_integer(v.into())
                })
                .collect()
        };
        let mut rows = Vec::new();
        for l in 1..hl {
            rows.push(row(&|s| s.bottom == l, &|s| s.top == l));
        }
        for l in 1..vl {
            rows.push(row(&|s| s.right == l, &|s| s.left == l));
        }
        rows.push(row(&|s| s.top == 0, &|s| s.bottom == hl));
        rows.push(row(&|s| s.left == 0, &|s| s.right == vl));
        debug_assert!(rows.iter().all(|r| r.len() == n));
        Ok(rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquaredSolution {
    pub labels: Vec<String>,
    pub sides: Vec<u64>,
    pub width: u64,
    pub height: u64,
}

impl SquaredSolution {
    pub fn side(&self, label: &str) -> Option<u64> {
        self.labels.iter().position(|l| l == label).map(|i| self.sides[i])
    }

    pub fn to_json(&self) -> serde_json::Value {
        let sides: serde_json::Map<String, serde_json::Value> =
            self.labels.iter().zip(&self.sides).map(|(l, s)| (l.clone(), (*s).into())).collect();
        serde_json::json!({ "sides": sides, "width": self.width, "height": self.height })
    }
}

/// Solves the line equations; the solution space must be one-dimensional
/// and is scaled to coprime positive integers.
pub fn solve_layout(layout: &SquaredLayout) -> Result<SquaredSolution> {
    let rows = layout.equations()?;
    let n = layout.squares.len();
    let basis = nullspace(&rows, n);
    let v = match basis.len() {
        0 => return Err(TilingError::Inconsistent),
        1 => &basis[0],
        d => return Err(TilingError::Degenerate(d)),
    };
    let lcm = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = v.iter().map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let mut ints: Vec<BigInt> = ints.iter().map(|x| x / &g).collect();
    if ints.iter().all(|x| !x.is_positive()) {
        ints.iter_mut().for_each(|x| *x = -x.clone());
    }
    if ints.iter().any(|x| !x.is_positive()) {
        return Err(TilingError::Nonpositive);
    }
    let sides: Vec<u64> = ints
        .iter()
        .map(|x| x.to_u64().ok_or(TilingError::GuardExceeded { what: "side length", limit: u64::MAX }))
        .collect::<Result<_>>()?;
    let spans = layout.spans()?;
    let width = spans.iter().zip(&sides).filter(|(s, _)| s.top == 0).map(|(_, v)| v).sum();
    let height = spans.iter().zip(&sides).filter(|(s, _)| s.left == 0).map(|(_, v)| v).sum();
    Ok(SquaredSolution { labels: layout.squares.iter().map(|s| s.label.clone()).collect(), sides, width, height })
}

/// A placed square: top-left corner `(x, y)`, `y` growing downward.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlacedSquare {
    pub label: String,
    pub x: u64,
    pub y: u64,
    pub side: u64,
}

/// Line coordinates from the solved sides, checked for consistency, then
/// squares checked to fill the rectangle without overlap.
pub fn reconstruct(layout: &SquaredLayout, solution: &SquaredSolution) -> Result<Vec<PlacedSquare>> {
    let spans = layout.spans()?;
    if solution.sides.len() != spans.len() {
        return Err(TilingError::InvalidArgument("solution does not match layout".into()));
    }
    let coords = |count: usize, ends: &dyn Fn(&Span) -> (usize, usize)| -> Result<Vec<i128>> {
        let mut pos: Vec<Option<i128>> = vec![None; count];
        pos[0] = Some(0);
        let mut changed = true;
        while changed {
            changed = false;
            for (s, &side) in spans.iter().zip(&solution.sides) {
                let (a, b) = ends(s);
                let side = side as i128;
                match (pos[a], pos[b]) {
                    (Some(p), None) => {
                        pos[b] = Some(p + side);
                        changed = true;
                    }
                    (None, Some(q)) => {
                        pos[a] = Some(q - side);
                        changed = true;
                    }
                    (Some(p), Some(q)) if q - p != side => {
                        return Err(TilingError::InvalidLayout("side lengths disagree with line positions".into()));
                    }
                    _ => {}
                }
            }
        }
        pos.into_iter()
            .map(|p| p.ok_or_else(|| TilingError::InvalidLayout("line not connected to the boundary".into())))
            .collect()
    };
    let ys = coords(layout.hlines.len(), &|s| (s.top, s.bottom))?;
    let xs = coords(layout.vlines.len(), &|s| (s.left, s.right))?;
    let (w, h) = (solution.width as i128, solution.height as i128);
    if xs[xs.len() - 1] != w || ys[ys.len() - 1] != h {
        return Err(TilingError::InvalidLayout("boundaries disagree with the rectangle".into()));
    }
    let placed: Vec<PlacedSquare> = spans
        .iter()
        .zip(&solution.sides)
        .zip(&layout.squares)
        .map(|((s, &side), spec)| {
            let (x, y) = (xs[s.left], ys[s.top]);
            if x < 0 || y < 0 || x + side as i128 > w || y + side as i128 > h {
                return Err(TilingError::InvalidLayout(format!("square {} leaves the rectangle", spec.label)));
            }
            Ok(PlacedSquare { label: spec.label.clone(), x: x as u64, y: y as u64, side })
        })
        .collect::<Result<_>>()?;
    let area: u128 = placed.iter().map(|p| p.side as u128 * p.side as u128).sum();
    if area != (w * h) as u128 {
        return Err(TilingError::InvalidLayout("areas do not add up".into()));
    }
    for (i, p) in placed.iter().enumerate() {
        for q in &placed[i + 1..] {
            let ox = p.x < q.x + q.side && q.x < p.x + p.side;
            let oy = p.y < q.y + q.side && q.y < p.y + p.side;
            if ox && oy {
                return Err(TilingError::InvalidLayout(format!("squares {} and {} overlap", p.label, q.label)));
            }
        }
    }
    Ok(placed)
}

/// Nodes are horizontal lines; each square is a unit resistor from its top
/// line to its bottom line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmithNetwork {
    pub nodes: Vec<String>,
    /// `(from, to, label)` with `from` the top line.
    pub edges: Vec<(usize, usize, String)>,
    pub source: usize,
    pub sink: usize,
}

pub fn to_smith_network(layout: &SquaredLayout) -> Result<SmithNetwork> {
    let spans = layout.spans()?;
    let network = SmithNetwork {
        nodes: layout.hlines.clone(),
        edges: spans.iter().zip(&layout.squares).map(|(s, spec)| (s.top, s.bottom, spec.label.clone())).collect(),
        source: 0,
        sink: layout.hlines.len() - 1,
    };
    if !network.is_connected() {
        return Err(TilingError::InvalidLayout("network is disconnected".into()));
    }
    Ok(network)
}

impl SmithNetwork {
    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.nodes.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &(a, b, _) in &self.edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x == u && !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// With edge currents equal to the sides and unit resistances: potentials
/// exist with drop = current on every edge, and current is conserved at
/// every node except the source and sink.
pub fn validate_kirchhoff(network: &SmithNetwork, sides: &[u64]) -> bool {
    if sides.len() != network.edges.len() {
        return false;
    }
    let n = network.nodes.len();
    let mut net = vec![0i128; n];
    for (&(a, b, _), &s) in network.edges.iter().zip(sides) {
        net[a] -= s as i128;
        net[b] += s as i128;
    }
    if (0..n).any(|v| v != network.source && v != network.sink && net[v] != 0) {
        return false;
    }
    let mut pot: Vec<Option<i128>> = vec![None; n];
    pot[network.source] = Some(0);
    let mut queue = VecDeque::from([network.source]);
    while let Some(u) = queue.pop_front() {
        for (&(a, b, _), &s) in network.edges.iter().zip(sides) {
            let s = s as i128;
            let step = if a == u {
                Some((b, pot[u].unwrap() + s))
            } else if b == u {
                Some((a, pot[u].unwrap() - s))
            } else {
                None
            };
            if let Some((v, p)) = step {
                match pot[v] {
                    None => {
                        pot[v] = Some(p);
                        queue.push_back(v);
                    }
                    Some(q) if q != p => return false,
                    _ => {}
                }
            }
        }
    }
    pot.iter().all(Option::is_some)
}

/// Source-to-sink effective resistance with unit resistors, exactly.
pub fn total_resistance(network: &SmithNetwork) -> Result<BigRational> {
    let n = network.nodes.len();
    // Laplacian with the sink grounded (its row and column removed)
    let keep: Vec<usize> = (0..n).filter(|&v| v != network.sink).collect();
    let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut lap = vec![vec![BigRational::zero(); keep.len()]; keep.len()];
    for &(a, b, _) in &network.edges {
        for (x, y) in [(a, b), (b, a)] {
            if let Some(&i) = pos.get(&x) {
                lap[i][i] += BigRational::one();
                if let Some(&j) = pos.get(&y) {
                    lap[i][j] -= BigRational::one();
                }
            }
        }
    }
    let mut rhs = vec![BigRational::zero(); keep.len()];
    rhs[pos[&network.source]] = BigRational::one();
    let v = solve(&lap, &rhs).ok_or(TilingError::InvalidLayout("network is disconnected".into()))?;
    Ok(v[pos[&network.source]].clone())
}

/// All sides pairwise distinct.
pub fn is_perfect(sides: &[u64]) -> bool {
    sides.iter().collect::<BTreeSet<_>>().len() == sides.len()
}

pub fn is_squared_square(solution: &SquaredSolution) -> bool {
    solution.width == solution.height
}

#[cfg(test)]
mod tests {
    use super::*;

    fn layout(h: &[&str], v: &[&str], sq: &[[&str; 5]]) -> SquaredLayout {
        SquaredLayout {
            hlines: h.iter().map(|s| s.to_string()).collect(),
            vlines: v.iter().map(|s| s.to_string()).collect(),
            squares: sq
                .iter()
                .map(|[l, t, b, le, r]| SquareSpec {
                    label: l.to_string(),
                    top: t.to_string(),
                    bottom: b.to_string(),
                    left: le.to_string(),
                    right: r.to_string(),
                })
                .collect(),
        }
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn nine_squares() {
        let l = SquaredLayout::nine_square();
        let s = solve_layout(&l).unwrap();
        assert_eq!(s.sides, vec![15, 8, 9, 7, 1, 10, 18, 4, 14]);
        assert_eq!((s.width, s.height), (32, 33));
        let net = to_smith_network(&l).unwrap();
        assert_eq!((net.nodes.len(), net.edges.len()), (6, 9));
        assert!(validate_kirchhoff(&net, &s.sides));
        let mut bumped = s.sides.clone();
        bumped[4] += 1;
        assert!(!validate_kirchhoff(&net, &bumped));
        assert_eq!(total_resistance(&net).unwrap(), q(33, 32));
        assert!(is_perfect(&s.sides) && !is_squared_square(&s));
        assert_eq!(reconstruct(&l, &s).unwrap().len(), 9);
    }

    #[test]
    fn tiny_layouts() {
        let one = layout(&["t", "b"], &["l", "r"], &[["a", "t", "b", "l", "r"]]);
        let s = solve_layout(&one).unwrap();
        assert_eq!((s.sides.clone(), s.width, s.height), (vec![1], 1, 1));
        let net = to_smith_network(&one).unwrap();
        assert_eq!((net.nodes.len(), net.edges.len()), (2, 1));
        assert!(validate_kirchhoff(&net, &s.sides));
        assert_eq!(total_resistance(&net).unwrap(), q(1, 1));
        assert!(is_squared_square(&s));

        let pair = layout(&["t", "b"], &["l", "m", "r"], &[["a", "t", "b", "l", "m"], ["b", "t", "b", "m", "r"]]);
        let s = solve_layout(&pair).unwrap();
        assert_eq!((s.sides.clone(), s.width, s.height), (vec![1, 1], 2, 1));
        assert!(!is_perfect(&s.sides));
        assert_eq!(total_resistance(&to_smith_network(&pair).unwrap()).unwrap(), q(1, 2));

        let stack = layout(&["t", "m", "b"], &["l", "r"], &[["a", "t", "m", "l", "r"], ["b", "m", "b", "l", "r"]]);
        let net = to_smith_network(&stack).unwrap();
        assert_eq!(net.edges.iter().map(|e| (e.0, e.1)).collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(total_resistance(&net).unwrap(), q(2, 1));
    }

    #[test]
    fn malformed() {
        let backwards = layout(&["t", "b"], &["l", "r"], &[["a", "b", "t", "l", "r"]]);
        assert!(matches!(solve_layout(&backwards), Err(TilingError::InvalidLayout(_))));
        let unknown = layout(&["t", "b"], &["l", "r"], &[["a", "t", "x", "l", "r"]]);
        assert!(solve_layout(&unknown).is_err());
        // a 2x2 grid of squares: the line equations leave two degrees of freedom
        let grid = layout(
            &["t", "m", "b"],
            &["l", "c", "r"],
            &[
                ["a", "t", "m", "l", "c"],
                ["b", "t", "m", "c", "r"],
                ["c", "m", "b", "l", "c"],
                ["d", "m", "b", "c", "r"],
            ],
        );
        assert_eq!(solve_layout(&grid), Err(TilingError::Degenerate(2)));
        let ell = layout(
            &["t", "m", "b"],
            &["l", "c", "r"],
            &[["a", "t", "b", "l", "c"], ["b", "t", "m", "c", "r"], ["c", "m", "b", "c", "r"]],
        );
        let s = solve_layout(&ell).unwrap();
        assert_eq!((s.sides, s.width, s.height), (vec![2, 1, 1], 3, 2));
    }
}
