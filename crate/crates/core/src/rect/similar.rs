//! Tiling a square with rectangles similar to `1 x x`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::polynomial::{right_half_plane, IntPolynomial};
use crate::counting::HighPrecisionReal;
use crate::error::{Result, TilingError};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimilarVerdict {
    pub tileable: bool,
    /// A zero appeared in the first column of the Routh array: some root lies
    /// on the imaginary axis or the table degenerated. The verdict is false.
    pub boundary: bool,
    /// Rational roots divided out before the test.
    #[serde(serialize_with = "ser_rationals")]
    pub stripped_roots: Vec<BigRational>,
    #[serde(serialize_with = "ser_poly")]
    pub reduced: IntPolynomial,
    #[serde(serialize_with = "ser_rationals")]
    pub first_column: Vec<BigRational>,
}

fn ser_rationals<S: serde::Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.to_string()))
}

fn ser_poly<S: serde::Serializer>(p: &IntPolynomial, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(p.coeffs().iter().map(|c| c.to_string()))
}

/// Whether every complex root of `p` has strictly positive real part, for
/// `p` the minimal polynomial of `x` (not checked).
///
/// If `p` has rational roots and also a factor without them, the rational
/// roots are divided out first and reported.
pub fn similar_rect_square_tileable(p: &IntPolynomial) -> Result<SimilarVerdict> {
    if p.degree() == 0 {
        return Err(TilingError::ConstantPolynomial);
    }
    let mut reduced = p.primitive();
    let mut stripped = Vec::new();
    if let Some(roots) = reduced.rational_roots() {
        if roots.len() < reduced.degree() {
            for r in &roots {
                reduced = reduced.deflate(r).expect("root of the polynomial");
            }
            stripped = roots;
        }
    }
    let outcome = right_half_plane(&reduced)?;
    Ok(SimilarVerdict {
        tileable: outcome.is_hurwitz(),
        boundary: outcome.degenerate_row.is_some(),
        stripped_roots: stripped,
        reduced,
        first_column: outcome.first_column,
    })
}

/// `s^3 x^3 - 3 r s^2 x^2 + 3 r^2 s x - (r^3 + 2 s^3)`, satisfied by
/// `r/s + 2^(1/3)`.
pub fn cube_root_polynomial(r: i64, s: i64) -> Result<IntPolynomial> {
    if s < 1 {
        return Err(TilingError::Nonpositive);
    }
    let (r, s) = (BigInt::from(r), BigInt::from(s));
    let s2 = &s * &s;
    let s3 = &s2 * &s;
    let two = BigInt::from(2);
    let three = BigInt::from(3);
    let c0: BigInt = -(&r * &r * &r + &s3 * &two);
    let c1: BigInt = &r * &r * &s * &three;
    let c2: BigInt = -(&r * &s2 * &three);
    IntPolynomial::new([c0, c1, c2, s3])
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CubeFamily {
    pub tileable: bool,
    /// `r/s > 2^(1/3)/2`, decided as `4 r^3 > s^3`.
    pub inequality: bool,
}

pub fn cube_root_family(r: i64, s: i64) -> Result<CubeFamily> {
    let verdict = similar_rect_square_tileable(&cube_root_polynomial(r, s)?)?;
    let (r, s) = (BigInt::from(r), BigInt::from(s));
    Ok(CubeFamily { tileable: verdict.tileable, inequality: &r * &r * &r * 4 > &s * &s * &s })
}

/// Real roots of `k x^2 - k x + 1`, larger first, or `None` when complex.
pub fn row_stack_roots(k: u64, bits: u32) -> Result<Option<(HighPrecisionReal, HighPrecisionReal)>> {
    if k == 0 {
        return Err(TilingError::ZeroDimension);
    }
    if k < 4 {
        return Ok(None);
    }
    let disc = HighPrecisionReal::from_int(k * k - 4 * k, bits);
    let root = disc.sqrt().ok_or(TilingError::PrecisionInsufficient)?;
    let k_hp = HighPrecisionReal::from_int(k, bits);
    let big = k_hp.add(&root).div_int(2 * k);
    let small = k_hp.sub(&root).div_int(2 * k);
    Ok(Some((big, small)))
}

/// An axis-parallel piece of the unit square.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Piece {
    pub x: f64,
    pub y: f64,
    pub w: f64,
    pub h: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimilarLayout {
    pub ratio: f64,
    pub pieces: Vec<Piece>,
}

impl SimilarLayout {
    /// Pieces similar to `1 x ratio`, inside the unit square, pairwise
    /// interior-disjoint, with total area 1, all within `tol`.
    pub fn verify(&self, tol: f64) -> bool {
        let x = self.ratio;
        let similar = |p: &Piece| {
            let a = p.w / p.h;
            (a - x).abs() <= tol * x.max(1.0) || (a - 1.0 / x).abs() <= tol * (1.0 / x).max(1.0)
        };
        let inside = |p: &Piece| {
            p.w > 0.0 && p.h > 0.0 && p.x >= -tol && p.y >= -tol && p.x + p.w <= 1.0 + tol && p.y + p.h <= 1.0 + tol
        };
        let area: f64 = self.pieces.iter().map(|p| p.w * p.h).sum();
        let disjoint = self.pieces.iter().enumerate().all(|(i, p)| {
            self.pieces[i + 1..].iter().all(|q| {
                let ox = (p.x + p.w).min(q.x + q.w) - p.x.max(q.x);
                let oy = (p.y + p.h).min(q.y + q.h) - p.y.max(q.y);
                ox <= tol || oy <= tol
            })
        });
        !self.pieces.is_empty()
            && self.pieces.iter().all(|p| similar(p) && inside(p))
            && (area - 1.0).abs() <= tol
            && disjoint
    }
}

/// The large `1 x x` piece over a row of `k` pieces `x(1-x)` wide and `1-x` tall.
pub fn row_stack_layout(x: f64, k: u64) -> SimilarLayout {
    let small_w = 1.0 / k as f64;
    let mut pieces: Vec<Piece> =
        (0..k).map(|i| Piece { x: i as f64 * small_w, y: 0.0, w: small_w, h: 1.0 - x }).collect();
    pieces.push(Piece { x: 0.0, y: 1.0 - x, w: 1.0, h: x });
    SimilarLayout { ratio: x, pieces }
}

pub fn verify_row_stack_layout(x: f64, k: u64) -> bool {
    if k == 0 || !(x > 0.0 && x < 1.0) || (k as f64 * x * (1.0 - x) - 1.0).abs() > 1e-12 {
        return false;
    }
    let layout = row_stack_layout(x, k);
    let tol = 1e-9;
    // the small pieces must be similar through the relation k x (1 - x) = 1
    layout.verify(tol)
}

#[derive(Debug, Clone)]
enum Slice {
    Leaf {
        aspect: f64,
    },
    /// Side by side: widths add at a common height.
    Beside(Box<Slice>, Box<Slice>),
    /// Stacked: heights add at a common width.
    Stacked(Box<Slice>, Box<Slice>),
}

impl Slice {
    /// Width over height.
    fn aspect(&self) -> f64 {
        match self {
            Slice::Leaf { aspect } => *aspect,
            Slice::Beside(a, b) => a.aspect() + b.aspect(),
            Slice::Stacked(a, b) => 1.0 / (1.0 / a.aspect() + 1.0 / b.aspect()),
        }
    }

    fn place(&self, x: f64, y: f64, w: f64, h: f64, out: &mut Vec<Piece>) {
        match self {
            Slice::Leaf { .. } => out.push(Piece { x, y, w, h }),
            Slice::Beside(a, b) => {
                let wa = h * a.aspect();
                a.place(x, y, wa, h, out);
                b.place(x + wa, y, w - wa, h, out);
            }
            Slice::Stacked(a, b) => {
                let ha = w / a.aspect();
                a.place(x, y, w, ha, out);
                b.place(x, y + ha, w, h - ha, out);
            }
        }
    }
}

/// Searches slicing trees with at most `max_pieces` leaves, each leaf similar
/// to `1 x x`, for one whose outline is a square. Returns the fewest-piece
/// layout found.
pub fn find_similar_guillotine_tiling(x: f64, max_pieces: usize) -> Result<Option<SimilarLayout>> {
    const TOL: f64 = 1e-9;
    if !x.is_finite() || x <= 0.0 {
        return Err(TilingError::Nonpositive);
    }
    if max_pieces > 5 {
        return Err(TilingError::GuardExceeded { what: "guillotine pieces", limit: 5 });
    }
    let mut by_size: Vec<Vec<Slice>> = vec![Vec::new()];
    for n in 1..=max_pieces {
        let mut level = Vec::new();
        if n == 1 {
            level.push(Slice::Leaf { aspect: x });
            if (x - 1.0 / x).abs() > TOL {
                level.push(Slice::Leaf { aspect: 1.0 / x });
            }
        }
        for i in 1..=n / 2 {
            let j = n - i;
            for (ai, a) in by_size[i].iter().enumerate() {
                let start = if i == j { ai } else { 0 };
                for b in &by_size[j][start..] {
                    level.push(Slice::Beside(Box::new(a.clone()), Box::new(b.clone())));
                    level.push(Slice::Stacked(Box::new(a.clone()), Box::new(b.clone())));
                }
            }
        }
        if let Some(tree) = level.iter().find(|t| (t.aspect() - 1.0).abs() <= TOL) {
            let mut pieces = Vec::with_capacity(n);
            tree.place(0.0, 0.0, 1.0, 1.0, &mut pieces);
            let layout = SimilarLayout { ratio: x, pieces };
            if layout.verify(TOL) {
                return Ok(Some(layout));
            }
        }
        by_size.push(level);
    }
    Ok(None)
}
