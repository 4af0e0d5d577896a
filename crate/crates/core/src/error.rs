use thiserror::Error;

use crate::lattice::Cell;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TilingError {
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("cell ({}, {}) is not in the region", .0.row, .0.col)]
    CellNotInRegion(Cell),
    #[error("duplicate cell ({}, {})", .0.row, .0.col)]
    DuplicateCell(Cell),
    #[error("cell ({}, {}) lies outside the triangular array", .0.row, .0.col)]
    OutsideTriangle(Cell),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid tiling: {0}")]
    InvalidTiling(String),
    #[error("lattice mismatch")]
    LatticeMismatch,
    #[error("tile shape must be a nonempty connected cell set")]
    InvalidShape,
    #[error("holes have the same chessboard color")]
    SameColorHoles,
    #[error("holes coincide")]
    CoincidentHoles,
    #[error("board dimensions must be even")]
    OddDimensions,
    #[error("color index {0} out of range")]
    ColorOutOfRange(usize),
    #[error("{what} exceeds guard limit {limit}")]
    GuardExceeded { what: &'static str, limit: u64 },
    #[error("high-precision evaluation could not certify the result")]
    PrecisionInsufficient,
    #[error("region has no tiling")]
    NotTileable,
    #[error("flip does not apply to this tiling")]
    InvalidFlip,
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("linear system has no nonzero solution")]
    Inconsistent,
    #[error("solution space has dimension {0}, expected 1")]
    Degenerate(usize),
    #[error("solution has non-positive side lengths")]
    Nonpositive,
    #[error("invalid layout: {0}")]
    InvalidLayout(String),
    #[error("symmetry group does not preserve the solution set")]
    InvalidSymmetry,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = TilingError> = std::result::Result<T, E>;
