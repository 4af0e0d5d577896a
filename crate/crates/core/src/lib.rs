//! Exact tiling algorithms on the square lattice and the triangular array of
//! hexagons.
//!
//! - [`lattice`]: regions, colorings, tile shapes and tilings.
//! - [`impossibility`]: coloring obstructions and the tribone predicate.
//! - [`exact_cover`]: a dancing-links solver for arbitrary shape sets.
//! - [`domino`]: matching certificates, the closed-path tiler and flips.
//! - [`counting`]: exact counts, constants and uniform samplers.
//! - [`rect`]: rectangles tiled by rectangles.
//! - [`squared`]: squared rectangles and their electrical networks.

pub mod counting;
pub mod domino;
pub mod error;
pub mod exact_cover;
pub mod impossibility;
pub mod lattice;
pub mod rect;
pub mod scalar;
pub mod squared;
pub mod svg;

pub use error::{Result, TilingError};
pub use lattice::{Cell, Coloring, Lattice, Placement, Region, SymmetryMode, TileShape, Tiling};
pub use scalar::Field;

/// Arbitrary-precision nonnegative tiling count.
pub type BigCount = num_bigint::BigUint;
/// Exact rational scalar used by the linear algebra and the stability test.
pub type Rational = num_rational::BigRational;
/// Default floating-point scalar.
pub type Real = f64;

/// Sets the size of the global worker pool; only the first call has effect.
pub fn init_threads(threads: usize) -> bool {
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().is_ok()
}
