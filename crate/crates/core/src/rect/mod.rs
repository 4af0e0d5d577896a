//! Rectangles tiled by bricks and by similar rectangles.

pub mod dbk;
pub mod polynomial;
pub mod similar;

pub use dbk::{debruijn_klarner, sum_representable, DbkDecision};
pub use polynomial::{right_half_plane, routh_array, IntPolynomial, RouthOutcome};
pub use similar::{
    cube_root_family, cube_root_polynomial, find_similar_guillotine_tiling, row_stack_layout, row_stack_roots,
    similar_rect_square_tileable, verify_row_stack_layout, CubeFamily, Piece, SimilarLayout, SimilarVerdict,
};
