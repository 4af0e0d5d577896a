//! Domino tilability by matching, constructive tilings, and flips.

pub mod flips;
pub mod gomory;
pub mod matching;

pub use flips::{apply_flip, flip_components, flip_distance, flip_moves, Flip, FlipComponents, FlipDistance};
pub use gomory::{gomory_cycle, gomory_tiling};
pub use matching::{hall_certificate, is_domino_tileable, matching_tiling, maximum_matching, HallViolator};
