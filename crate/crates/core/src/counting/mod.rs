//! Counting and sampling domino tilings.

pub mod aztec;
pub mod constants;
pub mod hpr;
pub mod kasteleyn;
pub mod profile;
pub mod rng;

pub use aztec::{arctic_statistic, arctic_survey, aztec_sample, aztec_sample_stream, ArcticStatistic, ArcticSurvey};
pub use constants::{catalan_constant, catalan_partial_sum, dof_per_square, square_dof_constant};
pub use hpr::HighPrecisionReal;
pub use kasteleyn::{aztec_count, kasteleyn_count, kasteleyn_product};
pub use profile::{count_domino_tilings, count_domino_tilings_with, ProfileTable, DEFAULT_MAX_WIDTH};

use crate::error::Result;
use crate::lattice::{Region, Tiling};

/// A uniformly random domino tiling of `region`, reproducible from `seed`.
pub fn sample_tiling(region: &Region, seed: u64) -> Result<Tiling> {
    let table = ProfileTable::new(region, DEFAULT_MAX_WIDTH)?;
    table.sample(&mut rng::stream(seed, 0))
}
