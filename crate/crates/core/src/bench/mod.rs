//! Measurement harness: input generation, correctness checks, the
//! OneArrayRepeat and ArrayInRow loops, and the statistics behind the
//! ranking and speedup reports.

mod check;
mod lcg;
mod loops;
pub mod report;
mod stats;
mod timer;

use thiserror::Error;

pub use check::{
    check_sorted, default_fingerprint, fill_random, fill_random_seeded, fingerprint, matches_fingerprint,
    simulated_check, simulated_check_count, Fingerprint, FINGERPRINT_PRIME,
};
pub use lcg::{lcg_next, Lcg, SeedSource, MODULUS, MULTIPLIER};
pub use loops::{array_in_row, default_array_count, one_array_repeat, ArrayInRow, MeasurementRecord, OneArrayRepeat};
pub use stats::{boxplot_stats, BoxStats};
pub use timer::{Timer, TimerKind};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BenchError {
    #[error("seed {0} is outside 1..2147483647")]
    InvalidSeed(u64),

    #[error("{sorter} failed on array size {array_size}, measure {measure} (seed {seed}): {reason}")]
    CorrectnessFailure { sorter: String, array_size: usize, measure: usize, seed: u64, reason: String },

    #[error("configuration error: {0}")]
    Configuration(String),

    #[error("statistics need at least one sample")]
    EmptySample,

    #[error("incomplete result grid, missing: {}", format_cells(.0))]
    IncompleteGrid(Vec<(String, usize)>),

    #[error("{statistic} cost of `{sorter}` at size {size} is {cost}, ratios need positive costs")]
    NonPositiveCost { sorter: String, size: usize, statistic: report::CostSummary, cost: f64 },
}

fn format_cells(cells: &[(String, usize)]) -> String {
    cells.iter().map(|(s, n)| format!("({s}, {n})")).collect::<Vec<_>>().join(", ")
}
