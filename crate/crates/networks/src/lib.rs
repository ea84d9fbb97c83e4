//! Sorting networks for small inputs.
//!
//! This crate generates Bose-Nelson networks, ships the best known networks
//! for 2 to 16 channels, reorders networks for locality or parallelism,
//! verifies them with the zero-one principle and emits them either as
//! comparator tables or as straight-line Rust sorters.
//!
//! Channel indices are 0-based everywhere.

mod best;
mod bose_nelson;
mod emit;
mod error;
mod levels;
mod network;
mod table;
mod verify;

pub use best::{best_network, BEST_MAX, BEST_MIN};
pub use bose_nelson::{bose_nelson_merge, bose_nelson_split, generate_bose_nelson, reorder_locality};
pub use emit::{emit_family_unit, emit_unrolled_source, function_name, Dialect};
pub use error::NetworkError;
pub use levels::{compute_levels, depth, reorder_parallelism};
pub use network::{Comparator, Family, LeveledNetwork, Network, MAX_CHANNELS};
pub use table::{format_table, parse_table};
pub use verify::{find_zero_one_counterexample, verify_zero_one, MAX_EXHAUSTIVE};

/// Builds the network a sorter family uses for `n` channels.
///
/// `Best` reads the embedded tables, the Bose-Nelson families derive from
/// [`generate_bose_nelson`].
pub fn network_for(family: Family, n: usize) -> Result<Network, NetworkError> {
    match family {
        Family::Best => best_network(n),
        Family::BoseNelsonLocality => reorder_locality(&generate_bose_nelson(n)),
        Family::BoseNelsonParallel => Ok(reorder_parallelism(&generate_bose_nelson(n))),
        Family::BoseNelsonRecursive => Ok(generate_bose_nelson(n)),
    }
}
