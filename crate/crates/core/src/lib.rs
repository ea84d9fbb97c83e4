//! Small-set sorting: branchless sorting networks for 2 to 16 items,
//! Register Sample Sort for medium sets, an Introsort-style hybrid
//! Quicksort, and the measurement harness used to compare them.

mod error;
pub mod bench;
pub mod cli;
pub mod hybrid;
pub mod item;
pub mod rss;
pub mod smallsort;
pub mod sorter;
pub mod swaps;

pub use error::SortError;
pub use item::SortItem;
pub use netsort_networks as networks;
pub use sorter::{expand_selector, expand_selectors, SorterId};
