//! Sorters for 2 to 16 items: generated network sorters for four network
//! families and every swap strategy, an interpreted network executor, and
//! four insertion sorts.

mod insertion;
mod interpreted;
pub mod unrolled;

use std::fmt;
use std::str::FromStr;

pub use insertion::{insertion_sort, insertion_sort_by, InsertionVariant};
pub use interpreted::{sort_network_interpreted, sort_network_interpreted_with};
pub use netsort_networks::Family;

use crate::swaps::{with_swap, ConditionalSwap, SwapStrategyId};
use crate::{SortError, SortItem};

/// Smallest and largest item counts with a network sorter.
pub const NETWORK_MIN: usize = 2;
pub const NETWORK_MAX: usize = 16;

/// A small-set sorter, labeled like `SN BN-L 4CmS` or `IS Def`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SmallSorterId {
    Network { family: Family, swap: SwapStrategyId },
    Insertion(InsertionVariant),
}

impl SmallSorterId {
    pub const fn network(family: Family, swap: SwapStrategyId) -> Self {
        SmallSorterId::Network { family, swap }
    }

    /// Every network family with every strategy, then the insertion sorts.
    pub fn all() -> Vec<SmallSorterId> {
        let mut out = Vec::new();
        for family in Family::ALL {
            for swap in SwapStrategyId::ALL {
                out.push(SmallSorterId::Network { family, swap });
            }
        }
        out.extend(InsertionVariant::ALL.map(SmallSorterId::Insertion));
        out
    }

    pub fn is_network(self) -> bool {
        matches!(self, SmallSorterId::Network { .. })
    }

    /// Largest `n` this sorter accepts.
    pub fn max_size(self) -> Option<usize> {
        match self {
            SmallSorterId::Network { .. } => Some(NETWORK_MAX),
            SmallSorterId::Insertion(_) => None,
        }
    }

    /// Swap strategy used by a network sorter.
    pub fn swap(self) -> Option<SwapStrategyId> {
        match self {
            SmallSorterId::Network { swap, .. } => Some(swap),
            SmallSorterId::Insertion(_) => None,
        }
    }
}

impl fmt::Display for SmallSorterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SmallSorterId::Network { family, swap } => write!(f, "SN {family} {swap}"),
            SmallSorterId::Insertion(v) => write!(f, "IS {v}"),
        }
    }
}

impl FromStr for SmallSorterId {
    type Err = SortError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || SortError::UnknownSorter(s.to_string());
        let parts: Vec<&str> = s.split_whitespace().collect();
        match parts.as_slice() {
            ["SN", family, swap] => Ok(SmallSorterId::Network {
                family: family.parse().map_err(|_| unknown())?,
                swap: swap.parse().map_err(|_| unknown())?,
            }),
            ["IS", variant] => Ok(SmallSorterId::Insertion(variant.parse().map_err(|_| unknown())?)),
            _ => Err(unknown()),
        }
    }
}

fn check_network_size(len: usize, n: usize) -> Result<(), SortError> {
    if !(NETWORK_MIN..=NETWORK_MAX).contains(&n) {
        return Err(SortError::UnsupportedSize { n });
    }
    if len < n {
        return Err(SortError::SliceTooShort { len, n });
    }
    Ok(())
}

/// Sorts `items[..n]` with the generated sorter for `family` and `swap`.
pub fn sort_network(
    items: &mut [SortItem],
    n: usize,
    family: Family,
    swap: SwapStrategyId,
) -> Result<(), SortError> {
    check_network_size(items.len(), n)?;
    with_swap!(swap, S => unrolled::dispatch::<S>(family, items, n));
    Ok(())
}

/// [`sort_network`] with the strategy fixed at compile time.
pub fn sort_network_with<S: ConditionalSwap>(
    items: &mut [SortItem],
    n: usize,
    family: Family,
) -> Result<(), SortError> {
    check_network_size(items.len(), n)?;
    unrolled::dispatch::<S>(family, items, n);
    Ok(())
}

/// Sorts `items[..n]` with any small sorter. `n <= 1` returns immediately.
pub fn sort_small(items: &mut [SortItem], n: usize, sorter: SmallSorterId) -> Result<(), SortError> {
    if n > items.len() {
        return Err(SortError::SliceTooShort { len: items.len(), n });
    }
    if n <= 1 {
        return Ok(());
    }
    match sorter {
        SmallSorterId::Network { family, swap } => sort_network(items, n, family, swap),
        SmallSorterId::Insertion(variant) => {
            insertion_sort(items, n, variant);
            Ok(())
        }
    }
}
