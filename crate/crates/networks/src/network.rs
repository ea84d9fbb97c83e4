use std::fmt;
use std::str::FromStr;

use crate::NetworkError;

/// Largest channel count a [`Network`] may describe.
pub const MAX_CHANNELS: usize = 32;

/// A compare-exchange between two channels. After it runs, channel `low`
/// holds the smaller value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Comparator {
    low: usize,
    high: usize,
}

impl Comparator {
    /// # Panics
    ///
    /// Panics unless `low < high`.
    pub fn new(low: usize, high: usize) -> Self {
        assert!(low < high, "comparator ({low}, {high}) must have low < high");
        Comparator { low, high }
    }

    pub fn low(self) -> usize {
        self.low
    }

    pub fn high(self) -> usize {
        self.high
    }

    pub fn touches(self, channel: usize) -> bool {
        self.low == channel || self.high == channel
    }

    #[cfg(test)]
    pub(crate) fn shifted(self, by: usize) -> Self {
        Comparator { low: self.low + by, high: self.high + by }
    }
}

impl From<(usize, usize)> for Comparator {
    fn from((low, high): (usize, usize)) -> Self {
        Comparator::new(low, high)
    }
}

/// Which construction and comparator order a network uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Best known network from the published tables.
    Best,
    /// Bose-Nelson, fully unrolled, sub-sorters emitted depth first.
    BoseNelsonLocality,
    /// Bose-Nelson, compacted into levels.
    BoseNelsonParallel,
    /// Bose-Nelson, natural recursive order; emitted as calls to smaller sorters.
    BoseNelsonRecursive,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Best,
        Family::BoseNelsonLocality,
        Family::BoseNelsonParallel,
        Family::BoseNelsonRecursive,
    ];

    /// Label used in sorter ids, e.g. `BN-L` in `SN BN-L 4CmS`.
    pub fn label(self) -> &'static str {
        match self {
            Family::Best => "Best",
            Family::BoseNelsonLocality => "BN-L",
            Family::BoseNelsonParallel => "BN-P",
            Family::BoseNelsonRecursive => "BN-R",
        }
    }

    /// Lower-case name used for file names and CLI flags.
    pub fn slug(self) -> &'static str {
        match self {
            Family::Best => "best",
            Family::BoseNelsonLocality => "bn-l",
            Family::BoseNelsonParallel => "bn-p",
            Family::BoseNelsonRecursive => "bn-r",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.label().eq_ignore_ascii_case(s) || f.slug().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown network family `{s}` (expected Best, BN-L, BN-P or BN-R)"))
    }
}

/// An ordered comparator list over `n` channels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Network {
    n: usize,
    comparators: Vec<Comparator>,
    family: Family,
}

impl Network {
    pub fn new(n: usize, comparators: Vec<Comparator>, family: Family) -> Result<Self, NetworkError> {
        if n > MAX_CHANNELS {
            return Err(NetworkError::UnsupportedSize { n, min: 0, max: MAX_CHANNELS });
        }
        if let Some(c) = comparators.iter().find(|c| c.high >= n) {
            return Err(NetworkError::InvalidComparator { low: c.low, high: c.high, n });
        }
        Ok(Network { n, comparators, family })
    }

    pub(crate) fn from_parts(n: usize, comparators: Vec<Comparator>, family: Family) -> Self {
        debug_assert!(comparators.iter().all(|c| c.high < n));
        Network { n, comparators, family }
    }

    pub fn channels(&self) -> usize {
        self.n
    }

    pub fn comparators(&self) -> &[Comparator] {
        &self.comparators
    }

    /// Number of comparators.
    pub fn size(&self) -> usize {
        self.comparators.len()
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn with_family(mut self, family: Family) -> Self {
        self.family = family;
        self
    }

    /// Runs the network over `values` (at least `n` long) with a plain
    /// compare-exchange.
    pub fn apply<T: Ord>(&self, values: &mut [T]) {
        assert!(values.len() >= self.n);
        for c in &self.comparators {
            if values[c.high] < values[c.low] {
                values.swap(c.low, c.high);
            }
        }
    }

    /// Comparators touching `channel`, in network order.
    pub fn channel_trace(&self, channel: usize) -> Vec<Comparator> {
        self.comparators.iter().copied().filter(|c| c.touches(channel)).collect()
    }
}

/// A network split into levels of channel-disjoint comparators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeveledNetwork {
    pub(crate) n: usize,
    pub(crate) levels: Vec<Vec<Comparator>>,
}

impl LeveledNetwork {
    pub fn channels(&self) -> usize {
        self.n
    }

    pub fn levels(&self) -> &[Vec<Comparator>] {
        &self.levels
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn flatten(&self) -> Vec<Comparator> {
        self.levels.iter().flatten().copied().collect()
    }
}
