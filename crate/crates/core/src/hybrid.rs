//! Introsort-style Quicksort with a pluggable base case.
//!
//! Ranges of at most `base_case_threshold` items are handed to the base
//! sorter as soon as partitioning produces them. The classic behaviour of
//! leaving them for one insertion sort pass at the end is available with
//! [`HybridConfig::with_final_insertion_pass`].

use std::fmt;

use crate::rss::{rss_sort, RssConfig};
use crate::smallsort::{insertion_sort, sort_small, InsertionVariant, SmallSorterId};
use crate::swaps::{conditional_swap, SwapStrategyId};
use crate::{SortError, SortItem};

pub const DEFAULT_THRESHOLD: usize = 16;
pub const DEFAULT_DEPTH_FACTOR: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseSorter {
    Small(SmallSorterId),
    Rss(RssConfig),
}

impl BaseSorter {
    fn max_size(&self) -> Option<usize> {
        match self {
            BaseSorter::Small(s) => s.max_size(),
            BaseSorter::Rss(_) => None,
        }
    }

    pub fn sort(&self, items: &mut [SortItem]) {
        match self {
            BaseSorter::Small(s) => sort_small(items, items.len(), *s).expect("range fits the base sorter"),
            BaseSorter::Rss(cfg) => rss_sort(items, cfg),
        }
    }
}

impl fmt::Display for BaseSorter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseSorter::Small(s) => s.fmt(f),
            BaseSorter::Rss(cfg) => cfg.fmt(f),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HybridConfig {
    base_case_threshold: usize,
    base_sorter: BaseSorter,
    depth_limit_factor: usize,
    final_insertion_pass: bool,
    pivot_swap: SwapStrategyId,
}

impl HybridConfig {
    /// Threshold 16, depth factor 2. The pivot network uses the base
    /// sorter's swap strategy, or a plain branch for insertion sorts.
    pub fn new(base_sorter: BaseSorter) -> Self {
        let pivot_swap = match base_sorter {
            BaseSorter::Small(s) => s.swap(),
            BaseSorter::Rss(cfg) => cfg.base_sorter().swap(),
        }
        .unwrap_or(SwapStrategyId::Branching);
        HybridConfig {
            base_case_threshold: DEFAULT_THRESHOLD,
            base_sorter,
            depth_limit_factor: DEFAULT_DEPTH_FACTOR,
            final_insertion_pass: false,
            pivot_swap,
        }
    }

    pub fn with_threshold(mut self, threshold: usize) -> Result<Self, SortError> {
        if threshold < 2 {
            return Err(SortError::InvalidConfig(format!("threshold {threshold} is below 2")));
        }
        if let Some(max) = self.base_sorter.max_size() {
            if threshold > max {
                return Err(SortError::InvalidConfig(format!(
                    "threshold {threshold} exceeds what {} can sort ({max})",
                    self.base_sorter
                )));
            }
        }
        self.base_case_threshold = threshold;
        Ok(self)
    }

    pub fn with_depth_limit_factor(mut self, factor: usize) -> Self {
        self.depth_limit_factor = factor;
        self
    }

    /// Leave small ranges unsorted and finish with one insertion sort over
    /// the whole input instead of calling the base sorter.
    pub fn with_final_insertion_pass(mut self, enabled: bool) -> Self {
        self.final_insertion_pass = enabled;
        self
    }

    pub fn with_pivot_swap(mut self, swap: SwapStrategyId) -> Self {
        self.pivot_swap = swap;
        self
    }

    /// Seed for an RSS base sorter's sampling; no effect otherwise.
    pub fn with_sampling_seed(mut self, seed: u64) -> Self {
        if let BaseSorter::Rss(rss) = self.base_sorter {
            self.base_sorter = BaseSorter::Rss(rss.with_seed(seed));
        }
        self
    }

    pub fn base_case_threshold(&self) -> usize {
        self.base_case_threshold
    }

    pub fn base_sorter(&self) -> BaseSorter {
        self.base_sorter
    }

    pub fn depth_limit_factor(&self) -> usize {
        self.depth_limit_factor
    }

    pub fn final_insertion_pass(&self) -> bool {
        self.final_insertion_pass
    }

    pub fn depth_limit(&self, n: usize) -> usize {
        self.depth_limit_factor * n.max(1).ilog2() as usize
    }
}

impl fmt::Display for HybridConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QS {}", self.base_sorter)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HybridStats {
    pub partitions: usize,
    pub base_calls: usize,
    pub max_base_len: usize,
    pub heapsort_calls: usize,
    pub max_depth: usize,
}

fn swap_at(items: &mut [SortItem], i: usize, j: usize, swap: SwapStrategyId) {
    debug_assert!(i < j);
    let (left, right) = items.split_at_mut(j);
    conditional_swap(swap, &mut left[i], &mut right[0]);
}

/// Sorts the items at `lo < mid < hi` with the three-comparator network and
/// returns `mid`, which now holds their median.
pub fn median_of_three_pivot(items: &mut [SortItem], lo: usize, mid: usize, hi: usize, swap: SwapStrategyId) -> usize {
    assert!(lo < mid && mid < hi && hi < items.len(), "pivot candidates out of order or range");
    swap_at(items, mid, hi, swap);
    swap_at(items, lo, hi, swap);
    swap_at(items, lo, mid, swap);
    mid
}

/// Hoare partition of `v[1..]` around the key in `v[0]`. Needs an item not
/// smaller than the pivot somewhere after position 0 to stop the left scan.
/// Returns `cut` with every key in `v[..cut]` at most the pivot and every
/// key in `v[cut..]` at least the pivot; `1 <= cut < v.len()`.
fn partition(v: &mut [SortItem]) -> usize {
    let pivot = v[0].key;
    let mut i = 1;
    let mut j = v.len();
    loop {
        while v[i].key < pivot {
            i += 1;
        }
        j -= 1;
        while pivot < v[j].key {
            j -= 1;
        }
        if i >= j {
            return i;
        }
        v.swap(i, j);
        i += 1;
    }
}

/// In-place heapsort by key.
pub fn heapsort(items: &mut [SortItem]) {
    fn sift_down(v: &mut [SortItem], mut root: usize, end: usize) {
        loop {
            let mut child = 2 * root + 1;
            if child >= end {
                return;
            }
            if child + 1 < end && v[child].key < v[child + 1].key {
                child += 1;
            }
            if v[root].key >= v[child].key {
                return;
            }
            v.swap(root, child);
            root = child;
        }
    }
    let n = items.len();
    for root in (0..n / 2).rev() {
        sift_down(items, root, n);
    }
    for end in (1..n).rev() {
        items.swap(0, end);
        sift_down(items, 0, end);
    }
}

pub fn hybrid_quicksort(items: &mut [SortItem], cfg: &HybridConfig) {
    hybrid_quicksort_instrumented(items, cfg);
}

pub fn hybrid_quicksort_instrumented(items: &mut [SortItem], cfg: &HybridConfig) -> HybridStats {
    let mut stats = HybridStats::default();
    let n = items.len();
    introsort(items, cfg.depth_limit(n), 0, cfg, &mut stats);
    if cfg.final_insertion_pass {
        insertion_sort(items, n, InsertionVariant::Stl);
    }
    stats
}

fn introsort(mut v: &mut [SortItem], mut depth_limit: usize, mut depth: usize, cfg: &HybridConfig, stats: &mut HybridStats) {
    loop {
        let n = v.len();
        stats.max_depth = stats.max_depth.max(depth);
        if n <= cfg.base_case_threshold {
            if !cfg.final_insertion_pass {
                stats.base_calls += 1;
                stats.max_base_len = stats.max_base_len.max(n);
                cfg.base_sorter.sort(v);
            }
            return;
        }
        if depth_limit == 0 {
            stats.heapsort_calls += 1;
            heapsort(v);
            return;
        }
        depth_limit -= 1;
        depth += 1;

        let mid = median_of_three_pivot(v, 0, n / 2, n - 1, cfg.pivot_swap);
        v.swap(0, mid);
        let cut = partition(v);
        stats.partitions += 1;
        debug_assert!({
            let p = v[0].key;
            v[..cut].iter().all(|x| x.key <= p) && v[cut..].iter().all(|x| x.key >= p)
        });

        let (left, right) = v.split_at_mut(cut);
        introsort(right, depth_limit, depth, cfg, stats);
        v = left;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bench::fill_random_seeded;
    use crate::item::is_sorted_by_key;
    use crate::smallsort::Family;

    fn keyed(keys: &[u64]) -> Vec<SortItem> {
        keys.iter().enumerate().map(|(i, &k)| SortItem::new(k, i as u64)).collect()
    }

    fn network_cfg() -> HybridConfig {
        HybridConfig::new(BaseSorter::Small(SmallSorterId::network(Family::BoseNelsonLocality, SwapStrategyId::FourSelect)))
    }

    #[test]
    fn pivot_examples() {
        let mut v = keyed(&[3, 1, 2]);
        let p = median_of_three_pivot(&mut v, 0, 1, 2, SwapStrategyId::FourSelect);
        assert_eq!(v.iter().map(|x| x.key).collect::<Vec<_>>(), [1, 2, 3]);
        assert_eq!(v[p].key, 2);

        let mut v = keyed(&[4, 4, 4]);
        let p = median_of_three_pivot(&mut v, 0, 1, 2, SwapStrategyId::Branching);
        assert_eq!(v, keyed(&[4, 4, 4]));
        assert_eq!(v[p].key, 4);
    }

    #[test]
    fn pivot_of_all_orders() {
        for perm in [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]] {
            for swap in SwapStrategyId::ALL {
                let mut v = keyed(&[perm[0], 9, perm[1], 9, perm[2]]);
                let p = median_of_three_pivot(&mut v, 0, 2, 4, swap);
                assert_eq!((v[0].key, v[p].key, v[4].key), (1, 2, 3), "{perm:?} {swap}");
            }
        }
    }

    #[test]
    fn small_input_is_one_base_call() {
        let mut v = keyed(&[5, 4, 3, 2, 1, 0, 9, 8, 7, 6, 15, 14, 13, 12, 11, 10]);
        let stats = hybrid_quicksort_instrumented(&mut v, &network_cfg());
        assert_eq!((stats.partitions, stats.base_calls), (0, 1));
        assert!(is_sorted_by_key(&v));
    }

    #[test]
    fn heapsort_cases() {
        let mut empty: Vec<SortItem> = vec![];
        heapsort(&mut empty);
        let mut v = keyed(&(0..100).rev().collect::<Vec<_>>());
        heapsort(&mut v);
        assert_eq!(v.iter().map(|x| x.key).collect::<Vec<_>>(), (0..100).collect::<Vec<_>>());
    }

    #[test]
    fn random_input_and_base_sizes() {
        let mut v = vec![SortItem::default(); 1 << 14];
        fill_random_seeded(&mut v, 99);
        let stats = hybrid_quicksort_instrumented(&mut v, &network_cfg());
        assert!(is_sorted_by_key(&v));
        assert!(stats.max_base_len <= 16);
        assert_eq!(stats.heapsort_calls, 0);
    }

    #[test]
    fn equal_keys_stay_shallow() {
        let mut v = keyed(&vec![7; 1 << 14]);
        let cfg = network_cfg();
        let stats = hybrid_quicksort_instrumented(&mut v, &cfg);
        assert!(stats.max_depth <= cfg.depth_limit(1 << 14));
        assert!(stats.partitions < 2 * (1 << 14) / 16);
    }

    #[test]
    fn depth_guard_engages() {
        let mut v = vec![SortItem::default(); 4096];
        fill_random_seeded(&mut v, 4);
        let cfg = network_cfg().with_depth_limit_factor(0);
        let stats = hybrid_quicksort_instrumented(&mut v, &cfg);
        assert_eq!((stats.heapsort_calls, stats.partitions), (1, 0));
        assert!(is_sorted_by_key(&v));
    }

    #[test]
    fn final_pass_variant() {
        let mut v = vec![SortItem::default(); 5000];
        fill_random_seeded(&mut v, 8);
        let cfg = HybridConfig::new(BaseSorter::Small(SmallSorterId::Insertion(InsertionVariant::Stl))).with_final_insertion_pass(true);
        let stats = hybrid_quicksort_instrumented(&mut v, &cfg);
        assert_eq!(stats.base_calls, 0);
        assert!(is_sorted_by_key(&v));
    }

    #[test]
    fn rss_base() {
        let rss = RssConfig::default();
        let cfg = HybridConfig::new(BaseSorter::Rss(rss)).with_threshold(256).unwrap();
        let mut v = vec![SortItem::default(); 20000];
        fill_random_seeded(&mut v, 1);
        let stats = hybrid_quicksort_instrumented(&mut v, &cfg);
        assert!(is_sorted_by_key(&v));
        assert!(stats.max_base_len <= 256);
        assert_eq!(cfg.to_string(), "QS RSS 332 SN Best 4Cm");
    }

    #[test]
    fn threshold_limits() {
        assert!(network_cfg().with_threshold(1).is_err());
        assert!(network_cfg().with_threshold(17).is_err());
        assert!(network_cfg().with_threshold(8).is_ok());
    }
}
