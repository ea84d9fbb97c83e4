//! Register Sample Sort: sample sort with three splitters held in local
//! variables, four buckets, and a small-set sorter for the base case.
//!
//! A config is written `xyz` like `332`: three splitters, oversampling
//! factor 3, classification block size 2.

use std::cell::Cell;
use std::fmt;
use std::hint::select_unpredictable;

use crate::bench::Lcg;
use crate::smallsort::{insertion_sort, sort_small, Family, InsertionVariant, SmallSorterId, NETWORK_MAX};
use crate::swaps::SwapStrategyId;
use crate::{SortError, SortItem};

pub const NUM_SPLITTERS: usize = 3;
pub const NUM_BUCKETS: usize = NUM_SPLITTERS + 1;
pub const MAX_BLOCK_SIZE: usize = 5;
pub const DEFAULT_THRESHOLD: usize = 16;

/// Registers the classification loop needs: the splitters, a bucket
/// pointer, the element index and count, and index, predicate and
/// scratch splitter for every lane of a block.
pub const fn registers_required(block_size: usize) -> usize {
    NUM_SPLITTERS + 3 + 3 * block_size
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RssConfig {
    oversampling: usize,
    block_size: usize,
    base_case_threshold: usize,
    base_sorter: SmallSorterId,
    seed: u64,
}

impl RssConfig {
    pub fn new(oversampling: usize, block_size: usize, base_sorter: SmallSorterId) -> Result<Self, SortError> {
        let cfg = RssConfig { oversampling, block_size, base_case_threshold: DEFAULT_THRESHOLD, base_sorter, seed: 1 };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Parses the `xyz` code, e.g. `332`.
    pub fn from_code(code: &str, base_sorter: SmallSorterId) -> Result<Self, SortError> {
        let bad = |why: &str| SortError::InvalidConfig(format!("RSS config `{code}`: {why}"));
        let digits: Vec<usize> =
            code.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect::<Option<_>>().ok_or_else(|| bad("not three digits"))?;
        let [splitters, oversampling, block_size] = digits[..] else {
            return Err(bad("not three digits"));
        };
        if splitters != NUM_SPLITTERS {
            return Err(bad("only three splitters are supported"));
        }
        RssConfig::new(oversampling, block_size, base_sorter)
    }

    pub fn with_threshold(mut self, threshold: usize) -> Result<Self, SortError> {
        self.base_case_threshold = threshold;
        self.validate()?;
        Ok(self)
    }

    /// Seed for the sampling stream; any value is folded into the valid range.
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    fn validate(&self) -> Result<(), SortError> {
        let bad = |why: String| Err(SortError::InvalidConfig(why));
        if self.oversampling == 0 {
            return bad("oversampling factor must be at least 1".into());
        }
        if !(1..=MAX_BLOCK_SIZE).contains(&self.block_size) {
            return bad(format!("block size {} is outside 1..={MAX_BLOCK_SIZE}", self.block_size));
        }
        if let Some(max) = self.base_sorter.max_size() {
            if self.base_case_threshold > max {
                return bad(format!("threshold {} exceeds what {} can sort ({max})", self.base_case_threshold, self.base_sorter));
            }
        }
        Ok(())
    }

    pub fn oversampling(&self) -> usize {
        self.oversampling
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }

    pub fn base_case_threshold(&self) -> usize {
        self.base_case_threshold
    }

    pub fn base_sorter(&self) -> SmallSorterId {
        self.base_sorter
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn sample_size(&self) -> usize {
        self.oversampling * NUM_BUCKETS
    }

    /// The `xyz` code.
    pub fn code(&self) -> String {
        format!("{NUM_SPLITTERS}{}{}", self.oversampling, self.block_size)
    }
}

impl Default for RssConfig {
    fn default() -> Self {
        let base = SmallSorterId::network(Family::Best, SwapStrategyId::FourSelect);
        RssConfig::new(3, 2, base).unwrap()
    }
}

impl fmt::Display for RssConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RSS {} {}", self.code(), self.base_sorter)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitterSet {
    pub s_low: u64,
    pub s_mid: u64,
    pub s_high: u64,
}

impl SplitterSet {
    /// # Panics
    ///
    /// Panics unless `s_low <= s_mid <= s_high`.
    pub fn new(s_low: u64, s_mid: u64, s_high: u64) -> Self {
        assert!(s_low <= s_mid && s_mid <= s_high, "splitters must be ascending");
        SplitterSet { s_low, s_mid, s_high }
    }
}

/// The range is too small to draw a sample from; sort it directly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FallbackToBaseCase {
    pub len: usize,
    pub sample_size: usize,
}

/// Moves a sample of `cfg.sample_size()` items, picked at random positions
/// without replacement, to the front of `items`, sorts it there and returns
/// the items at sample positions a, 2a and 3a (1-based).
pub fn select_splitters(items: &mut [SortItem], cfg: &RssConfig, rng: &mut Lcg) -> Result<SplitterSet, FallbackToBaseCase> {
    let m = cfg.sample_size();
    let n = items.len();
    if n < m {
        return Err(FallbackToBaseCase { len: n, sample_size: m });
    }
    for i in 0..m {
        let j = i + (rng.next() % (n - i) as u64) as usize;
        items.swap(i, j);
    }
    let sorter = if m <= NETWORK_MAX { cfg.base_sorter } else { SmallSorterId::Insertion(InsertionVariant::Def) };
    sort_small(items, m, sorter).expect("sample size is within the sorter's range");
    let a = cfg.oversampling;
    Ok(SplitterSet { s_low: items[a - 1].key, s_mid: items[2 * a - 1].key, s_high: items[3 * a - 1].key })
}

/// Key comparison used by the classifier, `splitter < key`.
pub trait SplitterCompare {
    fn less(splitter: u64, key: u64) -> bool;
}

/// Plain comparison.
pub struct Direct;

impl SplitterCompare for Direct {
    #[inline(always)]
    fn less(splitter: u64, key: u64) -> bool {
        splitter < key
    }
}

thread_local! {
    static COMPARISONS: Cell<u64> = const { Cell::new(0) };
}

/// Comparison that also bumps a thread-local counter.
pub struct Counting;

impl SplitterCompare for Counting {
    #[inline(always)]
    fn less(splitter: u64, key: u64) -> bool {
        COMPARISONS.with(|c| c.set(c.get() + 1));
        splitter < key
    }
}

/// Comparisons made through [`Counting`] on this thread.
pub fn comparison_count() -> u64 {
    COMPARISONS.with(Cell::get)
}

pub fn reset_comparison_count() {
    COMPARISONS.with(|c| c.set(0));
}

/// Bucket of `key`: `2 [s_mid < key] + [x < key]` where `x` is `s_high`
/// if the first test held and `s_low` otherwise. A key equal to a splitter
/// goes to the lower bucket.
#[inline(always)]
pub fn classify_element(key: u64, s: &SplitterSet) -> usize {
    classify_element_with::<Direct>(key, s)
}

#[inline(always)]
pub fn classify_element_with<C: SplitterCompare>(key: u64, s: &SplitterSet) -> usize {
    let cmp = C::less(s.s_mid, key);
    let x = select_unpredictable(cmp, s.s_high, s.s_low);
    let index = cmp as usize;
    (index << 1) + C::less(x, key) as usize
}

// Each lane gets its own key, predicate, scratch splitter and index
// variable; the stages run across all lanes before the next one starts.
macro_rules! block_classifier {
    ($name:ident; $(($off:literal, $k:ident, $c:ident, $x:ident, $i:ident)),+) => {
        #[inline(always)]
        fn $name<C: SplitterCompare>(items: &[SortItem], s: &SplitterSet, out: &mut [u8]) -> usize {
            const B: usize = [$($off),+].len();
            let (lo, mid, hi) = (s.s_low, s.s_mid, s.s_high);
            let full = items.len() / B * B;
            for (block, idx) in items[..full].chunks_exact(B).zip(out[..full].chunks_exact_mut(B)) {
                $( let $k = block[$off].key; )+
                $( let $c = C::less(mid, $k); )+
                $( let $x = select_unpredictable($c, hi, lo); )+
                $( let $i = $c as u8; )+
                $( let $i = ($i << 1) + C::less($x, $k) as u8; )+
                $( idx[$off] = $i; )+
            }
            full
        }
    };
}

block_classifier!(classify_1; (0, k0, c0, x0, i0));
block_classifier!(classify_2; (0, k0, c0, x0, i0), (1, k1, c1, x1, i1));
block_classifier!(classify_3; (0, k0, c0, x0, i0), (1, k1, c1, x1, i1), (2, k2, c2, x2, i2));
block_classifier!(classify_4; (0, k0, c0, x0, i0), (1, k1, c1, x1, i1), (2, k2, c2, x2, i2), (3, k3, c3, x3, i3));
block_classifier!(
    classify_5;
    (0, k0, c0, x0, i0), (1, k1, c1, x1, i1), (2, k2, c2, x2, i2), (3, k3, c3, x3, i3), (4, k4, c4, x4, i4)
);

/// Writes the bucket of every item to `out`, classifying `block_size` items
/// at a time and the remainder one by one.
///
/// # Panics
///
/// Panics if `block_size` is outside 1..=5 or `out` is shorter than `items`.
pub fn classify_block(items: &[SortItem], s: &SplitterSet, block_size: usize, out: &mut [u8]) {
    classify_block_with::<Direct>(items, s, block_size, out)
}

pub fn classify_block_with<C: SplitterCompare>(items: &[SortItem], s: &SplitterSet, block_size: usize, out: &mut [u8]) {
    assert!(out.len() >= items.len(), "output shorter than input");
    let done = match block_size {
        1 => classify_1::<C>(items, s, out),
        2 => classify_2::<C>(items, s, out),
        3 => classify_3::<C>(items, s, out),
        4 => classify_4::<C>(items, s, out),
        5 => classify_5::<C>(items, s, out),
        _ => panic!("block size {block_size} is outside 1..={MAX_BLOCK_SIZE}"),
    };
    for (item, idx) in items[done..].iter().zip(&mut out[done..]) {
        *idx = classify_element_with::<C>(item.key, s) as u8;
    }
}

/// What one run did, for tests and diagnostics.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RssStats {
    pub classified: usize,
    pub partitions: usize,
    pub base_calls: usize,
    pub max_base_len: usize,
    /// Ranges sorted by insertion sort because they were too small to
    /// sample or a split made no progress.
    pub fallbacks: usize,
    pub max_depth: usize,
}

/// Sorts `items` by key.
pub fn rss_sort(items: &mut [SortItem], cfg: &RssConfig) {
    rss_sort_instrumented(items, cfg);
}

pub fn rss_sort_instrumented(items: &mut [SortItem], cfg: &RssConfig) -> RssStats {
    let mut stats = RssStats::default();
    let mut rng = Lcg::from_any(cfg.seed);
    if items.len() <= cfg.base_case_threshold {
        base_case(items, cfg, &mut stats);
        return stats;
    }
    let mut scratch = vec![SortItem::default(); items.len()];
    let mut buckets = vec![0u8; items.len()];
    recurse(items, &mut scratch, &mut buckets, cfg, &mut rng, &mut stats, 0);
    stats
}

fn base_case(items: &mut [SortItem], cfg: &RssConfig, stats: &mut RssStats) {
    stats.base_calls += 1;
    stats.max_base_len = stats.max_base_len.max(items.len());
    sort_small(items, items.len(), cfg.base_sorter).expect("threshold validated against the base sorter");
}

fn fallback(items: &mut [SortItem], stats: &mut RssStats) {
    stats.fallbacks += 1;
    insertion_sort(items, items.len(), InsertionVariant::Def);
}

fn recurse(
    items: &mut [SortItem],
    scratch: &mut [SortItem],
    buckets: &mut [u8],
    cfg: &RssConfig,
    rng: &mut Lcg,
    stats: &mut RssStats,
    depth: usize,
) {
    let n = items.len();
    stats.max_depth = stats.max_depth.max(depth);
    if n <= cfg.base_case_threshold {
        base_case(items, cfg, stats);
        return;
    }
    let Ok(splitters) = select_splitters(items, cfg, rng) else {
        fallback(items, stats);
        return;
    };

    let buckets = &mut buckets[..n];
    classify_block(items, &splitters, cfg.block_size, buckets);
    stats.classified += n;
    stats.partitions += 1;

    let mut counts = [0usize; NUM_BUCKETS];
    for &b in buckets.iter() {
        counts[b as usize] += 1;
    }
    if counts.contains(&n) {
        fallback(items, stats);
        return;
    }

    let mut offsets = [0usize; NUM_BUCKETS];
    for b in 1..NUM_BUCKETS {
        offsets[b] = offsets[b - 1] + counts[b - 1];
    }
    let scratch = &mut scratch[..n];
    let mut next = offsets;
    for (item, &b) in items.iter().zip(buckets.iter()) {
        scratch[next[b as usize]] = *item;
        next[b as usize] += 1;
    }
    items.copy_from_slice(scratch);

    for b in 0..NUM_BUCKETS {
        let range = offsets[b]..offsets[b] + counts[b];
        recurse(&mut items[range.clone()], &mut scratch[range.clone()], &mut buckets[range], cfg, rng, stats, depth + 1);
    }
}
