//! Every sorter the harness can run, addressed by its label.
//!
//! | label                      | sorter                                       |
//! |----------------------------|----------------------------------------------|
//! | `SN <family> <swap>`       | generated network, e.g. `SN BN-L 4CmS`       |
//! | `IS <variant>`             | insertion sort, e.g. `IS Def`                |
//! | `RSS <xyz> <small sorter>` | Register Sample Sort, e.g. `RSS 332 SN Best 4Cm` |
//! | `QS <base>`                | hybrid Quicksort, base is a small sorter or an RSS label |
//! | `QSort`                    | the same Quicksort with a final insertion pass |
//! | `StdSort`                  | the standard library's unstable sort          |
//!
//! Selectors may use `*` for a family, swap strategy or insertion variant.

use std::fmt;
use std::str::FromStr;

use crate::hybrid::{hybrid_quicksort, BaseSorter, HybridConfig};
use crate::rss::{rss_sort, RssConfig};
use crate::smallsort::{sort_small, Family, InsertionVariant, SmallSorterId};
use crate::swaps::SwapStrategyId;
use crate::{SortError, SortItem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SorterId {
    Small(SmallSorterId),
    Rss(RssConfig),
    Hybrid(HybridConfig),
    StdSort,
}

impl SorterId {
    /// The plain libstdc++-like Quicksort: insertion sort left for one final pass.
    pub fn qsort() -> SorterId {
        let cfg = HybridConfig::new(BaseSorter::Small(SmallSorterId::Insertion(InsertionVariant::Stl)))
            .with_final_insertion_pass(true)
            .with_pivot_swap(SwapStrategyId::Branching);
        SorterId::Hybrid(cfg)
    }

    /// Largest input the sorter accepts.
    pub fn max_size(&self) -> Option<usize> {
        match self {
            SorterId::Small(s) => s.max_size(),
            _ => None,
        }
    }

    /// Sorts the whole slice by key.
    ///
    /// # Panics
    ///
    /// Panics if the slice is longer than [`SorterId::max_size`].
    pub fn sort(&self, items: &mut [SortItem]) {
        match self {
            SorterId::Small(s) => sort_small(items, items.len(), *s).unwrap_or_else(|e| panic!("{self}: {e}")),
            SorterId::Rss(cfg) => rss_sort(items, cfg),
            SorterId::Hybrid(cfg) => hybrid_quicksort(items, cfg),
            SorterId::StdSort => items.sort_unstable_by_key(|x| x.key),
        }
    }

    /// Uses `seed` for any sampling the sorter does.
    pub fn with_seed(self, seed: u64) -> SorterId {
        match self {
            SorterId::Rss(cfg) => SorterId::Rss(cfg.with_seed(seed)),
            SorterId::Hybrid(cfg) => SorterId::Hybrid(cfg.with_sampling_seed(seed)),
            other => other,
        }
    }
}

impl fmt::Display for SorterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SorterId::Small(s) => s.fmt(f),
            SorterId::Rss(cfg) => cfg.fmt(f),
            SorterId::Hybrid(_) if *self == SorterId::qsort() => f.write_str("QSort"),
            SorterId::Hybrid(cfg) => cfg.fmt(f),
            SorterId::StdSort => f.write_str("StdSort"),
        }
    }
}

fn parse_rss(code: &str, base: &[&str], label: &str) -> Result<RssConfig, SortError> {
    let base: SmallSorterId = base.join(" ").parse().map_err(|_| SortError::UnknownSorter(label.to_string()))?;
    RssConfig::from_code(code, base)
}

impl FromStr for SorterId {
    type Err = SortError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let words: Vec<&str> = s.split_whitespace().collect();
        let unknown = || SortError::UnknownSorter(s.to_string());
        match words.as_slice() {
            ["StdSort"] => Ok(SorterId::StdSort),
            ["QSort"] => Ok(SorterId::qsort()),
            ["SN", ..] | ["IS", ..] => s.parse().map(SorterId::Small),
            ["RSS", code, base @ ..] => parse_rss(code, base, s).map(SorterId::Rss),
            ["QS", "RSS", code, base @ ..] => {
                let rss = parse_rss(code, base, s)?;
                Ok(SorterId::Hybrid(HybridConfig::new(BaseSorter::Rss(rss))))
            }
            ["QS", base @ ..] => {
                let small: SmallSorterId = base.join(" ").parse().map_err(|_| unknown())?;
                Ok(SorterId::Hybrid(HybridConfig::new(BaseSorter::Small(small))))
            }
            _ => Err(unknown()),
        }
    }
}

fn expand_small(words: &[&str], label: &str) -> Result<Vec<SmallSorterId>, SortError> {
    let unknown = || SortError::UnknownSorter(label.to_string());
    match words {
        ["SN", family, swap] => {
            let families: Vec<Family> =
                if *family == "*" { Family::ALL.to_vec() } else { vec![family.parse().map_err(|_| unknown())?] };
            let swaps: Vec<SwapStrategyId> =
                if *swap == "*" { SwapStrategyId::ALL.to_vec() } else { vec![swap.parse().map_err(|_| unknown())?] };
            Ok(families.iter().flat_map(|&f| swaps.iter().map(move |&s| SmallSorterId::network(f, s))).collect())
        }
        ["IS", "*"] => Ok(InsertionVariant::ALL.map(SmallSorterId::Insertion).to_vec()),
        _ => Ok(vec![words.join(" ").parse().map_err(|_| unknown())?]),
    }
}

/// Expands one selector, which may contain `*` wildcards, into sorters.
pub fn expand_selector(selector: &str) -> Result<Vec<SorterId>, SortError> {
    let words: Vec<&str> = selector.split_whitespace().collect();
    if !selector.contains('*') {
        return Ok(vec![selector.parse()?]);
    }
    match words.as_slice() {
        ["SN", ..] | ["IS", ..] => Ok(expand_small(&words, selector)?.into_iter().map(SorterId::Small).collect()),
        ["RSS", code, base @ ..] => expand_small(base, selector)?
            .into_iter()
            .map(|b| RssConfig::from_code(code, b).map(SorterId::Rss))
            .collect(),
        ["QS", "RSS", code, base @ ..] => expand_small(base, selector)?
            .into_iter()
            .map(|b| RssConfig::from_code(code, b).map(|r| SorterId::Hybrid(HybridConfig::new(BaseSorter::Rss(r)))))
            .collect(),
        ["QS", base @ ..] => Ok(expand_small(base, selector)?
            .into_iter()
            .map(|b| SorterId::Hybrid(HybridConfig::new(BaseSorter::Small(b))))
            .collect()),
        _ => Err(SortError::UnknownSorter(selector.to_string())),
    }
}

/// Expands a comma-separated selector list, dropping duplicates.
pub fn expand_selectors(list: &str) -> Result<Vec<SorterId>, SortError> {
    let mut out: Vec<SorterId> = Vec::new();
    for selector in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        for sorter in expand_selector(selector)? {
            if !out.contains(&sorter) {
                out.push(sorter);
            }
        }
    }
    Ok(out)
}
