// Usage: cargo run --example hybrid_quicksort
//
// Quicksort that hands pieces of at most 16 items to a small sorter, with a
// heapsort fallback when recursion gets too deep.

use netsort::bench::{check_sorted, fill_random_seeded};
use netsort::hybrid::{hybrid_quicksort_instrumented, BaseSorter, HybridConfig};
use netsort::rss::RssConfig;
use netsort::smallsort::{Family, SmallSorterId};
use netsort::swaps::SwapStrategyId;
use netsort::{SortItem, SorterId};

fn main() {
    let n = 1 << 14;
    let network = SmallSorterId::network(Family::BoseNelsonLocality, SwapStrategyId::FourSelect);
    let configs = [
        HybridConfig::new(BaseSorter::Small(network)),
        HybridConfig::new(BaseSorter::Rss(RssConfig::from_code("332", network).unwrap())).with_threshold(256).unwrap(),
        HybridConfig::new(BaseSorter::Small(network)).with_depth_limit_factor(0),
    ];
    for cfg in configs {
        let mut v = vec![SortItem::default(); n];
        fill_random_seeded(&mut v, 1);
        let stats = hybrid_quicksort_instrumented(&mut v, &cfg);
        assert!(check_sorted(&v));
        println!(
            "{cfg} (depth factor {}): {} partitions, {} base calls, largest base {}, {} heapsorts",
            cfg.depth_limit_factor(),
            stats.partitions,
            stats.base_calls,
            stats.max_base_len,
            stats.heapsort_calls
        );
    }

    // the labelled form used by the CLI
    for label in ["QS SN BN-L 4Cm", "QS RSS 332 SN Best 4CmS", "QSort", "StdSort"] {
        let id: SorterId = label.parse().unwrap();
        let mut v = vec![SortItem::default(); n];
        fill_random_seeded(&mut v, 2);
        id.sort(&mut v);
        assert!(check_sorted(&v));
        println!("{id} sorted {n} items");
    }
}
