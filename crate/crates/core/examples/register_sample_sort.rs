// Usage: cargo run --example register_sample_sort
//
// Register Sample Sort: three splitters held in registers split the input
// into four buckets until pieces are small enough for a network.

use netsort::bench::{check_sorted, fill_random_seeded};
use netsort::rss::{classify_block, classify_element, rss_sort_instrumented, RssConfig, SplitterSet};
use netsort::smallsort::{Family, SmallSorterId};
use netsort::swaps::SwapStrategyId;
use netsort::SortItem;

fn main() {
    let s = SplitterSet::new(10, 20, 30);
    let keys = [5, 15, 25, 35, 20];
    let buckets: Vec<usize> = keys.iter().map(|&k| classify_element(k, &s)).collect();
    println!("splitters 10/20/30: keys {keys:?} -> buckets {buckets:?}");
    let items: Vec<SortItem> = keys.iter().map(|&k| SortItem::new(k, 0)).collect();
    let mut out = [0u8; 5];
    classify_block(&items, &s, 3, &mut out);
    assert!(out.iter().zip(&buckets).all(|(&a, &b)| a as usize == b));

    let base = SmallSorterId::network(Family::Best, SwapStrategyId::FourSelect);
    for code in ["331", "332", "344"] {
        let cfg = RssConfig::from_code(code, base).unwrap();
        let mut v = vec![SortItem::default(); 256];
        fill_random_seeded(&mut v, 42);
        let stats = rss_sort_instrumented(&mut v, &cfg);
        assert!(check_sorted(&v));
        println!(
            "{cfg}: sample {}, {} partitions, {} base calls, largest base {}",
            cfg.sample_size(),
            stats.partitions,
            stats.base_calls,
            stats.max_base_len
        );
    }

    // all-equal input cannot be split and falls back to a plain sort
    let cfg = RssConfig::default();
    let mut same = vec![SortItem::new(3, 0); 100];
    let stats = rss_sort_instrumented(&mut same, &cfg);
    println!("all-equal input: {} fallback(s)", stats.fallbacks);
}
