//! Acceptance checks, one PASS/FAIL line each.
//!
//! Checks 12 and 14 time code on the host. They report a failure as a
//! warning unless `NETSORT_STRICT_PERF=1` is set.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use netsort::bench::report::{speedup_between, CostGrid, CostSummary};
use netsort::bench::{
    boxplot_stats, check_sorted, default_fingerprint, fill_random, fingerprint, lcg_next, matches_fingerprint,
    one_array_repeat, Lcg, OneArrayRepeat, SeedSource, Timer, FINGERPRINT_PRIME,
};
use netsort::bench::report::rank_by_geomean;
use netsort::hybrid::{hybrid_quicksort_instrumented, BaseSorter, HybridConfig};
use netsort::networks::{best_network, depth, generate_bose_nelson, network_for, verify_zero_one, Family};
use netsort::rss::{classify_block, classify_element, rss_sort, RssConfig, SplitterSet};
use netsort::smallsort::{sort_network, sort_network_with, InsertionVariant, SmallSorterId};
use netsort::swaps::{
    conditional_swap, reset_swap_count, swap_count, ConditionalSwap, Counted, FourSelect, FourSelectSplit, IndirectSelect,
    PredicateIndirectSelect, SixSelect, SwapStrategyId, TernarySelect,
};
use netsort::{SortItem, SorterId};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_items(rng: &mut Lcg, n: usize) -> Vec<SortItem> {
    let mut v = vec![SortItem::default(); n];
    fill_random(&mut v, rng);
    v
}

/// Sorted by key, ties by reference, for multiset comparison.
fn canonical(v: &[SortItem]) -> Vec<SortItem> {
    let mut c = v.to_vec();
    c.sort_unstable_by_key(|x| (x.key, x.reference));
    c
}

fn matches_reference(input: &[SortItem], output: &[SortItem]) -> bool {
    check_sorted(output) && canonical(input) == canonical(output)
}

const FAMILIES: [Family; 4] = Family::ALL;

fn zero_one() -> Outcome {
    let start = Instant::now();
    for family in FAMILIES {
        for n in 2..=16 {
            let net = network_for(family, n).map_err(|e| e.to_string())?;
            ensure(verify_zero_one(&net).map_err(|e| e.to_string())?, || format!("{} n={n} fails", family.label()))?;
            // the compiled sorter too
            let mut v = vec![SortItem::default(); n];
            for bits in 0u32..1 << n {
                for (i, x) in v.iter_mut().enumerate() {
                    *x = SortItem::new(u64::from(bits >> i & 1), i as u64);
                }
                sort_network(&mut v, n, family, SwapStrategyId::FourSelect).unwrap();
                ensure(check_sorted(&v), || format!("compiled {} n={n} fails on {bits:#b}", family.label()))?;
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 60.0, || format!("took {secs:.1} s"))?;
    Ok(format!("4 families x n=2..16, networks and compiled sorters, {secs:.2} s"))
}

fn best_anchors() -> Outcome {
    let b10 = best_network(10).map_err(|e| e.to_string())?;
    ensure(b10.size() == 29 && depth(&b10) == 9, || format!("best 10: size {} depth {}", b10.size(), depth(&b10)))?;
    for n in 2..=8 {
        let best = best_network(n).unwrap();
        let bn = generate_bose_nelson(n);
        ensure(best.size() == bn.size() && depth(&best) == depth(&bn), || {
            format!("n={n}: best {}/{} vs Bose-Nelson {}/{}", best.size(), depth(&best), bn.size(), depth(&bn))
        })?;
    }
    Ok("best(10) = 29 comparators, depth 9; n<=8 best equals Bose-Nelson".into())
}

fn bose_nelson_six() -> Outcome {
    let size = generate_bose_nelson(6).size();
    ensure(size == 12, || format!("{size} comparators"))?;
    Ok("12 comparators".into())
}

fn swap_equality() -> Outcome {
    let mut rng = Lcg::from_any(2024);
    let mut wide = || (rng.next() << 33) ^ (rng.next() << 2) ^ rng.next();
    let equal = (SortItem::new(5, 1), SortItem::new(5, 2));
    let trials = 1_000_000;
    for i in 0..=trials {
        let (l0, r0) = if i == trials {
            equal
        } else if i % 8 == 0 {
            (SortItem::new(wide() % 3, wide()), SortItem::new(wide() % 3, wide()))
        } else {
            (SortItem::new(wide(), wide()), SortItem::new(wide(), wide()))
        };
        let expected = if r0.key < l0.key { (r0, l0) } else { (l0, r0) };
        for s in SwapStrategyId::ALL {
            let (mut l, mut r) = (l0, r0);
            conditional_swap(s, &mut l, &mut r);
            ensure((l, r) == expected, || format!("{s} on {:?}", (l0, r0)))?;
        }
    }
    Ok(format!("9 strategies identical on {trials} random pairs plus equal keys"))
}

fn next_permutation(p: &mut [u64]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else { return false };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn small_sort_oracle() -> Outcome {
    let branch_free = [
        (Family::Best, SwapStrategyId::FourSelect),
        (Family::BoseNelsonLocality, SwapStrategyId::FourSelectSplit),
        (Family::BoseNelsonParallel, SwapStrategyId::IndirectSelect),
        (Family::BoseNelsonRecursive, SwapStrategyId::SixSelect),
    ];
    for (family, swap) in branch_free {
        let mut perm: Vec<u64> = (0..8).collect();
        let mut count = 0;
        loop {
            let mut v: Vec<SortItem> = perm.iter().map(|&k| SortItem::new(k, k + 100)).collect();
            sort_network(&mut v, 8, family, swap).unwrap();
            ensure(v.iter().enumerate().all(|(i, x)| x.key == i as u64 && x.reference == i as u64 + 100), || {
                format!("{} {swap} fails on {perm:?}", family.label())
            })?;
            count += 1;
            if !next_permutation(&mut perm) {
                break;
            }
        }
        ensure(count == 40320, || format!("{count} permutations"))?;
    }

    let mut rng = Lcg::from_any(555);
    let mut reference = Vec::new();
    for family in FAMILIES {
        for swap in SwapStrategyId::ALL {
            for n in 2..=16 {
                for t in 0..10_000 {
                    let mut v = random_items(&mut rng, n);
                    if t % 3 == 0 {
                        for x in &mut v {
                            x.key %= 4;
                        }
                    }
                    reference.clear();
                    reference.extend_from_slice(&v);
                    sort_network(&mut v, n, family, swap).unwrap();
                    ensure(matches_reference(&reference, &v), || format!("{} {swap} n={n}", family.label()))?;
                }
            }
        }
    }
    Ok("n=8 all 40320 permutations per family; 10^4 random inputs per family, swap and n=2..16".into())
}

fn rss_oracle() -> Outcome {
    let mut configs = Vec::new();
    let bases = [
        SmallSorterId::network(Family::Best, SwapStrategyId::FourSelect),
        SmallSorterId::network(Family::BoseNelsonLocality, SwapStrategyId::TernarySelect),
        SmallSorterId::Insertion(InsertionVariant::Def),
    ];
    for code in ["331", "332", "333", "341", "344"] {
        configs.push(RssConfig::from_code(code, bases[0]).unwrap());
    }
    for a in [3, 4] {
        for b in 1..=5 {
            for base in bases {
                configs.push(RssConfig::new(a, b, base).unwrap());
            }
        }
    }

    let mut rng = Lcg::from_any(31337);
    let instances = 10_000;
    for i in 0..instances {
        let cfg = configs[i % configs.len()].with_seed(i as u64 + 1);
        let n = 17 + (rng.next() % (1024 - 17 + 1)) as usize;
        let mut v = random_items(&mut rng, n);
        match i % 5 {
            1 => v.iter_mut().for_each(|x| x.key = 42),
            2 => v.sort_unstable_by_key(|x| x.key),
            3 => v.iter_mut().for_each(|x| x.key %= 3),
            4 => v.sort_unstable_by_key(|x| std::cmp::Reverse(x.key)),
            _ => {}
        }
        let input = v.clone();
        rss_sort(&mut v, &cfg);
        ensure(matches_reference(&input, &v), || format!("{cfg} on n={n}, case {}", i % 5))?;
    }

    for t in 0..2000 {
        let n = (rng.next() % 100) as usize;
        let mut keys: Vec<u64> = (0..3).map(|_| rng.next() % 50).collect();
        keys.sort_unstable();
        let s = SplitterSet::new(keys[0], keys[1], keys[2]);
        let items: Vec<SortItem> = (0..n).map(|_| SortItem::new(rng.next() % 60, 0)).collect();
        let expected: Vec<u8> = items.iter().map(|x| classify_element(x.key, &s) as u8).collect();
        for block in 1..=5 {
            let mut out = vec![0u8; n];
            classify_block(&items, &s, block, &mut out);
            ensure(out == expected, || format!("block {block} differs (trial {t})"))?;
        }
    }
    Ok(format!("{instances} instances, sizes 17..1024, {} configs; blocks 1..5 agree with single-element classification", configs.len()))
}

fn rss_anchor() -> Outcome {
    let s = SplitterSet::new(10, 20, 30);
    let got: Vec<usize> = [5, 15, 25, 35].iter().map(|&k| classify_element(k, &s)).collect();
    ensure(got == [0, 1, 2, 3], || format!("{got:?}"))?;
    Ok("{5,15,25,35} -> {0,1,2,3}".into())
}

fn hybrid_oracle() -> Outcome {
    let cfg = HybridConfig::new(BaseSorter::Small(SmallSorterId::network(Family::BoseNelsonLocality, SwapStrategyId::FourSelect)));
    let mut rng = Lcg::from_any(16384);
    let mut max_base = 0;
    let mut heapsorts = 0;
    for _ in 0..1000 {
        let mut v = random_items(&mut rng, 1 << 14);
        let input = v.clone();
        let stats = hybrid_quicksort_instrumented(&mut v, &cfg);
        ensure(matches_reference(&input, &v), || "output differs from reference".into())?;
        max_base = max_base.max(stats.max_base_len);
        heapsorts += stats.heapsort_calls;
    }
    ensure(max_base <= 16, || format!("base case got {max_base} items"))?;
    Ok(format!("1000 x 16384 items, largest base case {max_base}, heapsort fallbacks {heapsorts}"))
}

fn lcg_golden() -> Outcome {
    const FROZEN_10000: u64 = 399_268_537;
    let (s1, v1) = lcg_next(Lcg::new(1).unwrap());
    let (_, v2) = lcg_next(s1);
    ensure((v1, v2) == (48271, 182_605_794), || format!("first values {v1}, {v2}"))?;
    let mut lcg = Lcg::new(1).unwrap();
    let mut last = 0;
    for _ in 0..10_000 {
        last = lcg.next();
    }
    ensure(last == FROZEN_10000, || format!("10000th value {last}"))?;
    Ok("1 -> 48271 -> 182605794, 10000th = 399268537".into())
}

fn fingerprint_checks() -> Outcome {
    let mut rng = Lcg::from_any(99);
    for t in 0..10_000 {
        let n = (rng.next() % 64) as usize;
        let mut v = random_items(&mut rng, n);
        if t % 4 == 0 {
            v.iter_mut().for_each(|x| x.key %= 5);
        }
        let fp = default_fingerprint(&v);
        ensure(fp.value != 0, || "zero fingerprint".into())?;
        for i in (1..n).rev() {
            let j = (rng.next() % (i as u64 + 1)) as usize;
            v.swap(i, j);
        }
        ensure(matches_fingerprint(&v, fp, FINGERPRINT_PRIME), || format!("permutation changed fingerprint (trial {t})"))?;
    }

    let key = |ks: &[u64]| ks.iter().map(|&k| SortItem::new(k, 0)).collect::<Vec<_>>();
    let a = fingerprint(&key(&[3, 5]), 1, 7);
    let b = fingerprint(&key(&[5, 3]), 1, 7);
    let c = fingerprint(&key(&[3, 4]), 1, 7);
    ensure((a.value, b.value, c.value) == (1, 1, 6), || format!("{a:?} {b:?} {c:?}"))?;
    let base = key(&[10, 20, 30, 40, 50, 60, 70, 80]);
    let fp = default_fingerprint(&base);
    for i in 0..base.len() {
        let mut m = base.clone();
        m[i].key += 1;
        ensure(!matches_fingerprint(&m, fp, FINGERPRINT_PRIME), || format!("mutation at {i} not detected"))?;
    }
    let zero_hit = fingerprint(&key(&[1, 2]), 1, 7);
    ensure(zero_hit.value != 0 && zero_hit.z == 3, || format!("{zero_hit:?}"))?;
    Ok("10^4 permuted arrays keep their fingerprint; fixed mutations detected; v != 0".into())
}

fn statistics() -> Outcome {
    let close = |a: f64, b: f64| (a - b).abs() <= 1e-12 * b.abs().max(1.0);
    let s = boxplot_stats(&[1.0, 2.0, 3.0, 4.0, 100.0]).map_err(|e| e.to_string())?;
    ensure(
        close(s.q1, 2.0) && close(s.median, 3.0) && close(s.q3, 4.0) && close(s.whisker_lo, 1.0) && close(s.whisker_hi, 4.0),
        || format!("{s:?}"),
    )?;
    ensure(s.outliers == [100.0], || format!("outliers {:?}", s.outliers))?;

    let mut grid = CostGrid::new();
    for (sorter, size, cost) in [("A", 1, 10.0), ("A", 2, 20.0), ("B", 1, 20.0), ("B", 2, 20.0)] {
        grid.push(sorter, size, cost);
    }
    let r = rank_by_geomean(&grid).map_err(|e| e.to_string())?;
    ensure(r.rows[0].sorter == "A" && close(r.rows[0].geomean, 1.0), || format!("{:?}", r.rows[0]))?;
    ensure(r.rows[1].sorter == "B" && close(r.rows[1].geomean, 2f64.sqrt()), || format!("{:?}", r.rows[1]))?;

    let mut scaled = CostGrid::new();
    for (sorter, size, cost) in [("A", 1, 10.0), ("A", 2, 20.0 * 37.5), ("B", 1, 20.0), ("B", 2, 20.0 * 37.5)] {
        scaled.push(sorter, size, cost);
    }
    let rs = rank_by_geomean(&scaled).map_err(|e| e.to_string())?;
    for (x, y) in r.rows.iter().zip(&rs.rows) {
        ensure(x.sorter == y.sorter && close(x.geomean, y.geomean), || "scaling one size changed the ranking".into())?;
    }
    Ok("box plot fixture, two-sorter ranking and scale invariance".into())
}

fn perf_strict() -> bool {
    std::env::var("NETSORT_STRICT_PERF").is_ok_and(|v| v == "1")
}

fn measure(grid: &mut CostGrid, sorter: SorterId, sizes: impl Iterator<Item = usize>, iterations: usize, measures: usize) {
    let seeds = SeedSource::new(20_240_601);
    let label = sorter.to_string();
    for n in sizes {
        let params = OneArrayRepeat { array_size: n, iterations, measures };
        let records = one_array_repeat(&label, |v| sorter.sort(v), &params, &seeds, Timer::detect()).expect("sorter is correct");
        for r in records {
            grid.push(&r.sorter, r.array_size, r.cost);
        }
    }
}

fn network_speedup() -> Outcome {
    let mut grid = CostGrid::new();
    for family in FAMILIES {
        for swap in SwapStrategyId::ALL.into_iter().filter(|s| s.is_branch_free()) {
            measure(&mut grid, SorterId::Small(SmallSorterId::network(family, swap)), 6..=16, 100, 50);
        }
    }
    for variant in InsertionVariant::ALL {
        measure(&mut grid, SorterId::Small(SmallSorterId::Insertion(variant)), 6..=16, 100, 50);
    }
    let table = speedup_between(&grid, |s| s.starts_with("SN "), |s| s.starts_with("IS "), CostSummary::Median)
        .map_err(|e| e.to_string())?;
    let worst = table.rows.iter().min_by(|a, b| a.speedup.total_cmp(&b.speedup)).unwrap();
    let per_size: Vec<String> = table.rows.iter().map(|r| format!("{}:{:.2}", r.size, r.speedup)).collect();
    let summary = format!("median speedups {} (avg {:.2}; minimum {:.2} at n={})", per_size.join(" "), table.average, worst.speedup, worst.size);
    if worst.speedup >= 1.3 {
        Ok(summary)
    } else {
        Err(summary)
    }
}

type CountedRun = fn(Family, usize, &mut [SortItem]) -> u64;

fn counted_sort<S: ConditionalSwap>(family: Family, n: usize, v: &mut [SortItem]) -> u64 {
    reset_swap_count();
    sort_network_with::<Counted<S>>(v, n, family).unwrap();
    swap_count()
}

fn comparator_counts() -> Outcome {
    let mut rng = Lcg::from_any(13);
    let runs: [(SwapStrategyId, CountedRun); 6] = [
        (SwapStrategyId::TernarySelect, counted_sort::<TernarySelect>),
        (SwapStrategyId::FourSelect, counted_sort::<FourSelect>),
        (SwapStrategyId::FourSelectSplit, counted_sort::<FourSelectSplit>),
        (SwapStrategyId::SixSelect, counted_sort::<SixSelect>),
        (SwapStrategyId::IndirectSelect, counted_sort::<IndirectSelect>),
        (SwapStrategyId::PredicateIndirectSelect, counted_sort::<PredicateIndirectSelect>),
    ];
    for (swap, run) in runs {
        ensure(swap.is_branch_free(), || format!("{swap} is not branch-free"))?;
        for family in FAMILIES {
            for n in 2..=16 {
                let size = network_for(family, n).unwrap().size() as u64;
                for _ in 0..1000 {
                    let mut v = random_items(&mut rng, n);
                    let count = run(family, n, &mut v);
                    ensure(count == size, || format!("{} {swap} n={n}: {count} swaps, network has {size}", family.label()))?;
                    ensure(check_sorted(&v), || "unsorted".into())?;
                }
            }
        }
    }
    Ok("every branch-free sorter runs exactly its network size in conditional swaps on 10^3 random inputs".into())
}

fn rss_speedup() -> Outcome {
    let mut grid = CostGrid::new();
    let network_bases = [SwapStrategyId::TernarySelect, SwapStrategyId::FourSelect, SwapStrategyId::FourSelectSplit];
    for swap in network_bases {
        let cfg = RssConfig::from_code("332", SmallSorterId::network(Family::Best, swap)).unwrap();
        measure(&mut grid, SorterId::Rss(cfg), std::iter::once(256), 50, 200);
    }
    for variant in InsertionVariant::ALL {
        let cfg = RssConfig::from_code("332", SmallSorterId::Insertion(variant)).unwrap();
        measure(&mut grid, SorterId::Rss(cfg), std::iter::once(256), 50, 200);
    }
    let table = speedup_between(&grid, |s| s.contains(" SN "), |s| s.contains(" IS "), CostSummary::Median)
        .map_err(|e| e.to_string())?;
    let row = &table.rows[0];
    let gain = (row.speedup - 1.0) * 100.0;
    let summary = format!(
        "{} median {:.0} vs {} median {:.0}: {gain:.1}% faster",
        row.fast_sorter, row.fast_cost, row.slow_sorter, row.slow_cost
    );
    if row.slow_cost >= 1.05 * row.fast_cost {
        Ok(summary)
    } else {
        Err(summary)
    }
}

struct Criterion {
    id: u32,
    name: &'static str,
    check: fn() -> Outcome,
    soft: bool,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "zero-one exhaustiveness", check: zero_one, soft: false },
        Criterion { id: 2, name: "best-network anchors", check: best_anchors, soft: false },
        Criterion { id: 3, name: "Bose-Nelson n=6 size", check: bose_nelson_six, soft: false },
        Criterion { id: 4, name: "swap strategy equality", check: swap_equality, soft: false },
        Criterion { id: 5, name: "small-sort oracle", check: small_sort_oracle, soft: false },
        Criterion { id: 6, name: "RSS oracle", check: rss_oracle, soft: false },
        Criterion { id: 7, name: "RSS classification anchor", check: rss_anchor, soft: false },
        Criterion { id: 8, name: "hybrid quicksort oracle", check: hybrid_oracle, soft: false },
        Criterion { id: 9, name: "LCG golden stream", check: lcg_golden, soft: false },
        Criterion { id: 10, name: "fingerprint", check: fingerprint_checks, soft: false },
        Criterion { id: 11, name: "statistics", check: statistics, soft: false },
        Criterion { id: 12, name: "network vs insertion sort speedup (soft)", check: network_speedup, soft: true },
        Criterion { id: 13, name: "input-independent swap count", check: comparator_counts, soft: false },
        Criterion { id: 14, name: "RSS network base vs insertion base (soft)", check: rss_speedup, soft: true },
    ];

    let strict = perf_strict();
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut hard_failures = 0;
    for c in &criteria {
        let id = c.id.to_string();
        if !filter.is_empty() && !filter.iter().any(|f| *f == id || c.name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {:>2}: {} ({detail}) [{secs:.1} s]", c.id, c.name),
            Err(detail) if c.soft && !strict => {
                println!("FAIL criterion {:>2}: {} ({detail}) [{secs:.1} s] (soft gate, warning only)", c.id, c.name);
                println!("     host: {}", netsort::cli::host_description());
            }
            Err(detail) => {
                println!("FAIL criterion {:>2}: {} ({detail}) [{secs:.1} s]", c.id, c.name);
                hard_failures += 1;
            }
        }
    }
    if hard_failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
