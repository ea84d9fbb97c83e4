// Usage: cargo run --release --example measure
//
// Times two small sorters with the OneArrayRepeat loop and summarises each
// size as a box plot.

use netsort::bench::{boxplot_stats, one_array_repeat, OneArrayRepeat, SeedSource, Timer};
use netsort::SorterId;

fn main() {
    let timer = Timer::detect();
    let seeds = SeedSource::new(1);
    println!("timer: {:?}", timer.kind());
    for label in ["SN Best 4CmS", "IS Def"] {
        let sorter: SorterId = label.parse().unwrap();
        for n in [8, 16] {
            let params = OneArrayRepeat { array_size: n, iterations: 100, measures: 50 };
            let records = one_array_repeat(label, |v| sorter.sort(v), &params, &seeds, timer).unwrap();
            let costs: Vec<f64> = records.iter().map(|r| r.cost).collect();
            let b = boxplot_stats(&costs).unwrap();
            println!(
                "{label:<13} n={n:<3} median {:>8.1}  q1 {:>8.1}  q3 {:>8.1}  outliers {}",
                b.median,
                b.q1,
                b.q3,
                b.outliers.len()
            );
        }
    }
}
