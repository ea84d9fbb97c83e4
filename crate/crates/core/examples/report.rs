// Usage: cargo run --example report
//
// Turns measurements into a geometric-mean ranking, a network versus
// insertion sort speedup table and a box plot.

use netsort::bench::report::{
    boxplot_svg, rank_by_geomean_with, ranking_csv, ranking_text, read_records, speedup_table_with, speedup_text,
    write_records, CostGrid, CostSummary,
};
use netsort::bench::{MeasurementRecord, TimerKind};

fn main() {
    let mut records = Vec::new();
    for (sorter, base) in [("SN Best 4CmS", 40.0), ("SN BN-L TCOp", 48.0), ("IS Def", 90.0), ("IS POp", 80.0)] {
        for size in [8, 12, 16] {
            for m in 0..20 {
                let cost = base * size as f64 / 8.0 + (m % 5) as f64;
                records.push(MeasurementRecord {
                    sorter: sorter.to_string(),
                    array_size: size,
                    measure_index: m,
                    cost,
                    timer_kind: TimerKind::Nanos,
                });
            }
        }
    }

    let mut csv = Vec::new();
    write_records(&mut csv, &records).unwrap();
    let back = read_records(csv.as_slice()).unwrap();
    assert_eq!(back, records);

    let grid = CostGrid::from_records(&back);
    let ranking = rank_by_geomean_with(&grid, CostSummary::Median).unwrap();
    println!("{}", ranking_text(&ranking));
    print!("{}", ranking_csv(&ranking));

    let speedups = speedup_table_with(&grid, CostSummary::Median).unwrap();
    println!("\n{}", speedup_text(&speedups));

    let svg = boxplot_svg(&grid, 16).unwrap();
    println!("box plot for n=16: {} bytes of SVG", svg.len());
}
