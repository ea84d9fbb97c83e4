//! Turning measurement records into ranking and speedup tables, as CSV,
//! aligned text, or SVG box plots.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;
use std::io::{Read, Write};

use serde::Serialize;

use crate::bench::{boxplot_stats, BenchError, BoxStats, MeasurementRecord};

/// Costs grouped by sorter and array size. Sorters keep first-seen order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CostGrid {
    sorters: Vec<String>,
    sizes: Vec<usize>,
    cells: BTreeMap<(String, usize), Vec<f64>>,
}

impl CostGrid {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_records<'a, I: IntoIterator<Item = &'a MeasurementRecord>>(records: I) -> Self {
        let mut grid = Self::new();
        for r in records {
            grid.push(&r.sorter, r.array_size, r.cost);
        }
        grid
    }

    pub fn push(&mut self, sorter: &str, size: usize, cost: f64) {
        if !self.sorters.iter().any(|s| s == sorter) {
            self.sorters.push(sorter.to_string());
        }
        if let Err(at) = self.sizes.binary_search(&size) {
            self.sizes.insert(at, size);
        }
        self.cells.entry((sorter.to_string(), size)).or_default().push(cost);
    }

    pub fn sorters(&self) -> &[String] {
        &self.sorters
    }

    /// Sizes in ascending order.
    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn samples(&self, sorter: &str, size: usize) -> Option<&[f64]> {
        self.cells.get(&(sorter.to_string(), size)).map(Vec::as_slice)
    }

    pub fn mean(&self, sorter: &str, size: usize) -> Option<f64> {
        self.samples(sorter, size).map(|s| s.iter().sum::<f64>() / s.len() as f64)
    }

    pub fn median(&self, sorter: &str, size: usize) -> Option<f64> {
        self.samples(sorter, size).and_then(|s| boxplot_stats(s).ok()).map(|b| b.median)
    }

    fn missing_cells(&self) -> Vec<(String, usize)> {
        let mut missing = Vec::new();
        for sorter in &self.sorters {
            for &size in &self.sizes {
                if !self.cells.contains_key(&(sorter.clone(), size)) {
                    missing.push((sorter.clone(), size));
                }
            }
        }
        missing
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RankRow {
    pub rank: usize,
    pub sorter: String,
    pub geomean: f64,
    /// Mean cost per size, in [`Ranking::sizes`] order.
    pub means: Vec<f64>,
    /// Mean cost divided by the best mean at that size.
    pub slowdowns: Vec<f64>,
    /// Whether this sorter had the lowest mean at that size.
    pub best: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Ranking {
    pub sizes: Vec<usize>,
    pub rows: Vec<RankRow>,
}

impl CostGrid {
    pub fn summary(&self, sorter: &str, size: usize, summary: CostSummary) -> Option<f64> {
        match summary {
            CostSummary::Mean => self.mean(sorter, size),
            CostSummary::Median => self.median(sorter, size),
        }
    }
}

fn positive_cost(grid: &CostGrid, sorter: &str, size: usize, summary: CostSummary) -> Result<f64, BenchError> {
    let cost = grid.summary(sorter, size, summary).expect("grid checked for completeness");
    if cost > 0.0 && cost.is_finite() {
        Ok(cost)
    } else {
        Err(BenchError::NonPositiveCost { sorter: sorter.to_string(), size, statistic: summary, cost })
    }
}

/// Ranks sorters by the geometric mean over sizes of their slowdown
/// relative to the fastest sorter at each size, comparing mean costs.
/// Ties keep grid order.
pub fn rank_by_geomean(grid: &CostGrid) -> Result<Ranking, BenchError> {
    rank_by_geomean_with(grid, CostSummary::Mean)
}

/// [`rank_by_geomean`] on a chosen per-cell summary. `means` in the rows
/// then hold that summary.
pub fn rank_by_geomean_with(grid: &CostGrid, summary: CostSummary) -> Result<Ranking, BenchError> {
    let missing = grid.missing_cells();
    if !missing.is_empty() {
        return Err(BenchError::IncompleteGrid(missing));
    }
    if grid.sorters.is_empty() {
        return Err(BenchError::EmptySample);
    }

    let mut means: Vec<Vec<f64>> = Vec::with_capacity(grid.sorters.len());
    for sorter in &grid.sorters {
        means.push(grid.sizes.iter().map(|&n| positive_cost(grid, sorter, n, summary)).collect::<Result<_, _>>()?);
    }
    let best: Vec<f64> =
        (0..grid.sizes.len()).map(|i| means.iter().map(|m| m[i]).fold(f64::INFINITY, f64::min)).collect();

    let mut rows: Vec<RankRow> = grid
        .sorters
        .iter()
        .zip(means)
        .map(|(sorter, means)| {
            let slowdowns: Vec<f64> = means.iter().zip(&best).map(|(m, b)| m / b).collect();
            let log_sum: f64 = slowdowns.iter().map(|s| s.ln()).sum();
            RankRow {
                rank: 0,
                sorter: sorter.clone(),
                geomean: (log_sum / slowdowns.len() as f64).exp(),
                best: means.iter().zip(&best).map(|(m, b)| m == b).collect(),
                means,
                slowdowns,
            }
        })
        .collect();
    rows.sort_by(|a, b| a.geomean.total_cmp(&b.geomean));
    for (i, row) in rows.iter_mut().enumerate() {
        row.rank = i + 1;
    }
    Ok(Ranking { sizes: grid.sizes.clone(), rows })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpeedupRow {
    pub size: usize,
    pub fast_sorter: String,
    pub fast_cost: f64,
    pub slow_sorter: String,
    pub slow_cost: f64,
    pub speedup: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpeedupTable {
    pub rows: Vec<SpeedupRow>,
    pub average: f64,
}

pub fn is_network_label(label: &str) -> bool {
    label.starts_with("SN ")
}

pub fn is_insertion_label(label: &str) -> bool {
    label.starts_with("IS ")
}

/// Per size, the cheapest insertion sort mean over the cheapest network
/// sorter mean, plus the arithmetic mean of those ratios.
pub fn speedup_table(grid: &CostGrid) -> Result<SpeedupTable, BenchError> {
    speedup_table_with(grid, CostSummary::Mean)
}

pub fn speedup_table_with(grid: &CostGrid, summary: CostSummary) -> Result<SpeedupTable, BenchError> {
    speedup_between(grid, is_network_label, is_insertion_label, summary)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum CostSummary {
    Mean,
    Median,
}

impl fmt::Display for CostSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CostSummary::Mean => "mean",
            CostSummary::Median => "median",
        })
    }
}

/// Speedup of the best sorter matching `fast` over the best matching `slow`,
/// per size, comparing the chosen summary of each cell.
pub fn speedup_between(
    grid: &CostGrid,
    fast: impl Fn(&str) -> bool,
    slow: impl Fn(&str) -> bool,
    summary: CostSummary,
) -> Result<SpeedupTable, BenchError> {
    let mut missing = Vec::new();
    let mut rows = Vec::new();
    for &size in &grid.sizes {
        let best_of = |pred: &dyn Fn(&str) -> bool| {
            grid.sorters
                .iter()
                .filter(|s| pred(s))
                .filter_map(|s| {
                    grid.summary(s, size, summary).map(|c| (s.clone(), c))
                })
                .min_by(|a, b| a.1.total_cmp(&b.1))
        };
        match (best_of(&fast), best_of(&slow)) {
            (Some((fast_sorter, fast_cost)), Some((slow_sorter, slow_cost))) => {
                if fast_cost <= 0.0 {
                    return Err(BenchError::NonPositiveCost { sorter: fast_sorter, size, statistic: summary, cost: fast_cost });
                }
                rows.push(SpeedupRow { size, speedup: slow_cost / fast_cost, fast_sorter, fast_cost, slow_sorter, slow_cost });
            }
            (f, s) => {
                if f.is_none() {
                    missing.push(("<fast family>".to_string(), size));
                }
                if s.is_none() {
                    missing.push(("<slow family>".to_string(), size));
                }
            }
        }
    }
    if !missing.is_empty() {
        return Err(BenchError::IncompleteGrid(missing));
    }
    if rows.is_empty() {
        return Err(BenchError::EmptySample);
    }
    let average = rows.iter().map(|r| r.speedup).sum::<f64>() / rows.len() as f64;
    Ok(SpeedupTable { rows, average })
}

pub fn write_records<W: Write>(out: W, records: &[MeasurementRecord]) -> Result<(), csv::Error> {
    let mut writer = csv::Writer::from_writer(out);
    for r in records {
        writer.serialize(r)?;
    }
    if records.is_empty() {
        writer.write_record(["sorter", "array_size", "measure_index", "cost", "timer_kind"])?;
    }
    writer.flush()?;
    Ok(())
}

pub fn read_records<R: Read>(input: R) -> Result<Vec<MeasurementRecord>, csv::Error> {
    csv::Reader::from_reader(input).deserialize().collect()
}

fn format_cost(x: f64) -> String {
    format!("{x:.3}")
}

pub fn ranking_csv(ranking: &Ranking) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["Rank".to_string(), "Sorter".to_string(), "GeoM".to_string()];
    header.extend(ranking.sizes.iter().map(|n| n.to_string()));
    writer.write_record(&header).unwrap();
    for row in &ranking.rows {
        let mut record = vec![row.rank.to_string(), row.sorter.clone(), format!("{:.6}", row.geomean)];
        record.extend(row.means.iter().map(|&m| format_cost(m)));
        writer.write_record(&record).unwrap();
    }
    String::from_utf8(writer.into_inner().unwrap()).unwrap()
}

fn aligned(table: &[Vec<String>]) -> String {
    let columns = table.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..columns).map(|c| table.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in table {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c == 1 {
                write!(line, "{cell:<w$}  ", w = widths[c]).unwrap();
            } else {
                write!(line, "{cell:>w$}  ", w = widths[c]).unwrap();
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Ranking as an aligned table; the best mean at each size is starred.
pub fn ranking_text(ranking: &Ranking) -> String {
    let mut table = vec![{
        let mut h = vec!["Rank".to_string(), "Sorter".to_string(), "GeoM".to_string()];
        h.extend(ranking.sizes.iter().map(|n| n.to_string()));
        h
    }];
    for row in &ranking.rows {
        let mut r = vec![row.rank.to_string(), row.sorter.clone(), format!("{:.3}", row.geomean)];
        for (m, best) in row.means.iter().zip(&row.best) {
            r.push(if *best { format!("*{}", format_cost(*m)) } else { format_cost(*m) });
        }
        table.push(r);
    }
    aligned(&table)
}

pub fn speedup_csv(table: &SpeedupTable) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["".to_string()];
    header.extend(table.rows.iter().map(|r| r.size.to_string()));
    header.push("Avg".to_string());
    writer.write_record(&header).unwrap();
    let mut record = vec!["speedup".to_string()];
    record.extend(table.rows.iter().map(|r| format!("{:.6}", r.speedup)));
    record.push(format!("{:.6}", table.average));
    writer.write_record(&record).unwrap();
    String::from_utf8(writer.into_inner().unwrap()).unwrap()
}

pub fn speedup_text(table: &SpeedupTable) -> String {
    let mut rows = vec![vec![
        "Size".to_string(),
        "Fastest".to_string(),
        "Cost".to_string(),
        "Baseline".to_string(),
        "Cost".to_string(),
        "Speedup".to_string(),
    ]];
    for r in &table.rows {
        rows.push(vec![
            r.size.to_string(),
            r.fast_sorter.clone(),
            format_cost(r.fast_cost),
            r.slow_sorter.clone(),
            format_cost(r.slow_cost),
            format!("{:.3}", r.speedup),
        ]);
    }
    rows.push(vec!["Avg".into(), String::new(), String::new(), String::new(), String::new(), format!("{:.3}", table.average)]);
    aligned(&rows)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// One horizontal box plot per sorter for a single array size.
pub fn boxplot_svg(grid: &CostGrid, size: usize) -> Result<String, BenchError> {
    let stats: Vec<(&str, BoxStats)> = grid
        .sorters
        .iter()
        .filter_map(|s| grid.samples(s, size).map(|v| (s.as_str(), v)))
        .map(|(s, v)| boxplot_stats(v).map(|b| (s, b)))
        .collect::<Result<_, _>>()?;
    if stats.is_empty() {
        return Err(BenchError::EmptySample);
    }

    let lo = stats.iter().map(|(_, b)| b.min).fold(f64::INFINITY, f64::min);
    let hi = stats.iter().map(|(_, b)| b.max).fold(f64::NEG_INFINITY, f64::max);
    let span = if hi > lo { hi - lo } else { 1.0 };
    let (left, plot_w, row_h, top) = (200.0, 600.0, 28.0, 30.0);
    let height = top + row_h * stats.len() as f64 + 40.0;
    let x = |v: f64| left + (v - lo) / span * plot_w;

    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{height}" font-family="sans-serif" font-size="12">"#,
        left + plot_w + 20.0
    )
    .unwrap();
    writeln!(svg, r#"<text x="{left}" y="18">array size {size}</text>"#).unwrap();
    let axis_y = top + row_h * stats.len() as f64 + 5.0;
    writeln!(svg, r#"<g class="axis"><line x1="{left}" y1="{axis_y}" x2="{}" y2="{axis_y}" stroke="black"/>"#, left + plot_w)
        .unwrap();
    for i in 0..=4 {
        let v = lo + span * i as f64 / 4.0;
        let px = x(v);
        writeln!(svg, r#"<line x1="{px}" y1="{axis_y}" x2="{px}" y2="{}" stroke="black"/>"#, axis_y + 5.0).unwrap();
        writeln!(svg, r#"<text x="{px}" y="{}" text-anchor="middle">{:.1}</text>"#, axis_y + 18.0, v).unwrap();
    }
    writeln!(svg, "</g>").unwrap();

    for (i, (sorter, b)) in stats.iter().enumerate() {
        let mid = top + row_h * i as f64 + row_h / 2.0;
        let (y0, y1) = (mid - 8.0, mid + 8.0);
        writeln!(svg, r#"<g class="sorter">"#).unwrap();
        writeln!(svg, r#"<text x="{}" y="{}" text-anchor="end">{}</text>"#, left - 8.0, mid + 4.0, escape(sorter)).unwrap();
        writeln!(svg, r#"<line class="whisker" x1="{}" y1="{mid}" x2="{}" y2="{mid}" stroke="black"/>"#, x(b.whisker_lo), x(b.q1))
            .unwrap();
        writeln!(svg, r#"<line class="whisker" x1="{}" y1="{mid}" x2="{}" y2="{mid}" stroke="black"/>"#, x(b.q3), x(b.whisker_hi))
            .unwrap();
        for w in [b.whisker_lo, b.whisker_hi] {
            writeln!(svg, r#"<line class="whisker" x1="{0}" y1="{y0}" x2="{0}" y2="{y1}" stroke="black"/>"#, x(w)).unwrap();
        }
        writeln!(
            svg,
            r##"<rect class="box" x="{}" y="{y0}" width="{}" height="16" fill="#9ecae1" stroke="black"/>"##,
            x(b.q1),
            (x(b.q3) - x(b.q1)).max(1.0)
        )
        .unwrap();
        writeln!(svg, r#"<line class="median" x1="{0}" y1="{y0}" x2="{0}" y2="{y1}" stroke="black" stroke-width="2"/>"#, x(b.median))
            .unwrap();
        for &o in &b.outliers {
            writeln!(svg, r#"<circle class="outlier" cx="{}" cy="{mid}" r="2.5" fill="none" stroke="black"/>"#, x(o)).unwrap();
        }
        writeln!(svg, "</g>").unwrap();
    }
    writeln!(svg, "</svg>").unwrap();
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bench::TimerKind;

    fn grid(cells: &[(&str, usize, f64)]) -> CostGrid {
        let mut g = CostGrid::new();
        for &(s, n, c) in cells {
            g.push(s, n, c);
        }
        g
    }

    #[test]
    fn two_sorter_example() {
        let g = grid(&[("A", 1, 10.0), ("A", 2, 20.0), ("B", 1, 20.0), ("B", 2, 20.0)]);
        let r = rank_by_geomean(&g).unwrap();
        assert_eq!(r.rows[0].sorter, "A");
        assert_eq!(r.rows[0].geomean, 1.0);
        assert_eq!(r.rows[1].sorter, "B");
        assert!((r.rows[1].geomean - 2f64.sqrt()).abs() < 1e-12);
        assert_eq!(r.rows[1].best, [false, true]);
        assert_eq!(r.rows[0].best, [true, true]);
    }

    #[test]
    fn single_sorter_has_unit_geomean() {
        let r = rank_by_geomean(&grid(&[("A", 4, 3.0), ("A", 8, 9.0)])).unwrap();
        assert_eq!(r.rows[0].geomean, 1.0);
    }

    #[test]
    fn input_order_and_scaling_do_not_change_ranks() {
        let cells = [("A", 1, 10.0), ("A", 2, 25.0), ("B", 1, 12.0), ("B", 2, 20.0), ("C", 1, 30.0), ("C", 2, 21.0)];
        let base: Vec<String> = rank_by_geomean(&grid(&cells)).unwrap().rows.into_iter().map(|r| r.sorter).collect();

        let mut reversed = cells;
        reversed.reverse();
        let again: Vec<String> = rank_by_geomean(&grid(&reversed)).unwrap().rows.into_iter().map(|r| r.sorter).collect();
        assert_eq!(base, again);

        let scaled: Vec<_> = cells.iter().map(|&(s, n, c)| (s, n, if n == 2 { c * 1000.0 } else { c })).collect();
        let scaled: Vec<String> = rank_by_geomean(&grid(&scaled)).unwrap().rows.into_iter().map(|r| r.sorter).collect();
        assert_eq!(base, scaled);
    }

    #[test]
    fn missing_cell_is_named() {
        let g = grid(&[("A", 1, 1.0), ("A", 2, 1.0), ("B", 1, 1.0)]);
        assert_eq!(rank_by_geomean(&g), Err(BenchError::IncompleteGrid(vec![("B".into(), 2)])));
    }

    #[test]
    fn non_positive_mean_is_rejected() {
        let g = grid(&[("A", 1, -3.0), ("B", 1, 2.0)]);
        assert!(matches!(rank_by_geomean(&g), Err(BenchError::NonPositiveCost { .. })));
    }

    #[test]
    fn speedup_examples() {
        let t = speedup_table(&grid(&[("SN Best 4Cm", 8, 50.0), ("IS Def", 8, 100.0)])).unwrap();
        assert_eq!(t.rows[0].speedup, 2.0);
        assert_eq!(t.average, 2.0);

        let t = speedup_table(&grid(&[("SN Best 4Cm", 8, 70.0), ("IS Def", 8, 70.0)])).unwrap();
        assert_eq!(t.average, 1.0);

        let t = speedup_table(&grid(&[
            ("SN Best 4Cm", 4, 10.0),
            ("SN BN-L 4Cm", 4, 5.0),
            ("IS Def", 4, 20.0),
            ("IS STL", 4, 15.0),
            ("SN Best 4Cm", 6, 10.0),
            ("SN BN-L 4Cm", 6, 10.0),
            ("IS Def", 6, 10.0),
            ("IS STL", 6, 10.0),
        ]))
        .unwrap();
        assert_eq!(t.rows[0].speedup, 3.0);
        assert_eq!((t.rows[0].fast_sorter.as_str(), t.rows[0].slow_sorter.as_str()), ("SN BN-L 4Cm", "IS STL"));
        assert_eq!(t.average, 2.0);
    }

    #[test]
    fn speedup_needs_both_families() {
        let err = speedup_table(&grid(&[("SN Best 4Cm", 8, 50.0)])).unwrap_err();
        assert!(matches!(err, BenchError::IncompleteGrid(_)));
    }

    #[test]
    fn csv_round_trip() {
        let records = vec![
            MeasurementRecord { sorter: "SN BN-L 4CmS".into(), array_size: 8, measure_index: 0, cost: -1.5, timer_kind: TimerKind::Cycles },
            MeasurementRecord { sorter: "IS Def".into(), array_size: 8, measure_index: 1, cost: 42.25, timer_kind: TimerKind::Nanos },
        ];
        let mut buf = Vec::new();
        write_records(&mut buf, &records).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("sorter,array_size,measure_index,cost,timer_kind\n"));
        assert!(text.contains("SN BN-L 4CmS,8,0,-1.5,cycles"));
        assert_eq!(read_records(buf.as_slice()).unwrap(), records);
    }

    #[test]
    fn empty_csv_has_header() {
        let mut buf = Vec::new();
        write_records(&mut buf, &[]).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "sorter,array_size,measure_index,cost,timer_kind\n");
    }

    #[test]
    fn ranking_outputs() {
        let g = grid(&[("A", 1, 10.0), ("A", 2, 20.0), ("B", 1, 20.0), ("B", 2, 20.0)]);
        let r = rank_by_geomean(&g).unwrap();
        let csv = ranking_csv(&r);
        assert!(csv.starts_with("Rank,Sorter,GeoM,1,2\n1,A,1.000000,10.000,20.000\n"));
        let text = ranking_text(&r);
        assert!(text.lines().nth(1).unwrap().contains("*10.000"));
    }

    #[test]
    fn svg_has_structure() {
        let g = grid(&[("A", 8, 1.0), ("A", 8, 2.0), ("A", 8, 3.0), ("A", 8, 4.0), ("A", 8, 100.0), ("B<x>", 8, 5.0)]);
        let svg = boxplot_svg(&g, 8).unwrap();
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches(r#"class="box""#).count(), 2);
        assert_eq!(svg.matches(r#"class="outlier""#).count(), 1);
        assert!(svg.contains("B&lt;x&gt;"));
        assert!(boxplot_svg(&g, 9).is_err());
    }
}
