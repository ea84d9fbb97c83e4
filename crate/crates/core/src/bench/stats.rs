use serde::Serialize;

use crate::bench::BenchError;

/// Box plot summary of one sample set.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoxStats {
    pub count: usize,
    pub mean: f64,
    pub min: f64,
    pub max: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub iqr: f64,
    pub whisker_lo: f64,
    pub whisker_hi: f64,
    pub outliers: Vec<f64>,
}

/// Quantile `q` of sorted data, interpolating linearly between the closest
/// ranks (`h = (n - 1) q`).
fn quantile(sorted: &[f64], q: f64) -> f64 {
    let h = (sorted.len() - 1) as f64 * q;
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

/// Quartiles, whiskers and outliers.
///
/// The whiskers reach the most extreme samples inside the closed fences
/// `[q1 - 1.5 iqr, q3 + 1.5 iqr]`; everything outside is an outlier, in
/// ascending order.
pub fn boxplot_stats(samples: &[f64]) -> Result<BoxStats, BenchError> {
    if samples.is_empty() {
        return Err(BenchError::EmptySample);
    }
    let mut sorted = samples.to_vec();
    sorted.sort_by(f64::total_cmp);

    let q1 = quantile(&sorted, 0.25);
    let median = quantile(&sorted, 0.5);
    let q3 = quantile(&sorted, 0.75);
    let iqr = q3 - q1;
    let lower_fence = q1 - 1.5 * iqr;
    let upper_fence = q3 + 1.5 * iqr;

    let inside = |x: &f64| *x >= lower_fence && *x <= upper_fence;
    // q1 and q3 lie between samples, so at least one sample is inside
    let whisker_lo = sorted.iter().copied().find(inside).unwrap_or(q1);
    let whisker_hi = sorted.iter().rev().copied().find(inside).unwrap_or(q3);
    let outliers = sorted.iter().copied().filter(|x| !inside(x)).collect();

    Ok(BoxStats {
        count: sorted.len(),
        mean: sorted.iter().sum::<f64>() / sorted.len() as f64,
        min: sorted[0],
        max: sorted[sorted.len() - 1],
        q1,
        median,
        q3,
        iqr,
        whisker_lo,
        whisker_hi,
        outliers,
    })
}
