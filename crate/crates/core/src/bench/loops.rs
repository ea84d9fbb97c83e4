//! The two measurement loops.
//!
//! OneArrayRepeat times `iterations` rounds of (fill, sort, check), then the
//! same rounds without the sort (the check is simulated), and records the
//! difference per iteration. ArrayInRow sorts consecutive slices of one
//! array that is larger than the configured cache size and checks them
//! against a pre-sorted reference afterwards.

use serde::{Deserialize, Serialize};

use crate::bench::check::{default_fingerprint, fill_random, matches_fingerprint, simulated_check};
use crate::bench::{check_sorted, BenchError, Lcg, SeedSource, Timer, TimerKind, FINGERPRINT_PRIME};
use crate::SortItem;

/// One measure of one sorter at one size. `cost` is per sorted array and
/// may be negative for OneArrayRepeat.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeasurementRecord {
    pub sorter: String,
    pub array_size: usize,
    pub measure_index: usize,
    pub cost: f64,
    pub timer_kind: TimerKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OneArrayRepeat {
    pub array_size: usize,
    pub iterations: usize,
    pub measures: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArrayInRow {
    pub array_size: usize,
    pub number_of_arrays: usize,
    pub measures: usize,
    /// The sweep must not fit in this many bytes.
    pub cache_bytes: usize,
}

/// Smallest array count whose items take more than twice `cache_bytes`.
pub fn default_array_count(array_size: usize, cache_bytes: usize) -> usize {
    let per_array = (array_size * std::mem::size_of::<SortItem>()).max(1);
    2 * cache_bytes / per_array + 1
}

fn failure(sorter: &str, array_size: usize, measure: usize, seed: u64, reason: &str) -> BenchError {
    BenchError::CorrectnessFailure {
        sorter: sorter.to_string(),
        array_size,
        measure,
        seed,
        reason: reason.to_string(),
    }
}

#[inline(always)]
fn sort_and_check<F: FnMut(&mut [SortItem])>(buf: &mut [SortItem], rng: &mut Lcg, sorter: &mut F) -> Result<(), &'static str> {
    fill_random(buf, rng);
    let fp = default_fingerprint(buf);
    sorter(buf);
    if !check_sorted(buf) {
        return Err("output is not sorted");
    }
    if !matches_fingerprint(buf, fp, FINGERPRINT_PRIME) {
        return Err("output is not a permutation of the input");
    }
    Ok(())
}

pub fn one_array_repeat<F>(
    label: &str,
    mut sorter: F,
    params: &OneArrayRepeat,
    seeds: &SeedSource,
    timer: Timer,
) -> Result<Vec<MeasurementRecord>, BenchError>
where
    F: FnMut(&mut [SortItem]),
{
    if params.iterations == 0 || params.measures == 0 {
        return Err(BenchError::Configuration("iterations and measures must be at least 1".into()));
    }
    let n = params.array_size;
    let mut buf = vec![SortItem::default(); n];
    let mut records = Vec::with_capacity(params.measures);

    for measure in 0..params.measures {
        let seed = seeds.seed(measure);
        let fail = |reason: &str| failure(label, n, measure, seed, reason);

        let mut rng = Lcg::from_any(seed);
        sort_and_check(&mut buf, &mut rng, &mut sorter).map_err(fail)?;

        let mut rng = Lcg::from_any(seed);
        let start = timer.now();
        for _ in 0..params.iterations {
            sort_and_check(&mut buf, &mut rng, &mut sorter).map_err(fail)?;
        }
        let with_sort = timer.now() - start;

        let mut rng = Lcg::from_any(seed);
        let start = timer.now();
        for _ in 0..params.iterations {
            fill_random(&mut buf, &mut rng);
            let fp = default_fingerprint(&buf);
            simulated_check(&buf, fp);
        }
        let without_sort = timer.now() - start;

        records.push(MeasurementRecord {
            sorter: label.to_string(),
            array_size: n,
            measure_index: measure,
            cost: (with_sort as f64 - without_sort as f64) / params.iterations as f64,
            timer_kind: timer.kind(),
        });
    }
    Ok(records)
}

fn sort_key(item: &SortItem) -> (u64, u64) {
    (item.key, item.reference)
}

pub fn array_in_row<F>(
    label: &str,
    mut sorter: F,
    params: &ArrayInRow,
    seeds: &SeedSource,
    timer: Timer,
) -> Result<Vec<MeasurementRecord>, BenchError>
where
    F: FnMut(&mut [SortItem]),
{
    let n = params.array_size;
    if n == 0 || params.number_of_arrays == 0 || params.measures == 0 {
        return Err(BenchError::Configuration("array size, array count and measures must be at least 1".into()));
    }
    let total_bytes = n * params.number_of_arrays * std::mem::size_of::<SortItem>();
    if total_bytes <= params.cache_bytes {
        return Err(BenchError::Configuration(format!(
            "{} arrays of {n} items take {total_bytes} bytes, which fits in the {}-byte cache",
            params.number_of_arrays, params.cache_bytes
        )));
    }

    let mut data = vec![SortItem::default(); n * params.number_of_arrays];
    let mut records = Vec::with_capacity(params.measures);
    for measure in 0..params.measures {
        let seed = seeds.seed(measure);

        fill_random(&mut data, &mut Lcg::from_any(seed));
        for chunk in data.chunks_exact_mut(n) {
            sorter(chunk);
        }

        fill_random(&mut data, &mut Lcg::from_any(seed));
        let mut reference = data.clone();
        for chunk in reference.chunks_exact_mut(n) {
            chunk.sort_unstable_by_key(sort_key);
        }

        let start = timer.now();
        for chunk in data.chunks_exact_mut(n) {
            sorter(chunk);
        }
        let elapsed = timer.now() - start;

        let mut scratch = Vec::with_capacity(n);
        for (index, (out, expected)) in data.chunks_exact(n).zip(reference.chunks_exact(n)).enumerate() {
            let reason = if !check_sorted(out) {
                Some("output is not sorted")
            } else {
                scratch.clear();
                scratch.extend_from_slice(out);
                scratch.sort_unstable_by_key(sort_key);
                (scratch.as_slice() != expected).then_some("output differs from the reference")
            };
            if let Some(reason) = reason {
                return Err(failure(label, n, measure, seed, &format!("array {index}: {reason}")));
            }
        }

        records.push(MeasurementRecord {
            sorter: label.to_string(),
            array_size: n,
            measure_index: measure,
            cost: elapsed as f64 / params.number_of_arrays as f64,
            timer_kind: timer.kind(),
        });
    }
    Ok(records)
}
