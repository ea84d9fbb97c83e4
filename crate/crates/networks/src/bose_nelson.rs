//! Bose-Nelson construction: sort the first half, sort the second half,
//! merge the two with a recursive merger.

use std::collections::HashMap;

use crate::{Comparator, Family, Network, NetworkError};

/// Sizes of the two halves the recursion sorts for `n` channels. The first
/// half is the smaller one when `n` is odd.
pub fn bose_nelson_split(n: usize) -> (usize, usize) {
    let first = n / 2;
    (first, n - first)
}

/// Comparators merging the sorted runs `[i, i + x)` and `[j, j + y)`.
pub fn bose_nelson_merge(i: usize, x: usize, j: usize, y: usize) -> Vec<Comparator> {
    let mut out = Vec::new();
    merge_into(&mut out, i, x, j, y);
    out
}

fn merge_into(out: &mut Vec<Comparator>, i: usize, x: usize, j: usize, y: usize) {
    match (x, y) {
        (0, _) | (_, 0) => {}
        (1, 1) => out.push(Comparator::new(i, j)),
        (1, 2) => {
            out.push(Comparator::new(i, j + 1));
            out.push(Comparator::new(i, j));
        }
        (2, 1) => {
            out.push(Comparator::new(i, j));
            out.push(Comparator::new(i + 1, j));
        }
        _ => {
            let a = x / 2;
            let b = if x % 2 == 1 { y / 2 } else { y.div_ceil(2) };
            merge_into(out, i, a, j, b);
            merge_into(out, i + a, x - a, j + b, y - b);
            merge_into(out, i + a, x - a, j, b);
        }
    }
}

fn sort_into(out: &mut Vec<Comparator>, start: usize, len: usize) {
    if len < 2 {
        return;
    }
    let (first, second) = bose_nelson_split(len);
    sort_into(out, start, first);
    sort_into(out, start + first, second);
    merge_into(out, start, first, start + first, second);
}

/// Generates the Bose-Nelson network for `n` channels in natural recursive
/// order (first half, second half, merger). `n <= 1` yields the empty network.
///
/// The result is tagged [`Family::BoseNelsonRecursive`].
///
/// # Panics
///
/// Panics if `n` exceeds [`crate::MAX_CHANNELS`].
pub fn generate_bose_nelson(n: usize) -> Network {
    assert!(n <= crate::MAX_CHANNELS, "Bose-Nelson generation is limited to {} channels", crate::MAX_CHANNELS);
    let mut comparators = Vec::new();
    sort_into(&mut comparators, 0, n);
    Network::from_parts(n, comparators, Family::BoseNelsonRecursive)
}

/// Puts the comparators of a Bose-Nelson network back into depth-first
/// recursion order: the first-half sorter is emitted completely, then the
/// second-half sorter, then the merger, recursively.
///
/// The input may be in any order that holds exactly the Bose-Nelson
/// comparators for its channel count (e.g. a level-compacted one). Repeated
/// comparators are matched by occurrence, so per-channel order is kept.
pub fn reorder_locality(net: &Network) -> Result<Network, NetworkError> {
    let n = net.channels();
    let canonical = generate_bose_nelson(n);

    let mut rank: HashMap<Comparator, Vec<usize>> = HashMap::new();
    for (pos, c) in canonical.comparators().iter().enumerate().rev() {
        rank.entry(*c).or_default().push(pos);
    }

    let mut keyed = Vec::with_capacity(net.size());
    for c in net.comparators() {
        let pos = rank
            .get_mut(c)
            .and_then(Vec::pop)
            .ok_or(NetworkError::NotBoseNelson { n })?;
        keyed.push((pos, *c));
    }
    if rank.values().any(|left| !left.is_empty()) {
        return Err(NetworkError::NotBoseNelson { n });
    }
    keyed.sort_unstable_by_key(|&(pos, _)| pos);

    let comparators = keyed.into_iter().map(|(_, c)| c).collect();
    Ok(Network::from_parts(n, comparators, Family::BoseNelsonLocality))
}

/// The comparators of the recursive variant for `n`, split into the two
/// sub-sorters (second one relative to its own channel 0) and the merger.
pub(crate) fn recursive_parts(n: usize) -> (Vec<Comparator>, Vec<Comparator>, Vec<Comparator>) {
    let (first, second) = bose_nelson_split(n);
    let left = generate_bose_nelson(first).comparators().to_vec();
    let right = generate_bose_nelson(second).comparators().to_vec();
    let merger = bose_nelson_merge(0, first, first, second);
    (left, right, merger)
}
