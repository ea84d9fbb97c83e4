//! Exhaustive zero-one check. Inputs are bit-sliced: each `u64` holds one
//! channel for 64 binary input vectors, so a comparator is an AND and an OR.

use crate::{Network, NetworkError};

/// Largest channel count accepted by the exhaustive check.
pub const MAX_EXHAUSTIVE: usize = 24;

const LOW_PATTERNS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

/// True iff `net` sorts every binary input of its width.
pub fn verify_zero_one(net: &Network) -> Result<bool, NetworkError> {
    find_zero_one_counterexample(net).map(|c| c.is_none())
}

/// Returns the first binary input (bit `i` = channel `i`) that `net` leaves
/// unsorted, if any.
pub fn find_zero_one_counterexample(net: &Network) -> Result<Option<u32>, NetworkError> {
    let n = net.channels();
    if n > MAX_EXHAUSTIVE {
        return Err(NetworkError::TooLargeForExhaustive { n, limit: MAX_EXHAUSTIVE });
    }
    if n < 2 {
        return Ok(None);
    }

    let (batches, lane_mask) = if n >= 6 {
        (1u64 << (n - 6), u64::MAX)
    } else {
        (1, (1u64 << (1u32 << n)) - 1)
    };
    let pairs: Vec<(usize, usize)> = net.comparators().iter().map(|c| (c.low(), c.high())).collect();
    let mut lanes = vec![0u64; n];

    for batch in 0..batches {
        for (channel, lane) in lanes.iter_mut().enumerate() {
            *lane = if channel < 6 {
                LOW_PATTERNS[channel]
            } else if (batch >> (channel - 6)) & 1 == 1 {
                u64::MAX
            } else {
                0
            };
        }
        for &(lo, hi) in &pairs {
            let (a, b) = (lanes[lo], lanes[hi]);
            lanes[lo] = a & b;
            lanes[hi] = a | b;
        }
        let bad = lanes.windows(2).fold(0u64, |acc, w| acc | (w[0] & !w[1])) & lane_mask;
        if bad != 0 {
            return Ok(Some((batch * 64 + u64::from(bad.trailing_zeros())) as u32));
        }
    }
    Ok(None)
}
