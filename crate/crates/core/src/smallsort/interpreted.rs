use netsort_networks::Network;

use crate::swaps::{ConditionalSwap, FourSelect};
use crate::SortItem;

/// Runs `net` over `items` comparator by comparator, reading the network as
/// data. Produces the same result as the generated sorter for that network.
///
/// # Panics
///
/// Panics if `items` is shorter than the network.
pub fn sort_network_interpreted(items: &mut [SortItem], net: &Network) {
    sort_network_interpreted_with::<FourSelect>(items, net)
}

pub fn sort_network_interpreted_with<S: ConditionalSwap>(items: &mut [SortItem], net: &Network) {
    assert!(items.len() >= net.channels(), "{} items for a {}-channel network", items.len(), net.channels());
    for c in net.comparators() {
        let (head, tail) = items.split_at_mut(c.high());
        S::swap(&mut head[c.low()], &mut tail[0]);
    }
}
