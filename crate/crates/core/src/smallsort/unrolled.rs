//! Sorters generated at build time, one unit per network family.

use netsort_networks::Family;

use crate::swaps::ConditionalSwap;
use crate::SortItem;

#[inline(always)]
fn cswap<S: ConditionalSwap, const N: usize>(v: &mut [SortItem; N], low: usize, high: usize) {
    let (head, tail) = v.split_at_mut(high);
    S::swap(&mut head[low], &mut tail[0]);
}

#[inline(always)]
fn sub<const M: usize, const N: usize>(v: &mut [SortItem; N], at: usize) -> &mut [SortItem; M] {
    (&mut v[at..at + M]).try_into().unwrap()
}

#[inline(always)]
fn prefix<const N: usize>(v: &mut [SortItem]) -> &mut [SortItem; N] {
    (&mut v[..N]).try_into().unwrap()
}

pub mod best {
    use super::*;
    include!(concat!(env!("OUT_DIR"), "/unrolled_best.rs"));
}

pub mod bn_l {
    use super::*;
    include!(concat!(env!("OUT_DIR"), "/unrolled_bn_l.rs"));
}

pub mod bn_p {
    use super::*;
    include!(concat!(env!("OUT_DIR"), "/unrolled_bn_p.rs"));
}

pub mod bn_r {
    use super::*;
    include!(concat!(env!("OUT_DIR"), "/unrolled_bn_r.rs"));
}

/// Sorts `v[..n]` with the generated sorter; false if `n` has none.
#[inline]
pub fn dispatch<S: ConditionalSwap>(family: Family, v: &mut [SortItem], n: usize) -> bool {
    match family {
        Family::Best => best::sort_dispatch::<S>(v, n),
        Family::BoseNelsonLocality => bn_l::sort_dispatch::<S>(v, n),
        Family::BoseNelsonParallel => bn_p::sort_dispatch::<S>(v, n),
        Family::BoseNelsonRecursive => bn_r::sort_dispatch::<S>(v, n),
    }
}
