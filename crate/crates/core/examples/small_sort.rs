// Usage: cargo run --example small_sort
//
// Sorts a handful of items with every small sorter and counts how many
// conditional swaps a network performs.

use netsort::bench::{check_sorted, fill_random_seeded};
use netsort::smallsort::{sort_network_with, sort_small, Family, SmallSorterId};
use netsort::swaps::{reset_swap_count, swap_count, Counted, FourSelect};
use netsort::SortItem;

fn main() {
    let n = 11;
    let mut input = vec![SortItem::default(); n];
    fill_random_seeded(&mut input, 7);
    input.iter_mut().for_each(|x| x.key %= 100);
    println!("input  {:?}", input.iter().map(|x| x.key).collect::<Vec<_>>());

    for id in SmallSorterId::all() {
        let mut v = input.clone();
        sort_small(&mut v, n, id).unwrap();
        assert!(check_sorted(&v), "{id}");
    }
    let id: SmallSorterId = "SN BN-L 4CmS".parse().unwrap();
    let mut v = input.clone();
    sort_small(&mut v, n, id).unwrap();
    println!("sorted {:?}", v.iter().map(|x| x.key).collect::<Vec<_>>());
    println!("{} sorters agree", SmallSorterId::all().len());

    for family in Family::ALL {
        let mut v = input.clone();
        reset_swap_count();
        sort_network_with::<Counted<FourSelect>>(&mut v, n, family).unwrap();
        println!("{:<5} {} conditional swaps", family.label(), swap_count());
    }

    // networks stop at 16 items
    let mut big = vec![SortItem::default(); 17];
    assert!(sort_small(&mut big, 17, id).is_err());
}
