// Usage: cargo run --example swap_strategies
//
// Every conditional swap strategy leaves the smaller key on the left, moves
// the reference with its key, and keeps an equal pair in place.

use netsort::swaps::{conditional_swap, platform_description, SwapStrategyId};
use netsort::SortItem;

fn main() {
    println!("{}", platform_description());
    for s in SwapStrategyId::ALL {
        let (mut l, mut r) = (SortItem::new(9, 900), SortItem::new(4, 400));
        conditional_swap(s, &mut l, &mut r);
        assert_eq!((l, r), (SortItem::new(4, 400), SortItem::new(9, 900)));

        let (mut a, mut b) = (SortItem::new(7, 1), SortItem::new(7, 2));
        conditional_swap(s, &mut a, &mut b);
        assert_eq!((a.reference, b.reference), (1, 2));

        let kind = if s.is_branch_free() { "branch-free" } else { "branching" };
        println!("{:<5} {kind}", s.label());
    }
}
