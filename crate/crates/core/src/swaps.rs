//! Conditional-swap strategies.
//!
//! Every strategy has the same observable behavior: afterwards
//! `left.key <= right.key`, the two items are the input items possibly
//! exchanged as whole `(key, reference)` units, and equal keys never swap.
//! They differ only in the instruction sequence they ask the compiler for.
//! On x86-64 the assembly strategies use inline `asm!`; elsewhere they fall
//! back to the portable implementations in [`portable`].

use std::cell::Cell;
use std::fmt;
use std::marker::PhantomData;
use std::str::FromStr;

use crate::SortItem;

/// One of the nine conditional-swap implementations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SwapStrategyId {
    /// `ISwp`: branch around a whole-item swap.
    Branching,
    /// `TCOp`: predicate once, both slots assigned through selects.
    TernarySelect,
    /// `Tie`: assign both slots from a selected ordered pair.
    PairAssign,
    /// `JXhg`: compare, jump over two register exchanges.
    JumpExchange,
    /// `4Cm`: copy left to temporaries, four conditional moves.
    FourSelect,
    /// `4CmS`: `4Cm` split into four independent selection steps.
    FourSelectSplit,
    /// `6Cm`: temporaries filled by conditional moves too, six in total.
    SixSelect,
    /// `2CPm`: select two source pointers, then copy unconditionally.
    IndirectSelect,
    /// `2CPp`: `2CPm` driven by a materialized integer predicate.
    PredicateIndirectSelect,
}

impl SwapStrategyId {
    pub const ALL: [SwapStrategyId; 9] = [
        SwapStrategyId::Branching,
        SwapStrategyId::TernarySelect,
        SwapStrategyId::PairAssign,
        SwapStrategyId::JumpExchange,
        SwapStrategyId::FourSelect,
        SwapStrategyId::FourSelectSplit,
        SwapStrategyId::SixSelect,
        SwapStrategyId::IndirectSelect,
        SwapStrategyId::PredicateIndirectSelect,
    ];

    pub fn label(self) -> &'static str {
        match self {
            SwapStrategyId::Branching => "ISwp",
            SwapStrategyId::TernarySelect => "TCOp",
            SwapStrategyId::PairAssign => "Tie",
            SwapStrategyId::JumpExchange => "JXhg",
            SwapStrategyId::FourSelect => "4Cm",
            SwapStrategyId::FourSelectSplit => "4CmS",
            SwapStrategyId::SixSelect => "6Cm",
            SwapStrategyId::IndirectSelect => "2CPm",
            SwapStrategyId::PredicateIndirectSelect => "2CPp",
        }
    }

    /// Whether the strategy is written to avoid conditional branches.
    pub fn is_branch_free(self) -> bool {
        !matches!(
            self,
            SwapStrategyId::Branching | SwapStrategyId::PairAssign | SwapStrategyId::JumpExchange
        )
    }
}

/// Free-function form of [`SwapStrategyId::is_branch_free`].
pub fn strategy_is_branch_free(strategy: SwapStrategyId) -> bool {
    strategy.is_branch_free()
}

impl fmt::Display for SwapStrategyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for SwapStrategyId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SwapStrategyId::ALL
            .into_iter()
            .find(|id| id.label() == s)
            .ok_or_else(|| format!("unknown swap strategy `{s}`"))
    }
}

/// Describes how the strategies are realized on this build target.
pub fn platform_description() -> String {
    if cfg!(target_arch = "x86_64") {
        "x86_64: JXhg/4Cm/4CmS/6Cm/2CPm/2CPp as inline asm, TCOp via select_unpredictable".into()
    } else {
        format!("{}: portable select fallbacks, no conditional-move guarantee", std::env::consts::ARCH)
    }
}

/// A compile-time conditional-swap strategy.
pub trait ConditionalSwap {
    const ID: SwapStrategyId;

    fn swap(left: &mut SortItem, right: &mut SortItem);
}

pub struct Branching;
pub struct TernarySelect;
pub struct PairAssign;
pub struct JumpExchange;
pub struct FourSelect;
pub struct FourSelectSplit;
pub struct SixSelect;
pub struct IndirectSelect;
pub struct PredicateIndirectSelect;

impl ConditionalSwap for Branching {
    const ID: SwapStrategyId = SwapStrategyId::Branching;

    #[inline(always)]
    fn swap(left: &mut SortItem, right: &mut SortItem) {
        portable::branching(left, right)
    }
}

impl ConditionalSwap for TernarySelect {
    const ID: SwapStrategyId = SwapStrategyId::TernarySelect;

    #[inline(always)]
    fn swap(left: &mut SortItem, right: &mut SortItem) {
        portable::ternary_select(left, right)
    }
}

impl ConditionalSwap for PairAssign {
    const ID: SwapStrategyId = SwapStrategyId::PairAssign;

    #[inline(always)]
    fn swap(left: &mut SortItem, right: &mut SortItem) {
        portable::pair_assign(left, right)
    }
}

impl ConditionalSwap for JumpExchange {
    const ID: SwapStrategyId = SwapStrategyId::JumpExchange;

    #[inline(always)]
    fn swap(left: &mut SortItem, right: &mut SortItem) {
        #[cfg(target_arch = "x86_64")]
        x86::jump_exchange(left, right);
        #[cfg(not(target_arch = "x86_64"))]
        portable::branching(left, right);
    }
}

impl ConditionalSwap for FourSelect {
    const ID: SwapStrategyId = SwapStrategyId::FourSelect;

    #[inline(always)]
    fn swap(left: &mut SortItem, right: &mut SortItem) {
        #[cfg(target_arch = "x86_64")]
        x86::four_select(left, right);
        #[cfg(not(target_arch = "x86_64"))]
        portable::four_select(left, right);
    }
}

impl ConditionalSwap for FourSelectSplit {
    const ID: SwapStrategyId = SwapStrategyId::FourSelectSplit;

    #[inline(always)]
    fn swap(left: &mut SortItem, right: &mut SortItem) {
        #[cfg(target_arch = "x86_64")]
        x86::four_select_split(left, right);
        #[cfg(not(target_arch = "x86_64"))]
        portable::four_select(left, right);
    }
}

impl ConditionalSwap for SixSelect {
    const ID: SwapStrategyId = SwapStrategyId::SixSelect;

    #[inline(always)]
    fn swap(left: &mut SortItem, right: &mut SortItem) {
        #[cfg(target_arch = "x86_64")]
        x86::six_select(left, right);
        #[cfg(not(target_arch = "x86_64"))]
        portable::six_select(left, right);
    }
}

impl ConditionalSwap for IndirectSelect {
    const ID: SwapStrategyId = SwapStrategyId::IndirectSelect;

    #[inline(always)]
    fn swap(left: &mut SortItem, right: &mut SortItem) {
        #[cfg(target_arch = "x86_64")]
        x86::indirect_select(left, right);
        #[cfg(not(target_arch = "x86_64"))]
        portable::indirect_select(left, right);
    }
}

impl ConditionalSwap for PredicateIndirectSelect {
    const ID: SwapStrategyId = SwapStrategyId::PredicateIndirectSelect;

    #[inline(always)]
    fn swap(left: &mut SortItem, right: &mut SortItem) {
        predicate_indirect_swap_by(left, right, |a, b| a.key < b.key)
    }
}

/// `2CPp` with a caller-supplied strict ordering. `less(a, b)` must return
/// true iff `a` belongs strictly before `b`.
#[inline(always)]
pub fn predicate_indirect_swap_by<F>(left: &mut SortItem, right: &mut SortItem, less: F)
where
    F: FnOnce(&SortItem, &SortItem) -> bool,
{
    #[cfg(target_arch = "x86_64")]
    x86::predicate_indirect_select(left, right, less);
    #[cfg(not(target_arch = "x86_64"))]
    portable::predicate_indirect_select(left, right, less);
}

thread_local! {
    static SWAP_COUNT: Cell<u64> = const { Cell::new(0) };
}

/// Wraps a strategy and counts its invocations on the current thread.
pub struct Counted<S>(PhantomData<S>);

impl<S: ConditionalSwap> ConditionalSwap for Counted<S> {
    const ID: SwapStrategyId = S::ID;

    #[inline(always)]
    fn swap(left: &mut SortItem, right: &mut SortItem) {
        SWAP_COUNT.with(|c| c.set(c.get() + 1));
        S::swap(left, right)
    }
}

/// Swaps executed through [`Counted`] on this thread since the last reset.
pub fn swap_count() -> u64 {
    SWAP_COUNT.with(Cell::get)
}

pub fn reset_swap_count() {
    SWAP_COUNT.with(|c| c.set(0));
}

/// Expands `$body` once per strategy with `$S` bound to the strategy type.
macro_rules! with_swap {
    ($id:expr, $S:ident => $body:expr) => {{
        use $crate::swaps::SwapStrategyId as Id;
        match $id {
            Id::Branching => {
                type $S = $crate::swaps::Branching;
                $body
            }
            Id::TernarySelect => {
                type $S = $crate::swaps::TernarySelect;
                $body
            }
            Id::PairAssign => {
                type $S = $crate::swaps::PairAssign;
                $body
            }
            Id::JumpExchange => {
                type $S = $crate::swaps::JumpExchange;
                $body
            }
            Id::FourSelect => {
                type $S = $crate::swaps::FourSelect;
                $body
            }
            Id::FourSelectSplit => {
                type $S = $crate::swaps::FourSelectSplit;
                $body
            }
            Id::SixSelect => {
                type $S = $crate::swaps::SixSelect;
                $body
            }
            Id::IndirectSelect => {
                type $S = $crate::swaps::IndirectSelect;
                $body
            }
            Id::PredicateIndirectSelect => {
                type $S = $crate::swaps::PredicateIndirectSelect;
                $body
            }
        }
    }};
}
pub(crate) use with_swap;

/// Runs one conditional swap with a strategy chosen at run time.
pub fn conditional_swap(strategy: SwapStrategyId, left: &mut SortItem, right: &mut SortItem) {
    with_swap!(strategy, S => S::swap(left, right))
}

/// Portable implementations. Used directly by the strategies that are plain
/// Rust, and as fallbacks for the assembly ones off x86-64.
pub mod portable {
    use std::hint::select_unpredictable;
    use std::mem;

    use crate::SortItem;

    #[inline(always)]
    pub fn branching(left: &mut SortItem, right: &mut SortItem) {
        if right.key < left.key {
            mem::swap(left, right);
        }
    }

    #[inline(always)]
    pub fn ternary_select(left: &mut SortItem, right: &mut SortItem) {
        let r = right.key < left.key;
        let temp = *left;
        *left = select_unpredictable(r, *right, *left);
        *right = select_unpredictable(r, temp, *right);
    }

    #[inline(always)]
    pub fn pair_assign(left: &mut SortItem, right: &mut SortItem) {
        (*left, *right) = if right.key < left.key { (*right, *left) } else { (*left, *right) };
    }

    #[inline(always)]
    pub fn four_select(left: &mut SortItem, right: &mut SortItem) {
        let (tmp_key, tmp_ref) = (left.key, left.reference);
        let r = right.key < left.key;
        left.key = select_unpredictable(r, right.key, left.key);
        left.reference = select_unpredictable(r, right.reference, left.reference);
        right.key = select_unpredictable(r, tmp_key, right.key);
        right.reference = select_unpredictable(r, tmp_ref, right.reference);
    }

    #[inline(always)]
    pub fn six_select(left: &mut SortItem, right: &mut SortItem) {
        let r = right.key < left.key;
        let tmp_key = select_unpredictable(r, left.key, 0);
        let tmp_ref = select_unpredictable(r, left.reference, 0);
        left.key = select_unpredictable(r, right.key, left.key);
        left.reference = select_unpredictable(r, right.reference, left.reference);
        right.key = select_unpredictable(r, tmp_key, right.key);
        right.reference = select_unpredictable(r, tmp_ref, right.reference);
    }

    #[inline(always)]
    pub fn indirect_select(left: &mut SortItem, right: &mut SortItem) {
        predicate_indirect_select(left, right, |a, b| a.key < b.key)
    }

    #[inline(always)]
    pub fn predicate_indirect_select<F>(left: &mut SortItem, right: &mut SortItem, less: F)
    where
        F: FnOnce(&SortItem, &SortItem) -> bool,
    {
        let temp = *left;
        let swap = less(right, &temp);
        let src_left: &SortItem = select_unpredictable(swap, &*right, &temp);
        let new_left = *src_left;
        let src_right: &SortItem = select_unpredictable(swap, &temp, &*right);
        let new_right = *src_right;
        *left = new_left;
        *right = new_right;
    }
}

#[cfg(target_arch = "x86_64")]
mod x86 {
    use std::arch::asm;

    use crate::SortItem;

    // Intel syntax: `cmp a, b` sets CF when a < b (unsigned), so
    // `cmp right, left` + `cmovb` moves exactly when right.key < left.key.

    #[inline(always)]
    pub fn jump_exchange(left: &mut SortItem, right: &mut SortItem) {
        unsafe {
            asm!(
                "cmp {rk}, {lk}",
                "jae 2f",
                "xchg {lk}, {rk}",
                "xchg {lr}, {rr}",
                "2:",
                lk = inout(reg) left.key,
                rk = inout(reg) right.key,
                lr = inout(reg) left.reference,
                rr = inout(reg) right.reference,
                options(nomem, nostack),
            );
        }
    }

    #[inline(always)]
    pub fn four_select(left: &mut SortItem, right: &mut SortItem) {
        let tmp_key = left.key;
        let tmp_ref = left.reference;
        unsafe {
            asm!(
                "cmp {rk}, {lk}",
                "cmovb {lk}, {rk}",
                "cmovb {lr}, {rr}",
                "cmovb {rk}, {tk}",
                "cmovb {rr}, {tr}",
                lk = inout(reg) left.key,
                rk = inout(reg) right.key,
                lr = inout(reg) left.reference,
                rr = inout(reg) right.reference,
                tk = in(reg) tmp_key,
                tr = in(reg) tmp_ref,
                options(pure, nomem, nostack),
            );
        }
    }

    /// Flags do not survive between separate `asm!` blocks, so the
    /// comparison is kept as a 0/1 register that each step re-tests.
    #[inline(always)]
    pub fn four_select_split(left: &mut SortItem, right: &mut SortItem) {
        let tmp_key = left.key;
        let tmp_ref = left.reference;
        let swap = u64::from(right.key < left.key);
        unsafe {
            asm!(
                "test {p}, {p}",
                "cmovnz {d}, {s}",
                p = in(reg) swap,
                d = inout(reg) left.key,
                s = in(reg) right.key,
                options(pure, nomem, nostack),
            );
            asm!(
                "test {p}, {p}",
                "cmovnz {d}, {s}",
                p = in(reg) swap,
                d = inout(reg) left.reference,
                s = in(reg) right.reference,
                options(pure, nomem, nostack),
            );
            asm!(
                "test {p}, {p}",
                "cmovnz {d}, {s}",
                p = in(reg) swap,
                d = inout(reg) right.key,
                s = in(reg) tmp_key,
                options(pure, nomem, nostack),
            );
            asm!(
                "test {p}, {p}",
                "cmovnz {d}, {s}",
                p = in(reg) swap,
                d = inout(reg) right.reference,
                s = in(reg) tmp_ref,
                options(pure, nomem, nostack),
            );
        }
    }

    #[inline(always)]
    pub fn six_select(left: &mut SortItem, right: &mut SortItem) {
        unsafe {
            asm!(
                "cmp {rk}, {lk}",
                "cmovb {tk}, {lk}",
                "cmovb {tr}, {lr}",
                "cmovb {lk}, {rk}",
                "cmovb {lr}, {rr}",
                "cmovb {rk}, {tk}",
                "cmovb {rr}, {tr}",
                lk = inout(reg) left.key,
                rk = inout(reg) right.key,
                lr = inout(reg) left.reference,
                rr = inout(reg) right.reference,
                tk = inout(reg) 0u64 => _,
                tr = inout(reg) 0u64 => _,
                options(pure, nomem, nostack),
            );
        }
    }

    // The asm only picks between pointer values and never dereferences them.
    #[allow(clippy::pointers_in_nomem_asm_block)]
    #[inline(always)]
    pub fn indirect_select(left: &mut SortItem, right: &mut SortItem) {
        let left_ptr: *mut SortItem = left;
        let right_ptr: *mut SortItem = right;
        unsafe {
            let temp = *left_ptr;
            let temp_ptr: *const SortItem = &temp;
            let mut src_left = left_ptr as *const SortItem;
            let mut src_right = right_ptr as *const SortItem;
            asm!(
                "cmp {rk}, {tk}",
                "cmovb {sl}, {rp}",
                "cmovb {sr}, {tp}",
                sl = inout(reg) src_left,
                sr = inout(reg) src_right,
                rp = in(reg) right_ptr,
                tp = in(reg) temp_ptr,
                rk = in(reg) (*right_ptr).key,
                tk = in(reg) temp.key,
                options(pure, nomem, nostack),
            );
            *left_ptr = *src_left;
            *right_ptr = *src_right;
        }
    }

    // The asm only picks between pointer values and never dereferences them.
    #[allow(clippy::pointers_in_nomem_asm_block)]
    #[inline(always)]
    pub fn predicate_indirect_select<F>(left: &mut SortItem, right: &mut SortItem, less: F)
    where
        F: FnOnce(&SortItem, &SortItem) -> bool,
    {
        let temp = *left;
        let predicate = u64::from(less(right, &temp));
        let left_ptr: *mut SortItem = left;
        let right_ptr: *mut SortItem = right;
        unsafe {
            let temp_ptr: *const SortItem = &temp;
            let mut src_left = left_ptr as *const SortItem;
            let mut src_right = right_ptr as *const SortItem;
            asm!(
                "test {p}, {p}",
                "cmovnz {sl}, {rp}",
                "cmovnz {sr}, {tp}",
                p = in(reg) predicate,
                sl = inout(reg) src_left,
                sr = inout(reg) src_right,
                rp = in(reg) right_ptr,
                tp = in(reg) temp_ptr,
                options(pure, nomem, nostack),
            );
            *left_ptr = *src_left;
            *right_ptr = *src_right;
        }
    }
}
