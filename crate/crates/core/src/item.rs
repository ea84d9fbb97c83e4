/// A 64-bit key with a 64-bit reference payload. Ordering looks at the key
/// only; the reference travels with it.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct SortItem {
    pub key: u64,
    pub reference: u64,
}

impl SortItem {
    pub const fn new(key: u64, reference: u64) -> Self {
        SortItem { key, reference }
    }
}

impl From<(u64, u64)> for SortItem {
    fn from((key, reference): (u64, u64)) -> Self {
        SortItem { key, reference }
    }
}

/// True iff keys are nondecreasing.
pub fn is_sorted_by_key(items: &[SortItem]) -> bool {
    items.windows(2).all(|w| w[0].key <= w[1].key)
}
