use std::fmt;
use std::str::FromStr;

use crate::SortItem;

/// Insertion sort implementations compared against the networks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InsertionVariant {
    /// Textbook version with array indices.
    Def,
    /// Same algorithm walking raw pointers.
    POp,
    /// libstdc++ structure: guarded move-to-front, then unguarded inner loop.
    Stl,
    /// `Def` plus a check against the first item before the inner loop.
    Aif,
}

impl InsertionVariant {
    pub const ALL: [InsertionVariant; 4] =
        [InsertionVariant::Def, InsertionVariant::POp, InsertionVariant::Stl, InsertionVariant::Aif];

    pub fn label(self) -> &'static str {
        match self {
            InsertionVariant::Def => "Def",
            InsertionVariant::POp => "POp",
            InsertionVariant::Stl => "STL",
            InsertionVariant::Aif => "AIF",
        }
    }
}

impl fmt::Display for InsertionVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for InsertionVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        InsertionVariant::ALL
            .into_iter()
            .find(|v| v.label() == s)
            .ok_or_else(|| format!("unknown insertion sort variant `{s}`"))
    }
}

/// Sorts `items[..n]` by key.
///
/// # Panics
///
/// Panics if `n > items.len()`.
pub fn insertion_sort(items: &mut [SortItem], n: usize, variant: InsertionVariant) {
    insertion_sort_by(items, n, variant, |a, b| a.key < b.key)
}

/// Like [`insertion_sort`] with a custom strict ordering.
pub fn insertion_sort_by<F>(items: &mut [SortItem], n: usize, variant: InsertionVariant, less: F)
where
    F: FnMut(&SortItem, &SortItem) -> bool,
{
    let v = &mut items[..n];
    match variant {
        InsertionVariant::Def => def(v, less),
        InsertionVariant::POp => pointer(v, less),
        InsertionVariant::Stl => stl(v, less),
        InsertionVariant::Aif => aif(v, less),
    }
}

#[inline]
fn def<F: FnMut(&SortItem, &SortItem) -> bool>(v: &mut [SortItem], mut less: F) {
    for i in 1..v.len() {
        let x = v[i];
        let mut j = i;
        while j > 0 && less(&x, &v[j - 1]) {
            v[j] = v[j - 1];
            j -= 1;
        }
        v[j] = x;
    }
}

#[inline]
fn pointer<F: FnMut(&SortItem, &SortItem) -> bool>(v: &mut [SortItem], mut less: F) {
    if v.len() < 2 {
        return;
    }
    let base = v.as_mut_ptr();
    // SAFETY: every pointer stays within `base..base + len`; `hole` only moves
    // down while it is above `base`, and SortItem is Copy.
    unsafe {
        let end = base.add(v.len());
        let mut next = base.add(1);
        while next < end {
            let x = *next;
            let mut hole = next;
            while hole > base && less(&x, &*hole.sub(1)) {
                *hole = *hole.sub(1);
                hole = hole.sub(1);
            }
            *hole = x;
            next = next.add(1);
        }
    }
}

#[inline]
fn stl<F: FnMut(&SortItem, &SortItem) -> bool>(v: &mut [SortItem], mut less: F) {
    for i in 1..v.len() {
        let x = v[i];
        if less(&x, &v[0]) {
            v.copy_within(0..i, 1);
            v[0] = x;
        } else {
            // v[0] <= x stops the scan.
            let mut j = i;
            while less(&x, &v[j - 1]) {
                v[j] = v[j - 1];
                j -= 1;
            }
            v[j] = x;
        }
    }
}

#[inline]
fn aif<F: FnMut(&SortItem, &SortItem) -> bool>(v: &mut [SortItem], mut less: F) {
    for i in 1..v.len() {
        let x = v[i];
        if less(&x, &v[0]) {
            v.copy_within(0..i, 1);
            v[0] = x;
            continue;
        }
        let mut j = i;
        while j > 0 && less(&x, &v[j - 1]) {
            v[j] = v[j - 1];
            j -= 1;
        }
        v[j] = x;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn items(keys: &[u64]) -> Vec<SortItem> {
        keys.iter().enumerate().map(|(i, &k)| SortItem::new(k, i as u64)).collect()
    }

    #[test]
    fn empty_and_single() {
        for variant in InsertionVariant::ALL {
            let mut v: Vec<SortItem> = vec![];
            insertion_sort(&mut v, 0, variant);
            let mut one = items(&[4]);
            insertion_sort(&mut one, 1, variant);
            assert_eq!(one, items(&[4]));
        }
    }

    #[test]
    fn sorted_input_costs_n_minus_one_comparisons() {
        let mut v = items(&(0..16).collect::<Vec<_>>());
        let mut comparisons = 0;
        insertion_sort_by(&mut v, 16, InsertionVariant::Def, |a, b| {
            comparisons += 1;
            a.key < b.key
        });
        assert_eq!(comparisons, 15);
        assert_eq!(v, items(&(0..16).collect::<Vec<_>>()));
    }

    #[test]
    fn only_prefix_is_sorted() {
        for variant in InsertionVariant::ALL {
            let mut v = items(&[3, 2, 1, 0]);
            insertion_sort(&mut v, 3, variant);
            assert_eq!(v.iter().map(|x| x.key).collect::<Vec<_>>(), [1, 2, 3, 0], "{variant}");
        }
    }

    #[test]
    fn variants_agree_with_duplicates() {
        let keys = [5, 1, 5, 3, 1, 9, 0, 5, 2, 2, 8, 7, 1, 0, 4, 6];
        for variant in InsertionVariant::ALL {
            let mut v = items(&keys);
            insertion_sort(&mut v, keys.len(), variant);
            let mut sorted = keys;
            sorted.sort_unstable();
            assert_eq!(v.iter().map(|x| x.key).collect::<Vec<_>>(), sorted, "{variant}");
        }
    }

    #[test]
    fn labels() {
        let labels: Vec<_> = InsertionVariant::ALL.iter().map(|v| v.label()).collect();
        assert_eq!(labels, ["Def", "POp", "STL", "AIF"]);
        assert_eq!("STL".parse::<InsertionVariant>().unwrap(), InsertionVariant::Stl);
    }
}
