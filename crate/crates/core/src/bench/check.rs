//! Output checks run inside the measurement loops: sortedness and a
//! multiplicative fingerprint of the key multiset.

use std::hint::black_box;

use crate::bench::Lcg;
use crate::SortItem;

/// Default fingerprint modulus, 2^61 - 1.
pub const FINGERPRINT_PRIME: u64 = (1 << 61) - 1;

/// `v = prod (z - key_i) mod p`, together with the `z` that produced it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub value: u64,
    pub z: u64,
}

#[inline(always)]
fn product(items: &[SortItem], z: u64, p: u64) -> u64 {
    let z = z % p;
    items.iter().fold(1u64, |acc, item| {
        let factor = (z + p - item.key % p) % p;
        ((u128::from(acc) * u128::from(factor)) % u128::from(p)) as u64
    })
}

/// Computes the fingerprint starting at `z`, incrementing `z` until the
/// product is nonzero.
pub fn fingerprint(items: &[SortItem], z: u64, p: u64) -> Fingerprint {
    let mut z = z;
    loop {
        let value = product(items, z, p);
        if value != 0 {
            return Fingerprint { value, z };
        }
        z += 1;
    }
}

/// Fingerprint with the default prime and `z = 1`.
pub fn default_fingerprint(items: &[SortItem]) -> Fingerprint {
    fingerprint(items, 1, FINGERPRINT_PRIME)
}

/// True iff `items` has the same fingerprint, evaluated at `expected.z`.
pub fn matches_fingerprint(items: &[SortItem], expected: Fingerprint, p: u64) -> bool {
    product(items, expected.z, p) == expected.value
}

pub fn check_sorted(items: &[SortItem]) -> bool {
    crate::item::is_sorted_by_key(items)
}

#[cfg(debug_assertions)]
thread_local! {
    static SIMULATED_CHECKS: std::cell::Cell<u64> = const { std::cell::Cell::new(0) };
}

/// Runs the same comparisons and fingerprint arithmetic as the real check
/// and discards the result.
#[inline(never)]
pub fn simulated_check(items: &[SortItem], expected: Fingerprint) {
    #[cfg(debug_assertions)]
    SIMULATED_CHECKS.with(|c| c.set(c.get() + 1));
    let sorted = check_sorted(black_box(items));
    let same = product(black_box(items), expected.z, FINGERPRINT_PRIME) == expected.value;
    black_box((sorted, same));
}

/// Simulated checks executed on this thread (debug builds only; always 0
/// otherwise).
pub fn simulated_check_count() -> u64 {
    #[cfg(debug_assertions)]
    return SIMULATED_CHECKS.with(std::cell::Cell::get);
    #[cfg(not(debug_assertions))]
    0
}

/// Overwrites `items` from the generator: key, then reference, per item.
#[inline]
pub fn fill_random(items: &mut [SortItem], rng: &mut Lcg) {
    for item in items {
        item.key = rng.next();
        item.reference = rng.next();
    }
}

/// [`fill_random`] from a fresh generator.
pub fn fill_random_seeded(items: &mut [SortItem], seed: u64) {
    fill_random(items, &mut Lcg::from_any(seed));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn keys(ks: &[u64]) -> Vec<SortItem> {
        ks.iter().map(|&k| SortItem::new(k, 0)).collect()
    }

    #[test]
    fn small_prime_examples() {
        assert_eq!(fingerprint(&keys(&[3, 5]), 1, 7), Fingerprint { value: 1, z: 1 });
        assert_eq!(fingerprint(&keys(&[5, 3]), 1, 7), Fingerprint { value: 1, z: 1 });
        assert_eq!(fingerprint(&keys(&[3, 4]), 1, 7), Fingerprint { value: 6, z: 1 });
    }

    #[test]
    fn zero_product_bumps_z() {
        // z = 3 hits key 3, so 4 is used: (4 - 3) * (4 - 5) = 1 * 6 mod 7.
        let fp = fingerprint(&keys(&[3, 5]), 3, 7);
        assert_eq!(fp.z, 4);
        assert_ne!(fp.value, 0);
        assert_eq!(fp.value, 6);
    }

    #[test]
    fn empty_product_is_one() {
        assert_eq!(default_fingerprint(&[]), Fingerprint { value: 1, z: 1 });
    }

    #[test]
    fn sorted_check() {
        assert!(check_sorted(&[]));
        assert!(check_sorted(&keys(&[1, 1, 2])));
        assert!(!check_sorted(&keys(&[2, 1])));
    }

    #[test]
    fn fill_is_deterministic() {
        let mut a = vec![SortItem::default(); 8];
        let mut b = vec![SortItem::default(); 8];
        fill_random_seeded(&mut a, 99);
        fill_random_seeded(&mut b, 99);
        assert_eq!(a, b);
        let mut rng = Lcg::from_any(99);
        assert_eq!(a[0].key, rng.next());
        assert_eq!(a[0].reference, rng.next());
        assert_eq!(a[1].key, rng.next());

        let mut c = vec![SortItem::default(); 8];
        fill_random_seeded(&mut c, 100);
        assert!(a.iter().zip(&c).any(|(x, y)| x.key != y.key));

        let mut empty: Vec<SortItem> = vec![];
        fill_random_seeded(&mut empty, 1);
    }

    #[test]
    #[cfg(debug_assertions)]
    fn simulated_check_runs() {
        let before = simulated_check_count();
        let items = keys(&[2, 1]);
        simulated_check(&items, default_fingerprint(&items));
        assert_eq!(simulated_check_count(), before + 1);
    }
}
