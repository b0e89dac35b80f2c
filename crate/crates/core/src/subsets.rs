//! Bitmask enumeration of subsets of `{0, …, p-1}`.

/// All masks over `p` bits with exactly `k` bits set, in increasing order.
pub(crate) fn masks_of_size(p: usize, k: usize) -> impl Iterator<Item = u64> {
    debug_assert!(p < 64);
    (0..1u64 << p).filter(move |m| m.count_ones() as usize == k)
}

/// Every mask over `p` bits, the empty one included.
pub(crate) fn all_masks(p: usize) -> std::ops::Range<u64> {
    debug_assert!(p < 64);
    0..1u64 << p
}

pub(crate) fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}
