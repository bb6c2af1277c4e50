//! Word-level helpers shared by the family operations.

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Gathers the bits of `value` selected by `mask` into the low bits, keeping
/// their relative order (software `pext`).
#[inline]
pub(crate) fn compress(value: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    let mut m = mask;
    let mut k = 0;
    while m != 0 {
        let low = m & m.wrapping_neg();
        if value & low != 0 {
            out |= 1 << k;
        }
        k += 1;
        m &= m - 1;
    }
    out
}

/// Inverse of [`compress`]: scatters the low bits of `value` onto the
/// positions of `mask` (software `pdep`).
#[inline]
pub(crate) fn expand(value: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    let mut m = mask;
    let mut k = 0;
    while m != 0 {
        let low = m & m.wrapping_neg();
        if value & (1 << k) != 0 {
            out |= low;
        }
        k += 1;
        m &= m - 1;
    }
    out
}

/// Iterates over the set bit positions of `mask`, lowest first.
pub(crate) fn positions(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let e = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(e)
        }
    })
}

/// Iterates over all submasks of `mask`, starting with `0` and ending with
/// `mask` itself, in increasing numeric order.
pub(crate) fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let total = 1u64 << mask.count_ones();
    (0..total).map(move |k| expand(k, mask))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compress_expand_roundtrip() {
        let mask = 0b1011_0110;
        for v in 0..16u64 {
            assert_eq!(compress(expand(v, mask), mask), v & 0b11111);
        }
        assert_eq!(compress(0b1111_0000, 0b1010_1010), 0b1100);
    }

    #[test]
    fn submasks_are_ordered_and_complete() {
        let subs: Vec<u64> = submasks(0b101).collect();
        assert_eq!(subs, vec![0b000, 0b001, 0b100, 0b101]);
        assert_eq!(submasks(0).count(), 1);
    }

    #[test]
    fn positions_lists_bits() {
        assert_eq!(positions(0b1001_0010).collect::<Vec<_>>(), vec![1, 4, 7]);
    }
}
