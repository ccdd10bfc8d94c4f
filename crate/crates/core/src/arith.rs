//! Small exact integer helpers shared by the counting and bound modules.

/// `base^exp` in u128; caller guarantees no overflow (checked in debug).
pub(crate) fn pow_u128(base: u64, exp: u32) -> u128 {
    (base as u128).checked_pow(exp).expect("power overflow")
}

/// Floor of the k-th root of `v`.
pub(crate) fn kth_root(v: u64, k: u32) -> u64 {
    assert!(k >= 1);
    if k == 1 || v <= 1 {
        return v;
    }
    if k >= 64 {
        return 1; // 2^64 > v >= 2, so the root is 1
    }
    let mut r = (v as f64).powf(1.0 / k as f64).round() as u64;
    r = r.max(1);
    while r > 1 && pow_checked(r, k).map_or(true, |p| p > v as u128) {
        r -= 1;
    }
    while pow_checked(r + 1, k).is_some_and(|p| p <= v as u128) {
        r += 1;
    }
    r
}

fn pow_checked(base: u64, exp: u32) -> Option<u128> {
    (base as u128).checked_pow(exp)
}

/// True iff `v = x^k` for some natural `x >= 1`.
pub(crate) fn is_kth_power(v: u64, k: u32) -> bool {
    if v == 0 {
        return false;
    }
    let r = kth_root(v, k);
    pow_checked(r, k) == Some(v as u128)
}

/// Multiset permutation count `m! / (d1! * d2! * ...)` of the given values.
pub(crate) fn multiset_permutations(values: &[u64]) -> u128 {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    let mut result: u128 = 1;
    let mut run = 0u128;
    for i in 0..sorted.len() {
        if i > 0 && sorted[i] == sorted[i - 1] {
            run += 1;
        } else {
            run = 1;
        }
        // after i+1 elements, result is the prefix multinomial, so the
        // division is exact at every step
        result = result * (i as u128 + 1) / run;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kth_root_exact_and_floor() {
        assert_eq!(kth_root(27, 3), 3);
        assert_eq!(kth_root(26, 3), 2);
        assert_eq!(kth_root(1, 7), 1);
        assert_eq!(kth_root(u64::MAX, 2), (1u64 << 32) - 1);
        for v in 1..200u64 {
            for k in 1..6 {
                let r = kth_root(v, k);
                assert!(pow_u128(r, k) <= v as u128);
                assert!((r as u128 + 1).pow(k) > v as u128);
            }
        }
    }

    #[test]
    fn kth_power_detection() {
        assert!(is_kth_power(8, 3));
        assert!(is_kth_power(1, 9));
        assert!(!is_kth_power(2, 2));
        assert!(!is_kth_power(0, 4));
    }

    #[test]
    fn multiset_permutation_counts() {
        assert_eq!(multiset_permutations(&[27, 84, 110, 133]), 24);
        assert_eq!(multiset_permutations(&[1, 1]), 1);
        assert_eq!(multiset_permutations(&[3, 4]), 2);
        assert_eq!(multiset_permutations(&[5]), 1);
        assert_eq!(multiset_permutations(&[2, 2, 3]), 3);
        assert_eq!(multiset_permutations(&[]), 1);
    }
}
