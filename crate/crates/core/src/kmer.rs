//! Order-preserving integer keys for the k-mers of a ranked string.
//!
//! `kmer_keys(ranks, sigma, k)[i]` compares exactly like the k-mer starting at
//! `i`, read as a word over symbol ranks: equal keys mean equal k-mers and
//! `key[i] < key[j]` means the k-mer at `i` is lexicographically smaller.

/// `ranks[i]` is the rank of the `i`-th symbol under the active ordering.
pub(crate) fn kmer_keys(ranks: &[u32], sigma: u32, k: usize) -> Vec<u64> {
    if k == 0 || ranks.len() < k {
        return Vec::new();
    }
    let base = u64::from(sigma.max(1));
    match u32::try_from(k).ok().and_then(|e| base.checked_pow(e)) {
        Some(_) => packed_keys(ranks, base, k),
        None => doubling_keys(ranks, k),
    }
}

/// Base-`sigma` packing; valid whenever `sigma^k` fits in a `u64`.
fn packed_keys(ranks: &[u32], base: u64, k: usize) -> Vec<u64> {
    let high = base.pow(k as u32 - 1);
    let mut out = Vec::with_capacity(ranks.len() - k + 1);
    let mut key = 0u64;
    for (i, &r) in ranks.iter().enumerate() {
        key = (key % high) * base + u64::from(r);
        if i + 1 >= k {
            out.push(key);
        }
    }
    out
}

/// Prefix doubling: dense ranks of length-`2L` substrings from pairs of
/// length-`L` ranks, finished with one overlapping pair for non-powers of two.
fn doubling_keys(ranks: &[u32], k: usize) -> Vec<u64> {
    let mut current: Vec<u64> = ranks.iter().map(|&r| u64::from(r)).collect();
    let mut len = 1;
    while len * 2 <= k {
        current = combine(&current, len);
        len *= 2;
    }
    if len < k {
        current = combine(&current, k - len);
    }
    current.truncate(ranks.len() - k + 1);
    current
}

/// Dense ranks of `(keys[i], keys[i + shift])` for every `i` where both exist.
fn combine(keys: &[u64], shift: usize) -> Vec<u64> {
    let m = keys.len() - shift;
    let mut idx: Vec<usize> = (0..m).collect();
    idx.sort_unstable_by_key(|&i| (keys[i], keys[i + shift]));
    let mut out = vec![0u64; m];
    let mut rank = 0u64;
    for t in 0..m {
        let i = idx[t];
        if t > 0 {
            let j = idx[t - 1];
            if (keys[j], keys[j + shift]) != (keys[i], keys[i + shift]) {
                rank += 1;
            }
        }
        out[i] = rank;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check_order(ranks: &[u32], keys: &[u64], k: usize) {
        for i in 0..keys.len() {
            for j in 0..keys.len() {
                let a = &ranks[i..i + k];
                let b = &ranks[j..j + k];
                assert_eq!(a.cmp(b), keys[i].cmp(&keys[j]), "k-mers at {i} and {j}");
            }
        }
    }

    #[test]
    fn short_input_has_no_keys() {
        assert!(kmer_keys(&[1, 2], 4, 3).is_empty());
        assert_eq!(kmer_keys(&[1, 2, 0], 4, 3).len(), 1);
    }

    proptest! {
        #[test]
        fn packed_keys_preserve_order(ranks in prop::collection::vec(0u32..4, 1..40), k in 1usize..6) {
            prop_assume!(ranks.len() >= k);
            let keys = kmer_keys(&ranks, 4, k);
            check_order(&ranks, &keys, k);
        }

        #[test]
        fn doubling_keys_preserve_order(ranks in prop::collection::vec(0u32..3, 1..40), k in 1usize..12) {
            prop_assume!(ranks.len() >= k);
            let keys = doubling_keys(&ranks, k);
            prop_assert_eq!(keys.len(), ranks.len() - k + 1);
            check_order(&ranks, &keys, k);
        }
    }

    #[test]
    fn huge_alphabet_falls_back_to_doubling() {
        let ranks: Vec<u32> = (0..50).map(|i| (i * 7919 % 1_000_003) as u32).collect();
        let keys = kmer_keys(&ranks, u32::MAX, 5);
        check_order(&ranks, &keys, 5);
    }
}
