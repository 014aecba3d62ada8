//! The `(w,k)`-minimizer sampling engines.
//!
//! For the window starting at `i`, the minimizer is the leftmost start in
//! `[i, i + w - 1]` of the lexicographically smallest k-mer of that window.
//! The sample is the union of those positions over all windows.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::kmer::kmer_keys;
use crate::ordering::AlphabetOrdering;
use crate::string::{IntString, MinimizerSet, WindowParams};

fn check_alphabet(s: &IntString, ord: &AlphabetOrdering) -> Result<()> {
    if s.sigma() != ord.sigma() {
        return Err(Error::AlphabetMismatch {
            string: s.sigma(),
            ordering: ord.sigma(),
        });
    }
    Ok(())
}

/// Reference engine: compares every candidate k-mer symbol by symbol.
///
/// Runs in `O(n * w * k)` and serves as the oracle for [`minimizers_fast`].
pub fn minimizers_naive(
    s: &IntString,
    p: WindowParams,
    ord: &AlphabetOrdering,
) -> Result<MinimizerSet> {
    check_alphabet(s, ord)?;
    let sym = s.symbols();
    let (w, k) = (p.w(), p.k());
    let kmer_less = |a: usize, b: usize| -> bool {
        for t in 0..k {
            let (ra, rb) = (ord.rank(sym[a + t]), ord.rank(sym[b + t]));
            if ra != rb {
                return ra < rb;
            }
        }
        false
    };
    let mut selected = Vec::new();
    for i in 0..p.window_count(s.len()) {
        let mut best = i;
        for j in i + 1..i + w {
            if kmer_less(j, best) {
                best = j;
            }
        }
        selected.push(best + 1);
    }
    selected.sort_unstable();
    selected.dedup();
    Ok(MinimizerSet::from_sorted(selected, s.len()))
}

/// The selected 0-based k-mer start of every window, in window order.
///
/// Sliding-window minimum over order-preserving k-mer keys with a monotone
/// deque. Equal keys stay queued behind earlier ones, so the leftmost
/// occurrence wins ties.
pub fn window_selections(
    s: &IntString,
    p: WindowParams,
    ord: &AlphabetOrdering,
) -> Result<Vec<usize>> {
    check_alphabet(s, ord)?;
    let windows = p.window_count(s.len());
    if windows == 0 {
        return Ok(Vec::new());
    }
    let ranks: Vec<u32> = s.symbols().iter().map(|&c| ord.rank(c)).collect();
    let keys = kmer_keys(&ranks, s.sigma(), p.k());
    let w = p.w();

    let mut out = Vec::with_capacity(windows);
    let mut deque: VecDeque<usize> = VecDeque::with_capacity(w);
    for (j, &key) in keys.iter().enumerate() {
        while deque.back().is_some_and(|&b| keys[b] > key) {
            deque.pop_back();
        }
        deque.push_back(j);
        if j + 1 >= w {
            let start = j + 1 - w;
            while deque.front().is_some_and(|&f| f < start) {
                deque.pop_front();
            }
            out.push(*deque.front().expect("window is non-empty"));
        }
    }
    Ok(out)
}

/// Linear-time engine; same output as [`minimizers_naive`].
pub fn minimizers_fast(
    s: &IntString,
    p: WindowParams,
    ord: &AlphabetOrdering,
) -> Result<MinimizerSet> {
    let mut positions: Vec<usize> = Vec::new();
    for sel in window_selections(s, p, ord)? {
        // selections are non-decreasing, so deduplicating against the tail suffices
        if positions.last() != Some(&(sel + 1)) {
            positions.push(sel + 1);
        }
    }
    Ok(MinimizerSet::from_sorted(positions, s.len()))
}

/// `|minimizers_fast(s, p, ord)|`.
pub fn count_minimizers(s: &IntString, p: WindowParams, ord: &AlphabetOrdering) -> Result<usize> {
    let sel = window_selections(s, p, ord)?;
    Ok(sel
        .iter()
        .zip(sel.iter().skip(1))
        .filter(|(a, b)| a != b)
        .count()
        + usize::from(!sel.is_empty()))
}
