use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::optimizer::{all_orderings, check_budget};
use crate::ordering::{rank_transform_many, AlphabetOrdering, RankTransformResult};
use crate::sampling::count_minimizers;
use crate::string::{IntString, WindowParams};
use crate::DEFAULT_MAX_EXHAUSTIVE_SIGMA;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepStrategy {
    /// Every ordering of the k-mer ranks; needs a tiny rank alphabet.
    Exhaustive,
    /// `count` seeded random orderings of the k-mer ranks.
    Sampled { count: u64, seed: u64 },
}

/// Extremes of `|M_{w,k}|` over the orderings explored by a sweep.
///
/// Orderings are over the k-mer ranks of the transformed input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub w: usize,
    pub k: usize,
    pub min_count: usize,
    pub max_count: usize,
    pub min_ordering: AlphabetOrdering,
    pub max_ordering: AlphabetOrdering,
    pub orderings_tried: u64,
    pub stopped_early: bool,
}

impl SweepReport {
    pub const CSV_HEADER: &'static str = "w,k,min,max,orderings_tried,stopped_early";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.w,
            self.k,
            self.min_count,
            self.max_count,
            self.orderings_tried,
            self.stopped_early
        )
    }

    /// Orderings written over 1-based ranks, e.g. `1<3<2`.
    pub fn min_ordering_text(&self) -> String {
        RankTransformResult::format_rank_ordering(&self.min_ordering)
    }

    pub fn max_ordering_text(&self) -> String {
        RankTransformResult::format_rank_ordering(&self.max_ordering)
    }
}

/// Whitespace-separated `w k min max` rows for plotting.
pub fn gnuplot_data(reports: &[SweepReport]) -> String {
    let mut out = String::from("# w k min max\n");
    for r in reports {
        out.push_str(&format!(
            "{} {} {} {}\n",
            r.w, r.k, r.min_count, r.max_count
        ));
    }
    out
}

/// Sweeps orderings of the k-mers of `s`.
///
/// `s` is rank-transformed (k-mers ranked lexicographically under the
/// identity order on its alphabet) and every explored ordering is scored as
/// `|M_{w,1}|` of the transformed string. With `stop_when_gap`, the sweep
/// halts as soon as `2 * min < max`.
pub fn ordering_sweep(
    s: &IntString,
    w: usize,
    k: usize,
    strategy: SweepStrategy,
    stop_when_gap: bool,
) -> Result<SweepReport> {
    let p = WindowParams::new(w, k)?;
    if s.len() < p.span() {
        return Err(Error::StringTooShort {
            n: s.len(),
            k: p.span(),
        });
    }
    ordering_sweep_many(std::slice::from_ref(s), w, k, strategy, stop_when_gap)
}

/// Like [`ordering_sweep`] over several strings sharing one k-mer ranking;
/// counts are summed. Strings shorter than `k` are ignored.
pub fn ordering_sweep_many(
    strings: &[IntString],
    w: usize,
    k: usize,
    strategy: SweepStrategy,
    stop_when_gap: bool,
) -> Result<SweepReport> {
    let p = WindowParams::new(w, k)?;
    let transformed = transform_all(strings, k)?;
    let p1 = WindowParams::new(w, 1)?;
    let sigma = transformed.first().map_or(0, IntString::sigma);
    let score = |ord: &AlphabetOrdering| -> Result<usize> {
        transformed
            .iter()
            .map(|t| count_minimizers(t, p1, ord))
            .sum()
    };

    let mut state: Option<SweepReport> = None;
    let mut visit = |ord: AlphabetOrdering| -> Result<bool> {
        let count = score(&ord)?;
        let r = state.get_or_insert_with(|| SweepReport {
            w: p.w(),
            k: p.k(),
            min_count: count,
            max_count: count,
            min_ordering: ord.clone(),
            max_ordering: ord.clone(),
            orderings_tried: 0,
            stopped_early: false,
        });
        r.orderings_tried += 1;
        if count < r.min_count {
            r.min_count = count;
            r.min_ordering = ord.clone();
        }
        if count > r.max_count {
            r.max_count = count;
            r.max_ordering = ord;
        }
        if stop_when_gap && 2 * r.min_count < r.max_count {
            r.stopped_early = true;
            return Ok(false);
        }
        Ok(true)
    };

    match strategy {
        SweepStrategy::Exhaustive => {
            check_budget(sigma, DEFAULT_MAX_EXHAUSTIVE_SIGMA)?;
            for ord in all_orderings(sigma) {
                if !visit(ord)? {
                    break;
                }
            }
        }
        SweepStrategy::Sampled { count, seed } => {
            if count == 0 {
                return Err(Error::InvalidParameter(
                    "sample count must be positive".into(),
                ));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut perm: Vec<u32> = (0..sigma).collect();
            for _ in 0..count {
                perm.shuffle(&mut rng);
                if !visit(AlphabetOrdering::from_permutation(perm.clone())?)? {
                    break;
                }
            }
        }
    }
    Ok(state.expect("at least one ordering is visited"))
}

/// Rank-transforms the strings long enough to hold a k-mer.
pub fn transform_all(strings: &[IntString], k: usize) -> Result<Vec<IntString>> {
    let usable: Vec<IntString> = strings.iter().filter(|s| s.len() >= k).cloned().collect();
    let Some(first) = usable.first() else {
        return Err(Error::InvalidParameter(format!(
            "no input string holds a {k}-mer"
        )));
    };
    let base = AlphabetOrdering::identity(first.sigma());
    Ok(rank_transform_many(&usable, k, &base)?.transformed)
}
