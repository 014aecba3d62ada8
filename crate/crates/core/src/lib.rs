//! Minimizer sampling under arbitrary alphabet orderings.
//!
//! The crate is organised around a small set of value types:
//!
//! * [`IntString`]: a string over a compact integer alphabet `[0, sigma)`.
//! * [`AlphabetOrdering`]: a total order on that alphabet.
//! * [`MinimizerSet`]: the 1-based positions sampled by the `(w,k)`-minimizer
//!   scheme.
//!
//! On top of those sit the two sampling engines ([`minimizers_naive`] and
//! [`minimizers_fast`]), the k-mer rank transform ([`rank_transform`]), exact
//! and heuristic ordering search ([`optimizer`]), generators for the
//! feedback-arc-set hardness instances ([`reduction`]) and the FASTA
//! ordering-sweep pipeline ([`experiments`]).

mod error;
mod kmer;
mod sampling;
mod string;

pub mod experiments;
pub mod optimizer;
pub mod ordering;
pub mod reduction;

pub use error::{Error, Result};
pub use optimizer::{
    decide_minimizers, exact_best_ordering, local_search_ordering, verify_certificate, Decision,
    OptimizationResult,
};
pub use ordering::{
    rank_transform, rank_transform_many, AlphabetOrdering, JointRankTransform, RankTransformResult,
};
pub use sampling::{count_minimizers, minimizers_fast, minimizers_naive, window_selections};
pub use string::{IntString, LetterAlphabet, MinimizerSet, WindowParams};

/// Largest alphabet for which exhaustive permutation search is attempted by default.
pub const DEFAULT_MAX_EXHAUSTIVE_SIGMA: usize = 8;
