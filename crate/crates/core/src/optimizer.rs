//! Searching for alphabet orderings with few minimizers.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ordering::AlphabetOrdering;
use crate::sampling::count_minimizers;
use crate::string::{IntString, WindowParams};
use crate::DEFAULT_MAX_EXHAUSTIVE_SIGMA;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimizationResult {
    pub best_ordering: AlphabetOrdering,
    pub best_count: usize,
    pub orderings_evaluated: u64,
    pub exhaustive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Yes {
        certificate: AlphabetOrdering,
        count: usize,
    },
    No {
        best_count: usize,
    },
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes { .. })
    }
}

/// Every permutation of `[0, sigma)` in lexicographic order.
pub(crate) fn all_orderings(sigma: u32) -> impl Iterator<Item = AlphabetOrdering> {
    (0..sigma)
        .permutations(sigma as usize)
        .map(|p| AlphabetOrdering::from_permutation(p).expect("permutation"))
}

pub(crate) fn check_budget(sigma: u32, max_sigma: usize) -> Result<()> {
    if sigma as usize > max_sigma {
        return Err(Error::BudgetExceeded {
            size: sigma as usize,
            max: max_sigma,
        });
    }
    Ok(())
}

/// Exhaustive search with the default budget of
/// [`DEFAULT_MAX_EXHAUSTIVE_SIGMA`] symbols.
pub fn exact_best_ordering(s: &IntString, p: WindowParams) -> Result<OptimizationResult> {
    exact_best_ordering_with_budget(s, p, DEFAULT_MAX_EXHAUSTIVE_SIGMA)
}

/// Evaluates all `sigma!` orderings. Ties go to the lexicographically
/// smallest permutation, which is the first one met in enumeration order.
pub fn exact_best_ordering_with_budget(
    s: &IntString,
    p: WindowParams,
    max_sigma: usize,
) -> Result<OptimizationResult> {
    check_budget(s.sigma(), max_sigma)?;
    let mut best: Option<(usize, AlphabetOrdering)> = None;
    let mut evaluated = 0u64;
    for ord in all_orderings(s.sigma()) {
        let count = count_minimizers(s, p, &ord)?;
        evaluated += 1;
        if best.as_ref().is_none_or(|(c, _)| count < *c) {
            best = Some((count, ord));
        }
    }
    // sigma = 0 has exactly one (empty) ordering as well
    let (best_count, best_ordering) = match best {
        Some(b) => b,
        None => {
            let ord = AlphabetOrdering::identity(s.sigma());
            evaluated = 1;
            (count_minimizers(s, p, &ord)?, ord)
        }
    };
    Ok(OptimizationResult {
        best_ordering,
        best_count,
        orderings_evaluated: evaluated,
        exhaustive: true,
    })
}

/// Is there an ordering with at most `ell` minimizers?
///
/// On YES the certificate is the optimal ordering reported by
/// [`exact_best_ordering`].
pub fn decide_minimizers(s: &IntString, p: WindowParams, ell: usize) -> Result<Decision> {
    decide_minimizers_with_budget(s, p, ell, DEFAULT_MAX_EXHAUSTIVE_SIGMA)
}

pub fn decide_minimizers_with_budget(
    s: &IntString,
    p: WindowParams,
    ell: usize,
    max_sigma: usize,
) -> Result<Decision> {
    if ell == 0 {
        return Err(Error::InvalidParameter("ell must be positive".into()));
    }
    let best = exact_best_ordering_with_budget(s, p, max_sigma)?;
    Ok(if best.best_count <= ell {
        Decision::Yes {
            certificate: best.best_ordering,
            count: best.best_count,
        }
    } else {
        Decision::No {
            best_count: best.best_count,
        }
    })
}

/// Checks a YES certificate in near-linear time.
pub fn verify_certificate(
    s: &IntString,
    p: WindowParams,
    ord: &AlphabetOrdering,
    ell: usize,
) -> Result<bool> {
    Ok(count_minimizers(s, p, ord)? <= ell)
}

/// Hill climbing over adjacent transpositions with seeded random restarts.
///
/// `budget` caps the number of orderings evaluated. The identity ordering is
/// always evaluated first, so the result is never worse than it.
pub fn local_search_ordering(
    s: &IntString,
    p: WindowParams,
    budget: u64,
    seed: u64,
) -> Result<OptimizationResult> {
    if budget == 0 {
        return Err(Error::InvalidParameter("budget must be positive".into()));
    }
    let sigma = s.sigma() as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let evaluated = std::cell::Cell::new(0u64);
    let eval = |perm: &[u32]| -> Result<usize> {
        evaluated.set(evaluated.get() + 1);
        let ord = AlphabetOrdering::from_permutation(perm.to_vec())?;
        count_minimizers(s, p, &ord)
    };

    let mut current: Vec<u32> = (0..sigma as u32).collect();
    let mut current_count = eval(&current)?;
    let mut best = (current_count, current.clone());

    if sigma >= 2 {
        'search: loop {
            // first-improvement descent
            let mut improved = true;
            while improved {
                improved = false;
                for i in 0..sigma - 1 {
                    if evaluated.get() >= budget {
                        break 'search;
                    }
                    current.swap(i, i + 1);
                    let count = eval(&current)?;
                    if count < current_count {
                        current_count = count;
                        improved = true;
                        if count < best.0 {
                            best = (count, current.clone());
                        }
                    } else {
                        current.swap(i, i + 1);
                    }
                }
            }
            if evaluated.get() >= budget {
                break;
            }
            current.shuffle(&mut rng);
            current_count = eval(&current)?;
            if current_count < best.0 {
                best = (current_count, current.clone());
            }
        }
    }

    Ok(OptimizationResult {
        best_ordering: AlphabetOrdering::from_permutation(best.1)?,
        best_count: best.0,
        orderings_evaluated: evaluated.get(),
        exhaustive: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minimizers_naive;
    use proptest::prelude::*;

    fn example() -> (IntString, crate::LetterAlphabet, WindowParams) {
        let (s, a) = IntString::from_letters("aacaaacgcta").unwrap();
        (s, a, WindowParams::new(3, 3).unwrap())
    }

    #[test]
    fn exact_finds_example_optimum() {
        let (s, alpha, p) = example();
        let r = exact_best_ordering(&s, p).unwrap();
        assert_eq!(r.best_count, 3);
        assert_eq!(r.orderings_evaluated, 24);
        assert!(r.exhaustive);
        // smallest optimal permutation by code sequence
        assert_eq!(r.best_ordering.to_letter_string(&alpha), "c<a<g<t");
    }

    #[test]
    fn unary_alphabet_has_one_ordering() {
        let s = IntString::new(vec![0; 6], 1).unwrap();
        let p = WindowParams::new(2, 2).unwrap();
        let r = exact_best_ordering(&s, p).unwrap();
        assert_eq!(r.orderings_evaluated, 1);
        assert_eq!(r.best_count, 4);
        let h = local_search_ordering(&s, p, 50, 3).unwrap();
        assert_eq!(h.best_ordering, AlphabetOrdering::identity(1));
        assert_eq!(h.best_count, 4);
        assert_eq!(h.orderings_evaluated, 1);
    }

    #[test]
    fn budget_is_enforced() {
        let s = IntString::from_codes((0..9).collect());
        let p = WindowParams::new(2, 1).unwrap();
        assert_eq!(
            exact_best_ordering(&s, p),
            Err(Error::BudgetExceeded { size: 9, max: 8 })
        );
        assert!(decide_minimizers(&s, p, 3).is_err());
        assert!(exact_best_ordering_with_budget(&s, p, 9).is_ok());
    }

    #[test]
    fn decide_example() {
        let (s, alpha, p) = example();
        match decide_minimizers(&s, p, 3).unwrap() {
            Decision::Yes { certificate, count } => {
                assert_eq!(count, 3);
                assert_eq!(certificate.to_letter_string(&alpha), "c<a<g<t");
            }
            other => panic!("expected YES, got {other:?}"),
        }
        assert_eq!(
            decide_minimizers(&s, p, 2).unwrap(),
            Decision::No { best_count: 3 }
        );
        assert!(decide_minimizers(&s, p, s.len()).unwrap().is_yes());
        assert!(decide_minimizers(&s, p, 0).is_err());
    }

    #[test]
    fn certificates() {
        let (s, alpha, p) = example();
        let good = AlphabetOrdering::parse_letters("c<a<g<t", &alpha).unwrap();
        let bad = AlphabetOrdering::parse_letters("a<c<g<t", &alpha).unwrap();
        assert!(verify_certificate(&s, p, &good, 3).unwrap());
        assert!(!verify_certificate(&s, p, &bad, 3).unwrap());
        assert!(verify_certificate(&s, p, &bad, 5).unwrap());
        assert!(verify_certificate(&s, p, &bad, s.len()).unwrap());
    }

    #[test]
    fn local_search_reaches_example_optimum_deterministically() {
        let (s, _, p) = example();
        let a = local_search_ordering(&s, p, 10_000, 1).unwrap();
        assert_eq!(a.best_count, 3);
        assert!(!a.exhaustive);
        assert_eq!(a.orderings_evaluated, 10_000);
        assert_eq!(a, local_search_ordering(&s, p, 10_000, 1).unwrap());
        assert!(local_search_ordering(&s, p, 0, 1).is_err());
    }

    fn brute_min_naive(s: &IntString, p: WindowParams) -> usize {
        all_orderings(s.sigma())
            .map(|o| minimizers_naive(s, p, &o).unwrap().len())
            .min()
            .unwrap()
    }

    #[test]
    fn exact_matches_naive_brute_force_on_random_ternary_strings() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xE1);
        for _ in 0..200 {
            use rand::Rng;
            let n = rng.gen_range(1..=40);
            let codes: Vec<u32> = (0..n).map(|_| rng.gen_range(0..3)).collect();
            let s = IntString::new(codes, 3).unwrap();
            let w = rng.gen_range(2..=6);
            let k = rng.gen_range(1..=4);
            let p = WindowParams::new(w, k).unwrap();
            let exact = exact_best_ordering(&s, p).unwrap();
            assert_eq!(exact.best_count, brute_min_naive(&s, p), "{s} w={w} k={k}");
            assert_eq!(
                count_minimizers(&s, p, &exact.best_ordering).unwrap(),
                exact.best_count
            );
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn decide_agrees_with_exact(
            codes in prop::collection::vec(0u32..4, 1..40),
            w in 2usize..6,
            k in 1usize..4,
        ) {
            let s = IntString::new(codes, 4).unwrap();
            let p = WindowParams::new(w, k).unwrap();
            let best = exact_best_ordering(&s, p).unwrap().best_count;
            for ell in 1..=s.len() {
                prop_assert_eq!(decide_minimizers(&s, p, ell).unwrap().is_yes(), best <= ell);
            }
        }

        #[test]
        fn certificate_matches_naive_count(
            codes in prop::collection::vec(0u32..4, 1..40),
            perm in Just(vec![0u32, 1, 2, 3]).prop_shuffle(),
            ell in 1usize..20,
        ) {
            let s = IntString::new(codes, 4).unwrap();
            let p = WindowParams::new(3, 2).unwrap();
            let ord = AlphabetOrdering::from_permutation(perm).unwrap();
            let naive = minimizers_naive(&s, p, &ord).unwrap().len();
            prop_assert_eq!(verify_certificate(&s, p, &ord, ell).unwrap(), naive <= ell);
        }

        #[test]
        fn heuristic_never_beats_exact_nor_loses_to_identity(
            codes in prop::collection::vec(0u32..4, 1..40),
            seed in any::<u64>(),
        ) {
            let s = IntString::new(codes, 4).unwrap();
            let p = WindowParams::new(3, 2).unwrap();
            let exact = exact_best_ordering(&s, p).unwrap().best_count;
            let heur = local_search_ordering(&s, p, 60, seed).unwrap();
            let identity = count_minimizers(&s, p, &AlphabetOrdering::identity(4)).unwrap();
            prop_assert!(heur.best_count >= exact);
            prop_assert!(heur.best_count <= identity);
            prop_assert_eq!(count_minimizers(&s, p, &heur.best_ordering).unwrap(), heur.best_count);
        }
    }
}
