mod common;

use std::collections::HashMap;

use mmin::{
    minimizers_fast, minimizers_naive, rank_transform, window_selections, AlphabetOrdering,
    IntString, WindowParams,
};
use proptest::prelude::*;

fn instance() -> impl Strategy<Value = (IntString, AlphabetOrdering, WindowParams)> {
    (1u32..=4)
        .prop_flat_map(|sigma| {
            (
                prop::collection::vec(0..sigma, 1..=64),
                Just((0..sigma).collect::<Vec<u32>>()).prop_shuffle(),
                Just(sigma),
            )
        })
        .prop_flat_map(|(codes, perm, sigma)| {
            let n = codes.len();
            (
                Just(codes),
                Just(perm),
                Just(sigma),
                2usize..=n.max(2) + 1,
                1usize..=n.max(1),
            )
        })
        .prop_map(|(codes, perm, sigma, w, k)| {
            (
                IntString::new(codes, sigma).unwrap(),
                AlphabetOrdering::from_permutation(perm).unwrap(),
                WindowParams::new(w, k).unwrap(),
            )
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn fast_engine_matches_oracle((s, ord, p) in instance()) {
        let naive = minimizers_naive(&s, p, &ord).unwrap();
        let fast = minimizers_fast(&s, p, &ord).unwrap();
        prop_assert_eq!(&naive, &fast);
        // the oracle does not go through the crate at all
        let ranks = ord.ranks();
        let independent = common::minimizers_by_kmer_cmp(s.symbols(), p.w(), p.k(), |a, b| {
            a.iter().map(|&c| ranks[c as usize]).cmp(b.iter().map(|&c| ranks[c as usize]))
        });
        prop_assert_eq!(naive.positions(), &independent[..]);
        prop_assert_eq!(minimizers_fast(&s, p, &ord).unwrap(), fast);
    }

    #[test]
    fn sampling_properties((s, ord, p) in instance()) {
        let set = minimizers_fast(&s, p, &ord).unwrap();
        let sel = window_selections(&s, p, &ord).unwrap();
        let n = s.len();
        prop_assert_eq!(sel.len(), p.window_count(n));
        for &pos in set.positions() {
            prop_assert!(pos >= 1 && pos + p.k() - 1 <= n);
        }
        // coverage
        for i in 1..=p.window_count(n) {
            prop_assert!((i..i + p.w()).any(|q| set.contains(q)));
        }
        // left-to-right
        prop_assert!(sel.windows(2).all(|x| x[0] <= x[1]));
        // local consistency
        let mut offsets: HashMap<&[u32], usize> = HashMap::new();
        for (i, &j) in sel.iter().enumerate() {
            let content = &s.symbols()[i..i + p.span()];
            let off = *offsets.entry(content).or_insert(j - i);
            prop_assert_eq!(off, j - i);
        }
    }

    #[test]
    fn rank_transform_preserves_minimizers(
        codes in prop::collection::vec(0u32..3, 4..48),
        k in 1usize..4,
        w in 2usize..6,
        seed in any::<u64>(),
    ) {
        prop_assume!(codes.len() >= w + k - 1);
        let s = IntString::new(codes, 3).unwrap();
        let rt = rank_transform(&s, k, &AlphabetOrdering::identity(3)).unwrap();
        use rand::{seq::SliceRandom, SeedableRng};
        let mut perm: Vec<u32> = (0..rt.sigma_prime).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let prime_ord = AlphabetOrdering::from_permutation(perm).unwrap();

        let via_transform = minimizers_fast(&rt.transformed, WindowParams::new(w, 1).unwrap(), &prime_ord).unwrap();
        // the ordering on k-mers induced through the table, evaluated directly on s
        let table: HashMap<Vec<u32>, u32> = rt
            .kmer_table
            .iter()
            .enumerate()
            .map(|(code, kmer)| (kmer.clone(), prime_ord.rank(code as u32)))
            .collect();
        let direct = common::minimizers_by_kmer_cmp(s.symbols(), w, k, common::kmer_rank_cmp(&table));
        prop_assert_eq!(via_transform.positions(), &direct[..]);
    }
}

#[test]
fn oracle_sweep_over_every_window_shape() {
    use rand::{seq::SliceRandom, Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..100 {
        let sigma = rng.gen_range(1..=4u32);
        let n = rng.gen_range(1..=40);
        let s = IntString::new((0..n).map(|_| rng.gen_range(0..sigma)).collect(), sigma).unwrap();
        let mut perm: Vec<u32> = (0..sigma).collect();
        perm.shuffle(&mut rng);
        let ord = AlphabetOrdering::from_permutation(perm).unwrap();
        for w in 2..=n {
            for k in 1..=n + 1 - w {
                let p = WindowParams::new(w, k).unwrap();
                assert_eq!(
                    minimizers_fast(&s, p, &ord).unwrap(),
                    minimizers_naive(&s, p, &ord).unwrap(),
                    "{s} w={w} k={k} ord={ord}"
                );
            }
        }
    }
}
