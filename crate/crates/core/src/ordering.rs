//! Total orders on an integer alphabet and the k-mer rank transform.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::kmer::kmer_keys;
use crate::string::{IntString, LetterAlphabet};

/// A permutation of `[0, sigma)` read from smallest to largest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlphabetOrdering {
    order: Vec<u32>,
    rank: Vec<u32>,
}

impl AlphabetOrdering {
    pub fn identity(sigma: u32) -> Self {
        let order: Vec<u32> = (0..sigma).collect();
        Self {
            rank: order.clone(),
            order,
        }
    }

    /// `order` lists the symbols from smallest to largest.
    pub fn from_permutation(order: Vec<u32>) -> Result<Self> {
        let sigma = order.len();
        let mut rank = vec![u32::MAX; sigma];
        for (r, &sym) in order.iter().enumerate() {
            let slot = rank.get_mut(sym as usize).ok_or_else(|| {
                Error::InvalidOrdering(format!("symbol {sym} is outside [0, {sigma})"))
            })?;
            if *slot != u32::MAX {
                return Err(Error::InvalidOrdering(format!(
                    "symbol {sym} appears twice"
                )));
            }
            *slot = r as u32;
        }
        Ok(Self { order, rank })
    }

    /// `rank[c]` is the position of symbol `c` in the order.
    pub fn from_ranks(rank: Vec<u32>) -> Result<Self> {
        let sigma = rank.len();
        let mut order = vec![u32::MAX; sigma];
        for (sym, &r) in rank.iter().enumerate() {
            let slot = order.get_mut(r as usize).ok_or_else(|| {
                Error::InvalidOrdering(format!("rank {r} is outside [0, {sigma})"))
            })?;
            if *slot != u32::MAX {
                return Err(Error::InvalidOrdering(format!("rank {r} is used twice")));
            }
            *slot = sym as u32;
        }
        Ok(Self { order, rank })
    }

    pub fn sigma(&self) -> u32 {
        self.order.len() as u32
    }

    #[inline]
    pub fn rank(&self, symbol: u32) -> u32 {
        self.rank[symbol as usize]
    }

    pub fn ranks(&self) -> &[u32] {
        &self.rank
    }

    /// Symbols from smallest to largest.
    pub fn permutation(&self) -> &[u32] {
        &self.order
    }

    pub fn less(&self, a: u32, b: u32) -> bool {
        self.rank(a) < self.rank(b)
    }

    /// Parses decimal codes joined by `<`, e.g. `"2<0<1"`.
    pub fn parse_codes(text: &str) -> Result<Self> {
        Self::parse_codes_offset(text, 0)
    }

    /// Like [`parse_codes`](Self::parse_codes) for alphabets numbered from `offset`.
    pub fn parse_codes_offset(text: &str, offset: u32) -> Result<Self> {
        let order = split_tokens(text)?
            .into_iter()
            .map(|tok| {
                tok.parse::<u32>()
                    .ok()
                    .and_then(|c| c.checked_sub(offset))
                    .ok_or_else(|| Error::InvalidOrdering(format!("bad symbol code '{tok}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_permutation(order)
    }

    /// Parses letters joined by `<`, e.g. `"c<a<g<t"`; must cover `alphabet` exactly.
    pub fn parse_letters(text: &str, alphabet: &LetterAlphabet) -> Result<Self> {
        let order = split_tokens(text)?
            .into_iter()
            .map(|tok| {
                let mut chars = tok.chars();
                match (chars.next(), chars.next()) {
                    (Some(c), None) => alphabet.code(c).ok_or_else(|| {
                        Error::InvalidOrdering(format!("letter '{c}' not in alphabet"))
                    }),
                    _ => Err(Error::InvalidOrdering(format!(
                        "'{tok}' is not a single letter"
                    ))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if order.len() != alphabet.sigma() as usize {
            return Err(Error::InvalidOrdering(format!(
                "ordering lists {} letters but the alphabet has {}",
                order.len(),
                alphabet.sigma()
            )));
        }
        Self::from_permutation(order)
    }

    pub fn to_code_string(&self) -> String {
        self.to_code_string_offset(0)
    }

    pub fn to_code_string_offset(&self, offset: u32) -> String {
        join(self.order.iter().map(|c| (c + offset).to_string()))
    }

    pub fn to_letter_string(&self, alphabet: &LetterAlphabet) -> String {
        join(self.order.iter().map(|&c| {
            alphabet
                .letter(c)
                .map_or_else(|| c.to_string(), String::from)
        }))
    }
}

fn split_tokens(text: &str) -> Result<Vec<&str>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::InvalidOrdering("empty ordering".into()));
    }
    Ok(text.split('<').map(str::trim).collect())
}

fn join<I: Iterator<Item = String>>(items: I) -> String {
    items.collect::<Vec<_>>().join("<")
}

impl fmt::Display for AlphabetOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_code_string())
    }
}

/// Lexicographic by the smallest-to-largest symbol sequence.
impl PartialOrd for AlphabetOrdering {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlphabetOrdering {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.cmp(&other.order)
    }
}

/// A string re-coded as the ranks of its k-mers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTransformResult {
    /// Code `r` stands for the k-mer of 1-based rank `r + 1`.
    pub transformed: IntString,
    /// `kmer_table[r]` is the k-mer with code `r`.
    pub kmer_table: Vec<Vec<u32>>,
    pub sigma_prime: u32,
    pub k: usize,
}

impl RankTransformResult {
    /// The transformed string as 1-based ranks.
    pub fn ranks(&self) -> Vec<u32> {
        self.transformed.symbols().iter().map(|&c| c + 1).collect()
    }

    /// Parses an ordering written over 1-based ranks, e.g. `"1<3<5<6<2<4<7<8"`.
    pub fn parse_rank_ordering(&self, text: &str) -> Result<AlphabetOrdering> {
        let ord = AlphabetOrdering::parse_codes_offset(text, 1)?;
        if ord.sigma() != self.sigma_prime {
            return Err(Error::AlphabetMismatch {
                string: self.sigma_prime,
                ordering: ord.sigma(),
            });
        }
        Ok(ord)
    }

    pub fn format_rank_ordering(ord: &AlphabetOrdering) -> String {
        ord.to_code_string_offset(1)
    }

    /// The k-mer with transformed code `code`.
    pub fn kmer(&self, code: u32) -> &[u32] {
        &self.kmer_table[code as usize]
    }
}

/// Replaces each k-mer of `s` by its lexicographic rank (under `base_ord`)
/// among the distinct k-mers of `s`.
///
/// The `(w, 1)` minimizers of the result under any ordering of the ranks are
/// the `(w, k)` minimizers of `s` under the induced ordering of its k-mers.
pub fn rank_transform(
    s: &IntString,
    k: usize,
    base_ord: &AlphabetOrdering,
) -> Result<RankTransformResult> {
    let mut joint = rank_transform_many(std::slice::from_ref(s), k, base_ord)?;
    let transformed = joint.transformed.pop().expect("one input string");
    Ok(RankTransformResult {
        transformed,
        kmer_table: joint.kmer_table,
        sigma_prime: joint.sigma_prime,
        k,
    })
}

/// Rank transform of several strings against one shared k-mer table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointRankTransform {
    pub transformed: Vec<IntString>,
    pub kmer_table: Vec<Vec<u32>>,
    pub sigma_prime: u32,
}

/// Every input must have length at least `k`.
pub fn rank_transform_many(
    strings: &[IntString],
    k: usize,
    base_ord: &AlphabetOrdering,
) -> Result<JointRankTransform> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    for s in strings {
        if s.len() < k {
            return Err(Error::StringTooShort { n: s.len(), k });
        }
        if s.sigma() != base_ord.sigma() {
            return Err(Error::AlphabetMismatch {
                string: s.sigma(),
                ordering: base_ord.sigma(),
            });
        }
    }

    // keys over the concatenation agree across inputs; only in-piece k-mers are kept
    let mut ranks = Vec::new();
    let mut starts = Vec::with_capacity(strings.len());
    for s in strings {
        starts.push(ranks.len());
        ranks.extend(s.symbols().iter().map(|&c| base_ord.rank(c)));
    }
    let keys = kmer_keys(&ranks, base_ord.sigma(), k);
    let symbols: Vec<u32> = strings
        .iter()
        .flat_map(|s| s.symbols().iter().copied())
        .collect();

    let mut distinct: Vec<(u64, usize)> = Vec::new();
    for (s, &start) in strings.iter().zip(&starts) {
        distinct.extend((start..start + s.len() - k + 1).map(|i| (keys[i], i)));
    }
    distinct.sort_unstable();
    distinct.dedup_by_key(|e| e.0);
    let kmer_table: Vec<Vec<u32>> = distinct
        .iter()
        .map(|&(_, i)| symbols[i..i + k].to_vec())
        .collect();
    let sigma_prime = distinct.len() as u32;
    let code_of = |key: u64| {
        distinct
            .binary_search_by_key(&key, |e| e.0)
            .expect("key present") as u32
    };

    let transformed = strings
        .iter()
        .zip(&starts)
        .map(|(s, &start)| {
            let codes = (start..start + s.len() - k + 1)
                .map(|i| code_of(keys[i]))
                .collect();
            IntString::new(codes, sigma_prime)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(JointRankTransform {
        transformed,
        kmer_table,
        sigma_prime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{minimizers_fast, WindowParams};
    use proptest::prelude::*;

    #[test]
    fn permutation_and_ranks_agree() {
        let o = AlphabetOrdering::from_permutation(vec![2, 0, 1]).unwrap();
        assert_eq!(o.ranks(), &[1, 2, 0]);
        assert_eq!(AlphabetOrdering::from_ranks(vec![1, 2, 0]).unwrap(), o);
        assert!(o.less(2, 0));
        assert_eq!(o.to_code_string(), "2<0<1");
        assert_eq!(AlphabetOrdering::parse_codes("2<0<1").unwrap(), o);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(AlphabetOrdering::from_permutation(vec![0, 0]).is_err());
        assert!(AlphabetOrdering::from_permutation(vec![0, 2]).is_err());
        assert!(AlphabetOrdering::from_ranks(vec![1, 1]).is_err());
        assert!(AlphabetOrdering::parse_codes("").is_err());
        assert!(AlphabetOrdering::parse_codes("0<x").is_err());
        let (_, alpha) = IntString::from_letters("acgt").unwrap();
        assert!(AlphabetOrdering::parse_letters("a<c<g", &alpha).is_err());
        assert!(AlphabetOrdering::parse_letters("a<c<g<u", &alpha).is_err());
        assert!(AlphabetOrdering::parse_letters("a<c<g<g", &alpha).is_err());
    }

    #[test]
    fn letters_round_trip() {
        let (_, alpha) = IntString::from_letters("acgt").unwrap();
        let o = AlphabetOrdering::parse_letters("c<a<g<t", &alpha).unwrap();
        assert_eq!(o.permutation(), &[1, 0, 2, 3]);
        assert_eq!(o.to_letter_string(&alpha), "c<a<g<t");
    }

    #[test]
    fn worked_rank_transform() {
        let (s, alpha) = IntString::from_letters("aacaaacgcta").unwrap();
        let base = AlphabetOrdering::parse_letters("a<c<g<t", &alpha).unwrap();
        let rt = rank_transform(&s, 3, &base).unwrap();
        assert_eq!(rt.ranks(), vec![2, 3, 5, 1, 2, 4, 6, 8, 7]);
        assert_eq!(rt.sigma_prime, 8);
        assert_eq!(
            alpha.decode(&IntString::new(rt.kmer(0).to_vec(), 4).unwrap()),
            "aaa"
        );

        let ord = rt.parse_rank_ordering("1<3<5<6<2<4<7<8").unwrap();
        let m = minimizers_fast(&rt.transformed, WindowParams::new(3, 1).unwrap(), &ord).unwrap();
        assert_eq!(m.positions(), &[2, 4, 7]);
    }

    #[test]
    fn unary_k_recodes_by_letter_rank() {
        let (s, alpha) = IntString::from_letters("cab").unwrap();
        let rt = rank_transform(&s, 1, &AlphabetOrdering::identity(alpha.sigma())).unwrap();
        assert_eq!(rt.ranks(), vec![3, 1, 2]);
    }

    #[test]
    fn too_short_is_an_error() {
        let s = IntString::new(vec![0, 1], 2).unwrap();
        assert_eq!(
            rank_transform(&s, 3, &AlphabetOrdering::identity(2)),
            Err(Error::StringTooShort { n: 2, k: 3 })
        );
    }

    proptest! {
        #[test]
        fn identity_k1_transform_is_invertible(codes in prop::collection::vec(0u32..5, 1..50)) {
            let s = IntString::new(codes, 5).unwrap();
            let rt = rank_transform(&s, 1, &AlphabetOrdering::identity(5)).unwrap();
            let back: Vec<u32> = rt.transformed.symbols().iter().map(|&c| rt.kmer(c)[0]).collect();
            prop_assert_eq!(back, s.symbols().to_vec());
        }

        #[test]
        fn transform_shape(codes in prop::collection::vec(0u32..3, 1..60), k in 1usize..6) {
            prop_assume!(codes.len() >= k);
            let s = IntString::new(codes, 3).unwrap();
            let rt = rank_transform(&s, k, &AlphabetOrdering::identity(3)).unwrap();
            prop_assert_eq!(rt.transformed.len(), s.len() - k + 1);
            prop_assert!(rt.sigma_prime as usize <= s.len() - k + 1);
            prop_assert!(rt.kmer_table.windows(2).all(|p| p[0] < p[1]));
        }
    }
}
