use std::fmt;

use crate::error::{Error, Result};

/// A string over the integer alphabet `[0, sigma)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntString {
    symbols: Vec<u32>,
    sigma: u32,
}

impl IntString {
    pub fn new(symbols: Vec<u32>, sigma: u32) -> Result<Self> {
        if let Some((index, &code)) = symbols.iter().enumerate().find(|(_, &c)| c >= sigma) {
            return Err(Error::SymbolOutOfRange { index, code, sigma });
        }
        Ok(Self { symbols, sigma })
    }

    /// Builds a string whose alphabet is `[0, max + 1)`.
    pub fn from_codes(symbols: Vec<u32>) -> Self {
        let sigma = symbols.iter().max().map_or(0, |&m| m + 1);
        Self { symbols, sigma }
    }

    /// Encodes a letter string over the compact alphabet of its distinct letters.
    pub fn from_letters(text: &str) -> Result<(Self, LetterAlphabet)> {
        let alphabet = LetterAlphabet::from_letters(text.chars())?;
        let s = alphabet.encode(text)?;
        Ok((s, alphabet))
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Re-labels the alphabet size; every code must still fit.
    pub fn with_sigma(self, sigma: u32) -> Result<Self> {
        Self::new(self.symbols, sigma)
    }

    pub fn into_symbols(self) -> Vec<u32> {
        self.symbols
    }
}

impl fmt::Display for IntString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Maps lowercase letters onto compact codes in sorted letter order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterAlphabet {
    letters: Vec<char>,
}

impl LetterAlphabet {
    /// Collects the distinct letters (case-folded) of `letters`, sorted.
    pub fn from_letters<I: IntoIterator<Item = char>>(letters: I) -> Result<Self> {
        let mut out = Vec::new();
        for c in letters {
            if !c.is_ascii_alphabetic() {
                return Err(Error::InvalidParameter(format!("'{c}' is not a letter")));
            }
            out.push(c.to_ascii_lowercase());
        }
        out.sort_unstable();
        out.dedup();
        Ok(Self { letters: out })
    }

    pub fn sigma(&self) -> u32 {
        self.letters.len() as u32
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn code(&self, c: char) -> Option<u32> {
        self.letters
            .binary_search(&c.to_ascii_lowercase())
            .ok()
            .map(|i| i as u32)
    }

    pub fn letter(&self, code: u32) -> Option<char> {
        self.letters.get(code as usize).copied()
    }

    pub fn encode(&self, text: &str) -> Result<IntString> {
        let symbols = text
            .chars()
            .map(|c| {
                self.code(c)
                    .ok_or_else(|| Error::InvalidParameter(format!("letter '{c}' not in alphabet")))
            })
            .collect::<Result<Vec<_>>>()?;
        IntString::new(symbols, self.sigma())
    }

    pub fn decode(&self, s: &IntString) -> String {
        s.symbols()
            .iter()
            .map(|&c| self.letter(c).unwrap_or('?'))
            .collect()
    }
}

/// Window size `w` (in k-mers) and k-mer length `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WindowParams {
    w: usize,
    k: usize,
}

impl WindowParams {
    pub fn new(w: usize, k: usize) -> Result<Self> {
        if w < 2 || k < 1 {
            return Err(Error::InvalidWindow { w, k });
        }
        Ok(Self { w, k })
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Length of one window, `w + k - 1`.
    pub fn span(&self) -> usize {
        self.w + self.k - 1
    }

    /// Number of windows in a string of length `n`.
    pub fn window_count(&self, n: usize) -> usize {
        (n + 1).saturating_sub(self.span())
    }
}

/// Sorted 1-based positions sampled from a string of length `source_length`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MinimizerSet {
    positions: Vec<usize>,
    source_length: usize,
}

impl MinimizerSet {
    /// `positions` must already be strictly increasing and 1-based.
    pub(crate) fn from_sorted(positions: Vec<usize>, source_length: usize) -> Self {
        debug_assert!(positions.windows(2).all(|p| p[0] < p[1]));
        debug_assert!(positions.first().is_none_or(|&p| p >= 1));
        Self {
            positions,
            source_length,
        }
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn source_length(&self) -> usize {
        self.source_length
    }

    pub fn contains(&self, position: usize) -> bool {
        self.positions.binary_search(&position).is_ok()
    }
}

impl fmt::Display for MinimizerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.positions.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range_codes() {
        assert_eq!(
            IntString::new(vec![0, 3, 1], 3),
            Err(Error::SymbolOutOfRange {
                index: 1,
                code: 3,
                sigma: 3
            })
        );
        assert!(IntString::new(vec![], 0).unwrap().is_empty());
    }

    #[test]
    fn letters_use_compact_sorted_codes() {
        let (s, alpha) = IntString::from_letters("aacaaacgcta").unwrap();
        assert_eq!(alpha.letters(), &['a', 'c', 'g', 't']);
        assert_eq!(s.sigma(), 4);
        assert_eq!(&s.symbols()[..4], &[0, 0, 1, 0]);
        assert_eq!(alpha.decode(&s), "aacaaacgcta");
        assert!(IntString::from_letters("ac-g").is_err());
    }

    #[test]
    fn window_params_validate() {
        assert!(WindowParams::new(1, 3).is_err());
        assert!(WindowParams::new(2, 0).is_err());
        let p = WindowParams::new(3, 3).unwrap();
        assert_eq!(p.span(), 5);
        assert_eq!(p.window_count(11), 7);
        assert_eq!(p.window_count(4), 0);
        assert_eq!(p.window_count(5), 1);
    }
}
