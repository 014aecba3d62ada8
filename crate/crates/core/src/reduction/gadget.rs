//! The two-letter block `T_ab` encoding one arc `(a, b)`.
//!
//! Each repeated copy of the block holds few minimizers when `a < b` and
//! strictly more when `b < a`, which is what ties the number of minimizers
//! to the size of the induced feedback arc set.

use std::fmt;

use crate::error::{Error, Result};
use crate::ordering::AlphabetOrdering;
use crate::sampling::minimizers_fast;
use crate::string::{IntString, WindowParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GadgetCase {
    /// `w >= k + 2`: block `a b^(w-1)`.
    A,
    /// `w = 3, k >= 2`: block `(ab)^t bb`.
    B,
    /// `3 < w < k + 2`: block `(ab)^t bb`.
    C,
}

impl GadgetCase {
    /// Total case dispatch for `w >= 3`, `k >= 1`.
    pub fn classify(w: usize, k: usize) -> Result<Self> {
        if w < 3 || k < 1 {
            return Err(Error::InvalidParameter(format!(
                "gadget blocks need w >= 3 and k >= 1 (got w={w}, k={k})"
            )));
        }
        Ok(if w >= k + 2 {
            GadgetCase::A
        } else if w == 3 {
            GadgetCase::B
        } else {
            GadgetCase::C
        })
    }
}

impl fmt::Display for GadgetCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GadgetCase::A => "A",
            GadgetCase::B => "B",
            GadgetCase::C => "C",
        })
    }
}

/// A block pattern over the two placeholder letters `a` (false) and `b` (true).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GadgetBlock {
    pub case: GadgetCase,
    pattern: Vec<bool>,
}

impl GadgetBlock {
    pub fn len(&self) -> usize {
        self.pattern.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pattern.is_empty()
    }

    /// `true` marks the letter `b`.
    pub fn pattern(&self) -> &[bool] {
        &self.pattern
    }

    /// Writes the block with `a` and `b` replaced by the given symbols.
    pub fn instantiate(&self, a: u32, b: u32) -> impl Iterator<Item = u32> + '_ {
        self.pattern
            .iter()
            .map(move |&is_b| if is_b { b } else { a })
    }
}

impl fmt::Display for GadgetBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &is_b in &self.pattern {
            f.write_str(if is_b { "b" } else { "a" })?;
        }
        Ok(())
    }
}

/// `t = ceil((w + k) / 2)` for the alternating blocks.
fn alternations(w: usize, k: usize) -> usize {
    (w + k).div_ceil(2)
}

pub fn gadget_block(w: usize, k: usize) -> Result<GadgetBlock> {
    let case = GadgetCase::classify(w, k)?;
    let pattern = match case {
        GadgetCase::A => std::iter::once(false)
            .chain(std::iter::repeat_n(true, w - 1))
            .collect(),
        GadgetCase::B | GadgetCase::C => {
            let t = alternations(w, k);
            let mut p = Vec::with_capacity(2 * t + 2);
            for _ in 0..t {
                p.extend([false, true]);
            }
            p.extend([true, true]);
            p
        }
    };
    Ok(GadgetBlock { case, pattern })
}

/// Minimizers starting inside one middle block, under `a < b` and `b < a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GadgetCounts {
    pub m_ab: usize,
    pub m_ba: usize,
    pub case: GadgetCase,
}

impl GadgetCounts {
    /// `m_ba - m_ab`; positive for every valid parameter pair.
    pub fn gap(&self) -> usize {
        self.m_ba - self.m_ab
    }
}

/// Closed-form block counts for each of the three cases.
///
/// Case A additionally needs `w - k >= 2` so that `m_ba > m_ab`; that holds
/// whenever `w >= k + 2`.
pub fn closed_form_counts(w: usize, k: usize) -> Result<GadgetCounts> {
    let case = GadgetCase::classify(w, k)?;
    let half = k / 2;
    let (m_ab, m_ba) = match case {
        GadgetCase::A => (1, w - k),
        GadgetCase::B => (half + 3, half + 4),
        GadgetCase::C if k.is_multiple_of(2) => {
            let p = (w + k) % 2;
            (half + 2 + p, half + 3 + p)
        }
        GadgetCase::C => (half + 3, half + 4),
    };
    Ok(GadgetCounts { m_ab, m_ba, case })
}

/// Counts minimizers starting in the third of six consecutive blocks, under
/// both relative orders of the two letters.
pub fn measured_block_counts(w: usize, k: usize) -> Result<GadgetCounts> {
    let block = gadget_block(w, k)?;
    let copies = 6;
    let symbols: Vec<u32> = (0..copies).flat_map(|_| block.instantiate(0, 1)).collect();
    let s = IntString::new(symbols, 2)?;
    let p = WindowParams::new(w, k)?;
    let len = block.len();
    let range = 2 * len + 1..=3 * len;
    let count_under = |ord: &AlphabetOrdering| -> Result<usize> {
        let m = minimizers_fast(&s, p, ord)?;
        Ok(m.positions().iter().filter(|p| range.contains(p)).count())
    };
    let a_first = AlphabetOrdering::identity(2);
    let b_first = AlphabetOrdering::from_permutation(vec![1, 0])?;
    Ok(GadgetCounts {
        m_ab: count_under(&a_first)?,
        m_ba: count_under(&b_first)?,
        case: block.case,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_patterns() {
        assert_eq!(gadget_block(7, 4).unwrap().to_string(), "abbbbbb");
        assert_eq!(gadget_block(3, 3).unwrap().to_string(), "abababbb");
        assert_eq!(gadget_block(4, 4).unwrap().to_string(), "ababababbb");
        assert!(gadget_block(2, 1).is_err());
    }

    #[test]
    fn case_dispatch_boundaries() {
        assert_eq!(GadgetCase::classify(3, 1).unwrap(), GadgetCase::A);
        assert_eq!(GadgetCase::classify(3, 2).unwrap(), GadgetCase::B);
        assert_eq!(GadgetCase::classify(4, 2).unwrap(), GadgetCase::A);
        assert_eq!(GadgetCase::classify(4, 3).unwrap(), GadgetCase::C);
        assert_eq!(GadgetCase::classify(10, 8).unwrap(), GadgetCase::A);
        assert_eq!(GadgetCase::classify(10, 9).unwrap(), GadgetCase::C);
        assert!(GadgetCase::classify(2, 5).is_err());
        assert!(GadgetCase::classify(3, 0).is_err());
        for w in 3..=20 {
            for k in 1..=20 {
                let case = GadgetCase::classify(w, k).unwrap();
                match case {
                    GadgetCase::A => assert!(w >= k + 2),
                    GadgetCase::B => assert!(w == 3 && k >= 2),
                    GadgetCase::C => assert!(w > 3 && w < k + 2),
                }
            }
        }
    }

    #[test]
    fn block_length_covers_a_quarter_window() {
        for w in 3..=30 {
            for k in 1..=30 {
                let b = gadget_block(w, k).unwrap();
                assert!(4 * b.len() >= w + k - 1);
                if b.case != GadgetCase::A {
                    assert_eq!(b.len(), w + k + (w + k) % 2 + 2);
                }
            }
        }
    }

    #[test]
    fn closed_forms_for_drawn_examples() {
        let c = closed_form_counts(7, 4).unwrap();
        assert_eq!((c.m_ab, c.m_ba), (1, 3));
        let c = closed_form_counts(3, 3).unwrap();
        assert_eq!((c.m_ab, c.m_ba), (4, 5));
        let c = closed_form_counts(4, 4).unwrap();
        assert_eq!((c.m_ab, c.m_ba), (4, 5));
    }

    #[test]
    fn gaps_by_case() {
        for w in 3..=10 {
            for k in 1..=10 {
                let c = closed_form_counts(w, k).unwrap();
                match c.case {
                    GadgetCase::A => assert_eq!(c.gap(), w - k - 1),
                    _ => assert_eq!(c.gap(), 1),
                }
                assert!(c.m_ba > c.m_ab);
            }
        }
    }

    #[test]
    fn measured_matches_drawn_examples() {
        let c = measured_block_counts(7, 4).unwrap();
        assert_eq!((c.m_ab, c.m_ba), (1, 3));
        let c = measured_block_counts(3, 3).unwrap();
        assert_eq!((c.m_ab, c.m_ba), (4, 5));
    }
}
