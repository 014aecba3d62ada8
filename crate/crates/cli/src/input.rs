use anyhow::{bail, Context, Result};
use mmin::{AlphabetOrdering, IntString, LetterAlphabet};

/// A command-line string together with how its symbols should be printed.
pub struct Input {
    pub string: IntString,
    pub letters: Option<LetterAlphabet>,
}

impl Input {
    /// Letter strings are coded over the sorted union of the letters in the
    /// string and in the optional ordering; `--codes` strings use
    /// `[0, max(sigma, max code + 1))`.
    pub fn parse(
        string: Option<&str>,
        codes: Option<&str>,
        sigma: Option<u32>,
        order: Option<&str>,
    ) -> Result<Self> {
        match (string, codes) {
            (Some(text), None) => {
                let order_letters = order
                    .into_iter()
                    .flat_map(|o| o.split('<'))
                    .flat_map(|t| t.trim().chars());
                let alphabet = LetterAlphabet::from_letters(text.chars().chain(order_letters))
                    .context("--string takes letters only")?;
                Ok(Self {
                    string: alphabet.encode(text)?,
                    letters: Some(alphabet),
                })
            }
            (None, Some(codes)) => {
                let symbols = codes
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.parse::<u32>()
                            .with_context(|| format!("bad symbol code '{t}'"))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let mut s = IntString::from_codes(symbols);
                if let Some(sigma) = sigma {
                    s = s.with_sigma(sigma)?;
                }
                Ok(Self {
                    string: s,
                    letters: None,
                })
            }
            _ => bail!("give exactly one of --string or --codes"),
        }
    }

    pub fn ordering(&self, text: Option<&str>) -> Result<AlphabetOrdering> {
        let Some(text) = text else {
            return Ok(AlphabetOrdering::identity(self.string.sigma()));
        };
        let ord = match &self.letters {
            Some(alpha) => AlphabetOrdering::parse_letters(text, alpha)?,
            None => AlphabetOrdering::parse_codes(text)?,
        };
        if ord.sigma() != self.string.sigma() {
            bail!(
                "ordering covers {} symbols but the string alphabet has {}",
                ord.sigma(),
                self.string.sigma()
            );
        }
        Ok(ord)
    }

    pub fn show(&self, ord: &AlphabetOrdering) -> String {
        match &self.letters {
            Some(alpha) => ord.to_letter_string(alpha),
            None => ord.to_code_string(),
        }
    }
}
