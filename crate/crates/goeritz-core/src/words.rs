//! Free words over the four generators α, β, γ, δ.
//!
//! α and γ are involutions, so the alphabet has six letters rather than
//! eight: there is no separate inverse symbol for either of them. Free
//! reduction cancels adjacent inverse pairs, which for α and γ means a
//! doubled letter.
//!
//! Text syntax: `a`/`A` = α, `b` = β, `B` = β⁻¹, `g`/`G` = γ, `d` = δ,
//! `D` = δ⁻¹. Whitespace between letters is ignored.

use std::fmt;
use std::str::FromStr;

use rand::distributions::{Distribution, Uniform};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// A generator or generator inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Alpha,
    Beta,
    BetaInv,
    Gamma,
    Delta,
    DeltaInv,
}

impl Letter {
    pub const ALL: [Letter; 6] = [
        Letter::Alpha,
        Letter::Beta,
        Letter::BetaInv,
        Letter::Gamma,
        Letter::Delta,
        Letter::DeltaInv,
    ];

    /// The inverse letter. α and γ are their own inverses.
    pub fn inverse(self) -> Letter {
        match self {
            Letter::Alpha => Letter::Alpha,
            Letter::Beta => Letter::BetaInv,
            Letter::BetaInv => Letter::Beta,
            Letter::Gamma => Letter::Gamma,
            Letter::Delta => Letter::DeltaInv,
            Letter::DeltaInv => Letter::Delta,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::Alpha => 'a',
            Letter::Beta => 'b',
            Letter::BetaInv => 'B',
            Letter::Gamma => 'g',
            Letter::Delta => 'd',
            Letter::DeltaInv => 'D',
        }
    }

    fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' | 'A' => Some(Letter::Alpha),
            'b' => Some(Letter::Beta),
            'B' => Some(Letter::BetaInv),
            'g' | 'G' => Some(Letter::Gamma),
            'd' => Some(Letter::Delta),
            'D' => Some(Letter::DeltaInv),
            _ => None,
        }
    }
}

/// A finite sequence of letters. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

/// Rejected input text, with the offending byte offset.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid letter {found:?} at byte {offset} (expected one of a A b B g G d D)")]
pub struct ParseWordError {
    pub found: char,
    pub offset: usize,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    pub fn empty() -> Word {
        Word::default()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The formal inverse: letters reversed and inverted.
    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// The unique freely reduced form: no adjacent pair `(l, l⁻¹)` remains.
    /// Idempotent and never longer than the input.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }
}

impl FromStr for Word {
    type Err = ParseWordError;

    /// Parses the letter syntax. Does not freely reduce; `A` and `G`
    /// normalize to α and γ (they are self-inverse).
    fn from_str(text: &str) -> Result<Word, ParseWordError> {
        let mut letters = Vec::new();
        for (offset, c) in text.char_indices() {
            if c.is_whitespace() {
                continue;
            }
            match Letter::from_char(c) {
                Some(l) => letters.push(l),
                None => return Err(ParseWordError { found: c, offset }),
            }
        }
        Ok(Word { letters })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Word {
        Word {
            letters: iter.into_iter().collect(),
        }
    }
}

/// Freely reduced word of `length` letters drawn uniformly, from a fixed
/// seed. Deterministic across platforms; reduction may shorten the result.
pub fn random_word(length: usize, seed: u64) -> Word {
    assert!(length >= 1, "random_word requires length >= 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let uniform = Uniform::new(0, Letter::ALL.len());
    let letters = (0..length)
        .map(|_| Letter::ALL[uniform.sample(&mut rng)])
        .collect();
    Word { letters }.free_reduce()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> Word {
        text.parse().unwrap()
    }

    #[test]
    fn parse_empty_is_identity() {
        assert_eq!(w(""), Word::empty());
        assert!(w("  \t ").is_empty());
    }

    #[test]
    fn parse_maps_letters_directly() {
        assert_eq!(
            w("dbD").letters(),
            &[Letter::Delta, Letter::Beta, Letter::DeltaInv]
        );
    }

    #[test]
    fn parse_normalizes_involution_case() {
        // 'A' is the same letter as 'a'; parsing does not reduce.
        assert_eq!(w("aA").letters(), &[Letter::Alpha, Letter::Alpha]);
        assert_eq!(w("gG"), w("gg"));
    }

    #[test]
    fn parse_rejects_foreign_characters() {
        let err = "abxba".parse::<Word>().unwrap_err();
        assert_eq!(err.found, 'x');
        assert_eq!(err.offset, 2);
        assert!("b-b".parse::<Word>().is_err());
    }

    #[test]
    fn parse_skips_whitespace() {
        assert_eq!(w("d b\tD\n"), w("dbD"));
    }

    #[test]
    fn reduce_cancels_inverse_pairs() {
        assert!(w("bB").free_reduce().is_empty());
        assert!(w("dbBD").free_reduce().is_empty());
    }

    #[test]
    fn reduce_cancels_doubled_involutions() {
        assert!(w("aa").free_reduce().is_empty());
        assert_eq!(w("dggD").free_reduce(), Word::empty());
    }

    #[test]
    fn reduce_is_idempotent() {
        for text in ["", "abab", "bBbBb", "dDdDa", "gabd"] {
            let once = w(text).free_reduce();
            assert_eq!(once.free_reduce(), once);
            assert!(once.len() <= w(text).len());
        }
    }

    #[test]
    fn inverse_round_trips() {
        let word = w("abdGBD");
        assert!(word.concat(&word.inverse()).free_reduce().is_empty());
        assert_eq!(word.inverse().inverse(), word);
    }

    #[test]
    fn display_round_trips() {
        for text in ["", "dbD", "aagG", "BBBB"] {
            let word = w(text);
            assert_eq!(word.to_string().parse::<Word>().unwrap(), word);
        }
    }

    #[test]
    fn random_word_is_deterministic() {
        assert_eq!(random_word(25, 7), random_word(25, 7));
        assert_ne!(random_word(25, 7), random_word(25, 8));
    }

    #[test]
    fn random_word_respects_length_bound() {
        assert_eq!(random_word(1, 3).len(), 1);
        for seed in 0..50 {
            let word = random_word(30, seed);
            assert!(word.len() <= 30);
            assert_eq!(word.free_reduce(), word);
        }
    }
}
