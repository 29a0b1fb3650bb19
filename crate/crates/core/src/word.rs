//! Letters and freely reduced words over a signed alphabet.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// A free generator or its inverse.
///
/// Generators are numbered from 1; the sign distinguishes `x_i` from `x_i^-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    /// Panics if `index` is zero.
    pub fn new(index: usize, inverted: bool) -> Self {
        assert!(index >= 1, "generator indices start at 1");
        let index = i32::try_from(index).expect("generator index fits in i32");
        Letter(if inverted { -index } else { index })
    }

    pub fn gen(index: usize) -> Self {
        Letter::new(index, false)
    }

    /// Builds a letter from its signed-integer form (`-2` is `x_2^-1`).
    pub fn from_signed(value: i32) -> Option<Self> {
        (value != 0).then_some(Letter(value))
    }

    pub fn to_signed(self) -> i32 {
        self.0
    }

    /// 1-based generator index.
    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    /// 0-based slot of the generator, used to index per-letter tables.
    pub fn slot(self) -> usize {
        self.index() - 1
    }

    pub fn is_inverse(self) -> bool {
        self.0 < 0
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A freely reduced word; the empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    /// Free reduction: cancels adjacent inverse pairs until none remain.
    pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for letter in letters {
            if out.last() == Some(&letter.inverse()) {
                out.pop();
            } else {
                out.push(letter);
            }
        }
        Word(out)
    }

    /// Reduces a word given in signed-integer form. Zero entries are rejected.
    pub fn from_signed(values: &[i32]) -> Result<Self> {
        let letters = values
            .iter()
            .map(|&v| {
                Letter::from_signed(v).ok_or(Error::Alphabet {
                    letter: 0,
                    rank: 0,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word::reduce(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Highest generator index used, or 0 for the identity.
    pub fn max_index(&self) -> usize {
        self.0.iter().map(|l| l.index()).max().unwrap_or(0)
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        match self.0.iter().find(|l| l.index() > rank) {
            Some(l) => Err(Error::Alphabet {
                letter: l.to_signed().into(),
                rank,
            }),
            None => Ok(()),
        }
    }

    pub fn pow(&self, exponent: usize) -> Self {
        Word::reduce(std::iter::repeat_n(self.0.iter().copied(), exponent).flatten())
    }

    pub fn to_signed(&self) -> Vec<i32> {
        self.0.iter().map(|l| l.to_signed()).collect()
    }
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        Word::reduce(self.0.iter().chain(rhs.0.iter()).copied())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word::reduce(iter)
    }
}

/// Space-separated signed integers, e.g. `1 -2 1`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i32]) -> Word {
        Word::from_signed(v).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(w(&[1, -1, 2]), w(&[2]));
        assert_eq!(w(&[]), Word::identity());
        assert_eq!(w(&[1, 2, -2, -1, 1]).to_signed(), vec![1]);
    }

    #[test]
    fn letter_inverse_is_involution() {
        for v in [-3, -1, 1, 4] {
            let l = Letter::from_signed(v).unwrap();
            assert_eq!(l.inverse().inverse(), l);
            assert_ne!(l.inverse(), l);
        }
        assert!(Letter::from_signed(0).is_none());
    }

    #[test]
    fn product_and_inverse() {
        let g = w(&[1, 2, -1]);
        assert!((&g * &g.inverse()).is_empty());
        assert_eq!(g.pow(2), w(&[1, 2, 2, -1]));
        assert_eq!(g.to_string(), "1 2 -1");
    }

    #[test]
    fn rank_check() {
        assert!(w(&[1, -3]).check_rank(3).is_ok());
        assert_eq!(
            w(&[1, -3]).check_rank(2),
            Err(Error::Alphabet { letter: -3, rank: 2 })
        );
    }

    #[test]
    fn zero_letter_rejected() {
        assert!(Word::from_signed(&[1, 0]).is_err());
    }
}
