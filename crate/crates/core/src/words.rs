//! Words over the alphabet `{1, ..., n}`: the free monoid with its prefix order.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A finite word over `{1, ..., n}`. The empty word is the monoid identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    n: usize,
    letters: Vec<usize>,
}

/// Outcome of comparing two words under the prefix order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrefixOrder {
    Equal,
    /// The left word is a proper prefix: `right = left · rest`.
    LeftPrefixOfRight(Word),
    /// The right word is a proper prefix: `left = right · rest`.
    RightPrefixOfLeft(Word),
    Incomparable,
}

impl Word {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidAlphabet(n));
        }
        if let Some(&letter) = letters.iter().find(|&&l| l == 0 || l > n) {
            return Err(Error::LetterOutOfRange { letter, n });
        }
        Ok(Word { n, letters })
    }

    pub fn empty(n: usize) -> Self {
        assert!(n >= 2, "alphabet size must be at least 2");
        Word { n, letters: Vec::new() }
    }

    pub fn letter(n: usize, letter: usize) -> Result<Self> {
        Self::new(n, vec![letter])
    }

    pub(crate) fn from_raw(n: usize, letters: Vec<usize>) -> Self {
        debug_assert!(letters.iter().all(|&l| (1..=n).contains(&l)));
        Word { n, letters }
    }

    pub fn alphabet_size(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.letters.last().copied()
    }

    fn same_alphabet(&self, other: &Word) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch(self.n, other.n))
        }
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        self.same_alphabet(other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Word { n: self.n, letters })
    }

    pub fn rev(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { n: self.n, letters }
    }

    pub fn compare(&self, other: &Word) -> Result<PrefixOrder> {
        self.same_alphabet(other)?;
        let common = self.len().min(other.len());
        if self.letters[..common] != other.letters[..common] {
            return Ok(PrefixOrder::Incomparable);
        }
        let rest = |w: &Word| Word::from_raw(self.n, w.letters[common..].to_vec());
        Ok(match self.len().cmp(&other.len()) {
            Ordering::Equal => PrefixOrder::Equal,
            Ordering::Less => PrefixOrder::LeftPrefixOfRight(rest(other)),
            Ordering::Greater => PrefixOrder::RightPrefixOfLeft(rest(self)),
        })
    }

    /// `self <= other` in the prefix order.
    pub fn is_prefix_of(&self, other: &Word) -> bool {
        self.n == other.n && other.letters.starts_with(&self.letters)
    }

    /// `self ~ other`: one is a prefix of the other.
    pub fn comparable(&self, other: &Word) -> bool {
        self.is_prefix_of(other) || other.is_prefix_of(self)
    }

    /// Every word of length exactly `len` over `{1..n}`, in lexicographic order.
    pub fn all_of_length(n: usize, len: usize) -> impl Iterator<Item = Word> {
        let total = n.checked_pow(len as u32).expect("word enumeration too large");
        (0..total).map(move |mut code| {
            let mut letters = vec![0; len];
            for slot in letters.iter_mut().rev() {
                *slot = code % n + 1;
                code /= n;
            }
            Word { n, letters }
        })
    }
}

/// Length-lexicographic order; the alphabet size breaks remaining ties.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
            .then_with(|| self.n.cmp(&other.n))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("]")
    }
}
