//! Words over the alphabet `[n] = {1, ..., n}` and lexicographic order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An immutable word over `[n]`. Letters are 1-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet_size: usize,
    letters: Vec<usize>,
}

impl Word {
    pub fn new(alphabet_size: usize, letters: Vec<usize>) -> Result<Self> {
        if let Some(&letter) = letters.iter().find(|&&l| l == 0 || l > alphabet_size) {
            return Err(Error::LetterOutOfAlphabet {
                letter,
                alphabet: alphabet_size,
            });
        }
        Ok(Word {
            alphabet_size,
            letters,
        })
    }

    pub fn empty(alphabet_size: usize) -> Self {
        Word {
            alphabet_size,
            letters: Vec::new(),
        }
    }

    /// Parses the space-separated decimal wire form, e.g. `"2 5 4 8 7 3 6 1"`.
    pub fn parse(alphabet_size: usize, text: &str) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(|tok| {
                usize::from_str(tok)
                    .map_err(|_| Error::InvalidInput(format!("not a letter: {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(alphabet_size, letters)
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
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

    pub fn last(&self) -> Option<usize> {
        self.letters.last().copied()
    }

    pub fn is_prefix_of(&self, w: &Word) -> bool {
        w.letters.starts_with(&self.letters)
    }

    /// Lexicographic order: a proper prefix comes first, otherwise the
    /// first differing letter decides.
    pub fn lex_compare(&self, other: &Word) -> Ordering {
        // Vec<usize> ordering is exactly this rule.
        self.letters.cmp(&other.letters)
    }

    /// Same word with its last letter increased by one.
    pub fn increment_last(&self) -> Result<Word> {
        match self.letters.last() {
            None => Err(Error::Range("cannot increment the empty word")),
            Some(&l) if l >= self.alphabet_size => {
                Err(Error::Range("last letter is already the largest"))
            }
            Some(_) => {
                let mut letters = self.letters.clone();
                *letters.last_mut().unwrap() += 1;
                Ok(Word {
                    alphabet_size: self.alphabet_size,
                    letters,
                })
            }
        }
    }

    /// Same word with the letter 1 appended.
    pub fn append_one(&self) -> Result<Word> {
        self.append(1)
    }

    pub fn append(&self, letter: usize) -> Result<Word> {
        if self.letters.len() >= self.alphabet_size {
            return Err(Error::Range("word already has full length"));
        }
        if letter == 0 || letter > self.alphabet_size {
            return Err(Error::LetterOutOfAlphabet {
                letter,
                alphabet: self.alphabet_size,
            });
        }
        let mut letters = Vec::with_capacity(self.letters.len() + 1);
        letters.extend_from_slice(&self.letters);
        letters.push(letter);
        Ok(Word {
            alphabet_size: self.alphabet_size,
            letters,
        })
    }

    /// The first `len` letters.
    pub fn truncated(&self, len: usize) -> Word {
        Word {
            alphabet_size: self.alphabet_size,
            letters: self.letters[..len.min(self.letters.len())].to_vec(),
        }
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_compare(other)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word[{self}]")
    }
}

/// True iff `alpha` is a prefix of `w`.
pub fn is_prefix(alpha: &Word, w: &Word) -> bool {
    alpha.is_prefix_of(w)
}

pub fn lex_compare(a: &Word, b: &Word) -> Ordering {
    a.lex_compare(b)
}
