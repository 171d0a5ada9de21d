use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// Generator letter. `R` sorts before `L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    R,
    L,
}

impl Letter {
    pub fn swapped(self) -> Letter {
        match self {
            Letter::R => Letter::L,
            Letter::L => Letter::R,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::R => 'R',
            Letter::L => 'L',
        }
    }
}

/// Maximum number of letters a [`Word`] can hold.
pub const MAX_WORD_LEN: usize = 32;

/// A non-empty word over `{R, L}`, packed into bits (`R = 0`, `L = 1`,
/// first letter in the most significant used bit).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Word {
    bits: u32,
    len: u8,
}

impl Word {
    /// Builds a word from its low `len` bits.
    pub fn from_bits(bits: u32, len: usize) -> Result<Word> {
        if len == 0 || len > MAX_WORD_LEN {
            return Err(Error::Domain("word length must be between 1 and 32"));
        }
        Ok(Word {
            bits: bits & mask(len),
            len: len as u8,
        })
    }

    pub fn from_letters(letters: &[Letter]) -> Result<Word> {
        let bits = letters
            .iter()
            .fold(0u32, |acc, l| (acc << 1) | (*l == Letter::L) as u32);
        Word::from_bits(bits, letters.len())
    }

    /// Parses `"RLRLL"` or the dotted form `"R.L.R.L.L"`; spaces are ignored.
    pub fn parse(s: &str) -> Result<Word> {
        let mut bits = 0u32;
        let mut len = 0usize;
        for ch in s.chars() {
            let bit = match ch {
                'R' => 0,
                'L' => 1,
                '.' | ' ' => continue,
                _ => return Err(Error::Domain("words use only the letters R and L")),
            };
            len += 1;
            if len > MAX_WORD_LEN {
                return Err(Error::Domain("word length must be between 1 and 32"));
            }
            bits = (bits << 1) | bit;
        }
        Word::from_bits(bits, len)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    /// Always false; words are non-empty.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn letter(&self, i: usize) -> Letter {
        assert!(i < self.len(), "letter index out of range");
        if (self.bits >> (self.len() - 1 - i)) & 1 == 1 {
            Letter::L
        } else {
            Letter::R
        }
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.len()).map(move |i| self.letter(i))
    }

    /// Cyclic rotation moving the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> Word {
        let n = self.len();
        let k = k % n;
        if k == 0 {
            return *self;
        }
        let bits = ((self.bits << k) | (self.bits >> (n - k))) & mask(n);
        Word {
            bits,
            len: self.len,
        }
    }

    /// Lexicographically least rotation.
    pub fn canonical(&self) -> Word {
        (0..self.len())
            .map(|k| self.rotate(k))
            .min_by_key(|w| w.bits)
            .unwrap_or(*self)
    }

    /// Exchange of `R` and `L`.
    pub fn star(&self) -> Word {
        Word {
            bits: !self.bits & mask(self.len()),
            len: self.len,
        }
    }

    pub fn reversed(&self) -> Word {
        let n = self.len();
        let bits = self.bits.reverse_bits() >> (32 - n);
        Word {
            bits,
            len: self.len,
        }
    }

    /// The word of the inverse element, up to conjugacy: read backwards with
    /// `R` and `L` exchanged.
    pub fn inverse(&self) -> Word {
        self.reversed().star()
    }

    /// Whether the word is not a proper power of a shorter word.
    pub fn is_primitive(&self) -> bool {
        let n = self.len();
        (1..n)
            .filter(|d| n % d == 0)
            .all(|d| self.rotate(d) != *self)
    }
}

fn mask(len: usize) -> u32 {
    if len >= 32 {
        u32::MAX
    } else {
        (1u32 << len) - 1
    }
}

impl Ord for Word {
    /// Dictionary order on the letters, a proper prefix first.
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.len().min(other.len());
        let a = self.bits >> (self.len() - n);
        let b = other.bits >> (other.len() - n);
        a.cmp(&b).then(self.len.cmp(&other.len))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.letters() {
            fmt::Write::write_char(f, l.as_char())?;
        }
        Ok(())
    }
}

impl core::str::FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        Word::parse(s)
    }
}
