use std::fmt;
use std::str::FromStr;

use crate::error::DensityError;

const WORD_BITS: usize = 64;

/// An immutable sequence of bits addressed `1..=n`.
///
/// Bits are packed 64 per word, least significant bit first within a word.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Bitstream {
    words: Vec<u64>,
    len: usize,
}

impl Bitstream {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_bits<I>(bits: I) -> Self
    where
        I: IntoIterator<Item = bool>,
    {
        let iter = bits.into_iter();
        let mut words = Vec::with_capacity(iter.size_hint().0.div_ceil(WORD_BITS));
        let mut len = 0usize;
        for bit in iter {
            if len.is_multiple_of(WORD_BITS) {
                words.push(0);
            }
            if bit {
                words[len / WORD_BITS] |= 1 << (len % WORD_BITS);
            }
            len += 1;
        }
        Self { words, len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Bit `x_i` for `1 <= i <= n`, or `None` outside that range.
    pub fn get(&self, i: usize) -> Option<bool> {
        if i == 0 || i > self.len {
            return None;
        }
        Some(self.bit_at(i - 1))
    }

    #[inline]
    fn bit_at(&self, offset: usize) -> bool {
        (self.words[offset / WORD_BITS] >> (offset % WORD_BITS)) & 1 == 1
    }

    /// Iterates `x_1, ..., x_n` in order.
    pub fn iter(&self) -> Bits<'_> {
        Bits {
            stream: self,
            offset: 0,
        }
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }
}

impl fmt::Debug for Bitstream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len <= 128 {
            write!(f, "Bitstream({self})")
        } else {
            write!(f, "Bitstream(n={})", self.len)
        }
    }
}

impl fmt::Display for Bitstream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for bit in self.iter() {
            f.write_str(if bit { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Parses a string of `'0'`/`'1'` characters. No whitespace is accepted.
impl FromStr for Bitstream {
    type Err = DensityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(bad) = s.chars().find(|c| *c != '0' && *c != '1') {
            return Err(DensityError::InvalidBit(bad));
        }
        Ok(Self::from_bits(s.bytes().map(|b| b == b'1')))
    }
}

impl FromIterator<bool> for Bitstream {
    fn from_iter<T: IntoIterator<Item = bool>>(iter: T) -> Self {
        Self::from_bits(iter)
    }
}

impl<'a> IntoIterator for &'a Bitstream {
    type Item = bool;
    type IntoIter = Bits<'a>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

pub struct Bits<'a> {
    stream: &'a Bitstream,
    offset: usize,
}

impl Iterator for Bits<'_> {
    type Item = bool;

    #[inline]
    fn next(&mut self) -> Option<bool> {
        if self.offset >= self.stream.len {
            return None;
        }
        let bit = self.stream.bit_at(self.offset);
        self.offset += 1;
        Some(bit)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.stream.len - self.offset;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Bits<'_> {}
