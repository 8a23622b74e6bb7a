use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A binary word `b_1 ... b_n`, stored big-endian in a machine word: `b_1`
/// is the most significant of the `len` low bits.
///
/// Ordering is by canonical integer encoding first, so words of equal length
/// sort exactly as their decimal encodings do.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString {
    code: u64,
    len: u8,
}

impl BitString {
    pub const MAX_LEN: usize = 63;

    pub fn new(len: usize, code: u64) -> Result<Self> {
        if len > Self::MAX_LEN {
            return Err(Error::Consistency(format!(
                "bit strings are limited to {} bits, got {len}",
                Self::MAX_LEN
            )));
        }
        if code >> len != 0 {
            return Err(Error::Consistency(format!(
                "code {code} does not fit in {len} bits"
            )));
        }
        Ok(BitString {
            code,
            len: len as u8,
        })
    }

    pub(crate) fn from_parts(len: usize, code: u64) -> Self {
        debug_assert!(len <= Self::MAX_LEN && code >> len == 0);
        BitString {
            code,
            len: len as u8,
        }
    }

    pub fn empty() -> Self {
        BitString { code: 0, len: 0 }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Canonical integer encoding `sum b_i 2^(n-i)`.
    pub fn code(&self) -> u64 {
        self.code
    }

    /// Bit `b_{i+1}`, i.e. `i` counts from the left starting at zero.
    pub fn bit(&self, i: usize) -> bool {
        assert!(i < self.len(), "bit index {i} out of range for length {}", self.len);
        (self.code >> (self.len() - 1 - i)) & 1 == 1
    }

    pub fn ones(&self) -> u32 {
        self.code.count_ones()
    }

    pub fn hamming(&self, other: &BitString) -> u32 {
        (self.code ^ other.code).count_ones()
    }

    /// True when the word contains `1^run` as a factor.
    pub fn contains_run_of_ones(&self, run: usize) -> bool {
        if run == 0 {
            return true;
        }
        if run > self.len() {
            return false;
        }
        let mut acc = self.code;
        for shift in 1..run {
            acc &= self.code >> shift;
        }
        acc != 0
    }

    /// True when any two 1s are separated by at least `gap` zeros.
    pub fn ones_separated_by(&self, gap: usize) -> bool {
        (1..=gap.min(Self::MAX_LEN)).all(|shift| self.code & (self.code >> shift) == 0)
    }

    /// Number of leading 1s.
    pub fn leading_ones(&self) -> usize {
        if self.len == 0 {
            return 0;
        }
        let shifted = self.code << (64 - self.len());
        (shifted.leading_ones() as usize).min(self.len())
    }

    /// Removes the first `m` bits.
    pub fn strip_prefix(&self, m: usize) -> BitString {
        assert!(m <= self.len());
        let rest = self.len() - m;
        let mask = if rest == 0 { 0 } else { u64::MAX >> (64 - rest) };
        BitString::from_parts(rest, self.code & mask)
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.bit(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString(\"{self}\")")
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.len() > Self::MAX_LEN {
            return Err(Error::Consistency(format!("bit string too long: {}", s.len())));
        }
        let mut code = 0u64;
        for c in s.chars() {
            code <<= 1;
            match c {
                '0' => {}
                '1' => code |= 1,
                other => {
                    return Err(Error::Consistency(format!("invalid bit character {other:?}")))
                }
            }
        }
        Ok(BitString::from_parts(s.len(), code))
    }
}
