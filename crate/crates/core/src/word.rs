use std::fmt::Debug;

use num_traits::{PrimInt, Unsigned};

use crate::error::Error;

/// Width of the machine word used by the bit-parallel algorithms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WordSpec {
    W32,
    W64,
    W128,
}

impl WordSpec {
    pub const DEFAULT: WordSpec = WordSpec::W64;

    pub fn bits(self) -> usize {
        match self {
            WordSpec::W32 => 32,
            WordSpec::W64 => 64,
            WordSpec::W128 => 128,
        }
    }

    pub fn from_bits(bits: u32) -> Result<Self, Error> {
        match bits {
            32 => Ok(WordSpec::W32),
            64 => Ok(WordSpec::W64),
            128 => Ok(WordSpec::W128),
            other => Err(Error::BadWordWidth(other)),
        }
    }
}

impl Default for WordSpec {
    fn default() -> Self {
        WordSpec::DEFAULT
    }
}

/// Unsigned integer usable as a bit-parallel state word.
pub trait BitWord: PrimInt + Unsigned + Debug + Send + Sync + 'static {
    const BITS: usize;
    const SPEC: WordSpec;

    #[inline(always)]
    fn bit(i: usize) -> Self {
        Self::one() << i
    }

    /// The lowest `k` bits set (`k <= BITS`).
    #[inline(always)]
    fn low_mask(k: usize) -> Self {
        if k >= Self::BITS {
            Self::max_value()
        } else {
            (Self::one() << k) - Self::one()
        }
    }
}

impl BitWord for u32 {
    const BITS: usize = 32;
    const SPEC: WordSpec = WordSpec::W32;
}

impl BitWord for u64 {
    const BITS: usize = 64;
    const SPEC: WordSpec = WordSpec::W64;
}

impl BitWord for u128 {
    const BITS: usize = 128;
    const SPEC: WordSpec = WordSpec::W128;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn widths() {
        for bits in [32, 64, 128] {
            assert_eq!(WordSpec::from_bits(bits).unwrap().bits(), bits as usize);
        }
        assert!(WordSpec::from_bits(16).is_err());
        assert_eq!(WordSpec::default().bits(), 64);
    }

    #[test]
    fn masks() {
        assert_eq!(u64::low_mask(0), 0);
        assert_eq!(u64::low_mask(3), 0b111);
        assert_eq!(u64::low_mask(64), u64::MAX);
        assert_eq!(u32::low_mask(32), u32::MAX);
        assert_eq!(u128::bit(127), 1u128 << 127);
    }
}
