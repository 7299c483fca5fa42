//! Fingerprint filter for long patterns.
//!
//! Every W-character block of text or pattern is reduced to a W-bit
//! fingerprint: bit j is one fixed bit of character j. The pattern
//! contributes the fingerprints of all its `m - W + 1` blocks; the text is
//! sampled every `m - W + 1` positions, which guarantees that each
//! occurrence fully contains exactly one sampled block. A sampled block whose
//! fingerprint is in the pattern's set yields candidate alignments that are
//! then verified directly.

use crate::error::ApplicabilityError;
use crate::searcher::{Scan, Searcher};
use crate::text::{Haystack, Occurrences, Pattern};
use crate::word::WordSpec;

pub const SSEF_MIN_M: usize = 32;

/// The pattern's block fingerprints.
#[derive(Clone, Debug)]
pub struct BlockFilter {
    width: usize,
    bit: u8,
    /// `(fingerprint, offset)` sorted by fingerprint, then offset descending.
    entries: Vec<(u128, u32)>,
}

impl BlockFilter {
    /// `width` must not exceed 128 or `p.len()`.
    pub fn new(p: &[u8], width: usize) -> Self {
        assert!((1..=128).contains(&width) && width <= p.len());
        let bit = pick_bit(p);
        let mut entries: Vec<(u128, u32)> = (0..=p.len() - width)
            .map(|o| (fingerprint(bit, (0..width).map(|j| p[o + j])), o as u32))
            .collect();
        entries.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        BlockFilter {
            width,
            bit,
            entries,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Which bit of each character feeds the fingerprint.
    pub fn bit(&self) -> u8 {
        self.bit
    }

    pub fn fingerprint_of(&self, block: &[u8]) -> u128 {
        fingerprint(self.bit, block.iter().copied())
    }

    pub fn contains(&self, fp: u128) -> bool {
        !self.offsets(fp).is_empty()
    }

    /// Pattern offsets whose block has fingerprint `fp`, largest first.
    #[inline]
    pub fn offsets(&self, fp: u128) -> &[(u128, u32)] {
        let lo = self.entries.partition_point(|e| e.0 < fp);
        let hi = lo + self.entries[lo..].partition_point(|e| e.0 == fp);
        &self.entries[lo..hi]
    }
}

#[inline(always)]
fn fingerprint(bit: u8, block: impl Iterator<Item = u8>) -> u128 {
    block
        .enumerate()
        .fold(0u128, |fp, (j, c)| fp | (((c >> bit) & 1) as u128) << j)
}

/// The character bit that best splits the pattern's symbols.
fn pick_bit(p: &[u8]) -> u8 {
    let m = p.len();
    (0..8u8)
        .max_by_key(|&b| {
            let ones = p.iter().filter(|&&c| (c >> b) & 1 == 1).count();
            // prefer lower bits on ties
            (ones.min(m - ones), std::cmp::Reverse(b))
        })
        .unwrap()
}

#[derive(Clone)]
pub struct Ssef {
    pat: Vec<u8>,
    filter: BlockFilter,
    stride: usize,
}

impl Ssef {
    pub fn new(p: &Pattern) -> Result<Self, ApplicabilityError> {
        Self::with_word(p, WordSpec::DEFAULT)
    }

    pub fn with_word(p: &Pattern, word: WordSpec) -> Result<Self, ApplicabilityError> {
        let m = p.len();
        if m < SSEF_MIN_M {
            return Err(ApplicabilityError::new("SSEF", m, "m >= 32"));
        }
        let width = word.bits().min(m / 2);
        Ok(Ssef {
            pat: p.to_vec(),
            filter: BlockFilter::new(p, width),
            stride: m - width + 1,
        })
    }

    pub fn filter(&self) -> &BlockFilter {
        &self.filter
    }

    pub fn stride(&self) -> usize {
        self.stride
    }
}

impl Scan for Ssef {
    const NAME: &'static str = "SSEF";

    fn m(&self) -> usize {
        self.pat.len()
    }

    fn scan<H: Haystack + ?Sized>(&self, t: &H, out: &mut Vec<usize>) {
        let m = self.pat.len();
        let n = t.len();
        let w = self.filter.width;
        let bit = self.filter.bit;
        if m > n {
            return;
        }
        let mut b = 0;
        while b + w <= n {
            let fp = fingerprint(bit, (b..b + w).map(|k| t.at(k)));
            for &(_, o) in self.filter.offsets(fp) {
                let o = o as usize;
                if o > b {
                    continue;
                }
                let i = b - o;
                if i + m > n {
                    break;
                }
                if t.matches_at(i, &self.pat) {
                    out.push(i);
                }
            }
            b += self.stride;
        }
    }
}

pub fn search_ssef(p: &Pattern, t: &[u8]) -> Result<Occurrences, ApplicabilityError> {
    Ok(Ssef::new(p)?.find_all(t))
}
