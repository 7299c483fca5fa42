//! BNDM for long patterns.
//!
//! With `k = ceil(m / w)` the pattern is cut into `m' = floor(m / k)` blocks
//! of `k` characters (leftover characters also join the last block's class).
//! The superimposed pattern has one character class per block, so it fits a
//! word. Inside a window of `L = m' * k` characters the text is read
//! backwards with stride `k`; consecutive reads fall into consecutive blocks
//! of any alignment, which makes the superimposed pattern a filter with no
//! false negatives. A window that survives all `m'` reads leaves `k`
//! candidate alignments, each verified against the full pattern.

use super::masks::CharMaskTable;
use crate::searcher::{Scan, Searcher};
use crate::text::{Haystack, Occurrences, Pattern};
use crate::word::BitWord;

/// Character classes of the reduced pattern.
#[derive(Clone)]
pub struct SuperimposedPattern<W: BitWord> {
    /// Superimposition factor `k`.
    pub factor: usize,
    /// Reduced length `m'`.
    pub len: usize,
    /// Bit `m' - 1 - r` of `B[c]` is set iff `c` occurs in block `r`.
    pub masks: CharMaskTable<W>,
}

impl<W: BitWord> SuperimposedPattern<W> {
    pub fn new(p: &[u8]) -> Self {
        let m = p.len();
        let factor = m.div_ceil(W::BITS);
        let len = m / factor;
        let mut masks = Box::new([W::zero(); 256]);
        for (j, &c) in p.iter().enumerate() {
            let block = (j / factor).min(len - 1);
            masks[c as usize] = masks[c as usize] | W::bit(len - 1 - block);
        }
        SuperimposedPattern {
            factor,
            len,
            masks: CharMaskTable::from_raw(masks),
        }
    }

    /// Whether the text characters at `pos, pos + k, ...` match the
    /// superimposed pattern.
    pub fn matches_at(&self, t: &[u8], pos: usize) -> bool {
        (0..self.len).all(|r| {
            let c = t[pos + r * self.factor];
            self.masks.get(c) & W::bit(self.len - 1 - r) != W::zero()
        })
    }
}

#[derive(Clone)]
pub struct Lbndm<W: BitWord = u64> {
    pat: Vec<u8>,
    sup: SuperimposedPattern<W>,
}

impl<W: BitWord> Lbndm<W> {
    pub fn new(p: &Pattern) -> Self {
        Lbndm {
            pat: p.to_vec(),
            sup: SuperimposedPattern::new(p),
        }
    }

    pub fn superimposed(&self) -> &SuperimposedPattern<W> {
        &self.sup
    }

    /// Alignments passed by the filter, before verification.
    pub fn candidates(&self, t: &[u8]) -> Vec<usize> {
        let mut out = Vec::new();
        self.filter(t, |s| out.push(s));
        out
    }

    #[inline(always)]
    fn filter<H: Haystack + ?Sized>(&self, t: &H, mut candidate: impl FnMut(usize)) {
        let m = self.pat.len();
        let n = t.len();
        let k = self.sup.factor;
        let reads = self.sup.len;
        let window = reads * k;
        let masks = &self.sup.masks;
        if m > n {
            return;
        }
        // last alignment is n - m, so the window end never passes this
        let last_end = n - m + window - 1;
        let mut end = window - 1;
        while end <= last_end {
            let mut d = masks.get(t.at(end));
            if d == W::zero() {
                end += window;
                continue;
            }
            let mut read = 1;
            while read < reads {
                let pos = end - read * k;
                d = (d << 1) & masks.get(t.at(pos));
                if d == W::zero() {
                    break;
                }
                read += 1;
            }
            if read < reads {
                // alignments covering the failed position are ruled out
                end = end - read * k + window;
                continue;
            }
            let first = end + 1 - window;
            for s in first..(first + k).min(n - m + 1) {
                candidate(s);
            }
            end += k;
        }
    }
}

impl<W: BitWord> Scan for Lbndm<W> {
    const NAME: &'static str = "LBNDM";

    fn m(&self) -> usize {
        self.pat.len()
    }

    fn scan<H: Haystack + ?Sized>(&self, t: &H, out: &mut Vec<usize>) {
        self.filter(t, |s| {
            if t.matches_at(s, &self.pat) {
                out.push(s);
            }
        });
    }
}

pub fn search_lbndm(p: &Pattern, t: &[u8]) -> Occurrences {
    Lbndm::<u64>::new(p).find_all(t)
}
