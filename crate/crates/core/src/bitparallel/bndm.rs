//! Backward scans simulating the nondeterministic suffix automaton of the
//! reversed pattern in a single word: BNDM, its simplified form SBNDM, the
//! q-gram and forward-lookahead variants, and two Horspool hybrids.
//!
//! All of them share the reversed mask convention: bit `m - 1 - j` of
//! `B[c]` is set iff `p[j] == c`.

use super::masks::CharMaskTable;
use crate::comparison::{period, BadCharTable};
use crate::error::ApplicabilityError;
use crate::searcher::{Scan, Searcher};
use crate::text::{Haystack, Occurrences, Pattern};
use crate::word::BitWord;

fn check_word<W: BitWord>(
    name: &'static str,
    m: usize,
    slack: usize,
) -> Result<(), ApplicabilityError> {
    let max = W::BITS - slack;
    if m > max {
        return Err(ApplicabilityError::new(
            name,
            m,
            format!("m <= {max} (word size {})", W::BITS),
        ));
    }
    Ok(())
}

#[derive(Clone)]
pub struct Bndm<W: BitWord = u64> {
    pat: Vec<u8>,
    masks: CharMaskTable<W>,
}

impl<W: BitWord> Bndm<W> {
    pub fn new(p: &Pattern) -> Result<Self, ApplicabilityError> {
        check_word::<W>("BNDM", p.len(), 0)?;
        Ok(Bndm {
            pat: p.to_vec(),
            masks: CharMaskTable::reversed(p),
        })
    }
}

impl<W: BitWord> Scan for Bndm<W> {
    const NAME: &'static str = "BNDM";

    fn m(&self) -> usize {
        self.pat.len()
    }

    fn scan<H: Haystack + ?Sized>(&self, t: &H, out: &mut Vec<usize>) {
        let m = self.pat.len();
        let n = t.len();
        let prefix = W::bit(m - 1);
        let mut s = 0;
        while s + m <= n {
            let mut d = W::low_mask(m);
            // characters of the window still unread, right to left
            let mut j = m;
            let mut last = m;
            while j > 0 {
                d = d & self.masks.get(t.at(s + j - 1));
                if d == W::zero() {
                    break;
                }
                j -= 1;
                if d & prefix != W::zero() {
                    // the suffix read so far is a prefix of p
                    if j > 0 {
                        last = j;
                    } else {
                        out.push(s);
                    }
                }
                d = d << 1;
            }
            s += last;
        }
    }
}

pub fn search_bndm(p: &Pattern, t: &[u8]) -> Result<Occurrences, ApplicabilityError> {
    Ok(Bndm::<u64>::new(p)?.find_all(t))
}

/// Extends a surviving state leftwards from `k` (the leftmost character
/// already read) towards the window start. Returns the final leftmost
/// position; equal to `start` iff the whole window survived.
#[inline(always)]
fn extend_left<W: BitWord, H: Haystack + ?Sized>(
    t: &H,
    masks: &CharMaskTable<W>,
    mut d: W,
    mut k: usize,
    start: usize,
) -> usize {
    while k > start {
        d = (d << 1) & masks.get(t.at(k - 1));
        if d == W::zero() {
            break;
        }
        k -= 1;
    }
    k
}

/// Simplified BNDM: no prefix bookkeeping. After the state dies the window
/// restarts just right of the failing character.
#[derive(Clone)]
pub struct Sbndm<W: BitWord = u64> {
    pat: Vec<u8>,
    masks: CharMaskTable<W>,
    after_match: usize,
}

impl<W: BitWord> Sbndm<W> {
    pub fn new(p: &Pattern) -> Result<Self, ApplicabilityError> {
        check_word::<W>("SBNDM", p.len(), 0)?;
        Ok(Sbndm {
            pat: p.to_vec(),
            masks: CharMaskTable::reversed(p),
            after_match: period(p),
        })
    }
}

impl<W: BitWord> Scan for Sbndm<W> {
    const NAME: &'static str = "SBNDM";

    fn m(&self) -> usize {
        self.pat.len()
    }

    fn scan<H: Haystack + ?Sized>(&self, t: &H, out: &mut Vec<usize>) {
        let m = self.pat.len();
        let n = t.len();
        let mut end = m - 1;
        while end < n {
            let d = self.masks.get(t.at(end));
            if d == W::zero() {
                end += m;
                continue;
            }
            let start = end + 1 - m;
            let k = extend_left(t, &self.masks, d, end, start);
            if k == start {
                if t.matches_at(start, &self.pat) {
                    out.push(start);
                }
                end += self.after_match;
            } else {
                end = k + m - 1;
            }
        }
    }
}

pub fn search_sbndm(p: &Pattern, t: &[u8]) -> Result<Occurrences, ApplicabilityError> {
    Ok(Sbndm::<u64>::new(p)?.find_all(t))
}

/// SBNDM entering each window through its last `Q` characters at once.
#[derive(Clone)]
pub struct SbndmQ<const Q: usize, W: BitWord = u64> {
    pat: Vec<u8>,
    masks: CharMaskTable<W>,
    after_match: usize,
}

pub type Sbndm2<W = u64> = SbndmQ<2, W>;
pub type Sbndm4<W = u64> = SbndmQ<4, W>;
pub type Sbndm6<W = u64> = SbndmQ<6, W>;
pub type Sbndm8<W = u64> = SbndmQ<8, W>;

impl<const Q: usize, W: BitWord> SbndmQ<Q, W> {
    pub fn new(p: &Pattern) -> Result<Self, ApplicabilityError> {
        let m = p.len();
        if m < Q {
            return Err(ApplicabilityError::new(Self::NAME, m, format!("m >= {Q}")));
        }
        check_word::<W>(Self::NAME, m, 0)?;
        Ok(SbndmQ {
            pat: p.to_vec(),
            masks: CharMaskTable::reversed(p),
            after_match: period(p),
        })
    }
}

impl<const Q: usize, W: BitWord> Scan for SbndmQ<Q, W> {
    const NAME: &'static str = match Q {
        2 => "SBNDMq2",
        4 => "SBNDMq4",
        6 => "SBNDMq6",
        8 => "SBNDMq8",
        _ => "SBNDMq",
    };

    fn m(&self) -> usize {
        self.pat.len()
    }

    fn scan<H: Haystack + ?Sized>(&self, t: &H, out: &mut Vec<usize>) {
        let m = self.pat.len();
        let n = t.len();
        let mut end = m - 1;
        while end < n {
            let mut d = self.masks.get(t.at(end)) << (Q - 1);
            for i in 1..Q {
                d = d & (self.masks.get(t.at(end - i)) << (Q - 1 - i));
            }
            if d == W::zero() {
                end += m - Q + 1;
                continue;
            }
            let start = end + 1 - m;
            let k = extend_left(t, &self.masks, d, end + 1 - Q, start);
            if k == start {
                if t.matches_at(start, &self.pat) {
                    out.push(start);
                }
                end += self.after_match;
            } else {
                end = k + m - 1;
            }
        }
    }
}

/// SBNDMq for `q` in {2, 4, 6, 8}.
pub fn search_sbndmq(q: usize, p: &Pattern, t: &[u8]) -> Result<Occurrences, ApplicabilityError> {
    match q {
        2 => Ok(Sbndm2::<u64>::new(p)?.find_all(t)),
        4 => Ok(Sbndm4::<u64>::new(p)?.find_all(t)),
        6 => Ok(Sbndm6::<u64>::new(p)?.find_all(t)),
        8 => Ok(Sbndm8::<u64>::new(p)?.find_all(t)),
        _ => Err(ApplicabilityError::new(
            "SBNDMq",
            p.len(),
            "q in {2, 4, 6, 8}",
        )),
    }
}

/// Forward SBNDM: the state has `m + 1` bits, the extra low bit accepting
/// any character, so the window entry test also consumes the character just
/// past the window.
#[derive(Clone)]
pub struct Fsbndm<W: BitWord = u64> {
    pat: Vec<u8>,
    masks: CharMaskTable<W>,
    after_match: usize,
}

impl<W: BitWord> Fsbndm<W> {
    pub fn new(p: &Pattern) -> Result<Self, ApplicabilityError> {
        let m = p.len();
        check_word::<W>("FSBNDM", m, 1)?;
        let mut masks = Box::new([W::one(); 256]);
        for (i, &c) in p.iter().enumerate() {
            masks[c as usize] = masks[c as usize] | W::bit(m - i);
        }
        Ok(Fsbndm {
            pat: p.to_vec(),
            masks: CharMaskTable::from_raw(masks),
            after_match: period(p),
        })
    }
}

impl<W: BitWord> Scan for Fsbndm<W> {
    const NAME: &'static str = "FSBNDM";

    fn m(&self) -> usize {
        self.pat.len()
    }

    fn scan<H: Haystack + ?Sized>(&self, t: &H, out: &mut Vec<usize>) {
        let m = self.pat.len();
        let n = t.len();
        let wildcard = W::low_mask(m + 1);
        let mut end = m - 1;
        while end < n {
            let ahead = if end + 1 < n {
                self.masks.get(t.at(end + 1))
            } else {
                wildcard
            };
            let d = (ahead << 1) & self.masks.get(t.at(end));
            if d == W::zero() {
                end += m;
                continue;
            }
            let start = end + 1 - m;
            let k = extend_left(t, &self.masks, d, end, start);
            if k == start {
                if t.matches_at(start, &self.pat) {
                    out.push(start);
                }
                end += self.after_match;
            } else {
                end = k + m - 1;
            }
        }
    }
}

pub fn search_fsbndm(p: &Pattern, t: &[u8]) -> Result<Occurrences, ApplicabilityError> {
    Ok(Fsbndm::<u64>::new(p)?.find_all(t))
}

/// SBNDM whose shifts are raised to the Horspool shift of the window's last
/// character whenever that is longer.
#[derive(Clone)]
pub struct SbndmBmh<W: BitWord = u64> {
    pat: Vec<u8>,
    masks: CharMaskTable<W>,
    hbc: BadCharTable,
    after_match: usize,
}

impl<W: BitWord> SbndmBmh<W> {
    pub fn new(p: &Pattern) -> Result<Self, ApplicabilityError> {
        check_word::<W>("SBNDM-BMH", p.len(), 0)?;
        Ok(SbndmBmh {
            pat: p.to_vec(),
            masks: CharMaskTable::reversed(p),
            hbc: BadCharTable::horspool(p),
            after_match: period(p),
        })
    }
}

impl<W: BitWord> Scan for SbndmBmh<W> {
    const NAME: &'static str = "SBNDM-BMH";

    fn m(&self) -> usize {
        self.pat.len()
    }

    fn scan<H: Haystack + ?Sized>(&self, t: &H, out: &mut Vec<usize>) {
        let m = self.pat.len();
        let n = t.len();
        let mut end = m - 1;
        while end < n {
            let c = t.at(end);
            let d = self.masks.get(c);
            if d == W::zero() {
                end += m;
                continue;
            }
            let start = end + 1 - m;
            let k = extend_left(t, &self.masks, d, end, start);
            let bndm_end = if k == start {
                if t.matches_at(start, &self.pat) {
                    out.push(start);
                }
                end + self.after_match
            } else {
                k + m - 1
            };
            end = bndm_end.max(end + self.hbc.get(c));
        }
    }
}

pub fn search_sbndm_bmh(p: &Pattern, t: &[u8]) -> Result<Occurrences, ApplicabilityError> {
    Ok(SbndmBmh::<u64>::new(p)?.find_all(t))
}

/// Horspool skip loop; windows whose last character matches are tested
/// with the SBNDM backward scan.
#[derive(Clone)]
pub struct BmhSbndm<W: BitWord = u64> {
    pat: Vec<u8>,
    masks: CharMaskTable<W>,
    hbc: BadCharTable,
    after_match: usize,
}

impl<W: BitWord> BmhSbndm<W> {
    pub fn new(p: &Pattern) -> Result<Self, ApplicabilityError> {
        check_word::<W>("BMH-SBNDM", p.len(), 0)?;
        Ok(BmhSbndm {
            pat: p.to_vec(),
            masks: CharMaskTable::reversed(p),
            hbc: BadCharTable::horspool(p),
            after_match: period(p),
        })
    }
}

impl<W: BitWord> Scan for BmhSbndm<W> {
    const NAME: &'static str = "BMH-SBNDM";

    fn m(&self) -> usize {
        self.pat.len()
    }

    fn scan<H: Haystack + ?Sized>(&self, t: &H, out: &mut Vec<usize>) {
        let m = self.pat.len();
        let n = t.len();
        let last = self.pat[m - 1];
        let mut end = m - 1;
        while end < n {
            let c = t.at(end);
            if c != last {
                end += self.hbc.get(c);
                continue;
            }
            let start = end + 1 - m;
            let k = extend_left(t, &self.masks, self.masks.get(c), end, start);
            if k == start {
                if t.matches_at(start, &self.pat) {
                    out.push(start);
                }
                end += self.after_match;
            } else {
                end = k + m - 1;
            }
        }
    }
}

pub fn search_bmh_sbndm(p: &Pattern, t: &[u8]) -> Result<Occurrences, ApplicabilityError> {
    Ok(BmhSbndm::<u64>::new(p)?.find_all(t))
}
