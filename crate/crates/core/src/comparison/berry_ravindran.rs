use super::tables::PairShiftTable;
use crate::searcher::{Scan, Searcher};
use crate::text::{Haystack, Occurrences, Pattern};

/// Berry-Ravindran: shift on the pair of characters following the window.
#[derive(Clone)]
pub struct BerryRavindran {
    pat: Vec<u8>,
    shift: PairShiftTable,
}

impl BerryRavindran {
    pub fn new(p: &Pattern) -> Self {
        BerryRavindran {
            pat: p.to_vec(),
            shift: PairShiftTable::new(p),
        }
    }
}

// Past the penultimate window only one alignment can remain, so the tail
// advances by one instead of reading beyond the text.
#[inline(always)]
fn next_shift<H: Haystack + ?Sized>(t: &H, table: &PairShiftTable, s: usize, m: usize) -> usize {
    if s + m + 1 < t.len() {
        table.get(t.at(s + m), t.at(s + m + 1))
    } else {
        1
    }
}

impl Scan for BerryRavindran {
    const NAME: &'static str = "BR";

    fn m(&self) -> usize {
        self.pat.len()
    }

    fn scan<H: Haystack + ?Sized>(&self, t: &H, out: &mut Vec<usize>) {
        let m = self.pat.len();
        let n = t.len();
        let mut s = 0;
        while s + m <= n {
            if t.matches_at(s, &self.pat) {
                out.push(s);
            }
            s += next_shift(t, &self.shift, s, m);
        }
    }
}

pub fn search_br(p: &Pattern, t: &[u8]) -> Occurrences {
    BerryRavindran::new(p).find_all(t)
}

/// TVSBS: Berry-Ravindran shifting, with the window's last and first
/// characters tested before the inner comparison.
#[derive(Clone)]
pub struct Tvsbs {
    pat: Vec<u8>,
    shift: PairShiftTable,
}

impl Tvsbs {
    pub fn new(p: &Pattern) -> Self {
        Tvsbs {
            pat: p.to_vec(),
            shift: PairShiftTable::new(p),
        }
    }
}

impl Scan for Tvsbs {
    const NAME: &'static str = "TVSBS";

    fn m(&self) -> usize {
        self.pat.len()
    }

    fn scan<H: Haystack + ?Sized>(&self, t: &H, out: &mut Vec<usize>) {
        let m = self.pat.len();
        let n = t.len();
        let first = self.pat[0];
        let last = self.pat[m - 1];
        let mut s = 0;
        while s + m <= n {
            if t.at(s + m - 1) == last
                && (m == 1 || t.at(s) == first)
                && (m <= 2 || t.matches_at(s + 1, &self.pat[1..m - 1]))
            {
                out.push(s);
            }
            s += next_shift(t, &self.shift, s, m);
        }
    }
}

pub fn search_tvsbs(p: &Pattern, t: &[u8]) -> Occurrences {
    Tvsbs::new(p).find_all(t)
}
