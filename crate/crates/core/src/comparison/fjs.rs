use super::tables::{borders, BadCharTable};
use crate::searcher::{Scan, Searcher};
use crate::text::{Haystack, Occurrences, Pattern};

/// Franek-Jennings-Smyth.
///
/// Quick-Search skips while the window's last character mismatches; once it
/// matches, a KMP scan takes over from the window start and keeps going for
/// as long as a partial match survives. Linear in the worst case.
#[derive(Clone)]
pub struct Fjs {
    pat: Vec<u8>,
    qs: BadCharTable,
    border: Vec<usize>,
}

impl Fjs {
    pub fn new(p: &Pattern) -> Self {
        Fjs {
            pat: p.to_vec(),
            qs: BadCharTable::quick_search(p),
            border: borders(p),
        }
    }
}

impl Scan for Fjs {
    const NAME: &'static str = "FJS";

    fn m(&self) -> usize {
        self.pat.len()
    }

    fn scan<H: Haystack + ?Sized>(&self, t: &H, out: &mut Vec<usize>) {
        let p = &self.pat[..];
        let m = p.len();
        let n = t.len();
        let last = p[m - 1];
        let mut s = 0;
        'outer: while s + m <= n {
            while t.at(s + m - 1) != last {
                if s + m == n {
                    break 'outer;
                }
                s += self.qs.get(t.at(s + m));
                if s + m > n {
                    break 'outer;
                }
            }
            // KMP from the anchored window; `i - j` is the current alignment.
            let mut i = s;
            let mut j = 0;
            loop {
                while j < m && i < n && t.at(i) == p[j] {
                    i += 1;
                    j += 1;
                }
                if j == m {
                    out.push(i - m);
                } else if i == n {
                    break 'outer;
                }
                if j == 0 {
                    s = i + 1;
                    continue 'outer;
                }
                j = self.border[j];
                if j == 0 {
                    s = i;
                    continue 'outer;
                }
            }
        }
    }
}

pub fn search_fjs(p: &Pattern, t: &[u8]) -> Occurrences {
    Fjs::new(p).find_all(t)
}
