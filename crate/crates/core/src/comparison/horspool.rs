use super::tables::BadCharTable;
use crate::searcher::Scan;
use crate::text::{Haystack, Occurrences, Pattern};

/// Horspool: bad-character shift on the window's last character.
#[derive(Clone)]
pub struct Horspool {
    pat: Vec<u8>,
    shift: BadCharTable,
}

impl Horspool {
    pub fn new(p: &Pattern) -> Self {
        Horspool {
            pat: p.to_vec(),
            shift: BadCharTable::horspool(p),
        }
    }

    pub fn table(&self) -> &BadCharTable {
        &self.shift
    }
}

impl Scan for Horspool {
    const NAME: &'static str = "HOR";

    fn m(&self) -> usize {
        self.pat.len()
    }

    fn scan<H: Haystack + ?Sized>(&self, t: &H, out: &mut Vec<usize>) {
        let m = self.pat.len();
        let n = t.len();
        let last = self.pat[m - 1];
        let head = &self.pat[..m - 1];
        let mut s = 0;
        while s + m <= n {
            let c = t.at(s + m - 1);
            if c == last && t.matches_at(s, head) {
                out.push(s);
            }
            s += self.shift.get(c);
        }
    }
}

pub fn search_hor(p: &Pattern, t: &[u8]) -> Occurrences {
    crate::searcher::Searcher::find_all(&Horspool::new(p), t)
}

/// Quick-Search: bad-character shift on the character just past the window.
#[derive(Clone)]
pub struct QuickSearch {
    pat: Vec<u8>,
    shift: BadCharTable,
}

impl QuickSearch {
    pub fn new(p: &Pattern) -> Self {
        QuickSearch {
            pat: p.to_vec(),
            shift: BadCharTable::quick_search(p),
        }
    }
}

impl Scan for QuickSearch {
    const NAME: &'static str = "QS";

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
            if s + m == n {
                break;
            }
            s += self.shift.get(t.at(s + m));
        }
    }
}

pub fn search_qs(p: &Pattern, t: &[u8]) -> Occurrences {
    crate::searcher::Searcher::find_all(&QuickSearch::new(p), t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::searcher::Searcher;
    use crate::testutil::{check_against_oracle, pat};
    use crate::text::InstrumentedText;

    #[test]
    fn hor_small() {
        assert_eq!(search_hor(&pat(b"aba"), b"ababa").positions(), &[0, 2]);
        assert!(search_hor(&pat(b"zz"), b"abab").is_empty());
        assert!(search_hor(&pat(b"abcd"), b"abc").is_empty());
    }

    #[test]
    fn qs_small() {
        assert_eq!(search_qs(&pat(b"aba"), b"ababa").positions(), &[0, 2]);
        assert!(search_qs(&pat(b"zz"), b"abab").is_empty());
        assert_eq!(search_qs(&pat(b"a"), b"aaa").positions(), &[0, 1, 2]);
    }

    #[test]
    fn hor_oracle() {
        check_against_oracle(11, 500, (1, 64), 2048, Horspool::new);
    }

    #[test]
    fn qs_oracle() {
        check_against_oracle(12, 500, (1, 64), 2048, QuickSearch::new);
    }

    #[test]
    fn unary_alphabet() {
        let t = vec![7u8; 50];
        let p = pat(&[7u8; 5]);
        let want: Vec<usize> = (0..=45).collect();
        assert_eq!(search_hor(&p, &t).positions(), want.as_slice());
        assert_eq!(search_qs(&p, &t).positions(), want.as_slice());
    }

    #[test]
    fn hor_is_sublinear_on_large_alphabet() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let t: Vec<u8> = (0..1 << 20).map(|_| rng.gen_range(0..64)).collect();
        for m in [8usize, 16, 64] {
            let p = pat(&t[1000..1000 + m]);
            let it = InstrumentedText::new(&t);
            let occ = Horspool::new(&p).find_all_metered(&it);
            assert!(occ.contains(&1000));
            assert!(
                (it.reads() as f64) < 0.5 * t.len() as f64,
                "m={m}: {} reads",
                it.reads()
            );
        }
    }
}
