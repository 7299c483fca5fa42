use super::oracle::{FactorOracle, NONE};
use crate::error::ApplicabilityError;
use crate::searcher::{Scan, Searcher};
use crate::text::{Haystack, Occurrences, Pattern};

/// Backward Oracle Matching.
///
/// Each window is read right to left through the factor oracle of the
/// reversed pattern. When the oracle rejects after `k` characters the window
/// moves by `m - k`; surviving all `m` characters means a verified match and
/// a shift of one.
#[derive(Clone, Debug)]
pub struct Bom {
    pat: Vec<u8>,
    oracle: FactorOracle,
}

impl Bom {
    pub fn new(p: &Pattern) -> Self {
        Bom {
            pat: p.to_vec(),
            oracle: FactorOracle::reversed(p),
        }
    }

    pub fn oracle(&self) -> &FactorOracle {
        &self.oracle
    }
}

/// Continues a backward oracle walk in the window starting at `s` from
/// `state`, with `read` characters already consumed. Returns the shift.
#[inline(always)]
fn finish_window<H: Haystack + ?Sized>(
    t: &H,
    oracle: &FactorOracle,
    pat: &[u8],
    s: usize,
    mut state: u32,
    mut read: usize,
    out: &mut Vec<usize>,
) -> usize {
    let m = pat.len();
    while read < m {
        state = oracle.raw_step(state, t.at(s + m - 1 - read));
        if state == NONE {
            return m - read;
        }
        read += 1;
    }
    if t.matches_at(s, pat) {
        out.push(s);
    }
    1
}

impl Scan for Bom {
    const NAME: &'static str = "BOM";

    fn m(&self) -> usize {
        self.pat.len()
    }

    fn scan<H: Haystack + ?Sized>(&self, t: &H, out: &mut Vec<usize>) {
        let m = self.pat.len();
        let n = t.len();
        let mut s = 0;
        while s + m <= n {
            s += finish_window(t, &self.oracle, &self.pat, s, 0, 0, out);
        }
    }
}

pub fn search_bom(p: &Pattern, t: &[u8]) -> Occurrences {
    Bom::new(p).find_all(t)
}

// Entries of the first-transition table that do not name a state.
const FAIL_FIRST: u32 = u32::MAX;
const FAIL_SECOND: u32 = u32::MAX - 1;

/// Oracle state after reading the window's last two characters, indexed by
/// `(last, second to last)`.
#[derive(Clone)]
pub struct FirstTransitionTable {
    table: Vec<u32>,
}

impl FirstTransitionTable {
    pub fn new(oracle: &FactorOracle) -> Self {
        let mut table = vec![FAIL_FIRST; 1 << 16];
        for a in 0..=255u8 {
            let Some(q) = oracle.step(0, a) else { continue };
            for b in 0..=255u8 {
                table[(a as usize) << 8 | b as usize] = oracle.step(q, b).unwrap_or(FAIL_SECOND);
            }
        }
        FirstTransitionTable { table }
    }

    /// The state reached, if both transitions exist.
    pub fn get(&self, last: u8, before_last: u8) -> Option<u32> {
        let v = self.raw(last, before_last);
        (v != FAIL_FIRST && v != FAIL_SECOND).then_some(v)
    }

    #[inline(always)]
    fn raw(&self, last: u8, before_last: u8) -> u32 {
        self.table[(last as usize) << 8 | before_last as usize]
    }
}

/// Extended BOM: windows are entered through a two-character table lookup,
/// then the scan proceeds as in BOM with identical shifts.
#[derive(Clone)]
pub struct Ebom {
    pat: Vec<u8>,
    oracle: FactorOracle,
    first: FirstTransitionTable,
}

impl Ebom {
    pub fn new(p: &Pattern) -> Result<Self, ApplicabilityError> {
        if p.len() < 2 {
            return Err(ApplicabilityError::new("EBOM", p.len(), "m >= 2"));
        }
        let oracle = FactorOracle::reversed(p);
        let first = FirstTransitionTable::new(&oracle);
        Ok(Ebom {
            pat: p.to_vec(),
            oracle,
            first,
        })
    }

    pub fn first_transitions(&self) -> &FirstTransitionTable {
        &self.first
    }
}

impl Scan for Ebom {
    const NAME: &'static str = "EBOM";

    fn m(&self) -> usize {
        self.pat.len()
    }

    fn scan<H: Haystack + ?Sized>(&self, t: &H, out: &mut Vec<usize>) {
        let m = self.pat.len();
        let n = t.len();
        let mut s = 0;
        while s + m <= n {
            match self.first.raw(t.at(s + m - 1), t.at(s + m - 2)) {
                FAIL_FIRST => s += m,
                FAIL_SECOND => s += m - 1,
                q => s += finish_window(t, &self.oracle, &self.pat, s, q, 2, out),
            }
        }
    }
}

pub fn search_ebom(p: &Pattern, t: &[u8]) -> Result<Occurrences, ApplicabilityError> {
    Ok(Ebom::new(p)?.find_all(t))
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::testutil::{check_against_oracle, pat, random_case, SIGMAS};
    use crate::text::InstrumentedText;

    #[test]
    fn bom_small() {
        assert_eq!(search_bom(&pat(b"aba"), b"ababa").positions(), &[0, 2]);
        assert!(search_bom(&pat(b"abcd"), b"abc").is_empty());
    }

    #[test]
    fn ebom_small() {
        assert_eq!(
            search_ebom(&pat(b"ab"), b"abab").unwrap().positions(),
            &[0, 2]
        );
        let err = search_ebom(&pat(b"a"), b"aaa").unwrap_err();
        assert_eq!((err.algorithm, err.m), ("EBOM", 1));
    }

    #[test]
    fn first_table_composes_two_steps() {
        let p = b"abcabd";
        let e = Ebom::new(&pat(p)).unwrap();
        let o = &e.oracle;
        for a in 0..=255u8 {
            for b in 0..=255u8 {
                let composed = o.step(0, a).and_then(|q| o.step(q, b));
                assert_eq!(e.first_transitions().get(a, b), composed);
            }
        }
    }

    #[test]
    fn bom_oracle() {
        check_against_oracle(71, 500, (1, 1024), 4096, Bom::new);
    }

    #[test]
    fn ebom_oracle() {
        check_against_oracle(72, 500, (2, 1024), 4096, |p| Ebom::new(p).unwrap());
    }

    #[test]
    fn ebom_reads_at_most_one_extra_per_window() {
        let mut rng = ChaCha8Rng::seed_from_u64(73);
        for _ in 0..300 {
            let c = random_case(&mut rng, &SIGMAS, (2, 64), 3000);
            if c.text.len() < c.pattern.len() {
                continue;
            }
            let p = pat(&c.pattern);
            let (bom, ebom) = (Bom::new(&p), Ebom::new(&p).unwrap());
            let a = InstrumentedText::new(&c.text);
            let b = InstrumentedText::new(&c.text);
            assert_eq!(bom.find_all_metered(&a), ebom.find_all_metered(&b));
            let windows = (c.text.len() - p.len() + 1) as u64;
            assert!(b.reads() <= a.reads() + windows);
        }
    }

    #[test]
    fn shifts_bounded_by_m() {
        // Any shift is in [1, m]: the next window never skips past `s + m`,
        // so a pattern planted right after any position is found.
        let mut rng = ChaCha8Rng::seed_from_u64(74);
        for _ in 0..200 {
            let m = rng.gen_range(2..40);
            let p: Vec<u8> = (0..m).map(|_| rng.gen_range(0..4)).collect();
            let mut t: Vec<u8> = (0..500).map(|_| rng.gen_range(0..4)).collect();
            let at = rng.gen_range(0..=500 - m);
            t[at..at + m].copy_from_slice(&p);
            assert!(search_bom(&pat(&p), &t).contains(&at));
            assert!(search_ebom(&pat(&p), &t).unwrap().contains(&at));
        }
    }
}
