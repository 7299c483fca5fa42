//! Shift-Or and Shift-And: a forward scan that updates the prefix automaton
//! once per text character. Patterns longer than a word use a multiword
//! state of `ceil(m / w)` words.

use super::masks::{MultiwordMasks, MultiwordState};
use crate::searcher::{Scan, Searcher};
use crate::text::{Haystack, Occurrences, Pattern};
use crate::word::BitWord;

#[derive(Clone)]
pub struct ShiftOr<W: BitWord = u64> {
    m: usize,
    // complemented: bit j clear iff p[j] == c
    masks: MultiwordMasks<W>,
}

impl<W: BitWord> ShiftOr<W> {
    pub fn new(p: &Pattern) -> Self {
        ShiftOr {
            m: p.len(),
            masks: MultiwordMasks::forward(p).complemented(),
        }
    }

    pub fn state_words(&self) -> usize {
        self.masks.words()
    }
}

impl<W: BitWord> Scan for ShiftOr<W> {
    const NAME: &'static str = "SO";

    fn m(&self) -> usize {
        self.m
    }

    fn scan<H: Haystack + ?Sized>(&self, t: &H, out: &mut Vec<usize>) {
        let m = self.m;
        let n = t.len();
        if self.masks.words() == 1 {
            let hit = W::bit(m - 1);
            let mut d = W::max_value();
            for i in 0..n {
                d = (d << 1) | self.masks.row(t.at(i))[0];
                if d & hit == W::zero() {
                    out.push(i + 1 - m);
                }
            }
            return;
        }
        let mut d = MultiwordState::filled(m, W::max_value());
        for i in 0..n {
            d.shift_left(false);
            d.or_assign(self.masks.row(t.at(i)));
            if !d.test(m - 1) {
                out.push(i + 1 - m);
            }
        }
    }
}

pub fn search_so(p: &Pattern, t: &[u8]) -> Occurrences {
    ShiftOr::<u64>::new(p).find_all(t)
}

#[derive(Clone)]
pub struct ShiftAnd<W: BitWord = u64> {
    m: usize,
    masks: MultiwordMasks<W>,
}

impl<W: BitWord> ShiftAnd<W> {
    pub fn new(p: &Pattern) -> Self {
        ShiftAnd {
            m: p.len(),
            masks: MultiwordMasks::forward(p),
        }
    }

    pub fn state_words(&self) -> usize {
        self.masks.words()
    }
}

impl<W: BitWord> Scan for ShiftAnd<W> {
    const NAME: &'static str = "SA";

    fn m(&self) -> usize {
        self.m
    }

    fn scan<H: Haystack + ?Sized>(&self, t: &H, out: &mut Vec<usize>) {
        let m = self.m;
        let n = t.len();
        if self.masks.words() == 1 {
            let hit = W::bit(m - 1);
            let mut d = W::zero();
            for i in 0..n {
                d = ((d << 1) | W::one()) & self.masks.row(t.at(i))[0];
                if d & hit != W::zero() {
                    out.push(i + 1 - m);
                }
            }
            return;
        }
        let mut d = MultiwordState::filled(m, W::zero());
        for i in 0..n {
            d.shift_left(true);
            d.and_assign(self.masks.row(t.at(i)));
            if d.test(m - 1) {
                out.push(i + 1 - m);
            }
        }
    }
}

pub fn search_sa(p: &Pattern, t: &[u8]) -> Occurrences {
    ShiftAnd::<u64>::new(p).find_all(t)
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::testutil::{check_against_oracle, pat, random_case, SIGMAS};
    use crate::text::InstrumentedText;

    #[test]
    fn small() {
        assert_eq!(search_so(&pat(b"ab"), b"abab").positions(), &[0, 2]);
        assert_eq!(search_sa(&pat(b"ab"), b"abab").positions(), &[0, 2]);
        assert!(search_so(&pat(b"abc"), b"ab").is_empty());
        assert!(search_sa(&pat(b"abc"), b"ab").is_empty());
    }

    #[test]
    fn multiword_oracle() {
        check_against_oracle(81, 200, (65, 300), 2048, ShiftOr::<u64>::new);
        check_against_oracle(82, 200, (65, 300), 2048, ShiftAnd::<u64>::new);
        check_against_oracle(83, 200, (20, 100), 1024, ShiftAnd::<u32>::new);
        check_against_oracle(84, 200, (100, 300), 1024, ShiftOr::<u128>::new);
    }

    #[test]
    fn single_word_oracle() {
        check_against_oracle(85, 500, (1, 64), 2048, ShiftOr::<u64>::new);
        check_against_oracle(86, 500, (1, 64), 2048, ShiftAnd::<u64>::new);
    }

    #[test]
    fn one_read_per_character() {
        let mut rng = ChaCha8Rng::seed_from_u64(87);
        for _ in 0..200 {
            let c = random_case(&mut rng, &SIGMAS, (1, 64), 4096);
            let p = pat(&c.pattern);
            for use_and in [false, true] {
                let it = InstrumentedText::new(&c.text);
                if use_and {
                    ShiftAnd::<u64>::new(&p).find_all_metered(&it);
                } else {
                    ShiftOr::<u64>::new(&p).find_all_metered(&it);
                }
                assert_eq!(it.reads(), c.text.len() as u64);
            }
        }
    }

    #[test]
    fn state_word_counts() {
        for (m, want) in [(1, 1), (64, 1), (65, 2), (128, 2), (129, 3)] {
            let p = pat(&vec![b'a'; m]);
            assert_eq!(ShiftOr::<u64>::new(&p).state_words(), want);
            assert_eq!(ShiftAnd::<u64>::new(&p).state_words(), want);
        }
    }
}
