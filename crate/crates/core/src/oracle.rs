//! The brute-force reference every other algorithm is checked against.

use crate::searcher::Scan;
use crate::text::{Haystack, Occurrences, Pattern};

/// Tries every alignment, comparing left to right.
#[derive(Clone, Debug)]
pub struct BruteForce {
    pat: Vec<u8>,
}

impl BruteForce {
    pub fn new(p: &Pattern) -> Self {
        BruteForce {
            pat: p.as_bytes().to_vec(),
        }
    }
}

impl Scan for BruteForce {
    const NAME: &'static str = "BF";

    fn m(&self) -> usize {
        self.pat.len()
    }

    fn scan<H: Haystack + ?Sized>(&self, t: &H, out: &mut Vec<usize>) {
        let m = self.pat.len();
        let n = t.len();
        if m > n {
            return;
        }
        for i in 0..=n - m {
            if t.matches_at(i, &self.pat) {
                out.push(i);
            }
        }
    }
}

pub fn brute_force_search(p: &Pattern, t: &[u8]) -> Occurrences {
    let mut out = Vec::new();
    BruteForce::new(p).scan(t, &mut out);
    Occurrences::from_sorted(out)
}

/// Exact sequence equality; order is part of the contract.
pub fn verify_equal(a: &[usize], b: &[usize]) -> bool {
    a == b
}
