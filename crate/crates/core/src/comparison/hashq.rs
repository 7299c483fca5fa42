use crate::error::ApplicabilityError;
use crate::searcher::{Scan, Searcher};
use crate::text::{Haystack, Occurrences, Pattern};

const TABLE_BITS: u32 = 16;
const TABLE_MASK: u32 = (1 << TABLE_BITS) - 1;

/// Shift-add hash of a q-gram, reduced mod 2^16.
#[inline(always)]
pub fn gram_hash(gram: impl IntoIterator<Item = u8>) -> u16 {
    let h = gram
        .into_iter()
        .fold(0u32, |h, c| (h << 1).wrapping_add(c as u32));
    (h & TABLE_MASK) as u16
}

/// Shift table indexed by the hash of the last `q` characters of the window.
///
/// Shift 0 marks the hash of the pattern's own final q-gram and means
/// "verify here".
#[derive(Clone)]
pub struct QGramHash {
    q: usize,
    table: Vec<u32>,
    /// Advance after a zero-shift hit.
    after_hit: usize,
}

impl QGramHash {
    pub fn new(q: usize, p: &[u8]) -> Self {
        let m = p.len();
        debug_assert!(q >= 1 && m >= q);
        let mut table = vec![(m - q + 1) as u32; 1 << TABLE_BITS];
        for end in q - 1..m - 1 {
            let h = gram_hash(p[end + 1 - q..=end].iter().copied());
            table[h as usize] = (m - 1 - end) as u32;
        }
        let h = gram_hash(p[m - q..].iter().copied()) as usize;
        let after_hit = (table[h] as usize).max(1);
        table[h] = 0;
        QGramHash {
            q,
            table,
            after_hit,
        }
    }

    pub fn q(&self) -> usize {
        self.q
    }

    #[inline(always)]
    pub fn shift(&self, h: u16) -> usize {
        self.table[h as usize] as usize
    }

    pub fn shifts(&self) -> &[u32] {
        &self.table
    }

    pub fn after_hit(&self) -> usize {
        self.after_hit
    }
}

/// Wu-Manber style single-pattern search over q-gram hashes.
#[derive(Clone)]
pub struct HashQ<const Q: usize> {
    pat: Vec<u8>,
    hash: QGramHash,
}

pub type Hash3 = HashQ<3>;
pub type Hash5 = HashQ<5>;
pub type Hash8 = HashQ<8>;

impl<const Q: usize> HashQ<Q> {
    pub fn new(p: &Pattern) -> Result<Self, ApplicabilityError> {
        if p.len() < Q {
            return Err(ApplicabilityError::new(
                Self::NAME,
                p.len(),
                format!("m >= {Q}"),
            ));
        }
        Ok(HashQ {
            pat: p.to_vec(),
            hash: QGramHash::new(Q, p),
        })
    }

    pub fn table(&self) -> &QGramHash {
        &self.hash
    }
}

impl<const Q: usize> Scan for HashQ<Q> {
    const NAME: &'static str = match Q {
        3 => "HASH3",
        5 => "HASH5",
        8 => "HASH8",
        _ => "HASHq",
    };

    fn m(&self) -> usize {
        self.pat.len()
    }

    fn scan<H: Haystack + ?Sized>(&self, t: &H, out: &mut Vec<usize>) {
        let m = self.pat.len();
        let n = t.len();
        if m > n {
            return;
        }
        // `end` is the index of the window's last character
        let mut end = m - 1;
        while end < n {
            let h = gram_hash((end + 1 - Q..=end).map(|k| t.at(k)));
            let sh = self.hash.shift(h);
            if sh != 0 {
                end += sh;
                continue;
            }
            let s = end + 1 - m;
            if t.matches_at(s, &self.pat) {
                out.push(s);
            }
            end += self.hash.after_hit;
        }
    }
}

/// HASHq for `q` in {3, 5, 8}.
pub fn search_hashq(q: usize, p: &Pattern, t: &[u8]) -> Result<Occurrences, ApplicabilityError> {
    match q {
        3 => Ok(Hash3::new(p)?.find_all(t)),
        5 => Ok(Hash5::new(p)?.find_all(t)),
        8 => Ok(Hash8::new(p)?.find_all(t)),
        _ => Err(ApplicabilityError::new("HASHq", p.len(), "q in {3, 5, 8}")),
    }
}
