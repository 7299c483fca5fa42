use crate::word::BitWord;

/// One word per byte value; bit j of `B[c]` is set iff pattern position j
/// holds `c`.
#[derive(Clone)]
pub struct CharMaskTable<W: BitWord> {
    masks: Box<[W; 256]>,
}

impl<W: BitWord> CharMaskTable<W> {
    /// Forward convention: bit j for `p[j]`. Requires `p.len() <= W::BITS`.
    pub fn forward(p: &[u8]) -> Self {
        assert!(p.len() <= W::BITS);
        let mut masks = Box::new([W::zero(); 256]);
        for (j, &c) in p.iter().enumerate() {
            masks[c as usize] = masks[c as usize] | W::bit(j);
        }
        CharMaskTable { masks }
    }

    /// Backward convention: bit `m - 1 - j` for `p[j]`, so bit 0 stands for
    /// the last pattern character.
    pub fn reversed(p: &[u8]) -> Self {
        assert!(p.len() <= W::BITS);
        let m = p.len();
        let mut masks = Box::new([W::zero(); 256]);
        for (j, &c) in p.iter().enumerate() {
            masks[c as usize] = masks[c as usize] | W::bit(m - 1 - j);
        }
        CharMaskTable { masks }
    }

    pub(crate) fn from_raw(masks: Box<[W; 256]>) -> Self {
        CharMaskTable { masks }
    }

    #[inline(always)]
    pub fn get(&self, c: u8) -> W {
        self.masks[c as usize]
    }

    pub fn masks(&self) -> &[W; 256] {
        &self.masks
    }
}

/// Masks for patterns that may span several words: word `k` of symbol `c`
/// lives at `c * words + k`.
#[derive(Clone)]
pub(crate) struct MultiwordMasks<W: BitWord> {
    words: usize,
    masks: Vec<W>,
}

impl<W: BitWord> MultiwordMasks<W> {
    pub fn forward(p: &[u8]) -> Self {
        let words = p.len().div_ceil(W::BITS);
        let mut masks = vec![W::zero(); 256 * words];
        for (j, &c) in p.iter().enumerate() {
            let idx = c as usize * words + j / W::BITS;
            masks[idx] = masks[idx] | W::bit(j % W::BITS);
        }
        MultiwordMasks { words, masks }
    }

    pub fn words(&self) -> usize {
        self.words
    }

    #[inline(always)]
    pub fn row(&self, c: u8) -> &[W] {
        let start = c as usize * self.words;
        &self.masks[start..start + self.words]
    }

    pub fn complemented(mut self) -> Self {
        self.masks.iter_mut().for_each(|w| *w = !*w);
        self
    }
}

/// State of the prefix automaton across `ceil(m / w)` words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiwordState<W: BitWord> {
    words: Vec<W>,
}

impl<W: BitWord> MultiwordState<W> {
    pub fn filled(m: usize, value: W) -> Self {
        MultiwordState {
            words: vec![value; m.div_ceil(W::BITS)],
        }
    }

    pub fn word_count(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[W] {
        &self.words
    }

    /// Shifts the whole state left by one bit, carrying the top bit of each
    /// word into the next, and shifting `fill` into bit 0.
    #[inline(always)]
    pub fn shift_left(&mut self, fill: bool) {
        let top = W::BITS - 1;
        let mut carry = if fill { W::one() } else { W::zero() };
        for w in self.words.iter_mut() {
            let next = *w >> top;
            *w = (*w << 1) | carry;
            carry = next;
        }
    }

    #[inline(always)]
    pub fn and_assign(&mut self, other: &[W]) {
        for (w, o) in self.words.iter_mut().zip(other) {
            *w = *w & *o;
        }
    }

    #[inline(always)]
    pub fn or_assign(&mut self, other: &[W]) {
        for (w, o) in self.words.iter_mut().zip(other) {
            *w = *w | *o;
        }
    }

    #[inline(always)]
    pub fn test(&self, bit: usize) -> bool {
        self.words[bit / W::BITS] & W::bit(bit % W::BITS) != W::zero()
    }
}
