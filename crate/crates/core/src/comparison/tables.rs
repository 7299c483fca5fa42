/// Per-character window advance.
#[derive(Clone)]
pub struct BadCharTable {
    shift: [u32; 256],
}

impl BadCharTable {
    /// Horspool: keyed on the text character under the last pattern
    /// position. Shifts lie in `[1, m]`.
    pub fn horspool(p: &[u8]) -> Self {
        let m = p.len();
        let mut shift = [m as u32; 256];
        for (i, &c) in p[..m - 1].iter().enumerate() {
            shift[c as usize] = (m - 1 - i) as u32;
        }
        BadCharTable { shift }
    }

    /// Quick-Search: keyed on the character just past the window. Shifts lie
    /// in `[1, m + 1]`.
    pub fn quick_search(p: &[u8]) -> Self {
        let m = p.len();
        let mut shift = [(m + 1) as u32; 256];
        for (i, &c) in p.iter().enumerate() {
            shift[c as usize] = (m - i) as u32;
        }
        BadCharTable { shift }
    }

    #[inline(always)]
    pub fn get(&self, c: u8) -> usize {
        self.shift[c as usize] as usize
    }

    pub fn values(&self) -> &[u32; 256] {
        &self.shift
    }
}

/// Berry-Ravindran shift keyed on the two characters following the window.
/// Shifts lie in `[1, m + 2]`.
#[derive(Clone)]
pub struct PairShiftTable {
    shift: Vec<u32>,
}

impl PairShiftTable {
    pub fn new(p: &[u8]) -> Self {
        let m = p.len();
        let mut shift = vec![(m + 2) as u32; 1 << 16];
        // later assignments are always smaller, so plain overwrites keep the minimum
        for a in 0..256usize {
            shift[a << 8 | p[0] as usize] = (m + 1) as u32;
        }
        for i in 0..m - 1 {
            shift[(p[i] as usize) << 8 | p[i + 1] as usize] = (m - i) as u32;
        }
        for b in 0..256usize {
            shift[(p[m - 1] as usize) << 8 | b] = 1;
        }
        PairShiftTable { shift }
    }

    #[inline(always)]
    pub fn get(&self, a: u8, b: u8) -> usize {
        self.shift[(a as usize) << 8 | b as usize] as usize
    }

    pub fn values(&self) -> &[u32] {
        &self.shift
    }
}

/// `border[j]` is the length of the longest proper border of `p[..j]`, for
/// `j` in `1..=m`; `border[0]` is 0.
pub(crate) fn borders(p: &[u8]) -> Vec<usize> {
    let m = p.len();
    let mut border = vec![0usize; m + 1];
    let mut k = 0;
    for j in 1..m {
        while k > 0 && p[j] != p[k] {
            k = border[k];
        }
        if p[j] == p[k] {
            k += 1;
        }
        border[j + 1] = k;
    }
    border
}

/// Smallest period of `p`: the safe advance after reporting a match.
pub(crate) fn period(p: &[u8]) -> usize {
    p.len() - borders(p)[p.len()]
}
