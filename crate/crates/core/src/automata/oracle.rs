/// Factor oracle of a word.
///
/// Has `m + 1` states, all of them accepting; every factor of the word is
/// spelled by some path from state 0, and some non-factors may be too.
/// Transitions live in a dense `(m + 1) x 256` table for constant-time
/// stepping.
#[derive(Clone)]
pub struct FactorOracle {
    delta: Vec<u32>,
    states: usize,
}

pub(crate) const NONE: u32 = u32::MAX;

impl FactorOracle {
    /// Builds the oracle of `word` in linear time using supply links.
    pub fn new(word: &[u8]) -> Self {
        let m = word.len();
        let states = m + 1;
        let mut delta = vec![NONE; states * 256];
        let mut supply = vec![0usize; states];
        let mut supply_none = vec![false; states];
        supply_none[0] = true;
        for i in 1..=m {
            let a = word[i - 1] as usize;
            delta[(i - 1) * 256 + a] = i as u32;
            let mut k = i - 1;
            let mut k_none = supply_none[k];
            k = supply[k];
            while !k_none && delta[k * 256 + a] == NONE {
                delta[k * 256 + a] = i as u32;
                k_none = supply_none[k];
                k = supply[k];
            }
            if k_none {
                supply[i] = 0;
            } else {
                supply[i] = delta[k * 256 + a] as usize;
            }
        }
        FactorOracle { delta, states }
    }

    /// Oracle of the reversed pattern, as used for backward window scans.
    pub fn reversed(p: &[u8]) -> Self {
        let rev: Vec<u8> = p.iter().rev().copied().collect();
        FactorOracle::new(&rev)
    }

    pub fn state_count(&self) -> usize {
        self.states
    }

    #[inline(always)]
    pub fn step(&self, state: u32, c: u8) -> Option<u32> {
        let next = self.raw_step(state, c);
        (next != NONE).then_some(next)
    }

    #[inline(always)]
    pub(crate) fn raw_step(&self, state: u32, c: u8) -> u32 {
        self.delta[state as usize * 256 + c as usize]
    }

    /// Whether `word` labels a path from the initial state.
    pub fn accepts(&self, word: &[u8]) -> bool {
        word.iter()
            .try_fold(0u32, |q, &c| self.step(q, c))
            .is_some()
    }

    /// All transitions as `(from, symbol, to)`.
    pub fn transitions(&self) -> impl Iterator<Item = (u32, u8, u32)> + '_ {
        self.delta.iter().enumerate().filter_map(|(idx, &to)| {
            (to != NONE).then_some(((idx / 256) as u32, (idx % 256) as u8, to))
        })
    }
}

impl std::fmt::Debug for FactorOracle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FactorOracle")
            .field("states", &self.states)
            .field("transitions", &self.transitions().count())
            .finish()
    }
}
