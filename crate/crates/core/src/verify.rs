//! Randomized differential testing of searchers against the brute-force
//! oracle.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::ApplicabilityError;
use crate::oracle::brute_force_search;
use crate::registry::AlgorithmDescriptor;
use crate::searcher::Searcher;
use crate::text::Pattern;
use crate::word::WordSpec;

pub const VERIFY_SIGMAS: [usize; 8] = [2, 4, 8, 16, 32, 64, 128, 256];
pub const MAX_TEXT: usize = 4096;

type BuildFn<'a> = dyn Fn(&Pattern) -> Result<Box<dyn Searcher>, ApplicabilityError> + Sync + 'a;

/// Something to check: a name, the lengths it accepts and a constructor.
pub struct Candidate<'a> {
    pub id: String,
    pub m_min: usize,
    pub m_max: usize,
    build: Box<BuildFn<'a>>,
}

impl<'a> Candidate<'a> {
    pub fn new(
        id: impl Into<String>,
        m_min: usize,
        m_max: usize,
        build: impl Fn(&Pattern) -> Result<Box<dyn Searcher>, ApplicabilityError> + Sync + 'a,
    ) -> Self {
        Candidate {
            id: id.into(),
            m_min,
            m_max,
            build: Box::new(build),
        }
    }

    /// A registry entry, with lengths capped at [`MAX_TEXT`].
    pub fn from_descriptor(d: &'static AlgorithmDescriptor, word: WordSpec) -> Candidate<'static> {
        Candidate::new(
            d.id,
            d.m_min,
            d.max_len(word).unwrap_or(MAX_TEXT).min(MAX_TEXT),
            move |p| d.build_with(p, word),
        )
    }

    fn applies(&self, m: usize) -> bool {
        (self.m_min..=self.m_max).contains(&m)
    }
}

/// A generated instance, reproducible from its seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyCase {
    pub seed: u64,
    pub sigma: usize,
    pub text: Vec<u8>,
    pub pattern: Vec<u8>,
}

/// Draws a case with `m` log-uniform in `[m_lo, m_hi]` and `n` in
/// `[m, MAX_TEXT]`. Half of the cases plant the pattern a few times.
pub fn generate_case(seed: u64, m_lo: usize, m_hi: usize) -> VerifyCase {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sigma = VERIFY_SIGMAS[rng.gen_range(0..VERIFY_SIGMAS.len())];
    let bits_lo = usize::BITS - m_lo.leading_zeros();
    let bits_hi = usize::BITS - m_hi.leading_zeros();
    let bits = rng.gen_range(bits_lo..=bits_hi);
    let lo = (1usize << (bits - 1)).max(m_lo);
    let hi = ((1usize << bits) - 1).min(m_hi);
    let m = rng.gen_range(lo..=hi);
    let n = rng.gen_range(m..=MAX_TEXT.max(m));
    let sym = |rng: &mut ChaCha8Rng| rng.gen_range(0..sigma) as u8;
    let mut text: Vec<u8> = (0..n).map(|_| sym(&mut rng)).collect();
    let pattern: Vec<u8> = match rng.gen_range(0..3) {
        0 => {
            let i = rng.gen_range(0..=n - m);
            text[i..i + m].to_vec()
        }
        1 => {
            let period = rng.gen_range(1..=m.min(5));
            let unit: Vec<u8> = (0..period).map(|_| sym(&mut rng)).collect();
            (0..m).map(|k| unit[k % period]).collect()
        }
        _ => (0..m).map(|_| sym(&mut rng)).collect(),
    };
    if rng.gen_bool(0.5) {
        for _ in 0..rng.gen_range(1..=3) {
            let i = rng.gen_range(0..=n - m);
            text[i..i + m].copy_from_slice(&pattern);
        }
    }
    VerifyCase {
        seed,
        sigma,
        text,
        pattern,
    }
}

/// Seed of case `index` in a run seeded with `seed`.
pub fn case_seed(seed: u64, index: usize) -> u64 {
    seed.wrapping_mul(0x2545_F491_4F6C_DD1D)
        .wrapping_add(index as u64)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub algorithm: String,
    pub case_seed: u64,
    pub sigma: usize,
    pub n: usize,
    pub m: usize,
    /// Positions the oracle reports and the algorithm missed.
    pub missing: Vec<usize>,
    /// Positions the algorithm reports that are not occurrences.
    pub spurious: Vec<usize>,
    /// Shortest text prefix on which the outputs still differ.
    pub min_n: usize,
    pub error: Option<String>,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MISMATCH {}: sigma={} seed={} n={} m={} min_n={}",
            self.algorithm, self.sigma, self.case_seed, self.n, self.m, self.min_n
        )?;
        if let Some(e) = &self.error {
            return write!(f, " error: {e}");
        }
        write!(
            f,
            " missing={:?} spurious={:?}",
            self.missing, self.spurious
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    /// Cases run per candidate, in candidate order.
    pub counts: Vec<(String, usize)>,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn total_checks(&self) -> usize {
        self.counts.iter().map(|c| c.1).sum()
    }
}

fn diff(want: &[usize], got: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let missing = want
        .iter()
        .filter(|x| got.binary_search(x).is_err())
        .copied()
        .collect();
    let spurious = got
        .iter()
        .filter(|x| want.binary_search(x).is_err())
        .copied()
        .collect();
    (missing, spurious)
}

fn differs(s: &dyn Searcher, p: &Pattern, t: &[u8]) -> bool {
    s.find_all(t) != brute_force_search(p, t)
}

/// Shortest prefix of `t` on which `s` still disagrees with the oracle.
fn shrink(s: &dyn Searcher, p: &Pattern, t: &[u8]) -> usize {
    let (mut lo, mut hi) = (p.len(), t.len());
    if !differs(s, p, &t[..hi]) {
        return hi;
    }
    // bisection is a heuristic: failures need not be monotone in n
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if differs(s, p, &t[..mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    hi
}

/// Runs `cases` random instances; every candidate applicable at the
/// instance's `m` is compared against the oracle. Lengths are drawn from the
/// union of the candidates' ranges.
pub fn run_verify(candidates: &[Candidate<'_>], cases: usize, seed: u64) -> VerifyReport {
    let mut report = VerifyReport {
        counts: candidates.iter().map(|c| (c.id.clone(), 0)).collect(),
        mismatches: Vec::new(),
    };
    let Some(m_lo) = candidates.iter().map(|c| c.m_min).min() else {
        return report;
    };
    let m_hi = candidates
        .iter()
        .map(|c| c.m_max)
        .max()
        .unwrap_or(m_lo)
        .max(m_lo);
    for i in 0..cases {
        let case = generate_case(case_seed(seed, i), m_lo, m_hi);
        let p = Pattern::new(case.pattern.clone()).expect("generated patterns are non-empty");
        let m = p.len();
        let n = case.text.len();
        let want = brute_force_search(&p, &case.text);
        for (ci, c) in candidates.iter().enumerate() {
            if !c.applies(m) {
                continue;
            }
            report.counts[ci].1 += 1;
            let mismatch = |missing, spurious, min_n, error| Mismatch {
                algorithm: c.id.clone(),
                case_seed: case.seed,
                sigma: case.sigma,
                n,
                m,
                missing,
                spurious,
                min_n,
                error,
            };
            let s = match (c.build)(&p) {
                Ok(s) => s,
                Err(e) => {
                    report
                        .mismatches
                        .push(mismatch(vec![], vec![], n, Some(e.to_string())));
                    continue;
                }
            };
            let got = s.find_all(&case.text);
            if got != want {
                let (missing, spurious) = diff(&want, &got);
                let min_n = shrink(s.as_ref(), &p, &case.text);
                report
                    .mismatches
                    .push(mismatch(missing, spurious, min_n, None));
            }
        }
    }
    report
}
