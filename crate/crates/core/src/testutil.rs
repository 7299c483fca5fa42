//! Randomized differential checks shared by the algorithm unit tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::oracle::brute_force_search;
use crate::searcher::Searcher;
use crate::text::Pattern;

pub(crate) const SIGMAS: [usize; 9] = [1, 2, 4, 8, 16, 32, 64, 128, 256];

pub(crate) struct Case {
    pub sigma: usize,
    pub text: Vec<u8>,
    pub pattern: Vec<u8>,
}

/// Random text over `sigma` symbols with a pattern that is either extracted
/// from the text, periodic, or independent, and sometimes planted several
/// times.
pub(crate) fn random_case(
    rng: &mut ChaCha8Rng,
    sigmas: &[usize],
    m_range: (usize, usize),
    n_max: usize,
) -> Case {
    let sigma = sigmas[rng.gen_range(0..sigmas.len())];
    let m = rng.gen_range(m_range.0..=m_range.1);
    let n = rng.gen_range(0..=n_max.max(m));
    let sym = |rng: &mut ChaCha8Rng| rng.gen_range(0..sigma) as u8;
    let mut text: Vec<u8> = (0..n).map(|_| sym(rng)).collect();
    let pattern: Vec<u8> = match rng.gen_range(0..4) {
        0 if n >= m => {
            let i = rng.gen_range(0..=n - m);
            text[i..i + m].to_vec()
        }
        1 => {
            let period = rng.gen_range(1..=m.min(4));
            let unit: Vec<u8> = (0..period).map(|_| sym(rng)).collect();
            (0..m).map(|k| unit[k % period]).collect()
        }
        _ => (0..m).map(|_| sym(rng)).collect(),
    };
    if n >= m && rng.gen_bool(0.5) {
        for _ in 0..rng.gen_range(1..4) {
            let i = rng.gen_range(0..=n - m);
            text[i..i + m].copy_from_slice(&pattern);
        }
    }
    Case {
        sigma,
        text,
        pattern,
    }
}

/// Runs `cases` random instances through `build` and compares against the
/// brute-force oracle, panicking with a reproducer on the first mismatch.
pub(crate) fn check_against_oracle<S, F>(
    seed: u64,
    cases: usize,
    m_range: (usize, usize),
    n_max: usize,
    build: F,
) where
    S: Searcher,
    F: Fn(&Pattern) -> S,
{
    check_with_sigmas(seed, cases, &SIGMAS, m_range, n_max, build)
}

pub(crate) fn check_with_sigmas<S, F>(
    seed: u64,
    cases: usize,
    sigmas: &[usize],
    m_range: (usize, usize),
    n_max: usize,
    build: F,
) where
    S: Searcher,
    F: Fn(&Pattern) -> S,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for case_no in 0..cases {
        let case = random_case(&mut rng, sigmas, m_range, n_max);
        let p = Pattern::new(case.pattern.clone()).unwrap();
        let searcher = build(&p);
        let got = searcher.find_all(&case.text);
        let want = brute_force_search(&p, &case.text);
        assert_eq!(
            got,
            want,
            "{} mismatch on case {case_no} (seed {seed}, sigma {}, n {}, m {}): pattern {:?}",
            searcher.name(),
            case.sigma,
            case.text.len(),
            case.pattern.len(),
            p
        );
    }
}

pub(crate) fn pat(s: &[u8]) -> Pattern {
    Pattern::new(s.to_vec()).unwrap()
}
