//! Benchmark harness: random texts, corpus loading, pattern sampling and
//! measurement in wall-clock time or in character reads.

use std::fmt;
use std::hint::black_box;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use log::{debug, warn};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::registry::{AlgorithmDescriptor, Family};
use crate::searcher::Searcher;
use crate::text::{InstrumentedText, Pattern, Text};
use crate::word::WordSpec;

/// Name of the generator behind every random choice in this module.
pub const PRNG_NAME: &str = "ChaCha8Rng";

pub const DEFAULT_LENGTHS: [usize; 10] = [2, 4, 8, 16, 32, 64, 128, 256, 512, 1024];
pub const DEFAULT_PATTERNS: usize = 400;
/// 5 MiB, the size of the generated texts in the original protocol.
pub const FULL_TEXT_SIZE: usize = 5 << 20;
pub const DESK_TEXT_SIZE: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Metric {
    /// Milliseconds per search.
    Time,
    /// Text characters inspected per search.
    Reads,
}

impl Metric {
    pub fn as_str(self) -> &'static str {
        match self {
            Metric::Time => "time",
            Metric::Reads => "reads",
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Metric {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "time" => Ok(Metric::Time),
            "reads" => Ok(Metric::Reads),
            _ => Err(format!("unknown metric `{s}` (expected time or reads)")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub lengths: Vec<usize>,
    pub patterns_per_length: usize,
    pub seed: u64,
    pub metric: Metric,
    pub text_size: usize,
    pub word: WordSpec,
    /// Run independent cells on the rayon pool. Only honored for reads.
    pub parallel: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            lengths: DEFAULT_LENGTHS.to_vec(),
            patterns_per_length: DEFAULT_PATTERNS,
            seed: 0,
            metric: Metric::Time,
            text_size: FULL_TEXT_SIZE,
            word: WordSpec::DEFAULT,
            parallel: false,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> std::result::Result<(), String> {
        if self.lengths.is_empty() {
            return Err("no pattern lengths given".into());
        }
        if self.lengths[0] == 0 {
            return Err("pattern lengths must be positive".into());
        }
        if !self.lengths.windows(2).all(|w| w[0] < w[1]) {
            return Err("pattern lengths must be strictly increasing".into());
        }
        if self.patterns_per_length == 0 {
            return Err("at least one pattern per length is required".into());
        }
        Ok(())
    }
}

/// One (text, algorithm, m) cell of a results table.
#[derive(Clone, Debug, PartialEq)]
pub struct Measurement {
    pub text_id: String,
    pub sigma: usize,
    pub family: Family,
    pub algorithm: String,
    pub m: usize,
    pub runs: usize,
    pub mean: f64,
    pub stddev: f64,
    pub mean_occurrences: f64,
    pub metric: Metric,
    /// Mean preprocessing time in milliseconds, when timed.
    pub preprocessing_ms: Option<f64>,
}

fn is_paper_sigma(sigma: usize) -> bool {
    sigma.is_power_of_two() && (2..=256).contains(&sigma)
}

/// Uniform i.i.d. text over `{0, .., sigma - 1}`, named `rand<sigma>`.
///
/// `sigma` must be a power of two between 2 and 256.
pub fn generate_rand_text(sigma: usize, size: usize, seed: u64) -> Result<Text> {
    if !is_paper_sigma(sigma) {
        return Err(Error::BadSigma(sigma));
    }
    generate_any_sigma(sigma, size, seed)
}

/// Like [`generate_rand_text`] for any alphabet size in `1..=256`.
pub fn generate_any_sigma(sigma: usize, size: usize, seed: u64) -> Result<Text> {
    if !(1..=256).contains(&sigma) {
        return Err(Error::BadSigma(sigma));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bytes: Vec<u8> = if sigma.is_power_of_two() {
        let mut buf = vec![0u8; size];
        rng.fill(&mut buf[..]);
        let mask = (sigma - 1) as u8;
        buf.iter_mut().for_each(|b| *b &= mask);
        buf
    } else {
        (0..size).map(|_| rng.gen_range(0..sigma) as u8).collect()
    };
    Text::new(format!("rand{sigma}"), bytes)
}

/// Reference sizes of the real-world corpora.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KnownCorpus {
    pub id: &'static str,
    pub len: usize,
    pub sigma: usize,
    pub description: &'static str,
}

pub const KNOWN_CORPORA: [KnownCorpus; 4] = [
    KnownCorpus {
        id: "ecoli",
        len: 4_638_690,
        sigma: 4,
        description: "E. coli genome",
    },
    KnownCorpus {
        id: "bible",
        len: 4_047_392,
        sigma: 63,
        description: "King James Bible",
    },
    KnownCorpus {
        id: "world192",
        len: 2_473_400,
        sigma: 94,
        description: "CIA World Fact Book",
    },
    KnownCorpus {
        id: "hs",
        len: 3_295_751,
        sigma: 20,
        description: "Homo sapiens protein sequence",
    },
];

pub fn known_corpus(id: &str) -> Option<&'static KnownCorpus> {
    KNOWN_CORPORA.iter().find(|c| c.id.eq_ignore_ascii_case(id))
}

/// Loads a corpus file as raw bytes under the id `expected_id`.
///
/// For the known corpora a length or alphabet mismatch is logged as a
/// warning; editions of these files differ.
pub fn load_corpus(path: impl AsRef<Path>, expected_id: &str) -> Result<Text> {
    let text = Text::from_file(expected_id, path)?;
    if let Some(k) = known_corpus(expected_id) {
        if text.len() != k.len {
            warn!("{}: {} bytes, expected {}", expected_id, text.len(), k.len);
        }
        let sigma = text.sigma();
        if sigma.abs_diff(k.sigma) > k.sigma / 10 + 1 {
            warn!(
                "{}: alphabet size {}, expected about {}",
                expected_id, sigma, k.sigma
            );
        }
    }
    Ok(text)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampledPattern {
    pub pattern: Pattern,
    /// Where the pattern was cut from the text.
    pub position: usize,
}

/// `count` factors of length `m` taken at uniform random positions.
pub fn sample_patterns(t: &Text, m: usize, count: usize, seed: u64) -> Result<Vec<SampledPattern>> {
    if m == 0 {
        return Err(Error::EmptyPattern);
    }
    if m > t.len() {
        return Err(Error::PatternLongerThanText { m, n: t.len() });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bytes = t.as_bytes();
    (0..count)
        .map(|_| {
            let position = rng.gen_range(0..=t.len() - m);
            Ok(SampledPattern {
                pattern: Pattern::new(&bytes[position..position + m])?,
                position,
            })
        })
        .collect()
}

/// Seed used for the patterns of length `m`.
pub fn pattern_seed(seed: u64, m: usize) -> u64 {
    seed ^ (m as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn mean_stddev(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

fn measure_cell(
    cfg: &BenchConfig,
    text: &Text,
    sigma: usize,
    algo: &AlgorithmDescriptor,
    patterns: &[SampledPattern],
) -> Option<Measurement> {
    let m = patterns.first()?.pattern.len();
    let bytes = text.as_bytes();
    let mut values = Vec::with_capacity(patterns.len());
    let mut prep = Vec::with_capacity(patterns.len());
    let mut occurrences = 0usize;
    for (i, sp) in patterns.iter().enumerate() {
        let start = Instant::now();
        let searcher = match algo.build_with(&sp.pattern, cfg.word) {
            Ok(s) => s,
            Err(e) => {
                debug!("skipping {}: {e}", algo.id);
                return None;
            }
        };
        prep.push(start.elapsed().as_secs_f64() * 1e3);
        match cfg.metric {
            Metric::Time => {
                if i == 0 {
                    black_box(searcher.find_all(bytes));
                }
                let start = Instant::now();
                let occ = black_box(searcher.find_all(black_box(bytes)));
                values.push(start.elapsed().as_secs_f64() * 1e3);
                occurrences += occ.len();
            }
            Metric::Reads => {
                let it = InstrumentedText::new(bytes);
                let occ = searcher.find_all_metered(&it);
                values.push(it.reads() as f64);
                occurrences += occ.len();
            }
        }
    }
    let (mean, stddev) = mean_stddev(&values);
    Some(Measurement {
        text_id: text.id().to_string(),
        sigma,
        family: algo.family,
        algorithm: algo.id.to_string(),
        m,
        runs: patterns.len(),
        mean,
        stddev,
        mean_occurrences: occurrences as f64 / patterns.len() as f64,
        metric: cfg.metric,
        preprocessing_ms: (cfg.metric == Metric::Time).then(|| mean_stddev(&prep).0),
    })
}

/// Measures every applicable (text, algorithm, m) cell.
///
/// Rows come out ordered by text, then `m`, then the order of `algos`.
/// Cells where an algorithm does not apply, or `m` exceeds the text, are
/// left out.
pub fn run_benchmark(
    cfg: &BenchConfig,
    texts: &[Text],
    algos: &[&AlgorithmDescriptor],
) -> Result<Vec<Measurement>> {
    cfg.validate().map_err(Error::InvalidConfig)?;
    let mut out = Vec::new();
    for text in texts {
        let sigma = text.sigma();
        for &m in &cfg.lengths {
            if m > text.len() {
                warn!("{}: skipping m = {m}, longer than the text", text.id());
                continue;
            }
            let patterns =
                sample_patterns(text, m, cfg.patterns_per_length, pattern_seed(cfg.seed, m))?;
            let cells: Vec<&AlgorithmDescriptor> = algos
                .iter()
                .copied()
                .filter(|a| a.is_applicable(m, cfg.word))
                .collect();
            let rows: Vec<Option<Measurement>> = if cfg.parallel && cfg.metric == Metric::Reads {
                cells
                    .par_iter()
                    .map(|a| measure_cell(cfg, text, sigma, a, &patterns))
                    .collect()
            } else {
                cells
                    .iter()
                    .map(|a| measure_cell(cfg, text, sigma, a, &patterns))
                    .collect()
            };
            out.extend(rows.into_iter().flatten());
        }
    }
    Ok(out)
}
