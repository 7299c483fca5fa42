//! Argument definitions and command implementations for the `strmatch`
//! binary. Commands write to a caller-supplied sink and return the process
//! exit status.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use log::info;

use strmatch::bench::{
    generate_any_sigma, generate_rand_text, load_corpus, run_benchmark, BenchConfig, Measurement,
    Metric, DEFAULT_LENGTHS, DEFAULT_PATTERNS, DESK_TEXT_SIZE, FULL_TEXT_SIZE, PRNG_NAME,
};
use strmatch::registry::{self, AlgorithmDescriptor};
use strmatch::report::{self, CsvMeta, Format};
use strmatch::select::SelectionMap;
use strmatch::verify::{run_verify, Candidate};
use strmatch::{Pattern, Text, WordSpec};

#[derive(Debug, Parser)]
#[command(
    name = "strmatch",
    version,
    about = "Exact string matching algorithms, benchmarks and reports"
)]
pub struct Cli {
    /// More log output on stderr (repeat for debug).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a uniform random text.
    Gen(GenArgs),
    /// Measure algorithms over texts and write measurement CSV.
    Bench(BenchArgs),
    /// Render tables or the best-algorithm map from measurement CSV.
    Report(ReportArgs),
    /// Print every occurrence of a pattern, one position per line.
    Search(SearchArgs),
    /// Check algorithms against the brute-force oracle on random inputs.
    Verify(VerifyArgs),
}

fn parse_word(s: &str) -> Result<WordSpec, String> {
    let bits: u32 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    WordSpec::from_bits(bits).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub sigma: usize,
    /// Size in bytes.
    #[arg(long, default_value_t = FULL_TEXT_SIZE)]
    pub size: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
    /// Accept any alphabet size in 1..=256, not only powers of two.
    #[arg(long)]
    pub allow_any_sigma: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Text file to search; repeatable. The file stem names the text.
    #[arg(long = "text")]
    pub texts: Vec<PathBuf>,
    /// Generate a random text over this many symbols; repeatable.
    #[arg(long = "rand")]
    pub rand: Vec<usize>,
    /// Size of generated texts in bytes.
    #[arg(long, default_value_t = DESK_TEXT_SIZE)]
    pub size: usize,
    /// Comma-separated algorithm ids, or `all`.
    #[arg(long, default_value = "all")]
    pub algos: String,
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_LENGTHS)]
    pub lengths: Vec<usize>,
    /// Patterns per length.
    #[arg(long, default_value_t = DEFAULT_PATTERNS)]
    pub patterns: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value = "time")]
    pub metric: Metric,
    /// Word width for bit-parallel algorithms: 32, 64 or 128.
    #[arg(long, default_value = "64", value_parser = parse_word)]
    pub word: WordSpec,
    /// Measure cells in parallel (reads metric only).
    #[arg(long)]
    pub parallel: bool,
    /// Output CSV; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write mean preprocessing times here (time metric only).
    #[arg(long)]
    pub prep_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// Measurement CSV produced by `bench`.
    #[arg(long = "in")]
    pub input: PathBuf,
    /// md or csv.
    #[arg(long, default_value = "md")]
    pub format: Format,
    /// Render the best-algorithm map instead of tables.
    #[arg(long)]
    pub best_map: bool,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Algorithm id, or `auto` to pick from alphabet size and length.
    #[arg(long, default_value = "auto")]
    pub algo: String,
    /// Pattern bytes; accepts \xNN, \n, \t, \r, \0 and \\ escapes.
    #[arg(long, required_unless_present = "pattern_file")]
    pub pattern: Option<String>,
    /// Read the pattern from a file, verbatim. Overrides --pattern.
    #[arg(long)]
    pub pattern_file: Option<PathBuf>,
    #[arg(long)]
    pub text: PathBuf,
    #[arg(long, default_value = "64", value_parser = parse_word)]
    pub word: WordSpec,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 10_000)]
    pub cases: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Comma-separated algorithm ids, or `all`.
    #[arg(long, default_value = "all")]
    pub algos: String,
    #[arg(long, default_value = "64", value_parser = parse_word)]
    pub word: WordSpec,
}

/// Resolves `all` or a comma-separated id list, keeping the given order.
pub fn parse_algos(spec: &str) -> Result<Vec<&'static AlgorithmDescriptor>> {
    if spec.trim().eq_ignore_ascii_case("all") {
        return Ok(registry::all().iter().collect());
    }
    let mut out: Vec<&'static AlgorithmDescriptor> = Vec::new();
    for id in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let d = registry::get(id)?;
        if !out.contains(&d) {
            out.push(d);
        }
    }
    if out.is_empty() {
        bail!("no algorithms given");
    }
    Ok(out)
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    let f = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
    Ok(BufWriter::new(f))
}

pub fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> Result<i32> {
    let text = if args.allow_any_sigma {
        generate_any_sigma(args.sigma, args.size, args.seed)?
    } else {
        generate_rand_text(args.sigma, args.size, args.seed)?
    };
    std::fs::write(&args.out, text.as_bytes())
        .with_context(|| format!("cannot write {}", args.out.display()))?;
    writeln!(out, "n={} sigma={}", text.len(), args.sigma)?;
    Ok(0)
}

fn text_id(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .filter(|s| !s.is_empty())
        .unwrap_or_else(|| "text".to_string())
}

pub fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<i32> {
    if args.parallel && args.metric == Metric::Time {
        bail!("--parallel is only allowed with --metric reads");
    }
    if args.texts.is_empty() && args.rand.is_empty() {
        bail!("give at least one --text or --rand");
    }
    let algos = parse_algos(&args.algos)?;
    let cfg = BenchConfig {
        lengths: args.lengths.clone(),
        patterns_per_length: args.patterns,
        seed: args.seed,
        metric: args.metric,
        text_size: args.size,
        word: args.word,
        parallel: args.parallel,
    };
    cfg.validate().map_err(anyhow::Error::msg)?;
    let mut texts: Vec<Text> = Vec::new();
    for path in &args.texts {
        texts.push(load_corpus(path, &text_id(path))?);
    }
    for &sigma in &args.rand {
        texts.push(generate_rand_text(sigma, cfg.text_size, cfg.seed)?);
    }
    for t in &texts {
        info!("{}: n={} sigma={}", t.id(), t.len(), t.sigma());
    }
    let ms = run_benchmark(&cfg, &texts, &algos)?;
    let meta = CsvMeta::new()
        .with("prng", PRNG_NAME)
        .with("seed", cfg.seed)
        .with("patterns_per_length", cfg.patterns_per_length)
        .with("word", cfg.word.bits())
        .with("metric", cfg.metric);
    match &args.out {
        Some(path) => {
            let mut w = create(path)?;
            report::write_measurements(&ms, &meta, &mut w)?;
            w.flush()?;
        }
        None => report::write_measurements(&ms, &meta, &mut *out)?,
    }
    if let Some(path) = &args.prep_out {
        let mut w = create(path)?;
        report::write_preprocessing(&ms, &mut w)?;
        w.flush()?;
    }
    Ok(0)
}

fn group_by_text(ms: Vec<Measurement>) -> Vec<Vec<Measurement>> {
    let mut groups: Vec<Vec<Measurement>> = Vec::new();
    for m in ms {
        match groups.iter_mut().find(|g| g[0].text_id == m.text_id) {
            Some(g) => g.push(m),
            None => groups.push(vec![m]),
        }
    }
    groups
}

pub fn cmd_report(args: &ReportArgs, out: &mut dyn Write) -> Result<i32> {
    let f =
        File::open(&args.input).with_context(|| format!("cannot open {}", args.input.display()))?;
    let (_, ms) = report::read_measurements(BufReader::new(f))
        .with_context(|| format!("cannot parse {}", args.input.display()))?;
    if args.best_map {
        let map = report::render_best_map(&ms, &SelectionMap::default());
        match args.format {
            Format::Markdown => out.write_all(map.to_markdown().as_bytes())?,
            Format::Csv => out.write_all(map.to_csv()?.as_bytes())?,
        }
        return Ok(0);
    }
    let groups = group_by_text(ms);
    if groups.is_empty() {
        out.write_all(report::render_table(&[], args.format)?.as_bytes())?;
        return Ok(0);
    }
    for (i, g) in groups.iter().enumerate() {
        let doc = report::render_table(g, args.format)?;
        match args.format {
            Format::Markdown => {
                if i > 0 {
                    writeln!(out)?;
                }
                out.write_all(doc.as_bytes())?;
            }
            Format::Csv => {
                let body = if i == 0 {
                    &doc[..]
                } else {
                    doc.split_once('\n').map_or("", |x| x.1)
                };
                out.write_all(body.as_bytes())?;
            }
        }
    }
    Ok(0)
}

pub fn cmd_search(args: &SearchArgs, out: &mut dyn Write) -> Result<i32> {
    let pattern = match (&args.pattern_file, &args.pattern) {
        (Some(path), _) => {
            let bytes =
                std::fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
            Pattern::new(bytes)?
        }
        (None, Some(src)) => Pattern::parse_escaped(src)?,
        (None, None) => bail!("a pattern is required"),
    };
    let text = Text::from_file(text_id(&args.text), &args.text)?;
    let m = pattern.len();
    let algo = if args.algo.eq_ignore_ascii_case("auto") {
        let d = SelectionMap::default().resolve(text.sigma(), m, args.word);
        info!("auto: sigma={} m={} -> {}", text.sigma(), m, d.id);
        d
    } else {
        registry::get(&args.algo)?
    };
    let searcher = algo.build_with(&pattern, args.word)?;
    let occ = searcher.find_all(text.as_bytes());
    for p in occ.iter() {
        writeln!(out, "{p}")?;
    }
    Ok(if occ.is_empty() { 1 } else { 0 })
}

/// Runs the differential check over the selected registry entries plus
/// `extra` candidates.
pub fn cmd_verify(
    args: &VerifyArgs,
    extra: Vec<Candidate<'_>>,
    out: &mut dyn Write,
) -> Result<i32> {
    let mut cands: Vec<Candidate<'_>> = parse_algos(&args.algos)?
        .into_iter()
        .map(|d| Candidate::from_descriptor(d, args.word))
        .collect();
    cands.extend(extra);
    let report = run_verify(&cands, args.cases, args.seed);
    for (id, n) in &report.counts {
        let bad = report
            .mismatches
            .iter()
            .filter(|m| &m.algorithm == id)
            .count();
        writeln!(out, "{id:<10} {n:>7} cases {bad:>5} mismatches")?;
    }
    for mm in &report.mismatches {
        writeln!(out, "{mm}")?;
    }
    writeln!(
        out,
        "{} cases, {} checks, {} mismatches",
        args.cases,
        report.total_checks(),
        report.mismatches.len()
    )?;
    Ok(if report.passed() { 0 } else { 1 })
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Gen(a) => cmd_gen(a, out),
        Command::Bench(a) => cmd_bench(a, out),
        Command::Report(a) => cmd_report(a, out),
        Command::Search(a) => cmd_search(a, out),
        Command::Verify(a) => cmd_verify(a, Vec::new(), out),
    }
}

pub fn init_logging(verbose: u8) {
    let level = match verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    let _ = env_logger::Builder::new()
        .filter_level(level)
        .format_timestamp(None)
        .target(env_logger::Target::Stderr)
        .try_init();
}
