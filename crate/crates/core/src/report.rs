//! Result tables, measurement CSV files and the best-algorithm map.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::io::{BufRead, Write};
use std::str::FromStr;

use crate::bench::{Measurement, Metric};
use crate::error::{Error, Result};
use crate::registry::{self, Family};
use crate::select::{classify, MClass, Provenance, SelectionMap, SigmaClass};

pub const CSV_HEADER: [&str; 9] = [
    "text_id",
    "sigma",
    "family",
    "algorithm",
    "m",
    "mean",
    "stddev",
    "mean_occurrences",
    "metric",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Markdown,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "md" | "markdown" => Ok(Format::Markdown),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown format `{s}` (expected md or csv)")),
        }
    }
}

/// `# key=value` lines written ahead of the CSV header.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CsvMeta {
    pub entries: Vec<(String, String)>,
}

impl CsvMeta {
    pub fn new() -> Self {
        CsvMeta::default()
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.entries.push((key.to_string(), value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

/// Writes measurements with full float precision.
pub fn write_measurements<W: Write>(ms: &[Measurement], meta: &CsvMeta, mut out: W) -> Result<()> {
    for (k, v) in &meta.entries {
        writeln!(out, "# {k}={v}").map_err(csv::Error::from)?;
    }
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for m in ms {
        w.write_record([
            m.text_id.clone(),
            m.sigma.to_string(),
            m.family.to_string(),
            m.algorithm.clone(),
            m.m.to_string(),
            m.mean.to_string(),
            m.stddev.to_string(),
            m.mean_occurrences.to_string(),
            m.metric.to_string(),
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// Writes `text_id,algorithm,m,preprocessing_ms` for timed rows.
pub fn write_preprocessing<W: Write>(ms: &[Measurement], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["text_id", "algorithm", "m", "preprocessing_ms"])?;
    for m in ms {
        if let Some(p) = m.preprocessing_ms {
            w.write_record([
                m.text_id.clone(),
                m.algorithm.clone(),
                m.m.to_string(),
                p.to_string(),
            ])?;
        }
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

fn field<T: FromStr>(rec: &csv::StringRecord, i: usize, line: u64) -> Result<T> {
    let raw = rec.get(i).unwrap_or("");
    raw.trim().parse().map_err(|_| Error::Parse {
        line,
        reason: format!("invalid {} `{raw}`", CSV_HEADER[i]),
    })
}

/// Parses a measurement file written by [`write_measurements`].
///
/// `runs` is taken from the `patterns_per_length` metadata entry, or 0.
pub fn read_measurements<R: BufRead>(input: R) -> Result<(CsvMeta, Vec<Measurement>)> {
    let mut meta = CsvMeta::new();
    let mut body = String::new();
    let mut first_body_line = 0u64;
    for (i, line) in input.lines().enumerate() {
        let line = line.map_err(csv::Error::from)?;
        let line_no = i as u64 + 1;
        if body.is_empty() {
            if let Some(rest) = line.strip_prefix('#') {
                if let Some((k, v)) = rest.trim().split_once('=') {
                    meta.entries
                        .push((k.trim().to_string(), v.trim().to_string()));
                }
                continue;
            }
            if line.trim().is_empty() {
                continue;
            }
            first_body_line = line_no;
        }
        body.push_str(&line);
        body.push('\n');
    }
    if body.is_empty() {
        return Ok((meta, Vec::new()));
    }
    let runs = meta
        .get("patterns_per_length")
        .and_then(|v| v.parse().ok())
        .unwrap_or(0);
    let mut r = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(body.as_bytes());
    let header = r.headers()?.clone();
    if header.iter().map(str::trim).ne(CSV_HEADER) {
        return Err(Error::Parse {
            line: first_body_line,
            reason: format!("expected header `{}`", CSV_HEADER.join(",")),
        });
    }
    let mut out = Vec::new();
    for rec in r.records() {
        let rec = rec.map_err(|e| Error::Parse {
            line: first_body_line - 1 + e.position().map_or(0, |p| p.line()),
            reason: e.to_string(),
        })?;
        let line = first_body_line - 1 + rec.position().map_or(0, |p| p.line());
        let family_raw = rec.get(2).unwrap_or("");
        let family = Family::parse(family_raw.trim()).ok_or_else(|| Error::Parse {
            line,
            reason: format!("invalid family `{family_raw}`"),
        })?;
        let metric_raw = rec.get(8).unwrap_or("");
        let metric: Metric = metric_raw
            .trim()
            .parse()
            .map_err(|reason| Error::Parse { line, reason })?;
        let text_id: String = field(&rec, 0, line)?;
        let algorithm: String = field(&rec, 3, line)?;
        if text_id.is_empty() || algorithm.is_empty() {
            return Err(Error::Parse {
                line,
                reason: "empty text_id or algorithm".into(),
            });
        }
        let mean: f64 = field(&rec, 5, line)?;
        let stddev: f64 = field(&rec, 6, line)?;
        let mean_occurrences: f64 = field(&rec, 7, line)?;
        if !(mean >= 0.0 && stddev >= 0.0 && mean_occurrences >= 0.0) {
            return Err(Error::Parse {
                line,
                reason: "negative or non-numeric value".into(),
            });
        }
        out.push(Measurement {
            text_id,
            sigma: field(&rec, 1, line)?,
            family,
            algorithm,
            m: field(&rec, 4, line)?,
            runs,
            mean,
            stddev,
            mean_occurrences,
            metric,
            preprocessing_ms: None,
        });
    }
    Ok((meta, out))
}

/// Paper-style value: two decimals below 10, one below 100, none above.
pub fn format_value(v: f64) -> String {
    if v < 10.0 {
        format!("{v:.2}")
    } else if v < 100.0 {
        format!("{v:.1}")
    } else {
        format!("{v:.0}")
    }
}

fn tie_order(a: &Measurement, b: &Measurement) -> Ordering {
    a.mean
        .total_cmp(&b.mean)
        .then(a.family.cmp(&b.family))
        .then(a.algorithm.cmp(&b.algorithm))
}

fn row_order(a: &(Family, String), b: &(Family, String)) -> Ordering {
    let pos = |id: &str| registry::position(id).unwrap_or(usize::MAX);
    a.0.cmp(&b.0)
        .then(pos(&a.1).cmp(&pos(&b.1)))
        .then(a.1.cmp(&b.1))
}

/// One rendered results table for a single text.
#[derive(Clone, Debug, PartialEq)]
pub struct ResultTable {
    pub text_id: Option<String>,
    pub sigma: Option<usize>,
    pub metric: Option<Metric>,
    pub columns: Vec<usize>,
    pub rows: Vec<TableRow>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TableRow {
    pub family: Family,
    pub algorithm: String,
    /// One entry per column; `None` where the algorithm was not run.
    pub cells: Vec<Option<TableCell>>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TableCell {
    pub mean: f64,
    /// 1 for the best value of the column.
    pub rank: usize,
}

impl TableCell {
    pub fn is_best(&self) -> bool {
        self.rank == 1
    }
}

impl ResultTable {
    /// Arranges measurements of a single text into rows and columns.
    pub fn build(ms: &[Measurement]) -> Result<ResultTable> {
        if let Some(first) = ms.first() {
            if let Some(other) = ms.iter().find(|m| m.text_id != first.text_id) {
                return Err(Error::MixedTexts(
                    first.text_id.clone(),
                    other.text_id.clone(),
                ));
            }
        }
        let columns: Vec<usize> = ms
            .iter()
            .map(|m| m.m)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut keys: Vec<(Family, String)> = ms
            .iter()
            .map(|m| (m.family, m.algorithm.clone()))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        keys.sort_by(row_order);
        let mut rows: Vec<TableRow> = keys
            .into_iter()
            .map(|(family, algorithm)| TableRow {
                family,
                algorithm,
                cells: vec![None; columns.len()],
            })
            .collect();
        for (ci, &m) in columns.iter().enumerate() {
            let mut col: Vec<&Measurement> = ms.iter().filter(|x| x.m == m).collect();
            col.sort_by(|a, b| tie_order(a, b));
            for (rank, x) in col.iter().enumerate() {
                let row = rows
                    .iter_mut()
                    .find(|r| r.family == x.family && r.algorithm == x.algorithm)
                    .expect("row exists for every measurement");
                // keep the first value if a cell was measured twice
                row.cells[ci].get_or_insert(TableCell {
                    mean: x.mean,
                    rank: rank + 1,
                });
            }
        }
        Ok(ResultTable {
            text_id: ms.first().map(|m| m.text_id.clone()),
            sigma: ms.iter().map(|m| m.sigma).min(),
            metric: ms
                .iter()
                .map(|m| m.metric)
                .min_by_key(|m| *m != Metric::Time),
            columns,
            rows,
        })
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        if let (Some(id), Some(sigma), Some(metric)) = (&self.text_id, self.sigma, self.metric) {
            let unit = match metric {
                Metric::Time => "mean time (ms)",
                Metric::Reads => "mean character reads",
            };
            let _ = writeln!(s, "### {id} (sigma = {sigma}), {unit}\n");
        }
        s.push_str("| family | algorithm |");
        for m in &self.columns {
            let _ = write!(s, " m={m} |");
        }
        s.push_str("\n|---|---|");
        for _ in &self.columns {
            s.push_str("---:|");
        }
        s.push('\n');
        for row in &self.rows {
            let _ = write!(s, "| {} | {} |", row.family, row.algorithm);
            for cell in &row.cells {
                match cell {
                    None => s.push_str(" - |"),
                    Some(c) if c.is_best() => {
                        let _ = write!(s, " **{}** ({}) |", format_value(c.mean), c.rank);
                    }
                    Some(c) => {
                        let _ = write!(s, " {} ({}) |", format_value(c.mean), c.rank);
                    }
                }
            }
            s.push('\n');
        }
        s
    }
}

/// Renders the measurements of one text as Markdown or CSV.
///
/// CSV output lists rows in table order without metadata lines.
pub fn render_table(ms: &[Measurement], format: Format) -> Result<String> {
    let table = ResultTable::build(ms)?;
    match format {
        Format::Markdown => Ok(table.to_markdown()),
        Format::Csv => {
            let mut sorted: Vec<&Measurement> = ms.iter().collect();
            sorted.sort_by(|a, b| {
                row_order(
                    &(a.family, a.algorithm.clone()),
                    &(b.family, b.algorithm.clone()),
                )
                .then(a.m.cmp(&b.m))
                .then(a.mean.total_cmp(&b.mean))
                .then(a.stddev.total_cmp(&b.stddev))
                .then(a.mean_occurrences.total_cmp(&b.mean_occurrences))
                .then(a.sigma.cmp(&b.sigma))
                .then(a.metric.as_str().cmp(b.metric.as_str()))
            });
            let owned: Vec<Measurement> = sorted.into_iter().cloned().collect();
            let mut buf = Vec::new();
            write_measurements(&owned, &CsvMeta::new(), &mut buf)?;
            Ok(String::from_utf8(buf).expect("csv output is utf-8"))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BestCell {
    pub algorithm: String,
    pub provenance: Provenance,
}

/// Winner per (alphabet class, length class).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BestMap {
    cells: Vec<BestCell>,
}

impl BestMap {
    pub fn cell(&self, sigma: SigmaClass, m: MClass) -> &BestCell {
        &self.cells[sigma as usize * 4 + m as usize]
    }

    pub fn cells(&self) -> impl Iterator<Item = (SigmaClass, MClass, &BestCell)> + '_ {
        SigmaClass::ALL
            .into_iter()
            .flat_map(|s| MClass::ALL.into_iter().map(move |m| (s, m)))
            .map(move |(s, m)| (s, m, self.cell(s, m)))
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["sigma_class", "m_class", "algorithm", "provenance"])?;
        for (s, m, c) in self.cells() {
            w.write_record([s.as_str(), m.as_str(), &c.algorithm, c.provenance.as_str()])?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| csv::Error::from(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::from("| sigma \\ m |");
        for m in MClass::ALL {
            let _ = write!(s, " {m} |");
        }
        s.push_str("\n|---|");
        for _ in MClass::ALL {
            s.push_str("---|");
        }
        s.push('\n');
        for sc in SigmaClass::ALL {
            let _ = write!(s, "| {sc} |");
            for m in MClass::ALL {
                let c = self.cell(sc, m);
                let _ = write!(s, " {} ({}) |", c.algorithm, c.provenance);
            }
            s.push('\n');
        }
        s
    }
}

/// Picks the measured winner of every cell that has data and falls back to
/// `fallback` elsewhere.
///
/// A cell's candidates are the algorithms measured at the most (text, m)
/// points of that cell; the winner has the lowest average mean. Time rows
/// take precedence over read counts when both are present.
pub fn render_best_map(ms: &[Measurement], fallback: &SelectionMap) -> BestMap {
    let metric = if ms.iter().any(|m| m.metric == Metric::Time) {
        Metric::Time
    } else {
        Metric::Reads
    };
    // cell -> algorithm -> (family, sum of means, points)
    type Sums<'a> = BTreeMap<&'a str, (Family, f64, usize)>;
    let mut groups: BTreeMap<(SigmaClass, MClass), Sums> = BTreeMap::new();
    for x in ms.iter().filter(|x| x.metric == metric) {
        let c = classify(x.sigma, x.m);
        let e = groups
            .entry((c.sigma, c.m))
            .or_default()
            .entry(&x.algorithm)
            .or_insert((x.family, 0.0, 0));
        e.1 += x.mean;
        e.2 += 1;
    }
    let cells = SigmaClass::ALL
        .into_iter()
        .flat_map(|s| MClass::ALL.into_iter().map(move |m| (s, m)))
        .map(|(s, m)| match groups.get(&(s, m)) {
            Some(algos) => {
                let coverage = algos.values().map(|v| v.2).max().unwrap_or(0);
                let best = algos
                    .iter()
                    .filter(|(_, v)| v.2 == coverage)
                    .min_by(|a, b| {
                        (a.1 .1 / a.1 .2 as f64)
                            .total_cmp(&(b.1 .1 / b.1 .2 as f64))
                            .then(a.1 .0.cmp(&b.1 .0))
                            .then(a.0.cmp(b.0))
                    })
                    .expect("cell group is non-empty");
                BestCell {
                    algorithm: best.0.to_string(),
                    provenance: Provenance::Measured,
                }
            }
            None => {
                let c = fallback.cell(s, m);
                BestCell {
                    algorithm: c.algorithm.to_string(),
                    provenance: c.provenance,
                }
            }
        })
        .collect();
    BestMap { cells }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn meas(algo: &str, m: usize, mean: f64) -> Measurement {
        let d = registry::get(algo).unwrap();
        Measurement {
            text_id: "rand2".into(),
            sigma: 2,
            family: d.family,
            algorithm: d.id.into(),
            m,
            runs: 400,
            mean,
            stddev: 0.5,
            mean_occurrences: 3.25,
            metric: Metric::Time,
            preprocessing_ms: None,
        }
    }

    #[test]
    fn value_format() {
        assert_eq!(format_value(16.4), "16.4");
        assert_eq!(format_value(0.55), "0.55");
        assert_eq!(format_value(2.69), "2.69");
        assert_eq!(format_value(13.0), "13.0");
        assert_eq!(format_value(1048576.0), "1048576");
        assert_eq!(format_value(0.0), "0.00");
    }

    #[test]
    fn single_row() {
        let md = render_table(&[meas("SA", 2, 16.4)], Format::Markdown).unwrap();
        assert!(md.contains("16.4"));
        assert!(md.contains("| bit-parallel | SA | **16.4** (1) |"));
    }

    #[test]
    fn empty_is_header_only() {
        let md = render_table(&[], Format::Markdown).unwrap();
        assert_eq!(md, "| family | algorithm |\n|---|---|\n");
        let csv = render_table(&[], Format::Csv).unwrap();
        assert_eq!(csv, CSV_HEADER.join(",") + "\n");
    }

    #[test]
    fn tie_goes_to_family_order() {
        let ms = [meas("SO", 8, 3.0), meas("HOR", 8, 3.0)];
        let t = ResultTable::build(&ms).unwrap();
        assert_eq!(t.rows[0].algorithm, "HOR");
        assert!(t.rows[0].cells[0].unwrap().is_best());
        assert!(!t.rows[1].cells[0].unwrap().is_best());
    }

    #[test]
    fn blanks_for_missing_cells() {
        let ms = [
            meas("HOR", 4, 5.0),
            meas("HOR", 8, 4.0),
            meas("HASH8", 8, 2.0),
        ];
        let md = render_table(&ms, Format::Markdown).unwrap();
        assert!(md.contains("| comparison | HASH8 | - | **2.00** (1) |"));
        assert!(md.contains("| comparison | HOR | **5.00** (1) | 4.00 (2) |"));
    }

    #[test]
    fn mixed_texts_rejected() {
        let mut b = meas("HOR", 4, 1.0);
        b.text_id = "rand4".into();
        assert!(matches!(
            render_table(&[meas("HOR", 4, 1.0), b], Format::Csv),
            Err(Error::MixedTexts(..))
        ));
    }

    #[test]
    fn csv_round_trip() {
        let ms = vec![
            meas("HOR", 4, 1.0 / 3.0),
            meas("SO", 1024, 21.7),
            meas("EBOM", 16, 1e-9),
        ];
        let meta = CsvMeta::new()
            .with("seed", 7)
            .with("patterns_per_length", 400);
        let mut buf = Vec::new();
        write_measurements(&ms, &meta, &mut buf).unwrap();
        let (meta2, back) = read_measurements(&buf[..]).unwrap();
        assert_eq!(meta, meta2);
        assert_eq!(back, ms);
    }

    #[test]
    fn parse_errors_carry_line() {
        let src =
            "# seed=1\ntext_id,sigma,family,algorithm,m,mean,stddev,mean_occurrences,metric\n\
                   rand2,2,comparison,HOR,4,1.0,0,1,time\n\
                   rand2,2,comparison,HOR,x,1.0,0,1,time\n";
        match read_measurements(src.as_bytes()) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("{other:?}"),
        }
        let bad_header = "a,b\n";
        assert!(matches!(
            read_measurements(bad_header.as_bytes()),
            Err(Error::Parse { line: 1, .. })
        ));
        let bad_family = "text_id,sigma,family,algorithm,m,mean,stddev,mean_occurrences,metric\n\
                          rand2,2,weird,HOR,4,1.0,0,1,time\n";
        assert!(matches!(
            read_measurements(bad_family.as_bytes()),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(read_measurements(&b""[..]).unwrap().1.is_empty());
    }

    #[test]
    fn best_map_fallback() {
        let map = SelectionMap::default();
        let best = render_best_map(&[], &map);
        for (s, m, c) in best.cells() {
            let f = map.cell(s, m);
            assert_eq!(
                (c.algorithm.as_str(), c.provenance),
                (f.algorithm, f.provenance)
            );
        }
        assert_eq!(
            best.cell(SigmaClass::VerySmall, MClass::VeryShort)
                .algorithm,
            "SA"
        );
    }

    #[test]
    fn best_map_measured() {
        let ms = [
            meas("HASH5", 16, 1.0),
            meas("HOR", 16, 2.0),
            meas("HOR", 8, 0.1),
        ];
        let best = render_best_map(&ms, &SelectionMap::default());
        let c = best.cell(SigmaClass::VerySmall, MClass::Short);
        // HOR covers more points of the cell
        assert_eq!(c.algorithm, "HOR");
        assert_eq!(c.provenance, Provenance::Measured);
        let ms = [meas("HASH5", 16, 1.0), meas("HOR", 16, 2.0)];
        let best = render_best_map(&ms, &SelectionMap::default());
        assert_eq!(
            best.cell(SigmaClass::VerySmall, MClass::Short).algorithm,
            "HASH5"
        );
        let csv = best.to_csv().unwrap();
        assert!(csv.contains("very_small,short,HASH5,measured\n"));
        assert_eq!(csv.lines().count(), 17);
    }
}
