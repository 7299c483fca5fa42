use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use strmatch::comparison::BadCharTable;
use strmatch::verify::Candidate;
use strmatch::{brute_force_search, Haystack, Pattern, Scan};
use strmatch_cli::{cmd_verify, VerifyArgs};

fn strmatch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_strmatch"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn gen_writes_requested_size() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    for out in [&a, &b] {
        let o = strmatch(&[
            "gen",
            "--sigma",
            "4",
            "--size",
            "1048576",
            "--seed",
            "42",
            "--out",
            p(out),
        ]);
        assert!(o.status.success());
        assert_eq!(stdout(&o), "n=1048576 sigma=4\n");
    }
    let bytes = std::fs::read(&a).unwrap();
    assert_eq!(bytes.len(), 1_048_576);
    assert!(bytes.iter().all(|&x| x < 4));
    assert_eq!(bytes, std::fs::read(&b).unwrap());
}

#[test]
fn gen_rejects_odd_sigma() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x");
    let o = strmatch(&["gen", "--sigma", "3", "--size", "10", "--out", p(&out)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("alphabet size 3"));
    let o = strmatch(&[
        "gen",
        "--sigma",
        "3",
        "--size",
        "10",
        "--out",
        p(&out),
        "--allow-any-sigma",
    ]);
    assert!(o.status.success());
}

#[test]
fn search_auto_on_binary_text() {
    let dir = tempfile::tempdir().unwrap();
    let text = dir.path().join("rand2");
    strmatch(&[
        "gen",
        "--sigma",
        "2",
        "--size",
        "5000",
        "--seed",
        "3",
        "--out",
        p(&text),
    ]);
    let o = strmatch(&["-v", "search", "--pattern", r"\x01\x00", "--text", p(&text)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("-> SA"));
    let bytes = std::fs::read(&text).unwrap();
    let want: String = brute_force_search(&Pattern::new(vec![1, 0]).unwrap(), &bytes)
        .iter()
        .map(|i| format!("{i}\n"))
        .collect();
    assert_eq!(stdout(&o), want);
}

#[test]
fn search_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let text = dir.path().join("t.txt");
    std::fs::write(&text, b"abracadabra").unwrap();
    let o = strmatch(&[
        "search",
        "--algo",
        "HOR",
        "--pattern",
        "abra",
        "--text",
        p(&text),
    ]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "0\n7\n"));
    let o = strmatch(&["search", "--pattern", "zzz", "--text", p(&text)]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(1), ""));
    let o = strmatch(&[
        "search",
        "--algo",
        "SSEF",
        "--pattern",
        "abracadabraabrac",
        "--text",
        p(&text),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("m >= 32"));
    let o = strmatch(&[
        "search",
        "--algo",
        "nope",
        "--pattern",
        "a",
        "--text",
        p(&text),
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = strmatch(&["search", "--pattern", r"\xZZ", "--text", p(&text)]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn pattern_file_wins() {
    let dir = tempfile::tempdir().unwrap();
    let text = dir.path().join("t");
    let pat = dir.path().join("p");
    std::fs::write(&text, b"xx\x00\xffyy").unwrap();
    std::fs::write(&pat, b"\x00\xff").unwrap();
    let o = strmatch(&[
        "search",
        "--pattern",
        "yy",
        "--pattern-file",
        p(&pat),
        "--text",
        p(&text),
    ]);
    assert_eq!(stdout(&o), "2\n");
}

#[test]
fn bench_small_text_all_algorithms() {
    let dir = tempfile::tempdir().unwrap();
    let text = dir.path().join("kib");
    strmatch(&["gen", "--sigma", "16", "--size", "1024", "--out", p(&text)]);
    let out = dir.path().join("m.csv");
    let o = strmatch(&[
        "bench",
        "--text",
        p(&text),
        "--algos",
        "all",
        "--metric",
        "reads",
        "--patterns",
        "5",
        "--out",
        p(&out),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let csv = std::fs::read_to_string(&out).unwrap();
    let rows: Vec<Vec<&str>> = csv
        .lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').collect())
        .collect();
    assert!(!rows.is_empty());
    for r in &rows {
        let d = strmatch::registry::get(r[3]).unwrap();
        let m: usize = r[4].parse().unwrap();
        assert!(d.is_applicable(m, strmatch::WordSpec::W64), "{r:?}");
        assert_eq!(r[0], "kib");
    }
    // every applicable pair at the default lengths is present
    let expect: usize = [2, 4, 8, 16, 32, 64, 128, 256, 512, 1024]
        .iter()
        .map(|&m| strmatch::registry::applicable_algorithms(m, strmatch::WordSpec::W64).len())
        .sum();
    assert_eq!(rows.len(), expect);
}

#[test]
fn bench_hash8_at_four_is_empty() {
    let o = strmatch(&[
        "bench",
        "--rand",
        "4",
        "--size",
        "4096",
        "--lengths",
        "4",
        "--algos",
        "HASH8",
        "--metric",
        "reads",
    ]);
    assert!(o.status.success());
    let s = stdout(&o);
    let data: Vec<&str> = s.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(
        data,
        ["text_id,sigma,family,algorithm,m,mean,stddev,mean_occurrences,metric"]
    );
}

#[test]
fn bench_flag_validation() {
    for args in [
        &["bench", "--rand", "4", "--parallel"][..],
        &["bench", "--rand", "4", "--algos", "XYZ"],
        &["bench", "--rand", "4", "--lengths", "8,4"],
        &["bench", "--rand", "4", "--metric", "cycles"],
        &["bench", "--rand", "4", "--word", "48"],
        &["bench", "--rand", "4", "--bogus"],
        &["bench"],
    ] {
        assert_eq!(strmatch(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn bench_time_writes_preprocessing() {
    let dir = tempfile::tempdir().unwrap();
    let prep = dir.path().join("prep.csv");
    let o = strmatch(&[
        "bench",
        "--rand",
        "64",
        "--size",
        "8192",
        "--lengths",
        "8,64",
        "--patterns",
        "3",
        "--algos",
        "HOR,EBOM",
        "--prep-out",
        p(&prep),
    ]);
    assert!(o.status.success());
    let s = std::fs::read_to_string(&prep).unwrap();
    assert_eq!(s.lines().count(), 5);
    assert!(s.starts_with("text_id,algorithm,m,preprocessing_ms\nrand64,HOR,8,"));
}

#[test]
fn report_golden() {
    let o = strmatch(&["report", "--in", p(&fixture("rand2_six.csv"))]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        std::fs::read_to_string(fixture("rand2_six.md")).unwrap()
    );
}

#[test]
fn report_csv_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let once = strmatch(&[
        "report",
        "--in",
        p(&fixture("rand2_six.csv")),
        "--format",
        "csv",
    ]);
    let path = dir.path().join("once.csv");
    std::fs::write(&path, &once.stdout).unwrap();
    let twice = strmatch(&["report", "--in", p(&path), "--format", "csv"]);
    assert_eq!(once.stdout, twice.stdout);
    assert_eq!(stdout(&once).lines().count(), 7);
}

#[test]
fn report_best_map_on_empty_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.csv");
    std::fs::write(&path, "").unwrap();
    let o = strmatch(&["report", "--in", p(&path), "--best-map", "--format", "csv"]);
    let mut want = Vec::new();
    strmatch::select::SelectionMap::default()
        .write_csv(&mut want)
        .unwrap();
    assert_eq!(o.stdout, want);
}

#[test]
fn report_parse_error_names_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.csv");
    std::fs::write(
        &path,
        "# seed=0\ntext_id,sigma,family,algorithm,m,mean,stddev,mean_occurrences,metric\nrand2,2,comparison,HOR,4,-,0,1,time\n",
    )
    .unwrap();
    let o = strmatch(&["report", "--in", p(&path)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn report_several_texts() {
    let o = strmatch(&[
        "bench",
        "--rand",
        "2",
        "--rand",
        "256",
        "--size",
        "4096",
        "--lengths",
        "4,32",
        "--patterns",
        "3",
        "--algos",
        "HOR,SA",
        "--metric",
        "reads",
    ]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("two.csv");
    std::fs::write(&path, &o.stdout).unwrap();
    let md = stdout(&strmatch(&["report", "--in", p(&path)]));
    assert!(md.contains("### rand2 (sigma = 2)"));
    assert!(md.contains("### rand256 (sigma = 256)"));
}

#[test]
fn verify_restricted_to_hash5() {
    let o = strmatch(&[
        "verify", "--algos", "HASH5", "--cases", "100", "--seed", "1",
    ]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(
        s.starts_with("HASH5          100 cases     0 mismatches\n"),
        "{s}"
    );
}

#[test]
fn verify_all_passes() {
    let o = strmatch(&["verify", "--cases", "500", "--seed", "7"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert_eq!(
        stdout(&o).lines().count(),
        strmatch::registry::all().len() + 1
    );
}

// Horspool with every shift one too long.
struct LongShift {
    pat: Vec<u8>,
    table: BadCharTable,
}

impl Scan for LongShift {
    const NAME: &'static str = "HOR-broken";

    fn m(&self) -> usize {
        self.pat.len()
    }

    fn scan<H: Haystack + ?Sized>(&self, t: &H, out: &mut Vec<usize>) {
        let m = self.pat.len();
        let mut s = 0;
        while s + m <= t.len() {
            if t.matches_at(s, &self.pat) {
                out.push(s);
            }
            s += self.table.get(t.at(s + m - 1)) + 1;
        }
    }
}

#[test]
fn verify_reports_fault() {
    let broken = Candidate::new("HOR-broken", 1, 64, |p: &Pattern| {
        Ok(Box::new(LongShift {
            pat: p.to_vec(),
            table: BadCharTable::horspool(p),
        }) as Box<dyn strmatch::Searcher>)
    });
    let args = VerifyArgs {
        cases: 200,
        seed: 11,
        algos: "HOR".into(),
        word: strmatch::WordSpec::W64,
    };
    let mut out = Vec::new();
    let code = cmd_verify(&args, vec![broken], &mut out).unwrap();
    let s = String::from_utf8(out).unwrap();
    assert_eq!(code, 1);
    assert!(s.contains("HOR-broken"));
    let line = s
        .lines()
        .find(|l| l.starts_with("MISMATCH HOR-broken"))
        .expect("reproducer");
    for key in ["sigma=", "seed=", "n=", "m=", "missing="] {
        assert!(line.contains(key), "{line}");
    }
    assert!(!s.contains("MISMATCH HOR:"));
}
