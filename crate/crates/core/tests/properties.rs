use proptest::prelude::*;

use strmatch::bench::{Measurement, Metric};
use strmatch::registry;
use strmatch::report::{read_measurements, render_table, write_measurements, CsvMeta, Format};
use strmatch::select::{classify, select};
use strmatch::text::unescape;
use strmatch::{brute_force_search, Pattern, WordSpec};

fn measurement() -> impl Strategy<Value = Measurement> {
    (
        0..registry::all().len(),
        1usize..2048,
        0.0f64..1e7,
        0.0f64..1e3,
        0.0f64..1e6,
        any::<bool>(),
    )
        .prop_map(|(a, m, mean, stddev, occ, time)| {
            let d = &registry::all()[a];
            Measurement {
                text_id: "rand16".into(),
                sigma: 16,
                family: d.family,
                algorithm: d.id.into(),
                m,
                runs: 400,
                mean,
                stddev,
                mean_occurrences: occ,
                metric: if time { Metric::Time } else { Metric::Reads },
                preprocessing_ms: None,
            }
        })
}

proptest! {
    #[test]
    fn csv_round_trip(ms in prop::collection::vec(measurement(), 0..40)) {
        let meta = CsvMeta::new().with("patterns_per_length", 400).with("prng", "ChaCha8Rng");
        let mut buf = Vec::new();
        write_measurements(&ms, &meta, &mut buf).unwrap();
        let (meta2, back) = read_measurements(&buf[..]).unwrap();
        prop_assert_eq!(meta2, meta);
        prop_assert_eq!(back, ms);
    }

    #[test]
    fn table_ignores_input_order(
        ms in prop::collection::vec(measurement(), 0..30),
        rot in 0usize..30,
    ) {
        let mut shuffled = ms.clone();
        shuffled.reverse();
        if !shuffled.is_empty() {
            let k = rot % shuffled.len();
            shuffled.rotate_left(k);
        }
        for f in [Format::Markdown, Format::Csv] {
            prop_assert_eq!(render_table(&ms, f).unwrap(), render_table(&shuffled, f).unwrap());
        }
    }

    #[test]
    fn one_best_per_column(ms in prop::collection::vec(measurement(), 1..30)) {
        let t = strmatch::report::ResultTable::build(&ms).unwrap();
        for (ci, &m) in t.columns.iter().enumerate() {
            let best: Vec<_> = t.rows.iter().filter(|r| r.cells[ci].is_some_and(|c| c.is_best())).collect();
            prop_assert_eq!(best.len(), 1);
            let min = ms.iter().filter(|x| x.m == m).map(|x| x.mean).fold(f64::INFINITY, f64::min);
            prop_assert_eq!(best[0].cells[ci].unwrap().mean, min);
        }
    }

    #[test]
    fn select_depends_only_on_class(
        s1 in 1usize..=256, s2 in 1usize..=256,
        m1 in 1usize..5000, m2 in 1usize..5000,
    ) {
        if classify(s1, m1) == classify(s2, m2) {
            prop_assert_eq!(select(s1, m1).id, select(s2, m2).id);
        }
    }

    #[test]
    fn hex_escapes_round_trip(bytes in prop::collection::vec(any::<u8>(), 0..64)) {
        let src: String = bytes.iter().map(|b| format!("\\x{b:02x}")).collect();
        prop_assert_eq!(unescape(src.as_bytes()).unwrap(), bytes);
    }

    #[test]
    fn unescape_never_panics(src in prop::collection::vec(any::<u8>(), 0..64)) {
        let _ = unescape(&src);
    }

    #[test]
    fn registry_agrees_with_oracle(
        sigma in 1u8..=4,
        text in prop::collection::vec(any::<u8>(), 0..300),
        pat in prop::collection::vec(any::<u8>(), 1..40),
    ) {
        let text: Vec<u8> = text.iter().map(|b| b % sigma).collect();
        let pat = Pattern::new(pat.iter().map(|b| b % sigma).collect::<Vec<_>>()).unwrap();
        let want = brute_force_search(&pat, &text);
        for d in registry::applicable_algorithms(pat.len(), WordSpec::W64) {
            let got = d.build(&pat).unwrap().find_all(&text);
            prop_assert_eq!(&got, &want, "{}", d.id);
        }
    }

}
