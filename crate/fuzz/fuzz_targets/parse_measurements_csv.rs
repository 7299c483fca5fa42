#![no_main]

use libfuzzer_sys::fuzz_target;
use strmatch::report::{read_measurements, render_best_map, render_table, write_measurements, Format};
use strmatch::select::SelectionMap;

fuzz_target!(|data: &[u8]| {
    let Ok((meta, ms)) = read_measurements(data) else {
        return;
    };
    // whatever parses must survive a write/read cycle unchanged
    let mut buf = Vec::new();
    write_measurements(&ms, &meta, &mut buf).unwrap();
    let (_, again) = read_measurements(&buf[..]).unwrap();
    assert_eq!(again.len(), ms.len());
    for (a, b) in ms.iter().zip(&again) {
        assert_eq!(a.mean.to_bits(), b.mean.to_bits());
        assert_eq!((&a.algorithm, a.m), (&b.algorithm, b.m));
    }
    let _ = render_table(&ms, Format::Markdown);
    let _ = render_table(&ms, Format::Csv);
    let _ = render_best_map(&ms, &SelectionMap::default());
});
