#![no_main]

use libfuzzer_sys::fuzz_target;
use strmatch::registry;
use strmatch::{brute_force_search, Pattern, WordSpec};

// Layout: [sigma, word, m_lo, m_hi, text and pattern bytes...]
fuzz_target!(|data: &[u8]| {
    if data.len() < 5 {
        return;
    }
    let sigma = data[0].max(1);
    let word = [WordSpec::W32, WordSpec::W64, WordSpec::W128][data[1] as usize % 3];
    let rest = &data[4..];
    let m = (u16::from_le_bytes([data[2], data[3]]) as usize % rest.len()).max(1);
    let fold = |b: &u8| b % sigma;
    let pattern = Pattern::new(rest[..m].iter().map(fold).collect::<Vec<_>>()).unwrap();
    let text: Vec<u8> = rest[m..].iter().map(fold).collect();
    let want = brute_force_search(&pattern, &text);
    for d in registry::applicable_algorithms(m, word) {
        let got = d.build_with(&pattern, word).unwrap().find_all(&text);
        assert_eq!(got, want, "{} disagrees", d.id);
    }
});
