#![no_main]

use libfuzzer_sys::fuzz_target;
use strmatch::text::unescape;

fuzz_target!(|data: &[u8]| {
    let Ok(bytes) = unescape(data) else {
        return;
    };
    assert!(bytes.len() <= data.len());
    let hex: String = bytes.iter().map(|b| format!("\\x{b:02x}")).collect();
    assert_eq!(unescape(hex.as_bytes()).unwrap(), bytes);
});
