#![no_main]
use libfuzzer_sys::fuzz_target;

use fusion_core::io::{parse, parse_document, serialize};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // Must not panic; accepted documents serialize canonically.
    if let Ok(doc) = parse_document(text) {
        let _ = doc.to_string();
    }
    if let Ok(ring) = parse(text) {
        let canonical = serialize(&ring);
        let again = parse(&canonical).expect("canonical text parses");
        assert_eq!(again, ring);
        assert_eq!(serialize(&again), canonical);
    }
});
