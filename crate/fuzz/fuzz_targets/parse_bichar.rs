#![no_main]
use libfuzzer_sys::fuzz_target;

use fusion_core::analysis::ty_modularization_predict;
use fusion_core::io::{format_bichar, parse_bichar};

// First byte is the rank, the rest the row text.
fuzz_target!(|data: &[u8]| {
    let Some((&m, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    if let Ok(d) = parse_bichar(usize::from(m), text) {
        assert_eq!(parse_bichar(d.m(), &format_bichar(&d)).unwrap(), d);
        let _ = ty_modularization_predict(&d);
    }
});
