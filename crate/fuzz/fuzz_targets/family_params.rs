#![no_main]
use libfuzzer_sys::fuzz_target;

use fusion_core::families::FamilySpec;
use fusion_core::Error;

// Input is `family param param ...` as typed on the command line.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let mut words = text.split_whitespace();
    let Some(family) = words.next() else { return };
    let params: Vec<&str> = words.collect();
    let no_tables = |_: &str| Err(Error::InvalidParameters("no tables while fuzzing".into()));
    if let Ok(spec) = FamilySpec::parse(family, &params, no_tables) {
        if let Ok(ring) = spec.build() {
            assert!(ring.verify().is_ok());
        }
        let _ = spec.to_params();
    }
});
