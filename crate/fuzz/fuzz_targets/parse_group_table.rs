#![no_main]
use libfuzzer_sys::fuzz_target;

use fusion_core::io::{parse_group_table, serialize_group_table};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(group) = parse_group_table(text) {
        let again = parse_group_table(&serialize_group_table(&group)).expect("serialized table parses");
        assert_eq!(again.table(), group.table());
        let _ = group.structure_name();
    }
});
