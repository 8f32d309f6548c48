#![no_main]

use libfuzzer_sys::fuzz_target;
use weylchar::format::{parse_cycle_list, parse_int_list};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(v) = parse_int_list(s) {
        let joined = v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        assert_eq!(parse_int_list(&joined).unwrap(), v);
    }
    if let Ok(c) = parse_cycle_list(s) {
        assert!(c.iter().all(|&k| k > 0));
    }
});
