#![no_main]

use libfuzzer_sys::fuzz_target;
use weylchar::format::{parse_sn_class_label, sn_class_label};
use weylchar::SignedCycleType;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(c) = parse_sn_class_label(s) {
        assert_eq!(parse_sn_class_label(&sn_class_label(&c)).unwrap(), c);
    }
    if let Ok(c) = s.parse::<SignedCycleType>() {
        assert_eq!(c.to_string().parse::<SignedCycleType>().unwrap(), c);
    }
});
