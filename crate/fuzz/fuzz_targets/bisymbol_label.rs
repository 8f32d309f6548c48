#![no_main]

use libfuzzer_sys::fuzz_target;
use weylchar::format::{beta_label, bisymbol_label, parse_beta_label, parse_bisymbol_label};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(b) = parse_beta_label(s) {
        assert_eq!(parse_beta_label(&beta_label(&b)).unwrap(), b);
        let _ = b.normalize();
    }
    if let Ok(sym) = parse_bisymbol_label(s) {
        assert_eq!(parse_bisymbol_label(&bisymbol_label(&sym)).unwrap(), sym);
        let _ = sym.normalize();
    }
});
