#![no_main]

use libfuzzer_sys::fuzz_target;
use weylchar::table::CharacterTable;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(t) = CharacterTable::from_csv(s) {
        let again = CharacterTable::from_csv(&t.to_csv()).expect("written tables parse");
        assert_eq!(again, t);
    }
});
