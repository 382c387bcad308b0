#![no_main]

use hidesign::exactnum::{parse_rational, QuadExt};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 256 {
        return;
    }
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = parse_rational(s);
        if let Ok(q) = s.parse::<QuadExt>() {
            assert_eq!(q.to_string().parse::<QuadExt>().unwrap(), q);
        }
    }
});
