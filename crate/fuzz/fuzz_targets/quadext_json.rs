#![no_main]

use hidesign::exactnum::QuadExt;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 256 {
        return;
    }
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(q) = QuadExt::from_json_str(s) {
            assert_eq!(QuadExt::from_json_str(&q.to_json_string()).unwrap(), q);
        }
    }
});
