#![no_main]

use hidesign::exactnum::RationalPoly;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 4096 {
        return;
    }
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(p) = RationalPoly::from_json_str(s) {
            assert_eq!(RationalPoly::from_json_str(&p.to_json_string()).unwrap(), p);
            if p.degree().is_some_and(|d| d <= 12) {
                let _ = p.count_real_roots();
            }
        }
    }
});
