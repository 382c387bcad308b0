#![no_main]

use hidesign::designs::PointSet;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 1 << 16 {
        return;
    }
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(x) = PointSet::from_json_str(s) {
            let back = PointSet::from_json_str(&x.to_json_string()).unwrap();
            assert_eq!(back.points(), x.points());
        }
    }
});
