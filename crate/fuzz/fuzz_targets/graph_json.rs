#![no_main]

use hidesign::tightness::SimpleGraph;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(g) = SimpleGraph::from_json_str(s) {
            assert_eq!(SimpleGraph::from_json_str(&g.to_json_string()).unwrap(), g);
        }
    }
});
