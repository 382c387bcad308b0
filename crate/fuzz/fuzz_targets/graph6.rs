#![no_main]

use hidesign::tightness::{Graph6Reader, SimpleGraph};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    // accepted records must re-encode to the same bytes
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(g) = SimpleGraph::from_graph6(s) {
            assert_eq!(g.to_graph6(), s);
        }
    }
    for item in Graph6Reader::new(data) {
        let _ = item;
    }
});
