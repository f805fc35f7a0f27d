#![no_main]

use libfuzzer_sys::fuzz_target;
use starspec::graph::{parse_edge_list, to_edge_list};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_edge_list(text) {
        g.validate().expect("parsed graph is well formed");
        let again = parse_edge_list(&to_edge_list(&g)).expect("written edge list parses");
        assert_eq!(again, g);
    }
});
