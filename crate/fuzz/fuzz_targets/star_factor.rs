#![no_main]

use libfuzzer_sys::fuzz_target;
use starspec::factors::{parse_star_factor, verify_star_factor};
use starspec::graph::parse_edge_list;

// Input: an edge list, a NUL byte, then a factor as JSON.
fuzz_target!(|data: &[u8]| {
    let Some(split) = data.iter().position(|&b| b == 0) else { return };
    let (Ok(graph), Ok(factor)) = (std::str::from_utf8(&data[..split]), std::str::from_utf8(&data[split + 1..])) else {
        return;
    };
    let Ok(f) = parse_star_factor(factor) else { return };
    assert_eq!(parse_star_factor(&f.to_json()).expect("round trip"), f);
    if let Ok(g) = parse_edge_list(graph) {
        for m in 2..=4 {
            if verify_star_factor(&g, m, &f) {
                let covered: usize = f.stars.iter().map(|s| 1 + s.leaves.len()).sum();
                assert_eq!(covered, g.order());
            }
        }
    }
});
