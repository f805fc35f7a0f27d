#![no_main]

use libfuzzer_sys::fuzz_target;
use starspec::factors::ToughnessWitness;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(w) = serde_json::from_str::<ToughnessWitness>(text) {
        let back: ToughnessWitness = serde_json::from_str(&serde_json::to_string(&w).unwrap()).expect("round trip");
        assert_eq!(back, w);
    }
});
