#![no_main]

use libfuzzer_sys::fuzz_target;
use starspec::polynomials::IntPolynomial;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = IntPolynomial::from_json(text) {
        let back = IntPolynomial::from_json(&p.to_json()).expect("round trip");
        assert_eq!(back, p);
        assert!(p.is_zero() || p.leading() != 0.into());
    }
});
