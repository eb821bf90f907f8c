#![no_main]

use libfuzzer_sys::fuzz_target;
use minrem::CubicNumber;

fuzz_target!(|data: &[u8]| {
    if let Ok(v) = serde_json::from_slice::<CubicNumber>(data) {
        let text = serde_json::to_string(&v).expect("serializes");
        let back: CubicNumber = serde_json::from_str(&text).expect("round trip");
        assert_eq!(back, v);
    }
});
