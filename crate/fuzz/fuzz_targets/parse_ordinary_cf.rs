#![no_main]

use libfuzzer_sys::fuzz_target;
use minrem::cfkit::{convert_ordinary_to_minimal, OrdinaryCF};

fuzz_target!(|data: &str| {
    if data.len() > 256 {
        return;
    }
    if let Ok(cf) = data.parse::<OrdinaryCF>() {
        let back: OrdinaryCF = cf.to_string().parse().expect("printed form parses");
        assert_eq!(back, cf);
        assert_eq!(convert_ordinary_to_minimal(&cf).evaluate(), cf.evaluate());
    }
});
