#![no_main]

use libfuzzer_sys::fuzz_target;
use minrem::cfkit::{expand_minimal, MinimalCF};

fuzz_target!(|data: &str| {
    // keep bignum work bounded
    if data.len() > 256 {
        return;
    }
    if let Ok(cf) = data.parse::<MinimalCF>() {
        let text = cf.to_string();
        let back: MinimalCF = text.parse().expect("printed form parses");
        assert_eq!(back, cf);
        // valid expansions are unique
        assert_eq!(expand_minimal(&cf.evaluate()), cf);
    }
});
