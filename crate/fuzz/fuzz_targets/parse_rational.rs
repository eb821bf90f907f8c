#![no_main]

use libfuzzer_sys::fuzz_target;
use minrem::Rational;

fuzz_target!(|data: &str| {
    if let Ok(x) = data.parse::<Rational>() {
        let back: Rational = x.to_string().parse().expect("printed form parses");
        assert_eq!(back, x);
    }
});
