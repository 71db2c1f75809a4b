#![no_main]

use libfuzzer_sys::fuzz_target;
use tcone::parse::parse_element;

fuzz_target!(|data: &[u8]| {
    let Some((&d, rest)) = data.split_first() else { return };
    let d = 1 + d as usize % 6;
    let Ok(s) = std::str::from_utf8(rest) else { return };
    if let Ok(e) = parse_element(s, d) {
        assert_eq!(e.dim(), d);
        assert_eq!(parse_element(&e.to_string(), d).unwrap(), e);
    }
});
