#![no_main]

use libfuzzer_sys::fuzz_target;
use tcone::parse::parse_order;

fuzz_target!(|data: &[u8]| {
    let Some((&d, rest)) = data.split_first() else { return };
    let d = 1 + d as usize % 6;
    let Ok(s) = std::str::from_utf8(rest) else { return };
    if let Ok(order) = parse_order(s, d) {
        assert_eq!(order.dim(), d);
        assert_eq!(parse_order(&order.render(), d).unwrap(), order);
    }
});
