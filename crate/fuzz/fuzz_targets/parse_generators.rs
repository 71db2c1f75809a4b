#![no_main]

use libfuzzer_sys::fuzz_target;
use tcone::parse::parse_generators;
use tcone::NumericalSemigroup;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(gens) = parse_generators(s) else { return };
    let again: Vec<String> = gens.iter().map(u64::to_string).collect();
    assert_eq!(parse_generators(&again.join(",")).unwrap(), gens);
    // keep the membership table small
    if gens.len() <= 5 && gens.iter().all(|&g| g <= 200) {
        if let Ok(g) = NumericalSemigroup::new(&gens) {
            assert!(g.contains(g.frobenius() + 1));
            assert!(!g.contains(g.frobenius()));
        }
    }
});
