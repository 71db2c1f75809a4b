#![no_main]

use libfuzzer_sys::fuzz_target;
use tcone::analysis::AnalysisReport;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = AnalysisReport::from_json(s) {
        assert_eq!(AnalysisReport::from_json(&r.to_json()).unwrap(), r);
    }
});
