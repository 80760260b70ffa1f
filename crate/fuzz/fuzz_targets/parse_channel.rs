#![no_main]
use crbc::dmc::format::{parse_channel, write_channel};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(dmc) = parse_channel(s) {
        let again = parse_channel(&write_channel(&dmc)).expect("written channel must parse");
        assert_eq!(again, dmc);
        let _ = dmc.is_degraded();
        let _ = dmc.is_reverse_degraded();
    }
});
