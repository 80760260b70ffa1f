#![no_main]
use crbc::dmc::format::{parse_factors, write_factors};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(file) = parse_factors(s) {
        let again = parse_factors(&write_factors(&file)).expect("written factors must parse");
        assert_eq!(again, file);
        // the typed views must reject or accept without panicking
        let _ = file.relay_factors();
        let _ = file.jam_relay_factors();
        let _ = file.two_sided_factors();
        let _ = file.aux_joint();
        let _ = file.input();
    }
});
