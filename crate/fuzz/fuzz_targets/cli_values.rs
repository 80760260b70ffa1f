#![no_main]
use crbc_cli::values::{parse_grid, parse_list, parse_range};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(v) = parse_list(s) {
        assert_eq!(v.len(), s.split(',').count());
    }
    if let Ok((lo, hi)) = parse_range(s) {
        assert!(lo.is_finite() && hi.is_finite() && lo <= hi);
    }
    if let Ok(g) = parse_grid(s) {
        assert!(!g.is_empty() && g.len() <= 3);
    }
});
