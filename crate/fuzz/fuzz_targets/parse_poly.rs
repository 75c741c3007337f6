#![no_main]
use libfuzzer_sys::fuzz_target;

use detcx::polyring::parse_poly;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_poly(text) {
        let printed = p.to_string();
        assert_eq!(parse_poly(&printed).unwrap(), p, "{printed}");
    }
});
