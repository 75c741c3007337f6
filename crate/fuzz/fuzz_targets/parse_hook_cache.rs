#![no_main]
use libfuzzer_sys::fuzz_target;

use detcx::multilinear::{parse_hook_file, HookKey};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(file) = parse_hook_file(text) {
        assert!(file.columns.iter().flatten().all(|(r, _)| *r < file.ambient));
    }
    if let Some(key) = HookKey::from_file_name(text) {
        assert_eq!(HookKey::from_file_name(&key.file_name()), Some(key));
    }
});
