#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let mut registry = revgate::qcost::standard_registry();
        let _ = registry.load_registry_text(text);
    }
});
