#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    // The gate-file parser must reject malformed input without panicking.
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = revgate::gatelib::parse_gate_file(text);
    }
});
