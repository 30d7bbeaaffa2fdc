#![no_main]

use libfuzzer_sys::fuzz_target;
use revgate::gatelib::GateLibrary;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let library = GateLibrary::standard();
        let _ = revgate::netlist::parse_netlist(text, &library);
    }
});
