#![no_main]

use libfuzzer_sys::fuzz_target;
use revgate::synth::{parse_truth_table_hex, synthesize};

fuzz_target!(|data: &[u8]| {
    // First byte picks the arity, the rest is the hex string. Whenever the
    // parse succeeds, synthesis and its row-by-row re-check must too.
    let Some((&head, rest)) = data.split_first() else { return };
    let arity = 1 + (head as usize) % 6;
    let Ok(hex) = std::str::from_utf8(rest) else { return };
    if let Ok(table) = parse_truth_table_hex(hex, arity) {
        let circuit = synthesize(&table).expect("parsed tables synthesize");
        for (row, &expected) in table.iter().enumerate() {
            let assignment: Vec<bool> =
                (0..arity).map(|i| row >> (arity - 1 - i) & 1 == 1).collect();
            assert_eq!(circuit.simulate_output(&assignment, "f").unwrap(), expected);
        }
    }
});
