//! End-to-end checks against the actual binary: exit codes, shipped data
//! files, emitted netlists round-tripping through `check`, and JSON
//! determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn revgate(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_revgate"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn data(file: &str) -> String {
    format!("{}/data/{file}", env!("CARGO_MANIFEST_DIR"))
}

fn temp_path(name: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("revgate-test-{}-{name}", std::process::id()));
    path
}

#[test]
fn check_passes_on_every_shipped_netlist() {
    let dir = format!("{}/data", env!("CARGO_MANIFEST_DIR"));
    let mut found = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) == Some("net") {
            found += 1;
            let output = revgate(&["check", path.to_str().unwrap()]);
            assert_eq!(
                output.status.code(),
                Some(0),
                "{}: {}",
                path.display(),
                String::from_utf8_lossy(&output.stderr)
            );
            assert!(stdout(&output).contains("reversible: true"));
        }
    }
    assert!(found >= 2, "expected shipped netlists, found {found}");
}

#[test]
fn truthtable_binary_output() {
    let output = revgate(&["truthtable", "PFAG"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.ends_with("1111 -> 1010\n"));
}

#[test]
fn truthtable_gate_file_matches_builtin() {
    let from_file = revgate(&["truthtable", &data("peres.gate")]);
    let from_name = revgate(&["truthtable", "PERES"]);
    assert_eq!(output_rows(&stdout(&from_file)), output_rows(&stdout(&from_name)));
}

#[test]
fn truthtable_netlist_matches_gate() {
    // The single-gate adder netlist behaves exactly like the gate itself
    // over all lines (constants unbound).
    let from_netlist = revgate(&["truthtable", &data("pfag_adder.net")]);
    let from_gate = revgate(&["truthtable", "PFAG"]);
    assert_eq!(from_netlist.status.code(), Some(0));
    assert_eq!(output_rows(&stdout(&from_netlist)), output_rows(&stdout(&from_gate)));
}

fn output_rows(text: &str) -> Vec<String> {
    text.lines().filter(|l| l.contains(" -> ")).map(|l| l.to_string()).collect()
}

#[test]
fn simulate_single_row() {
    let output = revgate(&["simulate", &data("pfag_adder.net"), "--input", "101"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("outputs: sum=0 cout=1"), "{text}");
}

#[test]
fn simulate_all_rows() {
    let output = revgate(&["simulate", &data("two_peres_adder.net"), "--all"]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output).lines().count(), 8);
}

#[test]
fn simulate_wrong_width_exits_2() {
    let output = revgate(&["simulate", &data("pfag_adder.net"), "--input", "10"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn unknown_subcommand_exits_2() {
    let output = revgate(&["frobnicate"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn cost_gate_verify() {
    let output = revgate(&["cost", "--gate", "PFAG", "--verify-unitary"]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "cost=8, unitary verified\n");
}

#[test]
fn cost_netlist_total() {
    let output = revgate(&["cost", &data("two_peres_adder.net")]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("total quantum cost: 8"));
}

#[test]
fn cost_declared_registry() {
    let registry = temp_path("costs.reg");
    std::fs::write(&registry, "cost TSG = 14\n").unwrap();
    let output = revgate(&["cost", "--gate", "TSG", "--costs", registry.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "cost=14 (declared, unverified)\n");
    std::fs::remove_file(&registry).ok();
}

#[test]
fn user_gate_in_netlist() {
    let netlist = temp_path("swap.net");
    std::fs::write(
        &netlist,
        ".lines a b\n.gate SWAP (a b) -> (p q)\n.output p q\n",
    )
    .unwrap();
    let output = revgate(&[
        "check",
        netlist.to_str().unwrap(),
        "--gates",
        &data("swap.gate"),
    ]);
    assert_eq!(
        output.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&output.stderr)
    );
    // Without the gate file the netlist cannot resolve SWAP.
    let output = revgate(&["check", netlist.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    std::fs::remove_file(&netlist).ok();
}

#[test]
fn compare_json_is_byte_identical() {
    let first = revgate(&["compare", "--json"]);
    let second = revgate(&["compare", "--json"]);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.status.code(), Some(0));
}

#[test]
fn synth_emit_round_trips_through_check() {
    let emitted = temp_path("majority.net");
    let output = revgate(&[
        "synth",
        "--truth",
        "E8",
        "--n",
        "3",
        "--emit",
        emitted.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0), "{}", String::from_utf8_lossy(&output.stderr));
    assert!(stdout(&output).contains("verified: 8/8 rows match"));

    let check = revgate(&["check", emitted.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(0));
    let text = stdout(&check);
    assert!(text.contains("reversible: true"));

    // Drive the emitted netlist: majority(1,0,1) = 1.
    let sim = revgate(&["simulate", emitted.to_str().unwrap(), "--input", "101"]);
    assert!(stdout(&sim).contains("outputs: f=1"));
    std::fs::remove_file(&emitted).ok();
}

#[test]
fn adder_emit_round_trips_through_check() {
    let emitted = temp_path("adder3.net");
    let output = revgate(&["adder", "--bits", "3", "--emit", emitted.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    let check = revgate(&["check", emitted.to_str().unwrap(), "--json"]);
    assert_eq!(check.status.code(), Some(0));
    let payload: serde_json::Value = serde_json::from_str(&stdout(&check)).unwrap();
    assert_eq!(payload["report"]["quantum_cost"], 24);
    assert_eq!(payload["report"]["garbage_outputs"], 6);
    assert_eq!(payload["report"]["constant_inputs"], 4);
    std::fs::remove_file(&emitted).ok();
}

#[test]
fn search_decomposition_reports_absence_and_presence() {
    let none = revgate(&["search-decomposition", "--gate", "PERES", "--max-len", "3"]);
    assert_eq!(none.status.code(), Some(0));
    assert!(stdout(&none).contains("no sequence of length <= 3 realizes PERES"));

    let found = revgate(&["search-decomposition", "--gate", "PERES", "--max-len", "4", "--json"]);
    let payload: serde_json::Value = serde_json::from_str(&stdout(&found)).unwrap();
    assert_eq!(payload["found"], true);
    assert_eq!(payload["cost"], 4);
    assert_eq!(payload["verified"], true);
}
