//! Command-line interface.
//!
//! Exit codes: 0 success, 1 verification failure (with a machine-readable
//! witness), 2 usage or parse errors. `--json` switches every subcommand
//! to a structured payload; identical inputs produce byte-identical output.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bitcore::decode_bits;
use crate::gatelib::{builtin, parse_gate_file, GateDef, GateLibrary, BUILTIN_NAMES};
use crate::metrics::{full_adder_comparison, ReportRow};
use crate::netlist::{parse_netlist, Circuit};
use crate::qcost::{
    decomposition, search_min_sequence, standard_registry, verify_explain, CostRegistry,
    CostSource, CostValue,
};
use crate::synth::{adder_value, parse_truth_table_hex, pprm, ripple_adder, synthesize};

/// Outcome of one invocation: what to print and how to exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(stdout: String) -> Self {
        CommandResult { exit_code: 0, stdout, stderr: String::new() }
    }

    fn verification_failure(stdout: String) -> Self {
        CommandResult { exit_code: 1, stdout, stderr: String::new() }
    }

    fn usage(message: String) -> Self {
        CommandResult { exit_code: 2, stdout: String::new(), stderr: message }
    }
}

#[derive(Parser)]
#[command(
    name = "revgate",
    version,
    about = "Reversible-logic workbench: gate truth tables, netlist simulation, \
             quantum cost, hardware complexity, and PFAG-based synthesis"
)]
struct Cli {
    /// Emit a machine-readable JSON payload
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exhaustive truth table of a gate or netlist
    Truthtable(TruthtableArgs),
    /// Run a netlist on one input assignment, or on all of them
    Simulate(SimulateArgs),
    /// Validate a netlist and print its audit report
    Check(CheckArgs),
    /// Quantum cost of a gate or netlist
    Cost(CostArgs),
    /// Hardware-complexity counts for one gate
    Metrics(MetricsArgs),
    /// The full-adder gate comparison table
    Compare(CompareArgs),
    /// Synthesize a Boolean function into a PFAG-only circuit
    Synth(SynthArgs),
    /// Breadth-first search for a minimal primitive sequence
    SearchDecomposition(SearchArgs),
    /// Build an n-bit ripple-carry adder from full-adder gates
    Adder(AdderArgs),
}

#[derive(Args)]
struct TruthtableArgs {
    /// Built-in gate name, gate-definition file, or netlist file
    target: String,
    /// Additional gate-definition files to load
    #[arg(long = "gates", value_name = "FILE")]
    gates: Vec<PathBuf>,
}

#[derive(Args)]
struct SimulateArgs {
    /// Netlist file
    netlist: PathBuf,
    /// Values for the free input lines, in declaration order (e.g. 101)
    #[arg(long, value_name = "BITS", conflicts_with = "all")]
    input: Option<String>,
    /// Simulate every free-input assignment
    #[arg(long)]
    all: bool,
    /// Additional gate-definition files to load
    #[arg(long = "gates", value_name = "FILE")]
    gates: Vec<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    /// Netlist file
    netlist: PathBuf,
    /// Additional gate-definition files to load
    #[arg(long = "gates", value_name = "FILE")]
    gates: Vec<PathBuf>,
    /// Cost registry file (`cost NAME = N` lines)
    #[arg(long, value_name = "FILE")]
    costs: Option<PathBuf>,
}

#[derive(Args)]
struct CostArgs {
    /// Netlist file to total up
    netlist: Option<PathBuf>,
    /// Built-in gate name
    #[arg(long, value_name = "NAME", conflicts_with = "netlist")]
    gate: Option<String>,
    /// Check the decomposition's unitary against the gate's permutation
    #[arg(long)]
    verify_unitary: bool,
    /// Additional gate-definition files to load
    #[arg(long = "gates", value_name = "FILE")]
    gates: Vec<PathBuf>,
    /// Cost registry file (`cost NAME = N` lines)
    #[arg(long, value_name = "FILE")]
    costs: Option<PathBuf>,
}

#[derive(Args)]
struct MetricsArgs {
    /// Built-in gate name or gate-definition file
    target: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Cost registry file (`cost NAME = N` lines)
    #[arg(long, value_name = "FILE")]
    costs: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Cost registry file (`cost NAME = N` lines)
    #[arg(long, value_name = "FILE")]
    costs: Option<PathBuf>,
}

#[derive(Args)]
struct SynthArgs {
    /// Truth table as hex, bit i giving the output for input index i
    #[arg(long, value_name = "HEX")]
    truth: String,
    /// Input arity
    #[arg(long, value_name = "ARITY")]
    n: usize,
    /// Write the synthesized netlist to this path
    #[arg(long, value_name = "FILE")]
    emit: Option<PathBuf>,
}

#[derive(Args)]
struct SearchArgs {
    /// Built-in gate name (3 lines)
    #[arg(long, value_name = "NAME")]
    gate: String,
    /// Longest sequence to try
    #[arg(long, value_name = "LEN")]
    max_len: usize,
    /// Add NOT placements to the searched primitive set
    #[arg(long)]
    include_not: bool,
}

#[derive(Args)]
struct AdderArgs {
    /// Operand width in bits
    #[arg(long, value_name = "N")]
    bits: usize,
    /// Write the adder netlist to this path
    #[arg(long, value_name = "FILE")]
    emit: Option<PathBuf>,
    /// Check every (a, b, carry-in) against integer addition
    #[arg(long)]
    exhaustive: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

/// Parse and dispatch. Never exits the process; the caller decides what to
/// do with the result.
pub fn run<I, S>(args: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandResult::ok(rendered),
                _ => CommandResult::usage(rendered),
            };
        }
    };
    let json = cli.json;
    match cli.command {
        Command::Truthtable(a) => truthtable(a, json),
        Command::Simulate(a) => simulate(a, json),
        Command::Check(a) => check(a, json),
        Command::Cost(a) => cost(a, json),
        Command::Metrics(a) => metrics_cmd(a, json),
        Command::Compare(a) => compare(a, json),
        Command::Synth(a) => synth_cmd(a, json),
        Command::SearchDecomposition(a) => search_cmd(a, json),
        Command::Adder(a) => adder_cmd(a, json),
    }
}

fn load_library(paths: &[PathBuf]) -> Result<GateLibrary, CommandResult> {
    let mut library = GateLibrary::standard();
    for path in paths {
        let text = read_file(path)?;
        let gate = parse_gate_file(&text)
            .map_err(|e| CommandResult::usage(format!("{}: {e}\n", path.display())))?;
        library
            .register(gate)
            .map_err(|e| CommandResult::usage(format!("{}: {e}\n", path.display())))?;
    }
    Ok(library)
}

fn load_registry(path: &Option<PathBuf>) -> Result<CostRegistry, CommandResult> {
    let mut registry = standard_registry();
    if let Some(path) = path {
        let text = read_file(path)?;
        registry
            .load_registry_text(&text)
            .map_err(|e| CommandResult::usage(format!("{}: {e}\n", path.display())))?;
    }
    Ok(registry)
}

fn read_file(path: &Path) -> Result<String, CommandResult> {
    std::fs::read_to_string(path)
        .map_err(|e| CommandResult::usage(format!("cannot read {}: {e}\n", path.display())))
}

fn load_netlist(path: &Path, library: &GateLibrary) -> Result<Circuit, CommandResult> {
    let text = read_file(path)?;
    parse_netlist(&text, library)
        .map_err(|e| CommandResult::usage(format!("{}: {e}\n", path.display())))
}

/// A `truthtable`/`metrics` target: builtin name, gate file, or netlist.
enum Target {
    Gate(GateDef),
    Netlist(Circuit),
}

fn resolve_target(
    spec: &str,
    library: &GateLibrary,
    allow_netlist: bool,
) -> Result<Target, CommandResult> {
    if let Some(gate) = library.resolve(spec) {
        return Ok(Target::Gate(gate.clone()));
    }
    let path = Path::new(spec);
    if !path.exists() {
        let builtins = BUILTIN_NAMES.join(", ");
        return Err(CommandResult::usage(format!(
            "'{spec}' is not a built-in gate ({builtins}) or a readable file\n"
        )));
    }
    let text = read_file(path)?;
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if first.starts_with('.') {
        if !allow_netlist {
            return Err(CommandResult::usage(format!("'{spec}' looks like a netlist; this command takes a gate\n")));
        }
        let circuit = parse_netlist(&text, library)
            .map_err(|e| CommandResult::usage(format!("{spec}: {e}\n")))?;
        Ok(Target::Netlist(circuit))
    } else {
        let gate = parse_gate_file(&text)
            .map_err(|e| CommandResult::usage(format!("{spec}: {e}\n")))?;
        Ok(Target::Gate(gate))
    }
}

fn bits_string(width: usize, value: u32) -> String {
    decode_bits(width, value).iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn truthtable(args: TruthtableArgs, json: bool) -> CommandResult {
    let library = match load_library(&args.gates) {
        Ok(l) => l,
        Err(e) => return e,
    };
    let target = match resolve_target(&args.target, &library, true) {
        Ok(t) => t,
        Err(e) => return e,
    };
    let (name, width, inputs, outputs, perm) = match &target {
        Target::Gate(gate) => (
            gate.name().to_string(),
            gate.width(),
            gate.inputs().to_vec(),
            gate.output_names().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            gate.table().clone(),
        ),
        Target::Netlist(circuit) => {
            let perm = match circuit.permutation() {
                Ok(p) => p,
                Err(e) => return CommandResult::usage(format!("{e}\n")),
            };
            (
                args.target.clone(),
                circuit.width(),
                circuit.lines().to_vec(),
                circuit.terminal_names().to_vec(),
                perm,
            )
        }
    };
    if json {
        let payload = json!({
            "name": name,
            "width": width,
            "inputs": inputs,
            "outputs": outputs,
            "map": perm.map(),
        });
        return CommandResult::ok(format!("{}\n", pretty(&payload)));
    }
    let mut out = String::new();
    let _ = writeln!(out, "{name} ({width} lines)");
    let _ = writeln!(out, "in:  {}", inputs.join(" "));
    let _ = writeln!(out, "out: {}", outputs.join(" "));
    for (input, &image) in perm.map().iter().enumerate() {
        let _ = writeln!(
            out,
            "{} -> {}",
            bits_string(width, input as u32),
            bits_string(width, image)
        );
    }
    CommandResult::ok(out)
}

fn simulate(args: SimulateArgs, json: bool) -> CommandResult {
    let library = match load_library(&args.gates) {
        Ok(l) => l,
        Err(e) => return e,
    };
    let circuit = match load_netlist(&args.netlist, &library) {
        Ok(c) => c,
        Err(e) => return e,
    };
    let free = circuit.free_lines().iter().map(|s| s.to_string()).collect::<Vec<_>>();

    let assignments: Vec<Vec<bool>> = if args.all {
        if free.len() > crate::bitcore::MAX_WIDTH {
            return CommandResult::usage(format!(
                "--all over {} free lines exceeds the enumeration cap\n",
                free.len()
            ));
        }
        (0..1u32 << free.len()).map(|v| decode_bits(free.len(), v)).collect()
    } else {
        let Some(bits) = &args.input else {
            return CommandResult::usage("one of --input <bits> or --all is required\n".into());
        };
        let mut assignment = Vec::new();
        for ch in bits.chars() {
            match ch {
                '0' => assignment.push(false),
                '1' => assignment.push(true),
                other => {
                    return CommandResult::usage(format!("--input digit '{other}' is not 0 or 1\n"))
                }
            }
        }
        if assignment.len() != free.len() {
            return CommandResult::usage(format!(
                "--input supplies {} values but the netlist has {} free lines ({})\n",
                assignment.len(),
                free.len(),
                free.join(" ")
            ));
        }
        vec![assignment]
    };

    let mut rows = Vec::new();
    for assignment in &assignments {
        let results = match circuit.simulate(assignment) {
            Ok(r) => r,
            Err(e) => return CommandResult::usage(format!("{e}\n")),
        };
        rows.push((assignment.clone(), results));
    }

    if json {
        let json_rows: Vec<Value> = rows
            .iter()
            .map(|(assignment, results)| {
                let input: String =
                    assignment.iter().map(|&b| if b { '1' } else { '0' }).collect();
                let line = |name: &String| {
                    results
                        .iter()
                        .find(|(n, _)| n == name)
                        .map(|(_, v)| u8::from(*v))
                        .unwrap_or(0)
                };
                json!({
                    "input": input,
                    "outputs": circuit.outputs().iter()
                        .map(|n| json!({"line": n, "value": line(n)}))
                        .collect::<Vec<_>>(),
                    "garbage": circuit.garbage().iter()
                        .map(|n| json!({"line": n, "value": line(n)}))
                        .collect::<Vec<_>>(),
                })
            })
            .collect();
        let payload = json!({
            "netlist": args.netlist.display().to_string(),
            "free_lines": free,
            "rows": json_rows,
        });
        return CommandResult::ok(format!("{}\n", pretty(&payload)));
    }

    let mut out = String::new();
    for (assignment, results) in &rows {
        let inputs: Vec<String> = free
            .iter()
            .zip(assignment)
            .map(|(n, &v)| format!("{n}={}", u8::from(v)))
            .collect();
        let fetch = |name: &String| {
            results.iter().find(|(n, _)| n == name).map(|(_, v)| u8::from(*v)).unwrap_or(0)
        };
        let outputs: Vec<String> =
            circuit.outputs().iter().map(|n| format!("{n}={}", fetch(n))).collect();
        let garbage: Vec<String> =
            circuit.garbage().iter().map(|n| format!("{n}={}", fetch(n))).collect();
        if args.all {
            let _ = writeln!(out, "{} -> {}", inputs.join(" "), outputs.join(" "));
        } else {
            let _ = writeln!(out, "inputs:  {}", inputs.join(" "));
            let _ = writeln!(out, "outputs: {}", outputs.join(" "));
            if !garbage.is_empty() {
                let _ = writeln!(out, "garbage: {}", garbage.join(" "));
            }
        }
    }
    CommandResult::ok(out)
}

fn check(args: CheckArgs, json: bool) -> CommandResult {
    let library = match load_library(&args.gates) {
        Ok(l) => l,
        Err(e) => return e,
    };
    let registry = match load_registry(&args.costs) {
        Ok(r) => r,
        Err(e) => return e,
    };
    let circuit = match load_netlist(&args.netlist, &library) {
        Ok(c) => c,
        Err(e) => return e,
    };
    let report = circuit.audit(&registry);
    let payload = json!({
        "netlist": args.netlist.display().to_string(),
        "report": report,
    });
    let text = if json {
        format!("{}\n", pretty(&payload))
    } else {
        let mut out = String::new();
        let _ = writeln!(out, "netlist: {}", args.netlist.display());
        let _ = writeln!(out, "width: {} lines", report.width);
        let _ = writeln!(out, "gates: {}", report.gate_count);
        let _ = writeln!(out, "constant inputs: {}", report.constant_inputs);
        let _ = writeln!(out, "garbage outputs: {}", report.garbage_outputs);
        let _ = writeln!(out, "quantum cost: {}", report.quantum_cost);
        let _ = writeln!(out, "reversible: {}", report.reversible);
        for warning in &report.warnings {
            let _ = writeln!(out, "warning: {warning}");
        }
        out
    };
    if report.reversible {
        CommandResult::ok(text)
    } else {
        CommandResult::verification_failure(text)
    }
}

fn cost(args: CostArgs, json: bool) -> CommandResult {
    let registry = match load_registry(&args.costs) {
        Ok(r) => r,
        Err(e) => return e,
    };
    if let Some(name) = &args.gate {
        let library = match load_library(&args.gates) {
            Ok(l) => l,
            Err(e) => return e,
        };
        let gate = library.resolve(name).cloned();
        let display_name =
            gate.as_ref().map(|g| g.name().to_string()).unwrap_or_else(|| name.to_uppercase());
        let entry = registry.cost_of(&display_name);
        if gate.is_none() && entry.is_none() {
            return CommandResult::usage(format!(
                "'{name}' is not a known gate and has no registered cost\n"
            ));
        }
        let declared = matches!(entry, Some(e) if e.source == CostSource::Declared);
        let value = entry.map(|e| CostValue::Known(e.value)).unwrap_or(CostValue::Unknown);

        let mut verified: Option<bool> = None;
        let mut witness: Option<Value> = None;
        if args.verify_unitary {
            let Some(gate) = &gate else {
                return CommandResult::usage(format!("'{name}' has no definition to verify against\n"));
            };
            let seq = match decomposition(gate.name()) {
                Ok(s) => s,
                Err(e) => return CommandResult::usage(format!("{e}\n")),
            };
            match verify_explain(&seq, gate) {
                Ok(None) => verified = Some(true),
                Ok(Some((row, col, got, want))) => {
                    verified = Some(false);
                    witness = Some(json!({
                        "row": row,
                        "col": col,
                        "got": format!("{got}"),
                        "expected": format!("{want}"),
                    }));
                }
                Err(e) => return CommandResult::usage(format!("{e}\n")),
            }
        }

        if json {
            let payload = json!({
                "gate": display_name,
                "cost": value,
                "declared": declared,
                "verified": verified,
                "witness": witness,
            });
            let text = format!("{}\n", pretty(&payload));
            return if verified == Some(false) {
                CommandResult::verification_failure(text)
            } else {
                CommandResult::ok(text)
            };
        }
        let mut line = format!("cost={value}");
        if declared {
            line.push_str(" (declared, unverified)");
        }
        match verified {
            Some(true) => line.push_str(", unitary verified"),
            Some(false) => line.push_str(", unitary MISMATCH"),
            None => {}
        }
        let mut text = format!("{line}\n");
        if let Some(w) = &witness {
            let _ = writeln!(text, "witness: {w}");
            return CommandResult::verification_failure(text);
        }
        return CommandResult::ok(text);
    }

    let Some(netlist) = &args.netlist else {
        return CommandResult::usage("provide a netlist path or --gate <name>\n".into());
    };
    if args.verify_unitary {
        return CommandResult::usage("--verify-unitary applies to --gate targets\n".into());
    }
    let library = match load_library(&args.gates) {
        Ok(l) => l,
        Err(e) => return e,
    };
    let circuit = match load_netlist(netlist, &library) {
        Ok(c) => c,
        Err(e) => return e,
    };
    let total = crate::qcost::circuit_cost(&circuit, &registry);
    let per_gate: Vec<Value> = circuit
        .gate_instances()
        .iter()
        .map(|inst| {
            let entry = registry.cost_of(inst.gate().name());
            json!({
                "gate": inst.gate().name(),
                "cost": entry.map(|e| CostValue::Known(e.value)).unwrap_or(CostValue::Unknown),
                "declared": matches!(entry, Some(e) if e.source == CostSource::Declared),
            })
        })
        .collect();
    if json {
        let payload = json!({
            "netlist": netlist.display().to_string(),
            "gates": per_gate,
            "total": total,
        });
        return CommandResult::ok(format!("{}\n", pretty(&payload)));
    }
    let mut out = String::new();
    for item in &per_gate {
        let name = item["gate"].as_str().unwrap_or("?");
        let cost = item["cost"].as_u64().map(|v| v.to_string()).unwrap_or("Unknown".into());
        let flag = if item["declared"].as_bool() == Some(true) { " (declared, unverified)" } else { "" };
        let _ = writeln!(out, "{name}: {cost}{flag}");
    }
    let _ = writeln!(out, "total quantum cost: {total}");
    CommandResult::ok(out)
}

fn row_to_json(row: &ReportRow) -> Value {
    json!({
        "name": row.name,
        "alpha": row.alpha,
        "beta": row.beta,
        "delta": row.delta,
        "T": row.total,
        "quantum_cost": row.quantum_cost,
        "reference": row.reference,
    })
}

fn rows_to_csv(rows: &[ReportRow]) -> String {
    let mut out = String::from("name,alpha,beta,delta,T,quantum_cost\n");
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            row.name, row.alpha, row.beta, row.delta, row.total, row.quantum_cost
        );
    }
    out
}

fn rows_to_table(rows: &[ReportRow], with_note: bool) -> String {
    let mut header = vec!["name", "alpha", "beta", "delta", "T", "quantum_cost"];
    if with_note {
        header.push("note");
    }
    let mut body: Vec<Vec<String>> = Vec::new();
    for row in rows {
        let mut cells = vec![
            row.name.clone(),
            row.alpha.to_string(),
            row.beta.to_string(),
            row.delta.to_string(),
            row.total.clone(),
            row.quantum_cost.to_string(),
        ];
        if with_note {
            cells.push(row.note().to_string());
        }
        body.push(cells);
    }
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for cells in &body {
        for (i, cell) in cells.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let render = |cells: &[String]| -> String {
        cells
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{:w$}", c, w = widths[i]))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let header_cells: Vec<String> = header.iter().map(|s| s.to_string()).collect();
    let mut out = render(&header_cells);
    out.push('\n');
    for cells in &body {
        out.push_str(&render(cells));
        out.push('\n');
    }
    out
}

fn emit_rows(rows: &[ReportRow], format: Format, json_flag: bool, with_note: bool) -> String {
    let format = if json_flag { Format::Json } else { format };
    match format {
        Format::Json => {
            let values: Vec<Value> = rows.iter().map(row_to_json).collect();
            format!("{}\n", pretty(&Value::Array(values)))
        }
        Format::Csv => rows_to_csv(rows),
        Format::Table => rows_to_table(rows, with_note),
    }
}

fn metrics_cmd(args: MetricsArgs, json: bool) -> CommandResult {
    let registry = match load_registry(&args.costs) {
        Ok(r) => r,
        Err(e) => return e,
    };
    let library = GateLibrary::standard();
    let gate = match resolve_target(&args.target, &library, false) {
        Ok(Target::Gate(g)) => g,
        Ok(Target::Netlist(_)) => unreachable!("netlists rejected above"),
        Err(e) => return e,
    };
    let row = ReportRow::computed(&gate, &registry);
    CommandResult::ok(emit_rows(&[row], args.format, json, false))
}

fn compare(args: CompareArgs, json: bool) -> CommandResult {
    let registry = match load_registry(&args.costs) {
        Ok(r) => r,
        Err(e) => return e,
    };
    let rows = full_adder_comparison(&registry);
    CommandResult::ok(emit_rows(&rows, args.format, json, true))
}

fn synth_cmd(args: SynthArgs, json: bool) -> CommandResult {
    let table = match parse_truth_table_hex(&args.truth, args.n) {
        Ok(t) => t,
        Err(e) => return CommandResult::usage(format!("{e}\n")),
    };
    let monomials = pprm(&table).expect("arity validated");
    let circuit = match synthesize(&table) {
        Ok(c) => c,
        Err(e) => return CommandResult::usage(format!("{e}\n")),
    };

    // Re-verify the construction row by row.
    let mut mismatch: Option<(usize, bool, bool)> = None;
    for (row, &expected) in table.iter().enumerate() {
        let assignment = decode_bits(args.n, row as u32);
        let got = circuit.simulate_output(&assignment, "f").expect("valid assignment");
        if got != expected {
            mismatch = Some((row, got, expected));
            break;
        }
    }

    if let Some(path) = &args.emit {
        if let Err(e) = std::fs::write(path, circuit.to_netlist_text()) {
            return CommandResult::usage(format!("cannot write {}: {e}\n", path.display()));
        }
    }

    let monomial_strings: Vec<String> = monomials.iter().map(|m| m.to_string()).collect();
    if json {
        let payload = json!({
            "truth": args.truth,
            "arity": args.n,
            "monomials": monomial_strings,
            "gates": circuit.gate_instances().len(),
            "lines": circuit.width(),
            "verified": mismatch.is_none(),
            "witness": mismatch.map(|(row, got, expected)| json!({
                "input": bits_string(args.n, row as u32),
                "got": u8::from(got),
                "expected": u8::from(expected),
            })),
            "emitted": args.emit.as_ref().map(|p| p.display().to_string()),
        });
        let text = format!("{}\n", pretty(&payload));
        return if mismatch.is_none() {
            CommandResult::ok(text)
        } else {
            CommandResult::verification_failure(text)
        };
    }
    let mut out = String::new();
    let _ = writeln!(out, "function: 0x{} over {} inputs", args.truth.trim_start_matches("0x"), args.n);
    let _ = writeln!(out, "monomials: {}", if monomial_strings.is_empty() { "none (constant 0)".to_string() } else { monomial_strings.join(" ^ ") });
    let _ = writeln!(out, "gates: {}", circuit.gate_instances().len());
    let _ = writeln!(out, "lines: {}", circuit.width());
    match mismatch {
        None => {
            let _ = writeln!(out, "verified: {}/{} rows match", table.len(), table.len());
        }
        Some((row, got, expected)) => {
            let _ = writeln!(
                out,
                "witness: {{\"input\":\"{}\",\"got\":{},\"expected\":{}}}",
                bits_string(args.n, row as u32),
                u8::from(got),
                u8::from(expected)
            );
            return CommandResult::verification_failure(out);
        }
    }
    if let Some(path) = &args.emit {
        let _ = writeln!(out, "netlist written to {}", path.display());
    }
    CommandResult::ok(out)
}

fn search_cmd(args: SearchArgs, json: bool) -> CommandResult {
    let gate = match builtin(&args.gate) {
        Ok(g) => g,
        Err(e) => return CommandResult::usage(format!("{e}\n")),
    };
    let found = match search_min_sequence(gate.table(), args.max_len, args.include_not) {
        Ok(f) => f,
        Err(e) => return CommandResult::usage(format!("{e}\n")),
    };
    if json {
        let payload = match &found {
            Some(seq) => {
                let verified = crate::qcost::verify(seq, &gate).unwrap_or(false);
                json!({
                    "gate": gate.name(),
                    "max_len": args.max_len,
                    "include_not": args.include_not,
                    "found": true,
                    "cost": seq.cost(),
                    "sequence": seq.steps().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "verified": verified,
                })
            }
            None => json!({
                "gate": gate.name(),
                "max_len": args.max_len,
                "include_not": args.include_not,
                "found": false,
            }),
        };
        return CommandResult::ok(format!("{}\n", pretty(&payload)));
    }
    match found {
        Some(seq) => {
            let verified = crate::qcost::verify(&seq, &gate).unwrap_or(false);
            CommandResult::ok(format!(
                "found cost-{} sequence: {seq}\nverified: {verified}\n",
                seq.cost()
            ))
        }
        None => CommandResult::ok(format!(
            "no sequence of length <= {} realizes {}\n",
            args.max_len,
            gate.name()
        )),
    }
}

fn adder_cmd(args: AdderArgs, json: bool) -> CommandResult {
    let circuit = match ripple_adder(args.bits) {
        Ok(c) => c,
        Err(e) => return CommandResult::usage(format!("{e}\n")),
    };
    let report = circuit.audit(&standard_registry());

    let mut checked_rows = 0u64;
    let mut witness: Option<Value> = None;
    if args.exhaustive {
        let freed = circuit.with_constants_freed();
        'outer: for a in 0..1u64 << args.bits {
            for b in 0..1u64 << args.bits {
                for carry in [false, true] {
                    let got = adder_value(&freed, args.bits, a, b, Some(carry));
                    checked_rows += 1;
                    let expected = a + b + u64::from(carry);
                    if got != expected {
                        witness = Some(json!({
                            "a": a,
                            "b": b,
                            "carry_in": u8::from(carry),
                            "got": got,
                            "expected": expected,
                        }));
                        break 'outer;
                    }
                }
            }
        }
    }

    if let Some(path) = &args.emit {
        if let Err(e) = std::fs::write(path, circuit.to_netlist_text()) {
            return CommandResult::usage(format!("cannot write {}: {e}\n", path.display()));
        }
    }

    if json {
        let payload = json!({
            "bits": args.bits,
            "report": report,
            "exhaustive_rows_checked": if args.exhaustive { Some(checked_rows) } else { None },
            "witness": witness,
            "emitted": args.emit.as_ref().map(|p| p.display().to_string()),
        });
        let text = format!("{}\n", pretty(&payload));
        return if witness.is_none() {
            CommandResult::ok(text)
        } else {
            CommandResult::verification_failure(text)
        };
    }
    let mut out = String::new();
    let _ = writeln!(out, "{}-bit ripple-carry adder", args.bits);
    let _ = writeln!(out, "gates: {}", report.gate_count);
    let _ = writeln!(out, "quantum cost: {}", report.quantum_cost);
    let _ = writeln!(out, "constant inputs: {}", report.constant_inputs);
    let _ = writeln!(out, "garbage outputs: {}", report.garbage_outputs);
    let _ = writeln!(out, "reversible: {}", report.reversible);
    if args.exhaustive {
        match &witness {
            None => {
                let _ = writeln!(out, "exhaustive check: {checked_rows}/{checked_rows} rows match integer addition");
            }
            Some(w) => {
                let _ = writeln!(out, "witness: {w}");
                return CommandResult::verification_failure(out);
            }
        }
    }
    if let Some(path) = &args.emit {
        let _ = writeln!(out, "netlist written to {}", path.display());
    }
    CommandResult::ok(out)
}

fn pretty(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("serializable payload")
}
