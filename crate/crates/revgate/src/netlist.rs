//! Circuits over named lines: parser, exhaustive simulator, and auditor.
//!
//! A circuit is feed-forward and acyclic: a fixed set of wires, each gate
//! instance consuming the current values of its input lines and rebinding
//! those wire positions to its output lines. Constant inputs are bound on
//! the input side; every terminal line is classified as exactly one of
//! useful output or garbage. Gates are zero-delay combinational; there is
//! no clocking model.

use std::collections::HashMap;

use thiserror::Error;

use crate::bitcore::{decode_bits, encode_bits, BitcoreError, TruthPermutation, MAX_WIDTH};
use crate::gatelib::{GateDef, GateLibrary};
use crate::qcost::{circuit_cost, CostRegistry, CostValue};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NetlistError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: unknown gate '{name}'")]
    UnknownGate { line: usize, name: String },
    #[error("line {line}: gate '{gate}' takes {expected} lines but {got} were wired")]
    GateArity { line: usize, gate: String, expected: usize, got: usize },
    #[error("line {line}: '{name}' does not name a live line here")]
    UnknownLine { line: usize, name: String },
    #[error("line {line}: duplicate line binding '{name}'")]
    DuplicateBinding { line: usize, name: String },
    #[error("terminal line '{0}' is classified as both garbage and output")]
    DoublyClassified(String),
    #[error("terminal line '{0}' is neither a declared output nor garbage")]
    UnclassifiedTerminal(String),
    #[error("'{0}' is not a terminal line")]
    NotTerminal(String),
    #[error("assignment covers {got} values but the circuit has {expected} free input lines")]
    AssignmentMismatch { expected: usize, got: usize },
    #[error("circuit width {0} exceeds the exhaustive-enumeration cap of {MAX_WIDTH} lines")]
    WidthCap(usize),
    #[error(transparent)]
    Bitcore(#[from] BitcoreError),
}

/// One gate application: which wire positions it consumes (in gate port
/// order) and the new names those positions take.
#[derive(Debug, Clone)]
pub struct GateInstance {
    gate: GateDef,
    positions: Vec<usize>,
    input_names: Vec<String>,
    output_names: Vec<String>,
}

impl GateInstance {
    pub fn gate(&self) -> &GateDef {
        &self.gate
    }

    pub fn input_names(&self) -> &[String] {
        &self.input_names
    }

    pub fn output_names(&self) -> &[String] {
        &self.output_names
    }
}

/// A validated netlist.
#[derive(Debug, Clone)]
pub struct Circuit {
    lines: Vec<String>,
    constants: Vec<Option<bool>>,
    gates: Vec<GateInstance>,
    terminal_names: Vec<String>,
    garbage: Vec<String>,
    outputs: Vec<String>,
}

/// The comparison criteria for a circuit: line counts, garbage/constant
/// accounting, quantum cost, and verified reversibility.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct AuditReport {
    pub width: usize,
    pub gate_count: usize,
    pub constant_inputs: usize,
    pub garbage_outputs: usize,
    pub quantum_cost: CostValue,
    pub reversible: bool,
    pub warnings: Vec<String>,
}

impl Circuit {
    /// Assemble and validate a circuit from parts. `constants` and the
    /// classification lists are by name; gate instances are applied in
    /// order against the evolving wire bindings.
    pub fn build(
        lines: Vec<String>,
        constants: &[(String, bool)],
        gate_apps: &[(GateDef, Vec<String>, Vec<String>)],
        garbage: Vec<String>,
        outputs: Vec<String>,
    ) -> Result<Self, NetlistError> {
        let mut seen = HashMap::new();
        for (i, name) in lines.iter().enumerate() {
            if seen.insert(name.clone(), i).is_some() {
                return Err(NetlistError::DuplicateBinding { line: 0, name: name.clone() });
            }
        }
        let mut const_values = vec![None; lines.len()];
        for (name, value) in constants {
            let &pos = seen
                .get(name)
                .ok_or_else(|| NetlistError::UnknownLine { line: 0, name: name.clone() })?;
            if const_values[pos].is_some() {
                return Err(NetlistError::DuplicateBinding { line: 0, name: name.clone() });
            }
            const_values[pos] = Some(*value);
        }

        let mut circuit = Circuit {
            lines: lines.clone(),
            constants: const_values,
            gates: Vec::new(),
            terminal_names: lines,
            garbage: Vec::new(),
            outputs: Vec::new(),
        };
        for (gate, inputs, output_names) in gate_apps {
            circuit.apply_gate(0, gate.clone(), inputs, output_names)?;
        }
        circuit.classify(garbage, outputs)?;
        Ok(circuit)
    }

    /// Bind a gate over the current wire names. `src_line` is the netlist
    /// source line for error reporting (0 for programmatic construction).
    fn apply_gate(
        &mut self,
        src_line: usize,
        gate: GateDef,
        inputs: &[String],
        outputs: &[String],
    ) -> Result<(), NetlistError> {
        if inputs.len() != gate.width() || outputs.len() != gate.width() {
            return Err(NetlistError::GateArity {
                line: src_line,
                gate: gate.name().to_string(),
                expected: gate.width(),
                got: if inputs.len() != gate.width() { inputs.len() } else { outputs.len() },
            });
        }
        let mut positions = Vec::with_capacity(inputs.len());
        for name in inputs {
            let pos = self
                .terminal_names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| NetlistError::UnknownLine { line: src_line, name: name.clone() })?;
            if positions.contains(&pos) {
                return Err(NetlistError::DuplicateBinding { line: src_line, name: name.clone() });
            }
            positions.push(pos);
        }
        // Rebind the consumed positions; the new names must not collide with
        // each other or with any untouched live wire.
        for (i, name) in outputs.iter().enumerate() {
            if outputs[..i].contains(name) {
                return Err(NetlistError::DuplicateBinding { line: src_line, name: name.clone() });
            }
            if let Some(pos) = self.terminal_names.iter().position(|n| n == name) {
                if !positions.contains(&pos) {
                    return Err(NetlistError::DuplicateBinding { line: src_line, name: name.clone() });
                }
            }
        }
        for (&pos, name) in positions.iter().zip(outputs) {
            self.terminal_names[pos] = name.clone();
        }
        self.gates.push(GateInstance {
            gate,
            positions,
            input_names: inputs.to_vec(),
            output_names: outputs.to_vec(),
        });
        Ok(())
    }

    fn classify(&mut self, garbage: Vec<String>, outputs: Vec<String>) -> Result<(), NetlistError> {
        for name in garbage.iter().chain(&outputs) {
            if !self.terminal_names.contains(name) {
                return Err(NetlistError::NotTerminal(name.clone()));
            }
        }
        for (i, name) in garbage.iter().enumerate() {
            if garbage[..i].contains(name) {
                return Err(NetlistError::DoublyClassified(name.clone()));
            }
            if outputs.contains(name) {
                return Err(NetlistError::DoublyClassified(name.clone()));
            }
        }
        for (i, name) in outputs.iter().enumerate() {
            if outputs[..i].contains(name) {
                return Err(NetlistError::DoublyClassified(name.clone()));
            }
        }
        for name in &self.terminal_names {
            if !garbage.contains(name) && !outputs.contains(name) {
                return Err(NetlistError::UnclassifiedTerminal(name.clone()));
            }
        }
        self.garbage = garbage;
        self.outputs = outputs;
        Ok(())
    }

    pub fn width(&self) -> usize {
        self.lines.len()
    }

    /// Initial line names, in declaration order.
    pub fn lines(&self) -> &[String] {
        &self.lines
    }

    /// Line names after all gates, by wire position.
    pub fn terminal_names(&self) -> &[String] {
        &self.terminal_names
    }

    pub fn gate_instances(&self) -> &[GateInstance] {
        &self.gates
    }

    pub fn garbage(&self) -> &[String] {
        &self.garbage
    }

    pub fn outputs(&self) -> &[String] {
        &self.outputs
    }

    /// Constant bindings as (line name, value), in declaration order.
    pub fn constants(&self) -> Vec<(&str, bool)> {
        self.lines
            .iter()
            .zip(&self.constants)
            .filter_map(|(n, c)| c.map(|v| (n.as_str(), v)))
            .collect()
    }

    /// Non-constant input lines, in declaration order.
    pub fn free_lines(&self) -> Vec<&str> {
        self.lines
            .iter()
            .zip(&self.constants)
            .filter_map(|(n, c)| if c.is_none() { Some(n.as_str()) } else { None })
            .collect()
    }

    /// The same circuit with every constant binding removed, so formerly
    /// bound lines can be driven as free inputs.
    pub fn with_constants_freed(&self) -> Circuit {
        let mut freed = self.clone();
        freed.constants = vec![None; freed.lines.len()];
        freed
    }

    fn run_wires(&self, values: &mut [bool]) {
        for inst in &self.gates {
            let index = encode_bits(
                &inst.positions.iter().map(|&p| values[p]).collect::<Vec<_>>(),
            );
            let image = inst.gate.table().image(index);
            let out_bits = decode_bits(inst.gate.width(), image);
            for (&pos, bit) in inst.positions.iter().zip(out_bits) {
                values[pos] = bit;
            }
        }
    }

    /// Run the circuit on an assignment of the free input lines (in
    /// declaration order) and return every terminal line's value, by wire
    /// position.
    pub fn simulate(&self, assignment: &[bool]) -> Result<Vec<(String, bool)>, NetlistError> {
        let free = self.free_lines().len();
        if assignment.len() != free {
            return Err(NetlistError::AssignmentMismatch { expected: free, got: assignment.len() });
        }
        let mut values = Vec::with_capacity(self.width());
        let mut next = 0;
        for c in &self.constants {
            values.push(match c {
                Some(v) => *v,
                None => {
                    let v = assignment[next];
                    next += 1;
                    v
                }
            });
        }
        self.run_wires(&mut values);
        Ok(self.terminal_names.iter().cloned().zip(values).collect())
    }

    /// Terminal value of one named output for a given free-input assignment.
    pub fn simulate_output(&self, assignment: &[bool], name: &str) -> Result<bool, NetlistError> {
        let results = self.simulate(assignment)?;
        results
            .into_iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v)
            .ok_or_else(|| NetlistError::NotTerminal(name.to_string()))
    }

    /// The circuit's behavior over ALL lines treated as free (constant
    /// bindings ignored): always a bijection when every gate is valid.
    /// First declared line is the most significant bit on both sides.
    pub fn permutation(&self) -> Result<TruthPermutation, NetlistError> {
        let width = self.width();
        if width > MAX_WIDTH {
            return Err(NetlistError::WidthCap(width));
        }
        let mut map = Vec::with_capacity(1 << width);
        for index in 0..1u32 << width {
            let mut values = decode_bits(width, index);
            self.run_wires(&mut values);
            map.push(encode_bits(&values));
        }
        Ok(TruthPermutation::new(width, map)?)
    }

    /// Companion table over the free inputs only, for functional checks:
    /// entry `i` encodes the useful-output values (declaration order, first
    /// output = MSB) for free-input assignment `i` (first free line = MSB).
    pub fn output_table(&self) -> Result<Vec<u32>, NetlistError> {
        let free = self.free_lines().len();
        if free > MAX_WIDTH || self.outputs.len() > MAX_WIDTH {
            return Err(NetlistError::WidthCap(free.max(self.outputs.len())));
        }
        let mut rows = Vec::with_capacity(1 << free);
        for index in 0..1u32 << free {
            let assignment = decode_bits(free, index);
            let terminal = self.simulate(&assignment)?;
            let by_name: HashMap<&str, bool> =
                terminal.iter().map(|(n, v)| (n.as_str(), *v)).collect();
            let bits: Vec<bool> = self.outputs.iter().map(|n| by_name[n.as_str()]).collect();
            rows.push(encode_bits(&bits));
        }
        Ok(rows)
    }

    /// Count the comparison criteria and verify reversibility exhaustively
    /// (structurally, above the enumeration cap — every gate is already a
    /// validated bijection).
    pub fn audit(&self, registry: &CostRegistry) -> AuditReport {
        let mut touched = vec![false; self.width()];
        for inst in &self.gates {
            for &pos in &inst.positions {
                touched[pos] = true;
            }
        }
        let mut warnings = Vec::new();
        for (pos, name) in self.terminal_names.iter().enumerate() {
            if self.outputs.contains(name) && !touched[pos] {
                warnings.push(format!("output line '{name}' is never driven by any gate"));
            }
        }
        for (pos, name) in self.lines.iter().enumerate() {
            if self.constants[pos].is_some() && !touched[pos] {
                warnings.push(format!("constant line '{name}' is never read by any gate"));
            }
        }
        let reversible = if self.width() <= MAX_WIDTH {
            self.permutation().is_ok()
        } else {
            true
        };
        AuditReport {
            width: self.width(),
            gate_count: self.gates.len(),
            constant_inputs: self.constants.iter().filter(|c| c.is_some()).count(),
            garbage_outputs: self.garbage.len(),
            quantum_cost: circuit_cost(self, registry),
            reversible,
            warnings,
        }
    }

    /// Render back to the netlist file format.
    pub fn to_netlist_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(".lines  {}\n", self.lines.join(" ")));
        for (name, value) in self.constants() {
            out.push_str(&format!(".const  {} = {}\n", name, u8::from(value)));
        }
        for inst in &self.gates {
            out.push_str(&format!(
                ".gate   {} ({}) -> ({})\n",
                inst.gate.name(),
                inst.input_names.join(" "),
                inst.output_names.join(" ")
            ));
        }
        if !self.garbage.is_empty() {
            out.push_str(&format!(".garbage {}\n", self.garbage.join(" ")));
        }
        out.push_str(&format!(".output  {}\n", self.outputs.join(" ")));
        out
    }
}

/// Parse a netlist file:
///
/// ```text
/// .lines  a b cin d0
/// .const  d0 = 0
/// .gate   PFAG (a b cin d0) -> (p q sum cout)
/// .garbage p q
/// .output  sum cout
/// ```
///
/// Gate port order matches the gate definition's declared order. Every
/// referenced gate must resolve in `library`.
pub fn parse_netlist(text: &str, library: &GateLibrary) -> Result<Circuit, NetlistError> {
    let mut circuit: Option<Circuit> = None;
    let mut garbage: Vec<String> = Vec::new();
    let mut outputs: Vec<String> = Vec::new();
    let mut constants_done = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (directive, rest) = match line.split_once(char::is_whitespace) {
            Some((d, r)) => (d, r.trim()),
            None => (line, ""),
        };
        match directive {
            ".lines" => {
                if circuit.is_some() {
                    return Err(NetlistError::Syntax {
                        line: line_no,
                        msg: "duplicate '.lines' directive".into(),
                    });
                }
                let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if names.is_empty() {
                    return Err(NetlistError::Syntax {
                        line: line_no,
                        msg: "'.lines' needs at least one line name".into(),
                    });
                }
                let mut seen = HashMap::new();
                for (i, n) in names.iter().enumerate() {
                    if seen.insert(n.clone(), i).is_some() {
                        return Err(NetlistError::DuplicateBinding { line: line_no, name: n.clone() });
                    }
                }
                circuit = Some(Circuit {
                    terminal_names: names.clone(),
                    constants: vec![None; names.len()],
                    lines: names,
                    gates: Vec::new(),
                    garbage: Vec::new(),
                    outputs: Vec::new(),
                });
            }
            ".const" => {
                let circuit = circuit.as_mut().ok_or_else(|| NetlistError::Syntax {
                    line: line_no,
                    msg: "'.const' before '.lines'".into(),
                })?;
                if constants_done {
                    return Err(NetlistError::Syntax {
                        line: line_no,
                        msg: "'.const' must come before the first '.gate'".into(),
                    });
                }
                let (name, value) = rest.split_once('=').ok_or_else(|| NetlistError::Syntax {
                    line: line_no,
                    msg: "expected '.const <line> = 0|1'".into(),
                })?;
                let name = name.trim();
                let value = match value.trim() {
                    "0" => false,
                    "1" => true,
                    other => {
                        return Err(NetlistError::Syntax {
                            line: line_no,
                            msg: format!("constant value must be 0 or 1, got '{other}'"),
                        })
                    }
                };
                let pos = circuit
                    .lines
                    .iter()
                    .position(|n| n == name)
                    .ok_or_else(|| NetlistError::UnknownLine { line: line_no, name: name.into() })?;
                if circuit.constants[pos].is_some() {
                    return Err(NetlistError::DuplicateBinding { line: line_no, name: name.into() });
                }
                circuit.constants[pos] = Some(value);
            }
            ".gate" => {
                let circuit_ref = circuit.as_mut().ok_or_else(|| NetlistError::Syntax {
                    line: line_no,
                    msg: "'.gate' before '.lines'".into(),
                })?;
                constants_done = true;
                let (name, ins, outs) = parse_gate_directive(line_no, rest)?;
                let gate = library
                    .resolve(&name)
                    .ok_or_else(|| NetlistError::UnknownGate { line: line_no, name: name.clone() })?
                    .clone();
                circuit_ref.apply_gate(line_no, gate, &ins, &outs)?;
            }
            ".garbage" => {
                garbage.extend(rest.split_whitespace().map(str::to_string));
            }
            ".output" => {
                outputs.extend(rest.split_whitespace().map(str::to_string));
            }
            other => {
                return Err(NetlistError::Syntax {
                    line: line_no,
                    msg: format!("unknown directive '{other}'"),
                });
            }
        }
    }

    let mut circuit = circuit.ok_or_else(|| NetlistError::Syntax {
        line: 1,
        msg: "missing '.lines' directive".into(),
    })?;
    circuit.classify(garbage, outputs)?;
    Ok(circuit)
}

/// Split `NAME (a b c) -> (p q r)` into its parts.
fn parse_gate_directive(
    line_no: usize,
    rest: &str,
) -> Result<(String, Vec<String>, Vec<String>), NetlistError> {
    let syntax = |msg: &str| NetlistError::Syntax { line: line_no, msg: msg.into() };
    let (name, rest) = rest
        .split_once('(')
        .ok_or_else(|| syntax("expected '.gate NAME (inputs) -> (outputs)'"))?;
    let name = name.trim().to_string();
    if name.is_empty() {
        return Err(syntax("missing gate name"));
    }
    let (ins, rest) = rest.split_once(')').ok_or_else(|| syntax("unclosed input port list"))?;
    let rest = rest.trim();
    let rest = rest
        .strip_prefix("->")
        .ok_or_else(|| syntax("expected '->' between port lists"))?
        .trim();
    let outs = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| syntax("expected parenthesized output port list"))?;
    let ins: Vec<String> = ins.split_whitespace().map(str::to_string).collect();
    let outs: Vec<String> = outs.split_whitespace().map(str::to_string).collect();
    Ok((name, ins, outs))
}
