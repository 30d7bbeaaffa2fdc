//! Constructive universality of the four-line full-adder gate.
//!
//! Three routes, all exhaustive-checkable:
//!
//! * [`find_configuration`] discovers by brute force how to realize any one-
//!   or two-input Boolean function with a single PFAG instance (constant
//!   bindings plus an output pick).
//! * [`pprm`] expands a truth table into its positive-polarity Reed-Muller
//!   form (an XOR of positive-literal AND monomials, unique per function).
//! * [`synthesize`] turns that expansion into a PFAG-only circuit: each
//!   monomial is accumulated into a dedicated result line, with fresh
//!   ancilla lines per monomial and no uncomputation. Gate count is not
//!   optimized; correctness and auditability win.
//!
//! [`ripple_adder`] chains full-adder stages in the D=0 mode.

use thiserror::Error;

use crate::gatelib::{builtin, GateDef};
use crate::netlist::{Circuit, NetlistError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SynthError {
    #[error("target has {0} rows; expected 2^n for an n-input function with n in 1..={1}")]
    BadTableSize(usize, usize),
    #[error("no single-gate configuration realizes this function; a gate network is required")]
    NoSingleGateRealization,
    #[error("adder width {0} out of range (1..=6)")]
    AdderWidth(usize),
    #[error("arity {0} out of range (1..=6)")]
    HexArity(usize),
    #[error("truth-table hex: {0}")]
    HexSyntax(String),
    #[error(transparent)]
    Netlist(#[from] NetlistError),
}

/// How one PFAG input port is fed in a single-gate configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PortBinding {
    /// Target function variable, by index.
    Variable(usize),
    Constant(bool),
}

impl std::fmt::Display for PortBinding {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PortBinding::Variable(i) => write!(f, "x{i}"),
            PortBinding::Constant(c) => write!(f, "{}", u8::from(*c)),
        }
    }
}

/// A single-PFAG realization of a small Boolean function: bindings for the
/// four input ports, the output line that carries the function, and the
/// realized truth table (which always equals the target).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PfagConfig {
    pub ports: [PortBinding; 4],
    pub output: usize,
    pub realized: Vec<bool>,
}

impl PfagConfig {
    /// Name of the selected output line on the gate.
    pub fn output_name(&self) -> &'static str {
        ["P", "Q", "R", "S"][self.output]
    }
}

fn arity_of(table: &[bool], cap: usize) -> Result<usize, SynthError> {
    let n = table.len().trailing_zeros() as usize;
    if table.is_empty() || table.len() != 1 << n || n == 0 || n > cap {
        return Err(SynthError::BadTableSize(table.len(), cap));
    }
    Ok(n)
}

/// Find, by exhaustive search, a single-PFAG configuration realizing a
/// 1- or 2-input function given as a truth table (row index encodes the
/// inputs, first variable most significant).
///
/// The search is lexicographic over (variable port assignment, constant
/// values, output index) and returns the first match, so results are
/// reproducible.
///
/// Not every two-input function has one: the gate's only nonlinear output
/// is S = (A^B)C ^ AB ^ D, whose reachable two-variable family is AND,
/// NAND, OR, NOR plus the affine functions. The four mixed-polarity
/// functions (a AND NOT b, NOT a AND b and their complements) need an input
/// negation that ports bound to a variable or a constant cannot express;
/// for those this returns [`SynthError::NoSingleGateRealization`] and a
/// gate network ([`synthesize`]) is the route.
pub fn find_configuration(target: &[bool]) -> Result<PfagConfig, SynthError> {
    let arity = arity_of(target, 2)?;
    let pfag = builtin("PFAG").expect("built-in");

    // Ordered placements of the target variables onto the 4 ports.
    let mut placements: Vec<Vec<usize>> = Vec::new();
    match arity {
        1 => {
            for i in 0..4 {
                placements.push(vec![i]);
            }
        }
        _ => {
            for i in 0..4 {
                for j in 0..4 {
                    if j != i {
                        placements.push(vec![i, j]);
                    }
                }
            }
        }
    }

    for placement in &placements {
        let free: Vec<usize> = (0..4).filter(|p| !placement.contains(p)).collect();
        for const_bits in 0..1u32 << free.len() {
            let mut ports = [PortBinding::Constant(false); 4];
            for (var, &port) in placement.iter().enumerate() {
                ports[port] = PortBinding::Variable(var);
            }
            for (k, &port) in free.iter().enumerate() {
                let bit = (const_bits >> (free.len() - 1 - k)) & 1 == 1;
                ports[port] = PortBinding::Constant(bit);
            }
            for output in 0..4 {
                let mut realized = Vec::with_capacity(target.len());
                for row in 0..target.len() {
                    let inputs: Vec<bool> = ports
                        .iter()
                        .map(|b| match *b {
                            PortBinding::Variable(v) => (row >> (arity - 1 - v)) & 1 == 1,
                            PortBinding::Constant(c) => c,
                        })
                        .collect();
                    realized.push(pfag.eval(&inputs)[output]);
                }
                if realized == target {
                    return Ok(PfagConfig { ports, output, realized });
                }
            }
        }
    }
    Err(SynthError::NoSingleGateRealization)
}

/// A product of positive literals; the empty set is the constant-1 term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial {
    mask: u32,
}

impl Monomial {
    pub fn new(mask: u32) -> Self {
        Monomial { mask }
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn degree(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// Variable indices, ascending.
    pub fn vars(&self) -> Vec<usize> {
        (0..32).filter(|i| self.mask >> i & 1 == 1).collect()
    }

    pub fn eval(&self, row: usize, arity: usize) -> bool {
        self.vars().iter().all(|&v| (row >> (arity - 1 - v)) & 1 == 1)
    }
}

impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.mask == 0 {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.vars().iter().map(|v| format!("x{v}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Positive-polarity Reed-Muller expansion of a truth table (row index
/// encodes inputs, first variable most significant): the unique set of
/// monomials whose XOR equals the function everywhere.
///
/// Computed with the GF(2) Moebius butterfly over the input lattice.
pub fn pprm(table: &[bool]) -> Result<Vec<Monomial>, SynthError> {
    let arity = arity_of(table, 8)?;
    let mut coeff: Vec<bool> = table.to_vec();
    for i in 0..arity {
        let bit = 1usize << i;
        for row in 0..table.len() {
            if row & bit != 0 {
                coeff[row] ^= coeff[row ^ bit];
            }
        }
    }
    // Row bit (arity-1-v) corresponds to variable v; translate each
    // surviving coefficient's row mask into a variable mask.
    let mut monomials = Vec::new();
    for (row, &c) in coeff.iter().enumerate() {
        if c {
            let mut mask = 0u32;
            for v in 0..arity {
                if row >> (arity - 1 - v) & 1 == 1 {
                    mask |= 1 << v;
                }
            }
            monomials.push(Monomial::new(mask));
        }
    }
    monomials.sort();
    Ok(monomials)
}

/// Accumulates lines, constants and gate applications with deterministic
/// fresh names: `z#` constant-0 ancillae, `u#` constant-1 ancillae, `t#`
/// product intermediates, `c#`/`n#` copy outputs, `g#` garbage renames.
struct SynthBuilder {
    lines: Vec<String>,
    constants: Vec<(String, bool)>,
    gates: Vec<(GateDef, Vec<String>, Vec<String>)>,
    pfag: GateDef,
    zeros: usize,
    ones: usize,
    garbage: usize,
    copies: usize,
    products: usize,
}

impl SynthBuilder {
    fn fresh_line(&mut self, prefix: &str, counter: fn(&mut Self) -> &mut usize, value: bool) -> String {
        let slot = counter(self);
        let name = format!("{prefix}{slot}");
        *slot += 1;
        self.lines.push(name.clone());
        self.constants.push((name.clone(), value));
        name
    }

    fn fresh_zero(&mut self) -> String {
        self.fresh_line("z", |b| &mut b.zeros, false)
    }

    fn fresh_one(&mut self) -> String {
        self.fresh_line("u", |b| &mut b.ones, true)
    }

    fn fresh_product(&mut self) -> String {
        self.fresh_line("t", |b| &mut b.products, false)
    }

    fn garbage_name(&mut self) -> String {
        let name = format!("g{}", self.garbage);
        self.garbage += 1;
        name
    }

    fn apply(&mut self, inputs: Vec<String>, outputs: Vec<String>) {
        self.gates.push((self.pfag.clone(), inputs, outputs));
    }

    /// Fan out a live wire: one gate in copy mode (B = C = D = 0) yields
    /// the wire untouched, one copy, one garbage copy, and a still-zero
    /// line. Returns (copy, zero).
    fn copy_of(&mut self, source: &str) -> (String, String) {
        let z1 = self.fresh_zero();
        let z2 = self.fresh_zero();
        let z3 = self.fresh_zero();
        let copy = format!("c{}", self.copies);
        let zero = format!("n{}", self.copies);
        self.copies += 1;
        let g = self.garbage_name();
        self.apply(
            vec![source.to_string(), z1, z2, z3],
            vec![source.to_string(), copy.clone(), g, zero.clone()],
        );
        (copy, zero)
    }

    /// dest ^= left & right_copy, consuming `right_copy` and `zero`.
    /// With B = 0 the fourth output is S = (A and C) xor D.
    fn multiply_into(&mut self, left: &str, right_copy: String, zero: String, dest: &str) {
        let g1 = self.garbage_name();
        let g2 = self.garbage_name();
        self.apply(
            vec![left.to_string(), zero, right_copy, dest.to_string()],
            vec![left.to_string(), g1, g2, dest.to_string()],
        );
    }

    /// dest ^= source, via the degenerate mode (B = 1, C = 0): S = A xor D.
    fn accumulate_linear(&mut self, source: &str, dest: &str) {
        let one = self.fresh_one();
        let zero = self.fresh_zero();
        let g1 = self.garbage_name();
        let g2 = self.garbage_name();
        self.apply(
            vec![source.to_string(), one, zero, dest.to_string()],
            vec![source.to_string(), g1, g2, dest.to_string()],
        );
    }
}

/// Synthesize an arbitrary Boolean function (truth table, first variable
/// most significant) into a circuit using ONLY the four-line full-adder
/// gate.
///
/// Each Reed-Muller monomial is accumulated into a constant-0 result line
/// `f`. Linear terms use the degenerate mode (B = 1, C = 0, so S = A xor
/// D); a degree-k product chains k-1 multiply steps, each feeding on a
/// fresh copy of its variable so that primary input lines always ride the
/// pass-through port and survive to the end as garbage. Ancillae are fresh
/// per monomial; nothing is uncomputed or reused.
pub fn synthesize(table: &[bool]) -> Result<Circuit, SynthError> {
    let arity = arity_of(table, 6)?;
    let monomials = pprm(table)?;

    let mut b = SynthBuilder {
        lines: (0..arity).map(|i| format!("x{i}")).collect(),
        constants: vec![("f".to_string(), false)],
        gates: Vec::new(),
        pfag: builtin("PFAG").expect("built-in"),
        zeros: 0,
        ones: 0,
        garbage: 0,
        copies: 0,
        products: 0,
    };
    b.lines.push("f".to_string());
    let mut shared_one: Option<String> = None;

    for monomial in &monomials {
        let vars = monomial.vars();
        match vars.len() {
            0 => {
                // Constant-1 term: f ^= 1, driving A from a constant-1 line.
                let one = match &shared_one {
                    Some(name) => name.clone(),
                    None => {
                        let name = b.fresh_line("one", |b| &mut b.ones, true);
                        shared_one = Some(name.clone());
                        name
                    }
                };
                b.accumulate_linear(&one, "f");
            }
            1 => {
                let source = format!("x{}", vars[0]);
                b.accumulate_linear(&source, "f");
            }
            _ => {
                // x_{v1} * x_{v2} * ... accumulated left to right; the final
                // multiply lands directly on f.
                let mut acc = format!("x{}", vars[0]);
                for (step, &v) in vars[1..].iter().enumerate() {
                    let source = format!("x{v}");
                    let (copy, zero) = b.copy_of(&source);
                    let last = step + 2 == vars.len();
                    let dest = if last { "f".to_string() } else { b.fresh_product() };
                    b.multiply_into(&acc, copy, zero, &dest);
                    acc = dest;
                }
            }
        }
    }

    // Replay the renames to find terminal names; everything except the
    // result line is garbage.
    let mut terminal: Vec<String> = b.lines.clone();
    for (_, ins, outs) in &b.gates {
        for (i, o) in ins.iter().zip(outs) {
            if i != o {
                let pos = terminal.iter().position(|n| n == i).expect("live wire");
                terminal[pos] = o.clone();
            }
        }
    }
    let garbage: Vec<String> = terminal.iter().filter(|n| n.as_str() != "f").cloned().collect();

    Ok(Circuit::build(b.lines, &b.constants, &b.gates, garbage, vec!["f".to_string()])?)
}

/// An n-bit ripple-carry adder made of n full-adder stages, one PFAG each.
///
/// Stage i consumes (a_i, b_i, carry_i, fresh constant 0) and produces two
/// garbage lines, sum_i, and carry_{i+1}. The carry-in line `c0` is bound
/// constant 0; free it with `with_constants_freed` to drive it. Outputs are
/// s0..s{n-1} (least significant first) then `cout`.
pub fn ripple_adder(bits: usize) -> Result<Circuit, SynthError> {
    if bits == 0 || bits > 6 {
        return Err(SynthError::AdderWidth(bits));
    }
    let pfag = builtin("PFAG").expect("built-in");
    let mut lines = Vec::new();
    let mut constants = Vec::new();
    for i in 0..bits {
        lines.push(format!("a{i}"));
        lines.push(format!("b{i}"));
    }
    lines.push("c0".to_string());
    constants.push(("c0".to_string(), false));
    for i in 0..bits {
        lines.push(format!("d{i}"));
        constants.push((format!("d{i}"), false));
    }

    let mut gates = Vec::new();
    for i in 0..bits {
        let carry_in = format!("c{i}");
        let carry_out = if i + 1 == bits { "cout".to_string() } else { format!("c{}", i + 1) };
        gates.push((
            pfag.clone(),
            vec![format!("a{i}"), format!("b{i}"), carry_in, format!("d{i}")],
            vec![format!("ga{i}"), format!("gb{i}"), format!("s{i}"), carry_out],
        ));
    }

    let garbage: Vec<String> =
        (0..bits).flat_map(|i| [format!("ga{i}"), format!("gb{i}")]).collect();
    let mut outputs: Vec<String> = (0..bits).map(|i| format!("s{i}")).collect();
    outputs.push("cout".to_string());

    Ok(Circuit::build(lines, &constants, &gates, garbage, outputs)?)
}

/// Parse a truth table given as hex: bit i of the value is the output for
/// input index i (so majority-of-3 is `E8`). A leading `0x` is accepted;
/// the value must fit in 2^arity bits.
pub fn parse_truth_table_hex(hex: &str, arity: usize) -> Result<Vec<bool>, SynthError> {
    if arity == 0 || arity > 6 {
        return Err(SynthError::HexArity(arity));
    }
    let rows = 1usize << arity;
    let digits = hex.trim().trim_start_matches("0x").trim_start_matches("0X");
    if digits.is_empty() || digits.len() > 16 {
        return Err(SynthError::HexSyntax("expected 1..=16 hex digits".into()));
    }
    let value = u64::from_str_radix(digits, 16)
        .map_err(|e| SynthError::HexSyntax(format!("'{digits}': {e}")))?;
    if rows < 64 && value >> rows != 0 {
        return Err(SynthError::HexSyntax(format!(
            "0x{digits} does not fit in 2^{arity} = {rows} output bits"
        )));
    }
    Ok((0..rows).map(|i| value >> i & 1 == 1).collect())
}

/// Drive a ripple adder with integer operands; returns the integer read
/// back from (s0.., cout). With `carry` = None the circuit's constant
/// bindings stand; supplying a carry requires a constants-freed adder,
/// whose carry and D lines are then driven explicitly (D lines at zero).
pub fn adder_value(circuit: &Circuit, bits: usize, a: u64, b: u64, carry: Option<bool>) -> u64 {
    let mut assignment = Vec::new();
    for i in 0..bits {
        assignment.push(a >> i & 1 == 1);
        assignment.push(b >> i & 1 == 1);
    }
    if let Some(c) = carry {
        assignment.push(c);
        assignment.extend(std::iter::repeat_n(false, bits));
    }
    let results = circuit.simulate(&assignment).expect("assignment matches free lines");
    let value_of = |name: &str| -> u64 {
        results
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| u64::from(*v))
            .expect("terminal line")
    };
    let mut total = 0u64;
    for i in 0..bits {
        total |= value_of(&format!("s{i}")) << i;
    }
    total | value_of("cout") << bits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcost::{standard_registry, CostValue};

    fn table_of(f: impl Fn(usize) -> bool, n: usize) -> Vec<bool> {
        (0..1usize << n).map(f).collect()
    }

    #[test]
    fn and_configuration() {
        // AND lands on S with A=x0, B=x1, C=0, D=0.
        let target = table_of(|r| r & 2 != 0 && r & 1 != 0, 2);
        let config = find_configuration(&target).unwrap();
        assert_eq!(
            config.ports,
            [
                PortBinding::Variable(0),
                PortBinding::Variable(1),
                PortBinding::Constant(false),
                PortBinding::Constant(false),
            ]
        );
        assert_eq!(config.output_name(), "S");
    }

    #[test]
    fn nand_configuration() {
        // NAND: same placement with D = 1, S = AB ^ 1.
        let target = table_of(|r| !(r & 2 != 0 && r & 1 != 0), 2);
        let config = find_configuration(&target).unwrap();
        assert_eq!(
            config.ports,
            [
                PortBinding::Variable(0),
                PortBinding::Variable(1),
                PortBinding::Constant(false),
                PortBinding::Constant(true),
            ]
        );
        assert_eq!(config.output_name(), "S");
    }

    #[test]
    fn xor_configuration_uses_half_sum() {
        let target = table_of(|r| (r & 2 != 0) ^ (r & 1 != 0), 2);
        let config = find_configuration(&target).unwrap();
        assert_eq!(config.output_name(), "Q");
    }

    #[test]
    fn not_configuration_realizes_negation() {
        let target = table_of(|r| r & 1 == 0, 1);
        let config = find_configuration(&target).unwrap();
        assert_eq!(config.realized, target);
    }

    #[test]
    fn two_input_single_gate_coverage() {
        // Exactly the four mixed-polarity functions lack a single-gate
        // configuration; everything else is found and matches.
        let unrealizable = [0b0010u32, 0b0100, 0b1011, 0b1101];
        for bits in 0..16u32 {
            let target: Vec<bool> = (0..4).map(|r| bits >> (3 - r) & 1 == 1).collect();
            match find_configuration(&target) {
                Ok(config) => {
                    assert!(!unrealizable.contains(&bits), "function {bits:04b}");
                    assert_eq!(config.realized, target, "function {bits:04b}");
                    // Determinism: a second search returns the same thing.
                    assert_eq!(find_configuration(&target).unwrap(), config);
                }
                Err(SynthError::NoSingleGateRealization) => {
                    assert!(unrealizable.contains(&bits), "function {bits:04b}");
                }
                Err(other) => panic!("unexpected error for {bits:04b}: {other}"),
            }
        }
    }

    #[test]
    fn all_sixteen_two_input_functions_synthesize() {
        // Network synthesis covers every two-input function, including the
        // four with no single-gate mode.
        for bits in 0..16u32 {
            let target: Vec<bool> = (0..4).map(|r| bits >> (3 - r) & 1 == 1).collect();
            let circuit = synthesize(&target).unwrap();
            for (row, &expected) in target.iter().enumerate() {
                let assignment = [row & 2 != 0, row & 1 != 0];
                assert_eq!(
                    circuit.simulate_output(&assignment, "f").unwrap(),
                    expected,
                    "function {bits:04b} row {row}"
                );
            }
            assert!(circuit.permutation().is_ok(), "function {bits:04b} reversibility");
        }
    }

    #[test]
    fn pprm_linear_function() {
        // x0 ^ x1 expands to exactly {x0, x1}.
        let target = table_of(|r| (r & 2 != 0) ^ (r & 1 != 0), 2);
        let monomials = pprm(&target).unwrap();
        assert_eq!(monomials, vec![Monomial::new(0b01), Monomial::new(0b10)]);
    }

    #[test]
    fn pprm_majority() {
        let target = table_of(|r| (r as u32).count_ones() >= 2, 3);
        let monomials = pprm(&target).unwrap();
        assert_eq!(
            monomials,
            vec![Monomial::new(0b011), Monomial::new(0b101), Monomial::new(0b110)]
        );
    }

    #[test]
    fn pprm_constant_one() {
        let target = vec![true, true];
        assert_eq!(pprm(&target).unwrap(), vec![Monomial::new(0)]);
    }

    #[test]
    fn pprm_reconstructs_function() {
        // Oracle: re-evaluate the XOR of monomials on every row, for every
        // 3-input function.
        for bits in 0..256u32 {
            let target: Vec<bool> = (0..8).map(|r| bits >> (7 - r) & 1 == 1).collect();
            let monomials = pprm(&target).unwrap();
            for (row, &expected) in target.iter().enumerate() {
                let value = monomials.iter().fold(false, |acc, m| acc ^ m.eval(row, 3));
                assert_eq!(value, expected, "function {bits:08b} row {row}");
            }
        }
    }

    #[test]
    fn synthesize_and() {
        let target = table_of(|r| r & 2 != 0 && r & 1 != 0, 2);
        let circuit = synthesize(&target).unwrap();
        for (row, &expected) in target.iter().enumerate() {
            let assignment = [row & 2 != 0, row & 1 != 0];
            assert_eq!(circuit.simulate_output(&assignment, "f").unwrap(), expected);
        }
        // One monomial of degree 2: one copy gate plus one multiply gate.
        assert_eq!(circuit.gate_instances().len(), 2);
    }

    #[test]
    fn synthesize_majority() {
        let target = table_of(|r| (r as u32).count_ones() >= 2, 3);
        let circuit = synthesize(&target).unwrap();
        for (row, &expected) in target.iter().enumerate() {
            let assignment = [row & 4 != 0, row & 2 != 0, row & 1 != 0];
            assert_eq!(circuit.simulate_output(&assignment, "f").unwrap(), expected);
        }
        // Three degree-2 monomials, two gates each.
        assert_eq!(circuit.gate_instances().len(), 6);
        // Reversibility survives synthesis (width 16 is enumerable).
        assert!(circuit.permutation().is_ok());
    }

    #[test]
    fn synthesize_full_adder_sum() {
        // Sum over (A, B, Cin) is purely linear: three degenerate-mode gates.
        let target = table_of(|r| ((r as u32).count_ones() & 1) == 1, 3);
        assert_eq!(
            pprm(&target).unwrap(),
            vec![Monomial::new(0b001), Monomial::new(0b010), Monomial::new(0b100)]
        );
        let circuit = synthesize(&target).unwrap();
        assert_eq!(circuit.gate_instances().len(), 3);
        for (row, &expected) in target.iter().enumerate() {
            let assignment = [row & 4 != 0, row & 2 != 0, row & 1 != 0];
            assert_eq!(circuit.simulate_output(&assignment, "f").unwrap(), expected);
        }
    }

    #[test]
    fn synthesize_four_input_sample() {
        // A fixed 50-function sample at arity 4, checked on all 16 rows.
        let mut state = 0x4a5_0b5eu64;
        let mut next = move || {
            state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
            z ^ (z >> 31)
        };
        for _ in 0..50 {
            let bits = next() & 0xFFFF;
            let target: Vec<bool> = (0..16).map(|r| bits >> r & 1 == 1).collect();
            let circuit = synthesize(&target).unwrap();
            for (row, &expected) in target.iter().enumerate() {
                let assignment: Vec<bool> = (0..4).map(|i| row >> (3 - i) & 1 == 1).collect();
                assert_eq!(
                    circuit.simulate_output(&assignment, "f").unwrap(),
                    expected,
                    "function {bits:016b} row {row}"
                );
            }
        }
    }

    #[test]
    fn synthesize_constant_zero() {
        let target = vec![false, false];
        let circuit = synthesize(&target).unwrap();
        assert_eq!(circuit.gate_instances().len(), 0);
        assert!(!circuit.simulate_output(&[false], "f").unwrap());
        assert!(!circuit.simulate_output(&[true], "f").unwrap());
    }

    #[test]
    fn adder_single_bit_rows() {
        let adder = ripple_adder(1).unwrap();
        // 1 + 1 with carry-in 0: sum 0, carry 1.
        assert_eq!(adder_value(&adder, 1, 1, 1, None), 2);
        assert_eq!(adder_value(&adder, 1, 0, 0, None), 0);
        assert_eq!(adder_value(&adder, 1, 1, 0, None), 1);
    }

    #[test]
    fn adder_matches_integer_addition() {
        for bits in 1..=4usize {
            let adder = ripple_adder(bits).unwrap().with_constants_freed();
            for a in 0..1u64 << bits {
                for b in 0..1u64 << bits {
                    for carry in [false, true] {
                        assert_eq!(
                            adder_value(&adder, bits, a, b, Some(carry)),
                            a + b + u64::from(carry),
                            "{bits}-bit {a}+{b}+{carry}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn adder_audit_counts() {
        let registry = standard_registry();
        for bits in 1..=4usize {
            let adder = ripple_adder(bits).unwrap();
            let report = adder.audit(&registry);
            assert_eq!(report.gate_count, bits);
            assert_eq!(report.quantum_cost, CostValue::Known(8 * bits as u64));
            assert_eq!(report.garbage_outputs, 2 * bits);
            assert_eq!(report.constant_inputs, bits + 1);
            assert!(report.reversible);
            assert!(report.warnings.is_empty());
        }
    }

    #[test]
    fn bad_sizes_rejected() {
        assert!(matches!(find_configuration(&[true; 8]), Err(SynthError::BadTableSize(8, 2))));
        assert!(matches!(synthesize(&[true; 3]), Err(SynthError::BadTableSize(3, 6))));
        assert!(matches!(ripple_adder(0), Err(SynthError::AdderWidth(0))));
        assert!(matches!(ripple_adder(7), Err(SynthError::AdderWidth(7))));
    }
}
