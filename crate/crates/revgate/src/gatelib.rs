//! The reversible gate library.
//!
//! A [`GateDef`] is a named gate given by one Boolean expression per output
//! line. Construction validates the defining property of reversibility:
//! equal input/output line counts and a bijective truth table. The built-in
//! library covers the classic gates (Feynman, Toffoli, Fredkin, Peres) plus
//! the two four-line full-adder gates (PFAG, HNG); anything else arrives via
//! gate-definition files.
//!
//! Expressions are stored exactly as defined. The hardware-complexity
//! counter is sensitive to the written form, so no simplification or
//! canonicalization ever happens here.

use std::collections::HashSet;

use thiserror::Error;

use crate::bitcore::{decode_bits, encode_bits, BitcoreError, TruthPermutation, MAX_WIDTH};
use crate::expr::{parse_expr, BoolExpr, ExprParseError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GateError {
    #[error("unknown gate '{0}'")]
    UnknownGate(String),
    #[error("gate '{name}' has {inputs} inputs but {outputs} outputs; line counts must be equal")]
    UnequalLines { name: String, inputs: usize, outputs: usize },
    #[error("gate '{name}' width {width} out of range (1..={MAX_WIDTH})")]
    WidthOutOfRange { name: String, width: usize },
    #[error("gate '{name}' is not reversible: inputs {first} and {second} map to the same outputs")]
    NotBijective { name: String, first: String, second: String },
    #[error("duplicate line name '{name}'")]
    DuplicateLineName { name: String },
    #[error("a gate named '{0}' is already registered")]
    DuplicateGate(String),
    #[error("output expression references input index {index} but the gate has {width} inputs")]
    VarOutOfRange { index: usize, width: usize },
    #[error("line {line}: {msg}")]
    FileSyntax { line: usize, msg: String },
    #[error("gate '{name}' declares width {declared} but lists {found} {what}")]
    ArityMismatch { name: String, declared: usize, found: usize, what: &'static str },
    #[error(transparent)]
    Expr(#[from] ExprParseError),
    #[error("cascade wiring is inconsistent: {0}")]
    BadWiring(String),
    #[error(transparent)]
    Bitcore(#[from] BitcoreError),
}

/// A named reversible gate: ordered input lines and one expression per
/// output line. The exhaustive truth table is computed and checked for
/// bijectivity at construction; a `GateDef` that exists is reversible.
#[derive(Debug, Clone, PartialEq)]
pub struct GateDef {
    name: String,
    inputs: Vec<String>,
    outputs: Vec<(String, BoolExpr)>,
    table: TruthPermutation,
}

impl GateDef {
    pub fn new(
        name: impl Into<String>,
        inputs: Vec<String>,
        outputs: Vec<(String, BoolExpr)>,
    ) -> Result<Self, GateError> {
        let name = name.into();
        let width = inputs.len();
        if outputs.len() != width {
            return Err(GateError::UnequalLines { name, inputs: width, outputs: outputs.len() });
        }
        if width == 0 || width > MAX_WIDTH {
            return Err(GateError::WidthOutOfRange { name, width });
        }
        let mut seen = HashSet::new();
        for n in inputs.iter().chain(outputs.iter().map(|(n, _)| n)) {
            if !seen.insert(n.as_str()) {
                return Err(GateError::DuplicateLineName { name: n.clone() });
            }
        }
        for (_, expr) in &outputs {
            if let Some(index) = expr.max_var() {
                if index >= width {
                    return Err(GateError::VarOutOfRange { index, width });
                }
            }
        }

        let mut map = Vec::with_capacity(1 << width);
        for value in 0..1u32 << width {
            let bits = decode_bits(width, value);
            let out: Vec<bool> = outputs.iter().map(|(_, e)| e.eval(&bits)).collect();
            map.push(encode_bits(&out));
        }
        let table = TruthPermutation::new(width, map).map_err(|e| match e {
            BitcoreError::NotBijective { first, second, .. } => GateError::NotBijective {
                name: name.clone(),
                first: format!("{first:0width$b}"),
                second: format!("{second:0width$b}"),
            },
            other => GateError::Bitcore(other),
        })?;

        Ok(GateDef { name, inputs, outputs, table })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn width(&self) -> usize {
        self.inputs.len()
    }

    pub fn inputs(&self) -> &[String] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[(String, BoolExpr)] {
        &self.outputs
    }

    pub fn output_names(&self) -> Vec<&str> {
        self.outputs.iter().map(|(n, _)| n.as_str()).collect()
    }

    /// The exhaustive behavior, first input line = most significant bit.
    pub fn table(&self) -> &TruthPermutation {
        &self.table
    }

    pub fn eval(&self, inputs: &[bool]) -> Vec<bool> {
        debug_assert_eq!(inputs.len(), self.width());
        self.outputs.iter().map(|(_, e)| e.eval(inputs)).collect()
    }

    pub fn is_self_inverse(&self) -> bool {
        self.table.compose(&self.table).map(|p| p.is_identity()).unwrap_or(false)
    }
}

/// Names of all built-in gates, in library order.
pub const BUILTIN_NAMES: [&str; 6] = ["FEYNMAN", "TOFFOLI", "FREDKIN", "PERES", "PFAG", "HNG"];

/// Look up a built-in gate by name (case-insensitive).
pub fn builtin(name: &str) -> Result<GateDef, GateError> {
    use BoolExpr as E;
    let v = E::var;
    let names = |list: &[&str]| -> Vec<String> { list.iter().map(|s| s.to_string()).collect() };

    // A = 0, B = 1, C = 2, D = 3.
    let gate = match name.to_ascii_uppercase().as_str() {
        "FEYNMAN" => GateDef::new(
            "FEYNMAN",
            names(&["A", "B"]),
            vec![("P".into(), v(0)), ("Q".into(), E::xor(v(0), v(1)))],
        ),
        "TOFFOLI" => GateDef::new(
            "TOFFOLI",
            names(&["A", "B", "C"]),
            vec![
                ("P".into(), v(0)),
                ("Q".into(), v(1)),
                ("R".into(), E::xor(E::and(v(0), v(1)), v(2))),
            ],
        ),
        "FREDKIN" => GateDef::new(
            "FREDKIN",
            names(&["A", "B", "C"]),
            vec![
                ("P".into(), v(0)),
                ("Q".into(), E::xor(E::and(E::not(v(0)), v(1)), E::and(v(0), v(2)))),
                ("R".into(), E::xor(E::and(E::not(v(0)), v(2)), E::and(v(0), v(1)))),
            ],
        ),
        "PERES" => GateDef::new(
            "PERES",
            names(&["A", "B", "C"]),
            vec![
                ("P".into(), v(0)),
                ("Q".into(), E::xor(v(0), v(1))),
                ("R".into(), E::xor(E::and(v(0), v(1)), v(2))),
            ],
        ),
        "PFAG" => GateDef::new(
            "PFAG",
            names(&["A", "B", "C", "D"]),
            vec![
                ("P".into(), v(0)),
                ("Q".into(), E::xor(v(0), v(1))),
                ("R".into(), E::xor(v(0), E::xor(v(1), v(2)))),
                ("S".into(), E::xor(carry_expr(), v(3))),
            ],
        ),
        "HNG" => GateDef::new(
            "HNG",
            names(&["A", "B", "C", "D"]),
            vec![
                ("P".into(), v(0)),
                ("Q".into(), v(1)),
                ("R".into(), E::xor(v(0), E::xor(v(1), v(2)))),
                ("S".into(), E::xor(carry_expr(), v(3))),
            ],
        ),
        _ => return Err(GateError::UnknownGate(name.to_string())),
    };
    Ok(gate.expect("built-in gate definitions are valid"))
}

/// The full-adder carry on inputs (A, B, C): (A ^ B) & C ^ A & B.
fn carry_expr() -> BoolExpr {
    use BoolExpr as E;
    let v = E::var;
    E::xor(E::and(E::xor(v(0), v(1)), v(2)), E::and(v(0), v(1)))
}

/// All built-in gates, in library order.
pub fn builtin_gates() -> Vec<GateDef> {
    BUILTIN_NAMES.iter().map(|n| builtin(n).expect("built-in")).collect()
}

/// Source of a value inside a two-gate cascade.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CascadeSource {
    /// Output `j` of the first gate.
    FirstOutput(usize),
    /// Compound input line `i`, untouched by the first gate.
    Line(usize),
}

/// Terminal value of a cascade, selected for export.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CascadeExport {
    FirstOutput(usize),
    SecondOutput(usize),
    Line(usize),
}

/// How two gates wire together into one compound gate.
///
/// The compound gate has `width` lines. The first gate consumes the lines in
/// `first_inputs`; the second consumes a mix of first-gate outputs and
/// pass-through lines; `exports` lists every terminal value exactly once, in
/// compound output order.
#[derive(Debug, Clone)]
pub struct Wiring {
    pub width: usize,
    pub first_inputs: Vec<usize>,
    pub second_inputs: Vec<CascadeSource>,
    pub exports: Vec<CascadeExport>,
}

impl Wiring {
    fn validate(&self, first: &GateDef, second: &GateDef) -> Result<(), GateError> {
        let err = |msg: String| Err(GateError::BadWiring(msg));
        if self.first_inputs.len() != first.width() {
            return err(format!(
                "first gate takes {} lines, wiring supplies {}",
                first.width(),
                self.first_inputs.len()
            ));
        }
        if self.second_inputs.len() != second.width() {
            return err(format!(
                "second gate takes {} lines, wiring supplies {}",
                second.width(),
                self.second_inputs.len()
            ));
        }
        let mut line_used = vec![false; self.width];
        for &i in &self.first_inputs {
            if i >= self.width {
                return err(format!("line index {i} out of range"));
            }
            if line_used[i] {
                return err(format!("line {i} consumed twice by the first gate"));
            }
            line_used[i] = true;
        }
        let mut first_used = vec![false; first.width()];
        for src in &self.second_inputs {
            match *src {
                CascadeSource::FirstOutput(j) => {
                    if j >= first.width() {
                        return err(format!("first-gate output {j} out of range"));
                    }
                    if first_used[j] {
                        return err(format!("first-gate output {j} consumed twice"));
                    }
                    first_used[j] = true;
                }
                CascadeSource::Line(i) => {
                    if i >= self.width {
                        return err(format!("line index {i} out of range"));
                    }
                    if line_used[i] {
                        return err(format!("line {i} consumed twice"));
                    }
                    line_used[i] = true;
                }
            }
        }
        if self.exports.len() != self.width {
            return err(format!("{} exports for width {}", self.exports.len(), self.width));
        }
        // Every terminal value must be exported exactly once: first-gate
        // outputs not consumed by the second gate, all second-gate outputs,
        // and untouched lines.
        let mut first_exported = vec![false; first.width()];
        let mut second_exported = vec![false; second.width()];
        let mut line_exported = vec![false; self.width];
        for ex in &self.exports {
            match *ex {
                CascadeExport::FirstOutput(j) => {
                    if j >= first.width() || first_used[j] || first_exported[j] {
                        return err(format!("first-gate output {j} is not exportable"));
                    }
                    first_exported[j] = true;
                }
                CascadeExport::SecondOutput(j) => {
                    if j >= second.width() || second_exported[j] {
                        return err(format!("second-gate output {j} is not exportable"));
                    }
                    second_exported[j] = true;
                }
                CascadeExport::Line(i) => {
                    if i >= self.width || line_used[i] || line_exported[i] {
                        return err(format!("line {i} is not exportable"));
                    }
                    line_exported[i] = true;
                }
            }
        }
        for (j, (&used, &exported)) in first_used.iter().zip(&first_exported).enumerate() {
            if !used && !exported {
                return err(format!("first-gate output {j} is neither consumed nor exported"));
            }
        }
        if let Some(j) = second_exported.iter().position(|e| !e) {
            return err(format!("second-gate output {j} is never exported"));
        }
        for i in 0..self.width {
            if !line_used[i] && !line_exported[i] {
                return err(format!("line {i} is neither consumed nor exported"));
            }
        }
        Ok(())
    }
}

/// Substitute expressions for variables.
fn subst(e: &BoolExpr, env: &[BoolExpr]) -> BoolExpr {
    match e {
        BoolExpr::Var(i) => env[*i].clone(),
        BoolExpr::Const(c) => BoolExpr::Const(*c),
        BoolExpr::Not(inner) => BoolExpr::not(subst(inner, env)),
        BoolExpr::And(l, r) => BoolExpr::and(subst(l, env), subst(r, env)),
        BoolExpr::Xor(l, r) => BoolExpr::xor(subst(l, env), subst(r, env)),
    }
}

/// Wire two gates into one compound gate.
///
/// Output expressions are composed by substitution, so the result is a full
/// `GateDef` whose truth table equals running the first gate then the
/// second over the wiring. Inputs are named `x0..`, outputs `y0..`.
pub fn cascade(
    name: impl Into<String>,
    first: &GateDef,
    second: &GateDef,
    wiring: &Wiring,
) -> Result<GateDef, GateError> {
    wiring.validate(first, second)?;

    let line_vars: Vec<BoolExpr> = (0..wiring.width).map(BoolExpr::var).collect();
    let first_env: Vec<BoolExpr> =
        wiring.first_inputs.iter().map(|&i| BoolExpr::var(i)).collect();
    let first_exprs: Vec<BoolExpr> =
        first.outputs().iter().map(|(_, e)| subst(e, &first_env)).collect();
    let second_env: Vec<BoolExpr> = wiring
        .second_inputs
        .iter()
        .map(|src| match *src {
            CascadeSource::FirstOutput(j) => first_exprs[j].clone(),
            CascadeSource::Line(i) => line_vars[i].clone(),
        })
        .collect();
    let second_exprs: Vec<BoolExpr> =
        second.outputs().iter().map(|(_, e)| subst(e, &second_env)).collect();

    let inputs: Vec<String> = (0..wiring.width).map(|i| format!("x{i}")).collect();
    let outputs: Vec<(String, BoolExpr)> = wiring
        .exports
        .iter()
        .enumerate()
        .map(|(k, ex)| {
            let expr = match *ex {
                CascadeExport::FirstOutput(j) => first_exprs[j].clone(),
                CascadeExport::SecondOutput(j) => second_exprs[j].clone(),
                CascadeExport::Line(i) => line_vars[i].clone(),
            };
            (format!("y{k}"), expr)
        })
        .collect();

    // A valid wiring of bijective gates composes bijections with a relabeling;
    // a non-bijective result here is a bug, not an input error.
    let gate = GateDef::new(name, inputs, outputs);
    debug_assert!(!matches!(gate, Err(GateError::NotBijective { .. })));
    gate
}

/// The four-line full-adder gate built by cascading two Peres gates: the
/// first on lines (A, B, D), the second consuming the first's half-sum and
/// carry-accumulate outputs together with line C.
pub fn two_peres_wiring() -> Wiring {
    Wiring {
        width: 4,
        first_inputs: vec![0, 1, 3],
        second_inputs: vec![
            CascadeSource::FirstOutput(1), // A ^ B
            CascadeSource::Line(2),        // C
            CascadeSource::FirstOutput(2), // A & B ^ D
        ],
        exports: vec![
            CascadeExport::FirstOutput(0),
            CascadeExport::SecondOutput(0),
            CascadeExport::SecondOutput(1),
            CascadeExport::SecondOutput(2),
        ],
    }
}

/// Cascade two Peres gates into the four-line full-adder gate.
pub fn pfag_from_two_peres() -> GateDef {
    let peres = builtin("PERES").expect("built-in");
    cascade("PERES_CASCADE", &peres, &peres, &two_peres_wiring()).expect("valid wiring")
}

/// A set of resolvable gates: the built-ins plus any user-defined gates
/// loaded from definition files.
#[derive(Debug, Clone)]
pub struct GateLibrary {
    gates: Vec<GateDef>,
}

impl GateLibrary {
    /// The built-in gates only.
    pub fn standard() -> Self {
        GateLibrary { gates: builtin_gates() }
    }

    pub fn register(&mut self, gate: GateDef) -> Result<(), GateError> {
        if self.resolve(gate.name()).is_some() {
            return Err(GateError::DuplicateGate(gate.name().to_string()));
        }
        self.gates.push(gate);
        Ok(())
    }

    /// Exact name match first, then case-insensitive.
    pub fn resolve(&self, name: &str) -> Option<&GateDef> {
        self.gates
            .iter()
            .find(|g| g.name() == name)
            .or_else(|| self.gates.iter().find(|g| g.name().eq_ignore_ascii_case(name)))
    }

    pub fn gates(&self) -> &[GateDef] {
        &self.gates
    }
}

impl Default for GateLibrary {
    fn default() -> Self {
        Self::standard()
    }
}

/// Parse a gate-definition file:
///
/// ```text
/// gate PERES 3
/// in  A B C
/// out P = A
/// out Q = A ^ B
/// out R = (A & B) ^ C
/// ```
///
/// `^` = XOR, `&` = AND, `!` = NOT, `0`/`1` constants, parentheses for
/// grouping; one `out` per output line, order significant; `#` starts a
/// comment. Bijectivity is validated; rejection names two colliding inputs.
pub fn parse_gate_file(text: &str) -> Result<GateDef, GateError> {
    let mut header: Option<(String, usize)> = None;
    let mut inputs: Option<Vec<String>> = None;
    let mut outputs: Vec<(String, BoolExpr)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let keyword = words.next().unwrap();
        match keyword {
            "gate" => {
                if header.is_some() {
                    return Err(GateError::FileSyntax {
                        line: line_no,
                        msg: "duplicate 'gate' header".into(),
                    });
                }
                let name = words
                    .next()
                    .ok_or_else(|| GateError::FileSyntax {
                        line: line_no,
                        msg: "expected 'gate <NAME> <width>'".into(),
                    })?
                    .to_string();
                let width: usize = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| GateError::FileSyntax {
                        line: line_no,
                        msg: "expected a numeric width after the gate name".into(),
                    })?;
                if words.next().is_some() {
                    return Err(GateError::FileSyntax {
                        line: line_no,
                        msg: "trailing tokens after gate header".into(),
                    });
                }
                header = Some((name, width));
            }
            "in" => {
                if header.is_none() {
                    return Err(GateError::FileSyntax {
                        line: line_no,
                        msg: "'in' before 'gate' header".into(),
                    });
                }
                if inputs.is_some() {
                    return Err(GateError::FileSyntax {
                        line: line_no,
                        msg: "duplicate 'in' line".into(),
                    });
                }
                inputs = Some(words.map(str::to_string).collect());
            }
            "out" => {
                let input_names = inputs.as_ref().ok_or_else(|| GateError::FileSyntax {
                    line: line_no,
                    msg: "'out' before 'in' line".into(),
                })?;
                // out NAME = EXPR — locate the '=' to report expression
                // errors at their true column.
                let body = line.trim_start_matches(char::is_whitespace);
                let eq = body.find('=').ok_or_else(|| GateError::FileSyntax {
                    line: line_no,
                    msg: "expected 'out <name> = <expression>'".into(),
                })?;
                let name_part = body[3..eq].trim();
                if name_part.is_empty() || name_part.split_whitespace().count() != 1 {
                    return Err(GateError::FileSyntax {
                        line: line_no,
                        msg: "expected a single output name before '='".into(),
                    });
                }
                let offset = line.len() - body.len();
                let expr_src = &body[eq + 1..];
                let col_base = offset + eq + 2; // 1-based column of the char after '='
                let expr = parse_expr(expr_src, input_names, line_no, col_base)?;
                outputs.push((name_part.to_string(), expr));
            }
            other => {
                return Err(GateError::FileSyntax {
                    line: line_no,
                    msg: format!("unknown directive '{other}'"),
                });
            }
        }
    }

    let (name, width) = header.ok_or_else(|| GateError::FileSyntax {
        line: 1,
        msg: "missing 'gate <NAME> <width>' header".into(),
    })?;
    let inputs = inputs.ok_or_else(|| GateError::FileSyntax {
        line: 1,
        msg: "missing 'in' line".into(),
    })?;
    if inputs.len() != width {
        return Err(GateError::ArityMismatch {
            name,
            declared: width,
            found: inputs.len(),
            what: "inputs",
        });
    }
    if outputs.len() != width {
        return Err(GateError::ArityMismatch {
            name,
            declared: width,
            found: outputs.len(),
            what: "outputs",
        });
    }
    GateDef::new(name, inputs, outputs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_tables_are_bijective() {
        for gate in builtin_gates() {
            // GateDef construction already proves it; pin the property anyway.
            assert!(crate::bitcore::is_bijective(gate.table().map()).unwrap(), "{}", gate.name());
        }
    }

    #[test]
    fn peres_table_from_exhaustive_evaluation() {
        // Independent oracle: evaluate (A, A^B, AB^C) directly on all 8 inputs.
        let mut expected = Vec::new();
        for v in 0..8u32 {
            let (a, b, c) = (v & 4 != 0, v & 2 != 0, v & 1 != 0);
            let bits = [a, a ^ b, (a && b) ^ c];
            expected.push(encode_bits(&bits));
        }
        assert_eq!(expected, vec![0, 1, 2, 3, 6, 7, 5, 4]);
        assert_eq!(builtin("PERES").unwrap().table().map(), &expected[..]);
    }

    #[test]
    fn pfag_single_rows() {
        let pfag = builtin("PFAG").unwrap();
        // (A=1,B=1,C=1,D=0): half-sum 0, sum 1, carry 1.
        assert_eq!(pfag.eval(&[true, true, true, false]), vec![true, false, true, true]);
        // Zero fixed point.
        assert_eq!(pfag.eval(&[false, false, false, false]), vec![false; 4]);
    }

    #[test]
    fn pfag_full_adder_equations() {
        // With D = 0: R = A^B^C, S = (A^B)C ^ AB, Q = half-adder sum A^B.
        let pfag = builtin("PFAG").unwrap();
        for v in 0..8u32 {
            let (a, b, c) = (v & 4 != 0, v & 2 != 0, v & 1 != 0);
            let out = pfag.eval(&[a, b, c, false]);
            assert_eq!(out[1], a ^ b);
            assert_eq!(out[2], a ^ b ^ c);
            assert_eq!(out[3], ((a ^ b) && c) ^ (a && b));
        }
    }

    #[test]
    fn hng_agrees_with_pfag_on_sum_and_carry() {
        let pfag = builtin("PFAG").unwrap();
        let hng = builtin("HNG").unwrap();
        for v in 0..16u32 {
            let bits = decode_bits(4, v);
            let p = pfag.eval(&bits);
            let h = hng.eval(&bits);
            assert_eq!(p[2], h[2]);
            assert_eq!(p[3], h[3]);
        }
    }

    #[test]
    fn self_inverse_gates() {
        assert!(builtin("FEYNMAN").unwrap().is_self_inverse());
        assert!(builtin("TOFFOLI").unwrap().is_self_inverse());
        assert!(builtin("FREDKIN").unwrap().is_self_inverse());
        assert!(!builtin("PERES").unwrap().is_self_inverse());
    }

    #[test]
    fn fredkin_preserves_hamming_weight() {
        let fredkin = builtin("FREDKIN").unwrap();
        for v in 0..8u32 {
            let image = fredkin.table().image(v);
            assert_eq!(v.count_ones(), image.count_ones());
        }
    }

    #[test]
    fn two_peres_cascade_equals_pfag() {
        let pfag = builtin("PFAG").unwrap();
        let cascaded = pfag_from_two_peres();
        assert_eq!(cascaded.table(), pfag.table());
    }

    #[test]
    fn feynman_twice_is_identity() {
        let feynman = builtin("FEYNMAN").unwrap();
        let wiring = Wiring {
            width: 2,
            first_inputs: vec![0, 1],
            second_inputs: vec![CascadeSource::FirstOutput(0), CascadeSource::FirstOutput(1)],
            exports: vec![CascadeExport::SecondOutput(0), CascadeExport::SecondOutput(1)],
        };
        let gate = cascade("FEYNMAN_TWICE", &feynman, &feynman, &wiring).unwrap();
        assert!(gate.table().is_identity());
    }

    #[test]
    fn bad_wirings_are_rejected() {
        let peres = builtin("PERES").unwrap();
        // Second gate consumes a line the first gate already took.
        let wiring = Wiring {
            width: 4,
            first_inputs: vec![0, 1, 3],
            second_inputs: vec![
                CascadeSource::FirstOutput(1),
                CascadeSource::Line(0),
                CascadeSource::FirstOutput(2),
            ],
            exports: vec![
                CascadeExport::FirstOutput(0),
                CascadeExport::SecondOutput(0),
                CascadeExport::SecondOutput(1),
                CascadeExport::SecondOutput(2),
            ],
        };
        assert!(matches!(
            cascade("BAD", &peres, &peres, &wiring),
            Err(GateError::BadWiring(_))
        ));
        // An unconsumed, unexported first-gate output.
        let wiring = Wiring {
            width: 4,
            first_inputs: vec![0, 1, 3],
            second_inputs: vec![
                CascadeSource::FirstOutput(1),
                CascadeSource::Line(2),
                CascadeSource::FirstOutput(2),
            ],
            exports: vec![
                CascadeExport::SecondOutput(0),
                CascadeExport::SecondOutput(0),
                CascadeExport::SecondOutput(1),
                CascadeExport::SecondOutput(2),
            ],
        };
        assert!(matches!(
            cascade("BAD", &peres, &peres, &wiring),
            Err(GateError::BadWiring(_))
        ));
    }

    #[test]
    fn gate_file_round_trip() {
        let text = "\
# the cheapest universal three-line gate
gate PERES 3
in  A B C
out P = A
out Q = A ^ B
out R = (A & B) ^ C
";
        let gate = parse_gate_file(text).unwrap();
        assert_eq!(gate.name(), "PERES");
        assert_eq!(gate.table(), builtin("PERES").unwrap().table());
    }

    #[test]
    fn gate_file_arity_errors() {
        let text = "gate BAD 3\nin A B C\nout P = A\nout Q = B\n";
        assert_eq!(
            parse_gate_file(text),
            Err(GateError::ArityMismatch { name: "BAD".into(), declared: 3, found: 2, what: "outputs" })
        );
        let text = "gate BAD 3\nin A B\nout P = A\nout Q = B\nout R = A\n";
        assert!(matches!(
            parse_gate_file(text),
            Err(GateError::ArityMismatch { what: "inputs", .. })
        ));
    }

    #[test]
    fn gate_file_bijectivity_witness() {
        let text = "gate DUP 2\nin A B\nout P = A\nout Q = A\n";
        // Inputs 00 and 01 collide: both map to 00.
        assert_eq!(
            parse_gate_file(text),
            Err(GateError::NotBijective { name: "DUP".into(), first: "00".into(), second: "01".into() })
        );
    }

    #[test]
    fn gate_file_reports_expression_position() {
        let text = "gate G 2\nin A B\nout P = A\nout Q = A ^ Z\n";
        match parse_gate_file(text) {
            Err(GateError::Expr(ExprParseError::UnknownVar { line, col, name })) => {
                assert_eq!(line, 4);
                assert_eq!(name, "Z");
                // Column points at 'Z' in "out Q = A ^ Z".
                assert_eq!(col, 13);
            }
            other => panic!("expected unknown-var error, got {other:?}"),
        }
    }
}
