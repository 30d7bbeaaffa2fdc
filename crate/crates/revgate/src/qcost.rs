//! Quantum cost accounting.
//!
//! The cost of a reversible gate is the number of two-line quantum
//! primitives in a realization: NOT, CNOT, controlled-V and controlled-V†,
//! where V is the square root of NOT. Built-in decompositions are verified
//! by building their unitary product and comparing it, up to a global
//! phase, against the gate's permutation matrix. A breadth-first search
//! over primitive sequences establishes minimality witnesses.

use std::collections::{BTreeMap, HashSet};

use num_complex::Complex64;
use thiserror::Error;

use crate::bitcore::TruthPermutation;
use crate::gatelib::GateDef;
use crate::netlist::Circuit;

/// Dimension cap: 2^10 = 1024 keeps every matrix product instant.
pub const MAX_UNITARY_WIDTH: usize = 10;

/// Entrywise tolerance for unitary comparison. All reachable entries come
/// from a small algebraic set; genuine mismatches differ by at least 0.5.
pub const MATCH_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QcostError {
    #[error("no decomposition is defined for gate '{0}'")]
    UnknownGate(String),
    #[error("register width {0} exceeds the unitary cap of {MAX_UNITARY_WIDTH} lines")]
    WidthCap(usize),
    #[error("width mismatch: sequence on {0} lines vs gate on {1}")]
    WidthMismatch(usize, usize),
    #[error("sequence search supports width 3 only, got {0}")]
    SearchWidth(usize),
    #[error("primitive wires out of range or aliased on a {width}-line register")]
    BadWires { width: usize },
    #[error("line {line}: {msg}")]
    RegistrySyntax { line: usize, msg: String },
}

/// A two-line quantum primitive with its wire assignment. Wire 0 is the
/// first (most significant) register line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Primitive {
    Not { target: usize },
    Cnot { control: usize, target: usize },
    /// Controlled square root of NOT.
    CV { control: usize, target: usize },
    /// Controlled inverse square root of NOT.
    CVDag { control: usize, target: usize },
}

impl Primitive {
    pub fn wires_valid(&self, width: usize) -> bool {
        match *self {
            Primitive::Not { target } => target < width,
            Primitive::Cnot { control, target }
            | Primitive::CV { control, target }
            | Primitive::CVDag { control, target } => {
                control < width && target < width && control != target
            }
        }
    }
}

impl std::fmt::Display for Primitive {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Primitive::Not { target } => write!(f, "NOT({target})"),
            Primitive::Cnot { control, target } => write!(f, "CNOT({control},{target})"),
            Primitive::CV { control, target } => write!(f, "CV({control},{target})"),
            Primitive::CVDag { control, target } => write!(f, "CVDAG({control},{target})"),
        }
    }
}

/// An ordered list of primitives on an n-line register; the quantum cost of
/// the sequence is its length.
#[derive(Debug, Clone, PartialEq)]
pub struct PrimitiveSequence {
    width: usize,
    steps: Vec<Primitive>,
}

impl PrimitiveSequence {
    pub fn new(width: usize, steps: Vec<Primitive>) -> Result<Self, QcostError> {
        if width == 0 || width > MAX_UNITARY_WIDTH {
            return Err(QcostError::WidthCap(width));
        }
        if steps.iter().any(|p| !p.wires_valid(width)) {
            return Err(QcostError::BadWires { width });
        }
        Ok(PrimitiveSequence { width, steps })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn steps(&self) -> &[Primitive] {
        &self.steps
    }

    pub fn cost(&self) -> u64 {
        self.steps.len() as u64
    }
}

impl std::fmt::Display for PrimitiveSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.steps.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// V = ((1+i)/2) [[1, -i], [-i, 1]]: the square root of NOT.
pub fn v_matrix() -> [[Complex64; 2]; 2] {
    let s = Complex64::new(0.5, 0.5);
    let mi = Complex64::new(0.0, -1.0);
    [[s, s * mi], [s * mi, s]]
}

/// V† = ((1-i)/2) [[1, i], [i, 1]].
pub fn v_dagger_matrix() -> [[Complex64; 2]; 2] {
    let m = v_matrix();
    [[m[0][0].conj(), m[1][0].conj()], [m[0][1].conj(), m[1][1].conj()]]
}

/// A dense 2^n x 2^n complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl UnitaryMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut data = vec![Complex64::ZERO; dim * dim];
        for i in 0..dim {
            data[i * dim + i] = Complex64::ONE;
        }
        UnitaryMatrix { dim, data }
    }

    /// The permutation matrix of a truth table: column `i` has a 1 in row
    /// `perm(i)`.
    pub fn from_permutation(perm: &TruthPermutation) -> Self {
        let dim = 1usize << perm.width();
        let mut data = vec![Complex64::ZERO; dim * dim];
        for (col, &row) in perm.map().iter().enumerate() {
            data[row as usize * dim + col] = Complex64::ONE;
        }
        UnitaryMatrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    pub fn dagger(&self) -> UnitaryMatrix {
        let mut data = vec![Complex64::ZERO; self.dim * self.dim];
        for r in 0..self.dim {
            for c in 0..self.dim {
                data[c * self.dim + r] = self.entry(r, c).conj();
            }
        }
        UnitaryMatrix { dim: self.dim, data }
    }

    pub fn matmul(&self, rhs: &UnitaryMatrix) -> UnitaryMatrix {
        assert_eq!(self.dim, rhs.dim);
        let dim = self.dim;
        let mut data = vec![Complex64::ZERO; dim * dim];
        for r in 0..dim {
            for k in 0..dim {
                let a = self.entry(r, k);
                if a == Complex64::ZERO {
                    continue;
                }
                for c in 0..dim {
                    data[r * dim + c] += a * rhs.entry(k, c);
                }
            }
        }
        UnitaryMatrix { dim, data }
    }

    pub fn max_deviation_from(&self, other: &UnitaryMatrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Apply a primitive to every column, i.e. left-multiply by the
    /// primitive's embedding. `width` is the register line count; wire 0 is
    /// the most significant index bit.
    fn apply(&mut self, width: usize, p: Primitive) {
        let dim = self.dim;
        let bit = |wire: usize| 1usize << (width - 1 - wire);
        match p {
            Primitive::Not { target } => {
                let t = bit(target);
                for row in 0..dim {
                    if row & t == 0 {
                        for col in 0..dim {
                            self.data.swap(row * dim + col, (row | t) * dim + col);
                        }
                    }
                }
            }
            Primitive::Cnot { control, target } => {
                let (c, t) = (bit(control), bit(target));
                for row in 0..dim {
                    if row & c != 0 && row & t == 0 {
                        for col in 0..dim {
                            self.data.swap(row * dim + col, (row | t) * dim + col);
                        }
                    }
                }
            }
            Primitive::CV { control, target } => self.mix(bit(control), bit(target), v_matrix()),
            Primitive::CVDag { control, target } => {
                self.mix(bit(control), bit(target), v_dagger_matrix())
            }
        }
    }

    /// Apply a 2x2 matrix on the target bit of every control-set row pair.
    fn mix(&mut self, c: usize, t: usize, m: [[Complex64; 2]; 2]) {
        let dim = self.dim;
        for row in 0..dim {
            if row & c != 0 && row & t == 0 {
                for col in 0..dim {
                    let lo = self.data[row * dim + col];
                    let hi = self.data[(row | t) * dim + col];
                    self.data[row * dim + col] = m[0][0] * lo + m[0][1] * hi;
                    self.data[(row | t) * dim + col] = m[1][0] * lo + m[1][1] * hi;
                }
            }
        }
    }

    /// Entrywise comparison after normalizing a global phase against the
    /// first significant entry of `other`.
    pub fn approx_eq_up_to_phase(&self, other: &UnitaryMatrix, tol: f64) -> bool {
        self.phase_mismatch(other, tol).is_none()
    }

    /// First entry where the matrices disagree beyond `tol` after global
    /// phase normalization, as (row, col, got, expected).
    pub fn phase_mismatch(
        &self,
        other: &UnitaryMatrix,
        tol: f64,
    ) -> Option<(usize, usize, Complex64, Complex64)> {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let Some(idx) = other.data.iter().position(|z| z.norm() > 0.5) else {
            return Some((0, 0, self.data[0], other.data[0]));
        };
        let phase = if self.data[idx].norm() < 0.5 {
            Complex64::ONE
        } else {
            let p = self.data[idx] / other.data[idx];
            if (p.norm() - 1.0).abs() > tol {
                Complex64::ONE
            } else {
                p
            }
        };
        for (i, (a, b)) in self.data.iter().zip(&other.data).enumerate() {
            if (a - phase * b).norm() > tol {
                return Some((i / self.dim, i % self.dim, *a, phase * b));
            }
        }
        None
    }

    /// Memoization key: entries of the phase-normalized matrix rounded to
    /// 1e-6, hashed FNV-1a/128. Every genuinely distinct pair of reachable
    /// matrices differs by far more than the rounding grid.
    fn fingerprint(&self) -> u128 {
        const OFFSET: u128 = 0x6c62272e07bb014262b821756295c58d;
        const PRIME: u128 = 0x0000000001000000000000000000013B;
        let phase = self
            .data
            .iter()
            .find(|z| z.norm() > 1e-6)
            .map(|z| z / z.norm())
            .unwrap_or(Complex64::ONE);
        let mut h = OFFSET;
        for z in &self.data {
            let w = z / phase;
            for v in [w.re, w.im] {
                let q = (v * 1e6).round() as i64;
                for byte in q.to_le_bytes() {
                    h ^= u128::from(byte);
                    h = h.wrapping_mul(PRIME);
                }
            }
        }
        h
    }
}

/// The ordered product of a sequence's primitive embeddings: the first step
/// acts first.
pub fn unitary_of(seq: &PrimitiveSequence) -> Result<UnitaryMatrix, QcostError> {
    if seq.width() > MAX_UNITARY_WIDTH {
        return Err(QcostError::WidthCap(seq.width()));
    }
    let mut m = UnitaryMatrix::identity(1 << seq.width());
    for &p in seq.steps() {
        m.apply(seq.width(), p);
    }
    Ok(m)
}

/// True iff the sequence's unitary equals the gate's permutation matrix up
/// to a single global phase, entrywise within [`MATCH_TOLERANCE`].
pub fn verify(seq: &PrimitiveSequence, gate: &GateDef) -> Result<bool, QcostError> {
    Ok(verify_explain(seq, gate)?.is_none())
}

/// Like [`verify`], but on failure returns the first offending matrix
/// entry as (row, col, got, expected).
pub fn verify_explain(
    seq: &PrimitiveSequence,
    gate: &GateDef,
) -> Result<Option<(usize, usize, Complex64, Complex64)>, QcostError> {
    if seq.width() != gate.width() {
        return Err(QcostError::WidthMismatch(seq.width(), gate.width()));
    }
    let u = unitary_of(seq)?;
    let target = UnitaryMatrix::from_permutation(gate.table());
    Ok(u.phase_mismatch(&target, MATCH_TOLERANCE))
}

/// The Peres realization on wires (a, b, c): cost 4.
fn peres_steps(a: usize, b: usize, c: usize) -> Vec<Primitive> {
    vec![
        Primitive::CV { control: b, target: c },
        Primitive::CV { control: a, target: c },
        Primitive::Cnot { control: a, target: b },
        Primitive::CVDag { control: b, target: c },
    ]
}

/// Verified built-in decomposition for a gate, by name.
///
/// Costs: FEYNMAN 1, PERES 4, TOFFOLI 5, FREDKIN 7, PFAG 8. The PFAG
/// sequence is the concatenation of two Peres realizations, the first on
/// wires (A, B, D), the second on (half-sum, C, carry-accumulate).
///
/// The Fredkin sequence conjugates a Toffoli with CNOTs. Published cost-5
/// Fredkin figures count arbitrary two-qubit blocks; in this strict
/// primitive library no sequence shorter than 7 realizes the controlled
/// swap (exhaustive search through length 6, NOT placements included).
pub fn decomposition(name: &str) -> Result<PrimitiveSequence, QcostError> {
    use Primitive::*;
    let (width, steps) = match name.to_ascii_uppercase().as_str() {
        "FEYNMAN" => (2, vec![Cnot { control: 0, target: 1 }]),
        "PERES" => (3, peres_steps(0, 1, 2)),
        "TOFFOLI" => (
            3,
            vec![
                CV { control: 1, target: 2 },
                Cnot { control: 0, target: 1 },
                CVDag { control: 1, target: 2 },
                Cnot { control: 0, target: 1 },
                CV { control: 0, target: 2 },
            ],
        ),
        "FREDKIN" => (
            3,
            vec![
                Cnot { control: 2, target: 1 },
                CV { control: 1, target: 2 },
                Cnot { control: 0, target: 1 },
                CVDag { control: 1, target: 2 },
                Cnot { control: 0, target: 1 },
                CV { control: 0, target: 2 },
                Cnot { control: 2, target: 1 },
            ],
        ),
        "PFAG" => (4, [peres_steps(0, 1, 3), peres_steps(1, 2, 3)].concat()),
        other => return Err(QcostError::UnknownGate(other.to_string())),
    };
    PrimitiveSequence::new(width, steps)
}

/// Gate names with verified built-in decompositions.
pub const DECOMPOSED_GATES: [&str; 5] = ["FEYNMAN", "PERES", "TOFFOLI", "FREDKIN", "PFAG"];

/// Breadth-first search for the shortest primitive sequence realizing a
/// 3-line permutation, up to global phase. Returns `None` when nothing
/// within `max_len` matches; absence is a valid result.
///
/// The primitive set per position is CNOT, CV and CVDAG over all ordered
/// wire pairs (18 choices); `include_not` adds the 3 NOT placements.
/// Revisited unitaries are pruned via rounded-fingerprint memoization.
pub fn search_min_sequence(
    target: &TruthPermutation,
    max_len: usize,
    include_not: bool,
) -> Result<Option<PrimitiveSequence>, QcostError> {
    let width = target.width();
    if width != 3 {
        return Err(QcostError::SearchWidth(width));
    }
    let target_m = UnitaryMatrix::from_permutation(target);
    let mut primitives = Vec::new();
    for kind in 0..3 {
        for control in 0..width {
            for t in 0..width {
                if t == control {
                    continue;
                }
                primitives.push(match kind {
                    0 => Primitive::Cnot { control, target: t },
                    1 => Primitive::CV { control, target: t },
                    _ => Primitive::CVDag { control, target: t },
                });
            }
        }
    }
    if include_not {
        for t in 0..width {
            primitives.push(Primitive::Not { target: t });
        }
    }

    let identity = UnitaryMatrix::identity(1 << width);
    if identity.approx_eq_up_to_phase(&target_m, MATCH_TOLERANCE) {
        return Ok(Some(PrimitiveSequence::new(width, Vec::new())?));
    }
    let mut memo: HashSet<u128> = HashSet::new();
    memo.insert(identity.fingerprint());
    let mut frontier: Vec<Vec<Primitive>> = vec![Vec::new()];

    for _len in 1..=max_len {
        let mut next: Vec<Vec<Primitive>> = Vec::new();
        for seq in &frontier {
            let mut m = identity.clone();
            for &p in seq {
                m.apply(width, p);
            }
            for &p in &primitives {
                let mut m2 = m.clone();
                m2.apply(width, p);
                if m2.approx_eq_up_to_phase(&target_m, MATCH_TOLERANCE) {
                    let mut steps = seq.clone();
                    steps.push(p);
                    return Ok(Some(PrimitiveSequence::new(width, steps)?));
                }
                if memo.insert(m2.fingerprint()) {
                    let mut steps = seq.clone();
                    steps.push(p);
                    next.push(steps);
                }
            }
        }
        frontier = next;
    }
    Ok(None)
}

/// Whether a cost is backed by a verified decomposition or merely declared
/// by the user.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CostSource {
    Verified,
    Declared,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CostEntry {
    pub value: u64,
    pub source: CostSource,
}

/// A per-gate quantum cost, or Unknown when no realization is on record.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CostValue {
    Known(u64),
    Unknown,
}

impl CostValue {
    pub fn known(&self) -> Option<u64> {
        match self {
            CostValue::Known(v) => Some(*v),
            CostValue::Unknown => None,
        }
    }
}

impl std::fmt::Display for CostValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CostValue::Known(v) => write!(f, "{v}"),
            CostValue::Unknown => write!(f, "Unknown"),
        }
    }
}

impl serde::Serialize for CostValue {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            CostValue::Known(v) => serializer.serialize_some(v),
            CostValue::Unknown => serializer.serialize_none(),
        }
    }
}

/// Known per-gate costs: the verified built-ins plus user-declared values
/// (published costs without sequences, flagged as declared/unverified).
#[derive(Debug, Clone, Default)]
pub struct CostRegistry {
    declared: BTreeMap<String, u64>,
}

impl CostRegistry {
    pub fn register_declared(&mut self, name: &str, cost: u64) {
        self.declared.insert(name.to_ascii_uppercase(), cost);
    }

    /// Load `cost <GATENAME> = <integer>` lines; `#` starts a comment.
    /// Returns the number of entries read.
    pub fn load_registry_text(&mut self, text: &str) -> Result<usize, QcostError> {
        let mut count = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let rest = line.strip_prefix("cost").ok_or_else(|| QcostError::RegistrySyntax {
                line: line_no,
                msg: "expected 'cost <GATENAME> = <integer>'".into(),
            })?;
            let (name, value) = rest.split_once('=').ok_or_else(|| QcostError::RegistrySyntax {
                line: line_no,
                msg: "expected '=' after the gate name".into(),
            })?;
            let name = name.trim();
            if name.is_empty() || name.split_whitespace().count() != 1 {
                return Err(QcostError::RegistrySyntax {
                    line: line_no,
                    msg: "expected a single gate name".into(),
                });
            }
            let cost: u64 = value.trim().parse().map_err(|_| QcostError::RegistrySyntax {
                line: line_no,
                msg: format!("'{}' is not a non-negative integer", value.trim()),
            })?;
            self.register_declared(name, cost);
            count += 1;
        }
        Ok(count)
    }

    /// Verified built-ins take precedence over declared entries.
    pub fn cost_of(&self, gate_name: &str) -> Option<CostEntry> {
        let upper = gate_name.to_ascii_uppercase();
        if DECOMPOSED_GATES.contains(&upper.as_str()) {
            let seq = decomposition(&upper).expect("built-in decomposition");
            return Some(CostEntry { value: seq.cost(), source: CostSource::Verified });
        }
        self.declared
            .get(&upper)
            .map(|&value| Some(CostEntry { value, source: CostSource::Declared }))
            .unwrap_or(None)
    }
}

/// The registry with only the verified built-in decompositions.
pub fn standard_registry() -> CostRegistry {
    CostRegistry::default()
}

/// Total quantum cost of a circuit: the sum of per-gate costs. Any gate
/// without a known cost makes the total Unknown.
pub fn circuit_cost(circuit: &Circuit, registry: &CostRegistry) -> CostValue {
    let mut total = 0u64;
    for inst in circuit.gate_instances() {
        match registry.cost_of(inst.gate().name()) {
            Some(entry) => total += entry.value,
            None => return CostValue::Unknown,
        }
    }
    CostValue::Known(total)
}
