//! Hardware-complexity accounting.
//!
//! A gate's complexity is the vector of two-input XOR (α), two-input AND
//! (β) and NOT (δ) calculations in its defining expressions, reported as a
//! formal sum like `5α+2β` — never collapsed to a scalar, since the three
//! kinds carry no relative weights.
//!
//! Counting rule: across all of a gate's output expressions, each DISTINCT
//! operator subtree counts once. A term that appears verbatim in several
//! outputs names one calculation; a re-associated variant is a different
//! calculation. The count is therefore invariant under input renaming and
//! output reordering, and sensitive to the written form of the definitions
//! — which is why gate expressions are never canonicalized.

use std::collections::HashSet;

use crate::expr::BoolExpr;
use crate::gatelib::GateDef;
use crate::qcost::{CostRegistry, CostValue};

/// Operation counts: alpha = two-input XOR, beta = two-input AND,
/// delta = NOT.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize)]
pub struct ComplexityVector {
    pub alpha: u64,
    pub beta: u64,
    pub delta: u64,
}

impl ComplexityVector {
    pub fn new(alpha: u64, beta: u64, delta: u64) -> Self {
        ComplexityVector { alpha, beta, delta }
    }

    /// The total logical calculation as a formal sum, e.g. `5α+2β`.
    pub fn total_string(&self) -> String {
        let mut parts = Vec::new();
        for (count, symbol) in [(self.alpha, "α"), (self.beta, "β"), (self.delta, "δ")] {
            match count {
                0 => {}
                1 => parts.push(symbol.to_string()),
                n => parts.push(format!("{n}{symbol}")),
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

fn visit<'a>(
    expr: &'a BoolExpr,
    seen: &mut HashSet<&'a BoolExpr>,
    counts: &mut ComplexityVector,
) {
    match expr {
        BoolExpr::Var(_) | BoolExpr::Const(_) => {}
        BoolExpr::Not(inner) => {
            if seen.insert(expr) {
                counts.delta += 1;
                visit(inner, seen, counts);
            }
        }
        BoolExpr::And(l, r) => {
            if seen.insert(expr) {
                counts.beta += 1;
                visit(l, seen, counts);
                visit(r, seen, counts);
            }
        }
        BoolExpr::Xor(l, r) => {
            if seen.insert(expr) {
                counts.alpha += 1;
                visit(l, seen, counts);
                visit(r, seen, counts);
            }
        }
    }
}

/// Count the distinct XOR/AND/NOT calculations across all output
/// expressions of a gate.
pub fn count_ops(gate: &GateDef) -> ComplexityVector {
    let mut seen = HashSet::new();
    let mut counts = ComplexityVector::default();
    for (_, expr) in gate.outputs() {
        visit(expr, &mut seen, &mut counts);
    }
    counts
}

/// Incremental contribution of each output, in declared order: what each
/// output adds beyond the calculations earlier outputs already named.
pub fn count_ops_per_output(gate: &GateDef) -> Vec<ComplexityVector> {
    let mut seen = HashSet::new();
    let mut rows = Vec::with_capacity(gate.outputs().len());
    for (_, expr) in gate.outputs() {
        let mut counts = ComplexityVector::default();
        visit(expr, &mut seen, &mut counts);
        rows.push(counts);
    }
    rows
}

/// One row of a complexity comparison.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ReportRow {
    pub name: String,
    pub alpha: u64,
    pub beta: u64,
    pub delta: u64,
    pub total: String,
    pub quantum_cost: CostValue,
    /// False for rows computed from gate definitions; true for stored
    /// literature values without a definition to compute from.
    pub reference: bool,
}

impl ReportRow {
    pub fn computed(gate: &GateDef, registry: &CostRegistry) -> Self {
        let counts = count_ops(gate);
        ReportRow {
            name: gate.name().to_string(),
            alpha: counts.alpha,
            beta: counts.beta,
            delta: counts.delta,
            total: counts.total_string(),
            quantum_cost: registry
                .cost_of(gate.name())
                .map(|e| CostValue::Known(e.value))
                .unwrap_or(CostValue::Unknown),
            reference: false,
        }
    }

    pub fn reference(name: &str, counts: ComplexityVector, quantum_cost: CostValue) -> Self {
        ReportRow {
            name: name.to_string(),
            alpha: counts.alpha,
            beta: counts.beta,
            delta: counts.delta,
            total: counts.total_string(),
            quantum_cost,
            reference: true,
        }
    }

    /// Annotation for human-readable output.
    pub fn note(&self) -> &'static str {
        if self.reference {
            "reference (no definition available)"
        } else {
            "computed"
        }
    }
}

/// Build report rows for a list of gates.
pub fn complexity_report(gates: &[GateDef], registry: &CostRegistry) -> Vec<ReportRow> {
    gates.iter().map(|g| ReportRow::computed(g, registry)).collect()
}

/// The full-adder gate comparison: PFAG and HNG computed from their
/// definitions; TSG and MKG as stored literature reference values, since
/// no expression definitions for them are available here.
pub fn full_adder_comparison(registry: &CostRegistry) -> Vec<ReportRow> {
    let pfag = crate::gatelib::builtin("PFAG").expect("built-in");
    let hng = crate::gatelib::builtin("HNG").expect("built-in");
    let tsg_cost =
        registry.cost_of("TSG").map(|e| CostValue::Known(e.value)).unwrap_or(CostValue::Unknown);
    let mkg_cost =
        registry.cost_of("MKG").map(|e| CostValue::Known(e.value)).unwrap_or(CostValue::Unknown);
    vec![
        ReportRow::computed(&pfag, registry),
        ReportRow::computed(&hng, registry),
        ReportRow::reference("MKG", ComplexityVector::new(5, 3, 3), mkg_cost),
        ReportRow::reference("TSG", ComplexityVector::new(6, 3, 3), tsg_cost),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::BoolExpr;
    use crate::gatelib::{builtin, GateDef};
    use crate::qcost::standard_registry;

    #[test]
    fn pfag_counts() {
        let pfag = builtin("PFAG").unwrap();
        assert_eq!(count_ops(&pfag), ComplexityVector::new(5, 2, 0));
        // Output-by-output: P adds nothing, Q one XOR, R two, S two XOR
        // and both ANDs (its half-sum term is already named by Q).
        let per = count_ops_per_output(&pfag);
        assert_eq!(per[0], ComplexityVector::new(0, 0, 0));
        assert_eq!(per[1], ComplexityVector::new(1, 0, 0));
        assert_eq!(per[2], ComplexityVector::new(2, 0, 0));
        assert_eq!(per[3], ComplexityVector::new(2, 2, 0));
    }

    #[test]
    fn builtin_counts() {
        assert_eq!(count_ops(&builtin("HNG").unwrap()), ComplexityVector::new(5, 2, 0));
        assert_eq!(count_ops(&builtin("PERES").unwrap()), ComplexityVector::new(2, 1, 0));
        assert_eq!(count_ops(&builtin("FEYNMAN").unwrap()), ComplexityVector::new(1, 0, 0));
        assert_eq!(count_ops(&builtin("TOFFOLI").unwrap()), ComplexityVector::new(1, 1, 0));
    }

    #[test]
    fn identity_gate_counts_zero() {
        let wire = GateDef::new(
            "WIRE",
            vec!["A".into()],
            vec![("P".into(), BoolExpr::var(0))],
        )
        .unwrap();
        assert_eq!(count_ops(&wire), ComplexityVector::default());
        assert_eq!(count_ops(&wire).total_string(), "0");
    }

    #[test]
    fn total_strings() {
        assert_eq!(ComplexityVector::new(5, 2, 0).total_string(), "5α+2β");
        assert_eq!(ComplexityVector::new(6, 3, 3).total_string(), "6α+3β+3δ");
        assert_eq!(ComplexityVector::new(5, 3, 3).total_string(), "5α+3β+3δ");
        assert_eq!(ComplexityVector::new(1, 0, 0).total_string(), "α");
        assert_eq!(ComplexityVector::new(2, 1, 0).total_string(), "2α+β");
    }

    #[test]
    fn invariant_under_renaming_and_reordering() {
        let pfag = builtin("PFAG").unwrap();
        let renamed = GateDef::new(
            "PFAG_RENAMED",
            vec!["W".into(), "X".into(), "Y".into(), "Z".into()],
            pfag.outputs().to_vec(),
        )
        .unwrap();
        assert_eq!(count_ops(&renamed), count_ops(&pfag));

        let mut reordered_outputs = pfag.outputs().to_vec();
        reordered_outputs.reverse();
        let reordered =
            GateDef::new("PFAG_REVERSED", pfag.inputs().to_vec(), reordered_outputs).unwrap();
        assert_eq!(count_ops(&reordered), count_ops(&pfag));
    }

    #[test]
    fn count_lower_bound() {
        // Every output that is not a bare variable or constant names at
        // least one calculation of its own.
        for gate in crate::gatelib::builtin_gates() {
            let counts = count_ops(&gate);
            let nontrivial = gate
                .outputs()
                .iter()
                .filter(|(_, e)| !matches!(e, BoolExpr::Var(_) | BoolExpr::Const(_)))
                .count() as u64;
            assert!(counts.alpha + counts.beta + counts.delta >= nontrivial, "{}", gate.name());
        }
    }

    #[test]
    fn comparison_rows() {
        let rows = full_adder_comparison(&standard_registry());
        assert_eq!(rows.len(), 4);
        let pfag = &rows[0];
        assert_eq!(
            (pfag.name.as_str(), pfag.alpha, pfag.beta, pfag.delta),
            ("PFAG", 5, 2, 0)
        );
        assert_eq!(pfag.total, "5α+2β");
        assert_eq!(pfag.quantum_cost, CostValue::Known(8));
        assert!(!pfag.reference);

        let hng = &rows[1];
        assert_eq!((hng.alpha, hng.beta, hng.delta), (5, 2, 0));
        assert_eq!(hng.quantum_cost, CostValue::Unknown);
        assert!(!hng.reference);

        let mkg = &rows[2];
        assert_eq!((mkg.name.as_str(), mkg.alpha, mkg.beta, mkg.delta), ("MKG", 5, 3, 3));
        assert_eq!(mkg.total, "5α+3β+3δ");
        assert!(mkg.reference);

        let tsg = &rows[3];
        assert_eq!((tsg.name.as_str(), tsg.alpha, tsg.beta, tsg.delta), ("TSG", 6, 3, 3));
        assert_eq!(tsg.total, "6α+3β+3δ");
        assert_eq!(tsg.quantum_cost, CostValue::Unknown);
        assert!(tsg.reference);
    }
}
