//! Reversible-logic workbench.
//!
//! Gates whose input vectors are uniquely recoverable from their outputs,
//! circuits over them, and the machinery to verify the classic claims about
//! them exhaustively: truth-table bijectivity, quantum cost via two-line
//! primitive decompositions, hardware-complexity counting, and constructive
//! synthesis of arbitrary Boolean functions from a single gate type.

pub mod bitcore;
pub mod cli;
pub mod expr;
pub mod gatelib;
pub mod metrics;
pub mod netlist;
pub mod qcost;
pub mod synth;
