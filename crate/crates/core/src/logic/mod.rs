//! Quantum logic of subspaces, probabilities as capacities, and the single-system
//! logical Bell-like inequalities for coherent-state orbits.

mod bell;
mod classical;
mod subspace;

pub use bell::{
    bell_report, bell_sum_operator, violation_scan, BellReport, ScanPoint, VIOLATION_TOL,
};
pub use classical::{ClassicalReport, ClassicalSpace};
pub use subspace::{
    commutator_residual, d_operator, quantum_prob, validate_density, Subspace, RANK_THRESHOLD,
};
