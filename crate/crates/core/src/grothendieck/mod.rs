//! Classical and quantum Grothendieck forms.
//!
//! `𝔠(Θ) = |Σ Θ_rs a_r b_s|` over `|a_r|, |b_s| ≤ 1`, its supremum `g(Θ)`, and the quantum
//! form `𝔔 = |Tr(θVW†)|` for `θ = Θ/g(Θ)` and `V, W` with row norms at most 1.

mod demo;
mod estimate;
mod forms;

pub use demo::{demonstrate_region, DemoOptions, QEvaluation, KG_INTERVAL};
pub use estimate::{estimate_g, g_upper_bound, EstimateOptions, GrothendieckEstimate};
pub use forms::{
    classical_form, embed_with_zeros, lambda_window, norm_n, quantum_form, rank_one_harness,
    scale_to_gn, Embedded, LambdaWindow, PhaseVector, QuantumForm, WINDOW_REL_SLACK,
};
