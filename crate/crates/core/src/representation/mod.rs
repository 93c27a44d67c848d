//! The n-tuple representation: a state `|f⟩ ∈ H(d)` is carried by its `n` coefficients
//! `f̃ = M†f` over the coherent states, and a density matrix by `F̃ = M†ρM`.

mod lemma;
mod ntuple;

pub use lemma::{
    uniform_modulus_search, uniformity_residual, FeasibilityResult, SearchMode, SearchOptions,
    Verdict, INFEASIBLE_THRESHOLD,
};
pub use ntuple::{
    density_ntuple, from_ntuple, orbit_expectations, scalar_product_check, stroboscopic_evolve,
    to_ntuple, DensityNTuple, NTuple,
};
