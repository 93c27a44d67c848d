//! Finite coherent-state families under the cyclic shift group.
//!
//! The crate builds the catalog families `C(d, n, z)`, verifies their coherence
//! properties (resolution of the identity, orbit structure, isotropy, reproducing
//! kernel), estimates the classical Grothendieck bound `g(Θ)` of their overlap
//! projectors by multi-start phase ascent, evaluates the quantum form `𝔔`, and
//! exhibits violations of single-system logical Bell-like inequalities.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod cli;
pub mod error;
pub mod families;
pub mod grothendieck;
pub mod logic;
pub mod numerics;
pub mod representation;
pub mod sampling;

pub use error::{Error, Result};
